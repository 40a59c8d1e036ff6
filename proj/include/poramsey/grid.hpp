#pragma once

#include "poramsey/coloring_search.hpp"
#include "poramsey/engines.hpp"
#include "poramsey/linext.hpp"
#include "poramsey/structure.hpp"
#include "poramsey/twisted_product.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace poramsey {

using GridPoint = std::vector<int>;

/// k <_pr l: every coordinate strictly smaller.
bool pr_less(std::span<const int> k, std::span<const int> l);

/// <_lx,i: lexicographic, starting at coordinate i and wrapping around mod m.
bool lx_less(std::span<const int> k, std::span<const int> l, int i);

/// n^m with <_pr and <_lx,i_0, ..., <_lx,i_{p-1}. Points are indexed in <_lx,0 order,
/// so point index = mixed-radix value with coordinate 0 most significant.
class GridStructure {
public:
    /// Throws PreconditionError unless n, m >= 1 and the anchor lives in m,
    /// InfeasibleError when n^m passes `max_points`.
    GridStructure(int n, int m, AnchoredSequence anchor, int max_points = 4096);

    int n() const { return n_; }
    int m() const { return m_; }
    int p() const { return anchor_.p(); }
    int size() const { return structure_.size(); }
    const AnchoredSequence & anchor() const { return anchor_; }
    const Structure & structure() const { return structure_; }

    GridPoint coordinates(int index) const;
    /// Throws std::out_of_range for coordinates outside n^m.
    int index_of(std::span<const int> point) const;

private:
    int n_ = 0, m_ = 0;
    AnchoredSequence anchor_;
    Structure structure_;
};

/// (Y, P, L) together with lin_{L_0}(P) and the anchor L as positions in it:
/// the frame the twisted product and pi^tau are read in.
struct ExtensionFrame {
    Structure structure;
    OrderedExtensionSpace space;
    AnchoredSequence anchor;

    static ExtensionFrame of(const Structure & s);
};

/// pi^tau as an embedding of the frame's structure into the grid. The coordinates come from
/// pi_tau; each point must lie in the grid (sets inside {0,...,n-1}).
/// Throws PreconditionError if tau is not over the frame (wrong rs target, set sizes, or m).
Embedding grid_embedding(const Tuple & tau, const ExtensionFrame & frame, const GridStructure & grid);

struct Pullback {
    std::vector<int> subset;  ///< X = (pi^tau)^{-1}(X'), ascending
    ExtensionFrame x_frame;   ///< frame of Y restricted to X
    Tuple sigma;              ///< ((pi_0)^{-1}(p_0(X')), ..., res_X)
    Tuple product;            ///< tau . sigma
};

/// sigma with pi^{tau.sigma}(X) = X'. Both that and pi_i^{tau.sigma} = pi_i^tau restricted to X
/// are checked before returning (std::logic_error otherwise).
/// Throws PreconditionError if X' is empty or leaves the image of pi^tau.
Pullback pullback_copy(const Tuple & tau, const ExtensionFrame & frame, std::span<const GridPoint> x_prime);

/// Objects: copies of x in z. One cone per copy of y in z: the x-copies inside it.
struct WitnessInstance {
    std::vector<Copy> objects;
    std::vector<Copy> targets;
    ColoringProblem problem;
};

WitnessInstance witness_instance(const Structure & z, const Structure & x, const Structure & y, const SearchLimits & limits = {});

/// Does every d-coloring of the copies of x in z leave a copy of y whose x-copies share a color?
/// Counterexamples are re-checked independently before they are returned.
ColoringCertificate verify_ramsey_witness(const Structure & z, const Structure & x, const Structure & y, int d,
    const SearchLimits & limits = {});

struct ConstructOptions {
    int m_max = 4;
    int n_max = 12;
    SearchLimits limits;
};

struct ConstructResult {
    Embedding x_in_y;                          ///< lexicographically least embedding used
    int a_size = 0;                            ///< |lin_{L_0}(P^X)|
    int b_size = 0;                            ///< |lin_{L_0}(P^Y)|
    std::optional<WitnessParams> params;       ///< unset when the dual search itself gave up
    std::optional<GridStructure> grid;         ///< set only when verified
    std::optional<ColoringCertificate> certificate;
    std::string note;                          ///< why the result stayed symbolic

    bool verified() const { return grid.has_value() && certificate && certificate->holds(); }
};

/// Runs the witness construction: dual parameters, then n for the blown-up color count, then
/// the grid n^m, which is checked with verify_ramsey_witness. Returns symbolic parameters
/// (no grid) when a step is beyond the limits.
/// Throws PreconditionError if x does not embed into y or p differs.
ConstructResult construct_witness(const Structure & x, const Structure & y, int d, const ConstructOptions & options = {});

/// Structures of a given size with L_0 natural, p orders, in a fixed canonical order:
/// posets by successive down-sets (largest first, so the chain leads), then the remaining
/// orders over the poset's extension space.
void for_each_canonical_structure(int size, int p, const std::function<bool(const Structure &)> & visit);

struct MinimalWitness {
    Structure z;
    ColoringCertificate certificate;
    std::size_t candidates = 0;  ///< structures examined, all sizes
};

/// Smallest z (by size, then canonical order) that verify_ramsey_witness accepts.
/// Throws InfeasibleError if none exists up to size_bound.
MinimalWitness minimal_witness_search(const Structure & x, const Structure & y, int d, int size_bound, const SearchLimits & limits = {});

} // namespace poramsey

#pragma once

#include "poramsey/coloring_search.hpp"
#include "poramsey/linear_order.hpp"
#include "poramsey/linext.hpp"
#include "poramsey/rigid_surjection.hpp"
#include "poramsey/twisted_product.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace poramsey {

using SetTuple = std::vector<std::vector<int>>;

/// All k-subsets of {0,...,n-1}, lexicographically.
std::vector<std::vector<int>> combinations(int n, int k);

/// Cartesian power (choices)^m, coordinate 0 most significant.
std::vector<SetTuple> set_tuples(const std::vector<std::vector<int>> & choices, int m);

// ---- Product Ramsey theorem ------------------------------------------------

/// Objects: (n choose k)^m. One cone per (T_0,...,T_{m-1}) in (n choose l)^m: every S <= T.
struct ProductInstance {
    int n = 0, k = 0, l = 0, m = 0;
    std::vector<SetTuple> objects;
    std::vector<SetTuple> targets;
    ColoringProblem problem;
};

/// Throws PreconditionError unless k <= l and m >= 1.
ProductInstance product_instance(int n, int k, int l, int m, const SearchLimits & limits = {});

ColoringCertificate verify_product_witness(int n, int d, int k, int l, int m, const SearchLimits & limits = {});

struct ProductSearchResult {
    int n = 0;
    ColoringCertificate certificate;           ///< at n
    std::optional<ColoringCertificate> below;  ///< counterexample at n-1, when n-1 >= l
};

/// Least n in [l, n_max] for which the product statement holds. Throws InfeasibleError when
/// no n up to n_max works or a step passes a ceiling.
ProductSearchResult search_product(int d, int k, int l, int m, int n_max, const SearchLimits & limits = {});

// ---- Dual Ramsey theorem with constants ------------------------------------

/// Witness parameters (m, n, i) plus the exact sizes the proof of the product-with-rigid-surjections
/// statement runs through. `verified` is false when any part rests on a symbolic bound.
struct WitnessParams {
    int m = 0;
    std::optional<int> n;
    AnchoredSequence anchor;
    bool verified = false;
    BigInt rs_count = 0;     ///< |(m, i / A, a)_rs|
    BigInt color_count = 0;  ///< d^rs_count
};

/// Objects: (m, i / A, a)_rs. One cone per t in (m, i / B, b)_rs: { s o t : s in (B, b / A, a)_rs }.
struct DualInstance {
    AnchoredSequence i_anchor, a_anchor, b_anchor;
    std::vector<AnchoredRigidSurjection> objects;
    std::vector<AnchoredRigidSurjection> targets;
    ColoringProblem problem;
};

/// Sizes are the anchors' ambient sets. Throws PreconditionError unless |A| <= |B| <= m and p agrees.
DualInstance dual_instance(const AnchoredSequence & i_anchor, const AnchoredSequence & a_anchor, const AnchoredSequence & b_anchor,
    const SearchLimits & limits = {});

ColoringCertificate verify_dual_witness(const AnchoredSequence & i_anchor, int d, const AnchoredSequence & a_anchor,
    const AnchoredSequence & b_anchor, const SearchLimits & limits = {});

/// Least m in [|B|, m_max], then least anchor i, for which the dual statement holds.
WitnessParams search_dual(int d, const AnchoredSequence & a_anchor, const AnchoredSequence & b_anchor, int m_max,
    const SearchLimits & limits = {});

// ---- Product with rigid surjections ----------------------------------------

/// Objects: (n choose k)^m x (m, i / A, a)_rs. Targets: (n choose l)^m x (m, i / B, b)_rs.
/// Each cone is the set of objects << its target.
struct TupleInstance {
    std::vector<Tuple> objects;
    std::vector<Tuple> targets;
    ColoringProblem problem;
};

TupleInstance prop2_instance(int n, const AnchoredSequence & i_anchor, const AnchoredSequence & a_anchor,
    const AnchoredSequence & b_anchor, int k, int l, const SearchLimits & limits = {});

/// Throws PreconditionError when params.n is unset.
ColoringCertificate verify_prop2_witness(const WitnessParams & params, int d, const AnchoredSequence & a_anchor,
    const AnchoredSequence & b_anchor, int k, int l, const SearchLimits & limits = {});

/// Returns n for `colors` colors (k, l, m fixed), or nullopt when it cannot certify one.
using ProductOracle = std::function<std::optional<int>(const BigInt & colors, int k, int l, int m)>;

/// Desk-scale oracle: search_product up to n_max, nullopt on infeasibility.
ProductOracle desk_product_oracle(int n_max, const SearchLimits & limits = {});

/// Follows the two-step proof: dual parameters (m, i) first, then n for d^|(m, i / A, a)_rs| colors.
/// Throws PreconditionError if the dual parameters are refuted, InfeasibleError if they cannot be checked.
/// Returns unverified parameters (n unset) when the oracle gives up.
WitnessParams compose_prop2_witness(int d, const AnchoredSequence & a_anchor, const AnchoredSequence & b_anchor, int k, int l,
    const WitnessParams & dual_params, const ProductOracle & product_n_oracle, const SearchLimits & limits = {});

// ---- Twisted product -------------------------------------------------------

/// A subset of lin_K with the inherited order and an anchored sequence in it.
struct AnchoredOrderSet {
    LinearOrder reference;
    std::vector<LinearOrder> members;
    AnchoredSequence anchor;

    /// Throws PreconditionError unless members are distinct orders on the reference's ground set,
    /// strictly increasing in `below`, and the anchor lives in them.
    static AnchoredOrderSet make(LinearOrder reference, std::vector<LinearOrder> members, AnchoredSequence anchor);
    static AnchoredOrderSet from_space(const OrderedExtensionSpace & space, AnchoredSequence anchor);

    int ground_size() const { return reference.size(); }
    int size() const { return static_cast<int>(members.size()); }
};

/// Objects as in prop2_instance with k = |X|. Cones: { tau . sigma : sigma in (Y choose |X|)^m x (B, b / A, a)_rs }.
/// Every generated tau . sigma is checked to be << tau.
TupleInstance prop5_instance(int n, const AnchoredSequence & i_anchor, const AnchoredOrderSet & a, const AnchoredOrderSet & b,
    const SearchLimits & limits = {});

ColoringCertificate verify_prop5_witness(const WitnessParams & params, int d, const AnchoredOrderSet & a, const AnchoredOrderSet & b,
    const SearchLimits & limits = {});

} // namespace poramsey

#pragma once

#include "poramsey/engines.hpp"
#include "poramsey/grid.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace poramsey {

/// S = (Y choose X) for structures with L_0 natural, read through the extension spaces
/// A = lin_{L_0}(P^X) and B = lin_{L_0}(P^Y) with their anchors.
struct InterpFrame {
    ExtensionFrame x;
    ExtensionFrame y;
    std::vector<Embedding> s_members;  ///< all embeddings X -> Y

    /// Throws PreconditionError unless p agrees and both L_0 are the natural order.
    static InterpFrame make(const Structure & x, const Structure & y);

    int k() const { return x.structure.size(); }
    int l() const { return y.structure.size(); }
    AnchoredOrderSet a_set() const { return AnchoredOrderSet::from_space(x.space, x.anchor); }
    AnchoredOrderSet b_set() const { return AnchoredOrderSet::from_space(y.space, y.anchor); }
};

/// R = (l choose k)^m x (B, b / A, a)_rs. `dual_verified` says whether the dual statement
/// for m was checked; false means it is assumed.
struct ProductMember {
    int m = 1;
    bool dual_verified = false;
};

/// F = (n choose l)^m x (m, i / B, b)_rs, m = anchor.ambient_size().
struct TwistMember {
    int n = 0;
    AnchoredSequence anchor;

    int m() const { return anchor.ambient_size(); }
};

/// Decides the dual flag by running the dual verifier; a refuted m throws PreconditionError,
/// an unaffordable one comes back with the flag off.
ProductMember product_member(const InterpFrame & frame, int m, int d, const SearchLimits & limits = {});

std::vector<Tuple> product_member_elements(const InterpFrame & frame, int m, const SearchLimits & limits = {});
std::vector<Tuple> twist_member_elements(const InterpFrame & frame, const TwistMember & f, const SearchLimits & limits = {});

/// Membership in R with the given m.
bool in_product_member(const InterpFrame & frame, int m, const Tuple & r);

/// alpha(s) = (s[k], ..., s[k], r o res_{s[k]}), r the isomorphism of the restricted space onto A.
Tuple alpha(const InterpFrame & frame, int m, const Embedding & s);

using AlphaMap = std::function<Tuple(const InterpFrame &, int, const Embedding &)>;

/// phi(tau) = pi^tau, as an embedding of Y into the grid of f.
Embedding phi(const InterpFrame & frame, const Tuple & tau, const GridStructure & grid);

struct InterpretationViolation {
    enum class Kind { alpha_outside_r, implication } kind;
    std::size_t f1 = 0, s1 = 0, f2 = 0, s2 = 0;  ///< indices into twist_member_elements / frame.s_members
    std::string detail;
};

struct InterpretationReport {
    std::size_t pairs = 0;  ///< (f, s) pairs examined
    std::optional<InterpretationViolation> violation;

    bool holds() const { return ! violation.has_value(); }
};

/// Exhaustive check of f1.alpha(s1) = f2.alpha(s2) => phi(f1).s1 = phi(f2).s2 over F x S,
/// plus alpha(s) in R. Reports the first violation in (f, s) order.
InterpretationReport check_interpretation(const InterpFrame & frame, const TwistMember & f, const AlphaMap & alpha_map = alpha,
    const SearchLimits & limits = {});

/// First (f, s) index pair with pi^{tau.alpha(s)} != phi(tau) o s, if any.
std::optional<std::pair<std::size_t, std::size_t>> check_alpha_identity(const InterpFrame & frame, const TwistMember & f,
    const AlphaMap & alpha_map = alpha, const SearchLimits & limits = {});

struct F1Witness {
    TwistMember member;
    ColoringCertificate certificate;
};

/// Searches F = (n choose l)^m x (m, i / B, b)_rs for n in [l, n_max], then i in lex order,
/// until every d-coloring of F . R leaves a monochromatic {tau . sigma : sigma in R}.
std::optional<F1Witness> ramsey_condition_f1(const InterpFrame & frame, const ProductMember & r, int d, int n_max,
    const SearchLimits & limits = {});

/// Objects: distinct g o s for g in (grid choose Y), s in S. One cone per g.
struct GridMemberInstance {
    std::vector<Embedding> objects;
    std::vector<Embedding> targets;
    ColoringProblem problem;
};

GridMemberInstance grid_member_instance(const InterpFrame & frame, const GridStructure & grid, const SearchLimits & limits = {});

ColoringCertificate verify_grid_member(const InterpFrame & frame, const GridStructure & grid, int d, const SearchLimits & limits = {});

struct F2Witness {
    GridStructure grid;
    ColoringCertificate certificate;
};

/// Searches grid members for m in [1, m_max], i in lex order, n in [l, n_max].
std::optional<F2Witness> ramsey_condition_f2(const InterpFrame & frame, int d, int m_max, int n_max, const SearchLimits & limits = {});

struct TransferReport {
    std::size_t colorings = 0;             ///< colorings of G . S examined
    std::optional<std::vector<int>> failure;  ///< a coloring for which phi(f) was not homogeneous
    bool holds() const { return ! failure.has_value(); }
};

/// Pulls every d-coloring of G . S (G the grid of f) back to F . R through alpha and phi,
/// finds a homogeneous tau there and checks that phi(tau) is homogeneous for the original coloring.
/// Throws InfeasibleError when d^|G . S| passes the coloring ceiling, PreconditionError if some pulled-back
/// coloring has no homogeneous tau (f is not a Ramsey member), std::logic_error if the pull-back is ill-defined.
TransferReport verify_transfer(const InterpFrame & frame, const TwistMember & f, int d, const SearchLimits & limits = {});

} // namespace poramsey

#pragma once

#include "poramsey/linear_order.hpp"
#include "poramsey/rigid_surjection.hpp"

#include <span>
#include <vector>

namespace poramsey {

/// (S_0,...,S_{m-1}, s): m finite sets of naturals of equal size plus an anchored rigid surjection.
/// Sets are kept sorted ascending.
struct Tuple {
    std::vector<std::vector<int>> sets;
    AnchoredRigidSurjection rs;

    int m() const { return static_cast<int>(sets.size()); }
    /// Common cardinality of the sets (0 when m = 0).
    int set_size() const { return sets.empty() ? 0 : static_cast<int>(sets.front().size()); }

    friend bool operator==(const Tuple &, const Tuple &) = default;
    friend auto operator<=>(const Tuple &, const Tuple &) = default;
};

/// Throws PreconditionError unless every set is sorted, duplicate-free, non-negative and of equal size.
void check_tuple(const Tuple & t);

/// (S, s) << (T, t): S_i subset of T_i for every i and s = r o t for some anchored rigid r.
/// Throws PreconditionError when m, the common source, or the source anchors differ.
bool ll(const Tuple & sigma, const Tuple & tau);

/// The unique isomorphism (Y, order) -> (target, <): y maps to the rank(y)-th smallest member of target.
/// Result is indexed by y. Throws PreconditionError on a size mismatch.
std::vector<int> coordinate_isomorphism(const LinearOrder & order, std::span<const int> target);

/// tau . sigma = (pi_0(S_0), ..., pi_{m-1}(S_{m-1}), s o t), where pi_i is the coordinate isomorphism
/// for the order tau_orders[t(i)] onto T_i. `tau_orders` lists the ordered set B that t maps onto,
/// each member a linear order on Y.
/// Throws PreconditionError on any frame mismatch.
Tuple twisted_compose(const Tuple & tau, const Tuple & sigma, std::span<const LinearOrder> tau_orders);

/// pi^tau: Y -> N^m, y -> (pi_0(y), ..., pi_{m-1}(y)). Result indexed by y, one coordinate vector each.
std::vector<std::vector<int>> pi_tau(const Tuple & tau, std::span<const LinearOrder> tau_orders);

} // namespace poramsey

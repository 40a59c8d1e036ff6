#pragma once

#include "poramsey/linear_order.hpp"
#include "poramsey/relation.hpp"
#include "poramsey/rigid_surjection.hpp"
#include "poramsey/structure.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace poramsey {

/// (K)_x: the elements strictly below x, listed in K-order. Equality of cuts is literal
/// (same base set with the same induced order), which is what equality of these lists gives.
struct Cut {
    std::vector<int> elements;

    friend bool operator==(const Cut &, const Cut &) = default;
};

/// Throws std::out_of_range if x is not in the ground set of K.
Cut cut(const LinearOrder & k, int x);

/// L1 below L2 in lin_L: the enumeration of L1 is lexicographically smaller than that of L2,
/// comparing single elements by L. Throws PreconditionError on mismatched ground sets.
bool below(const LinearOrder & l1, const LinearOrder & l2, const LinearOrder & l);

/// lin_L, or lin_L(P) when a partial order is supplied, sorted by `below`.
/// Members are addressed by position in that order.
class OrderedExtensionSpace {
public:
    OrderedExtensionSpace() = default;

    /// Throws PreconditionError if L does not extend P, InfeasibleError past `max_members`.
    OrderedExtensionSpace(LinearOrder reference, std::optional<Relation> constraint, std::size_t max_members = 1u << 20);

    const LinearOrder & reference() const { return reference_; }
    const std::optional<Relation> & constraint() const { return constraint_; }
    int ground_size() const { return reference_.size(); }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<LinearOrder> & members() const { return members_; }
    const LinearOrder & member(int index) const { return members_[static_cast<std::size_t>(index)]; }
    std::optional<int> index_of(const LinearOrder & order) const;

    /// Positions of `orders` in this space, as an anchored sequence.
    /// Throws PreconditionError if one is missing or the first is not the minimum.
    AnchoredSequence anchor_of(std::span<const LinearOrder> orders) const;

    friend bool operator==(const OrderedExtensionSpace & a, const OrderedExtensionSpace & b)
    {
        return a.reference_ == b.reference_ && a.constraint_ == b.constraint_;
    }

private:
    LinearOrder reference_;
    std::optional<Relation> constraint_;
    std::vector<LinearOrder> members_;
    std::map<std::vector<int>, int> index_;
};

OrderedExtensionSpace extension_space(int ground_size, const LinearOrder & reference, const std::optional<Relation> & constraint = std::nullopt);

/// lin_{L_k}(P) of a structure (k = 0 gives the space the witness construction uses).
OrderedExtensionSpace extension_space(const Structure & s, int order_index = 0);

/// The structure's orders (L_0,...,L_{p-1}) as an anchored sequence in lin_{L_0}(P).
AnchoredSequence structure_anchor(const OrderedExtensionSpace & space, const Structure & s);

/// res_X: L' -> L' restricted to X, with X relabelled by its reference order.
struct Restriction {
    std::vector<int> subset;            ///< X listed in the reference order; subset[j] is relabelled j
    OrderedExtensionSpace target;       ///< lin_{L|X}(P|X) on {0,...,|X|-1}
    AnchoredRigidSurjection map;        ///< positions of `space` -> positions of `target`
};

/// Throws std::invalid_argument if X has repeats or leaves the ground set,
/// and PreconditionError if the anchor does not live in `space`.
Restriction restriction_map(const OrderedExtensionSpace & space, std::span<const int> subset, const AnchoredSequence & source_anchor);

/// L' restricted to `subset_in_reference_order`, relabelled by position in that list.
LinearOrder restrict_order(const LinearOrder & order, std::span<const int> subset_in_reference_order);

} // namespace poramsey

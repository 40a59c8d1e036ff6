#pragma once

#include "poramsey/relation.hpp"

#include <compare>
#include <span>
#include <vector>

namespace poramsey {

/// A strict total order on {0,...,n-1}, held as its increasing enumeration.
class LinearOrder {
public:
    LinearOrder() = default;

    /// Throws std::invalid_argument unless `enumeration` is a permutation of {0,...,n-1}.
    explicit LinearOrder(std::vector<int> enumeration);

    static LinearOrder natural(int n);
    static bool is_permutation(std::span<const int> sequence);

    int size() const { return static_cast<int>(enumeration_.size()); }
    const std::vector<int> & enumeration() const { return enumeration_; }

    /// Position of x in the order.
    int rank(int x) const { return rank_[static_cast<std::size_t>(x)]; }
    int at(int position) const { return enumeration_[static_cast<std::size_t>(position)]; }
    bool less(int x, int y) const { return rank(x) < rank(y); }

    bool extends(const Relation & partial_order) const;

    /// The elements of `subset` listed in this order.
    std::vector<int> enumerate_subset(std::span<const int> subset) const;

    /// The order as a relation (all pairs x < y).
    Relation as_relation() const;

    friend bool operator==(const LinearOrder & a, const LinearOrder & b) { return a.enumeration_ == b.enumeration_; }
    friend std::strong_ordering operator<=>(const LinearOrder & a, const LinearOrder & b) { return a.enumeration_ <=> b.enumeration_; }

private:
    std::vector<int> enumeration_;
    std::vector<int> rank_;
};

} // namespace poramsey

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace poramsey {

using Pair = std::pair<int, int>;

/// Binary relation on {0,...,n-1}, stored as a dense bit matrix.
class Relation {
public:
    Relation() = default;
    explicit Relation(int n);

    /// Throws std::out_of_range if a pair mentions an element outside {0,...,n-1}.
    static Relation from_pairs(int n, std::span<const Pair> pairs);

    int size() const { return n_; }
    bool contains(int a, int b) const { return bits_[index(a, b)] != 0; }
    void insert(int a, int b) { bits_[index(a, b)] = 1; }
    void erase(int a, int b) { bits_[index(a, b)] = 0; }

    /// All pairs, lexicographically sorted.
    std::vector<Pair> pairs() const;
    std::size_t pair_count() const;

    bool is_irreflexive() const;
    bool is_transitive() const;
    Relation transitive_closure() const;

    /// Pairs of the closure that are not implied by transitivity (the Hasse diagram).
    Relation covering_pairs() const;

    /// Induced relation on `elements`; element elements[j] becomes j.
    Relation induced(std::span<const int> elements) const;

    bool subset_of(const Relation & other) const;

    friend bool operator==(const Relation &, const Relation &) = default;

private:
    std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b); }

    int n_ = 0;
    std::vector<std::uint8_t> bits_;
};

} // namespace poramsey

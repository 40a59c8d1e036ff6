#pragma once

#include "poramsey/linear_order.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace poramsey {

using BigInt = boost::multiprecision::cpp_int;

/// A length-p sequence in {0,...,ambient-1} whose first entry is the minimum 0.
/// Ordered sets are always taken as positions 0 < 1 < ... < ambient-1.
class AnchoredSequence {
public:
    AnchoredSequence() = default;

    /// Throws std::invalid_argument if empty, out of range, or not starting at 0.
    AnchoredSequence(std::vector<int> elements, int ambient_size);

    /// (0) in an ambient set of the given size.
    static AnchoredSequence trivial(int ambient_size) { return AnchoredSequence({0}, ambient_size); }

    int p() const { return static_cast<int>(elements_.size()); }
    int ambient_size() const { return ambient_size_; }
    const std::vector<int> & elements() const { return elements_; }
    int operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const AnchoredSequence &, const AnchoredSequence &) = default;
    friend auto operator<=>(const AnchoredSequence &, const AnchoredSequence &) = default;

private:
    std::vector<int> elements_;
    int ambient_size_ = 0;
};

/// Every anchored sequence of length p in an ambient set of the given size, lexicographically.
std::vector<AnchoredSequence> enumerate_anchored_sequences(int ambient_size, int p);

/// True iff `map` (indexed by source position) hits every target position and
/// target positions are first attained in increasing order.
bool is_rigid_surjection(std::span<const int> map, int target_size);

/// General form: map[b] is the image of source element b; both sides carry arbitrary orders.
bool is_rigid_surjection(std::span<const int> map, const LinearOrder & source, const LinearOrder & target);

/// A rigid surjection B -> A between position sets with r(b_i) = a_i for i < p.
class AnchoredRigidSurjection {
public:
    AnchoredRigidSurjection() = default;

    /// Throws std::invalid_argument if any invariant fails.
    AnchoredRigidSurjection(std::vector<int> map, int target_size, AnchoredSequence source_anchor, AnchoredSequence target_anchor);

    static AnchoredRigidSurjection identity(const AnchoredSequence & anchor);

    int source_size() const { return static_cast<int>(map_.size()); }
    int target_size() const { return target_size_; }
    const std::vector<int> & map() const { return map_; }
    int operator()(int b) const { return map_[static_cast<std::size_t>(b)]; }
    const AnchoredSequence & source_anchor() const { return source_anchor_; }
    const AnchoredSequence & target_anchor() const { return target_anchor_; }

    friend bool operator==(const AnchoredRigidSurjection &, const AnchoredRigidSurjection &) = default;
    friend auto operator<=>(const AnchoredRigidSurjection &, const AnchoredRigidSurjection &) = default;

private:
    std::vector<int> map_;
    int target_size_ = 0;
    AnchoredSequence source_anchor_;
    AnchoredSequence target_anchor_;
};

/// Every member of (B, source_anchor / A, target_anchor)_rs, lexicographic in the map.
/// Sizes come from the anchors' ambient sets. An empty result is a value, not an error.
/// Throws InfeasibleError past `limit` members.
std::vector<AnchoredRigidSurjection> enumerate_rs(const AnchoredSequence & source_anchor, const AnchoredSequence & target_anchor,
    std::size_t limit = 1u << 22);

/// |(B, source_anchor / A, target_anchor)_rs|, exactly.
BigInt count_rs(const AnchoredSequence & source_anchor, const AnchoredSequence & target_anchor);

/// r o t. Throws PreconditionError unless t's target (size and anchor) is r's source.
AnchoredRigidSurjection compose(const AnchoredRigidSurjection & r, const AnchoredRigidSurjection & t);

/// The unique r with s = r o t, when it exists and is an anchored rigid surjection.
/// Throws PreconditionError unless s and t share source size and source anchor.
std::optional<AnchoredRigidSurjection> divide(const AnchoredRigidSurjection & s, const AnchoredRigidSurjection & t);

} // namespace poramsey

#include "poramsey/rigid_surjection.hpp"

#include "poramsey/errors.hpp"

#include <stdexcept>
#include <string>

namespace poramsey {

AnchoredSequence::AnchoredSequence(std::vector<int> elements, int ambient_size) :
    elements_(std::move(elements)),
    ambient_size_(ambient_size)
{
    if (elements_.empty())
        throw std::invalid_argument("anchored sequence must have length p > 0");
    for (int e : elements_)
        if (e < 0 || e >= ambient_size_)
            throw std::invalid_argument("anchored sequence entry " + std::to_string(e) + " outside ambient set of size " + std::to_string(ambient_size_));
    if (elements_.front() != 0)
        throw std::invalid_argument("anchored sequence must start at the minimum");
}

std::vector<AnchoredSequence> enumerate_anchored_sequences(int ambient_size, int p)
{
    std::vector<AnchoredSequence> out;
    if (ambient_size < 1 || p < 1)
        return out;
    std::vector<int> e(static_cast<std::size_t>(p), 0);
    while (true) {
        out.emplace_back(e, ambient_size);
        int i = p - 1;
        while (i >= 1 && e[static_cast<std::size_t>(i)] == ambient_size - 1)
            e[static_cast<std::size_t>(i--)] = 0;
        if (i < 1)
            break;
        ++e[static_cast<std::size_t>(i)];
    }
    return out;
}

bool is_rigid_surjection(std::span<const int> map, int target_size)
{
    int opened = 0;
    for (int v : map) {
        if (v < 0 || v > opened || v >= target_size)
            return false;
        if (v == opened)
            ++opened;
    }
    return opened == target_size;
}

bool is_rigid_surjection(std::span<const int> map, const LinearOrder & source, const LinearOrder & target)
{
    if (static_cast<int>(map.size()) != source.size())
        return false;
    std::vector<int> positional;
    positional.reserve(map.size());
    for (int b : source.enumeration()) {
        const int a = map[static_cast<std::size_t>(b)];
        if (a < 0 || a >= target.size())
            return false;
        positional.push_back(target.rank(a));
    }
    return is_rigid_surjection(positional, target.size());
}

AnchoredRigidSurjection::AnchoredRigidSurjection(std::vector<int> map, int target_size, AnchoredSequence source_anchor,
    AnchoredSequence target_anchor) :
    map_(std::move(map)),
    target_size_(target_size),
    source_anchor_(std::move(source_anchor)),
    target_anchor_(std::move(target_anchor))
{
    if (source_anchor_.ambient_size() != source_size() || target_anchor_.ambient_size() != target_size_)
        throw std::invalid_argument("anchors do not live in the source and target");
    if (source_anchor_.p() != target_anchor_.p())
        throw std::invalid_argument("anchors have different lengths");
    if (! is_rigid_surjection(map_, target_size_))
        throw std::invalid_argument("map is not a rigid surjection");
    for (int i = 0; i < source_anchor_.p(); ++i)
        if (map_[static_cast<std::size_t>(source_anchor_[i])] != target_anchor_[i])
            throw std::invalid_argument("map does not send anchor " + std::to_string(i) + " to its target anchor");
}

AnchoredRigidSurjection AnchoredRigidSurjection::identity(const AnchoredSequence & anchor)
{
    std::vector<int> map(static_cast<std::size_t>(anchor.ambient_size()));
    for (int i = 0; i < anchor.ambient_size(); ++i)
        map[static_cast<std::size_t>(i)] = i;
    return AnchoredRigidSurjection(std::move(map), anchor.ambient_size(), anchor, anchor);
}

namespace
{
    // forced[b] = required image of source position b, or -1. Empty optional if two anchors clash.
    std::optional<std::vector<int>> forced_values(const AnchoredSequence & source_anchor, const AnchoredSequence & target_anchor)
    {
        if (source_anchor.p() != target_anchor.p())
            throw PreconditionError("anchors have different lengths p");
        std::vector<int> forced(static_cast<std::size_t>(source_anchor.ambient_size()), -1);
        for (int i = 0; i < source_anchor.p(); ++i) {
            int & slot = forced[static_cast<std::size_t>(source_anchor[i])];
            if (slot != -1 && slot != target_anchor[i])
                return std::nullopt;
            slot = target_anchor[i];
        }
        return forced;
    }
}

std::vector<AnchoredRigidSurjection> enumerate_rs(const AnchoredSequence & source_anchor, const AnchoredSequence & target_anchor,
    std::size_t limit)
{
    std::vector<AnchoredRigidSurjection> out;
    const auto forced = forced_values(source_anchor, target_anchor);
    const int source = source_anchor.ambient_size(), target = target_anchor.ambient_size();
    if (! forced || target > source)
        return out;

    // Restricted growth: position b takes an already-opened value or opens the next one.
    std::vector<int> map(static_cast<std::size_t>(source), 0);
    auto fill = [&](auto && self, int b, int opened) -> void {
        if (target - opened > source - b)
            return;
        if (b == source) {
            if (out.size() >= limit)
                throw InfeasibleError("more than " + std::to_string(limit) + " rigid surjections");
            out.emplace_back(map, target, source_anchor, target_anchor);
            return;
        }
        const int lo = 0, hi = std::min(opened, target - 1);
        const int want = (*forced)[static_cast<std::size_t>(b)];
        for (int v = lo; v <= hi; ++v) {
            if (want != -1 && v != want)
                continue;
            map[static_cast<std::size_t>(b)] = v;
            self(self, b + 1, v == opened ? opened + 1 : opened);
        }
    };
    fill(fill, 0, 0);
    return out;
}

BigInt count_rs(const AnchoredSequence & source_anchor, const AnchoredSequence & target_anchor)
{
    const auto forced = forced_values(source_anchor, target_anchor);
    const int source = source_anchor.ambient_size(), target = target_anchor.ambient_size();
    if (! forced || target > source)
        return 0;

    // ways[j] = number of valid prefixes with j values opened so far.
    std::vector<BigInt> ways(static_cast<std::size_t>(target) + 1, 0);
    ways[0] = 1;
    for (int b = 0; b < source; ++b) {
        std::vector<BigInt> next(ways.size(), 0);
        const int want = (*forced)[static_cast<std::size_t>(b)];
        for (int j = 0; j <= target; ++j) {
            if (ways[static_cast<std::size_t>(j)] == 0)
                continue;
            const BigInt & w = ways[static_cast<std::size_t>(j)];
            if (want == -1) {
                next[static_cast<std::size_t>(j)] += w * j;
                if (j < target)
                    next[static_cast<std::size_t>(j) + 1] += w;
            }
            else if (want < j)
                next[static_cast<std::size_t>(j)] += w;
            else if (want == j && j < target)
                next[static_cast<std::size_t>(j) + 1] += w;
        }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(target)];
}

AnchoredRigidSurjection compose(const AnchoredRigidSurjection & r, const AnchoredRigidSurjection & t)
{
    if (t.target_size() != r.source_size())
        throw PreconditionError("compose: target of t has size " + std::to_string(t.target_size()) + ", source of r has size " + std::to_string(r.source_size()));
    if (t.target_anchor() != r.source_anchor())
        throw PreconditionError("compose: anchors do not chain");
    std::vector<int> map;
    map.reserve(static_cast<std::size_t>(t.source_size()));
    for (int c : t.map())
        map.push_back(r(c));
    return AnchoredRigidSurjection(std::move(map), r.target_size(), t.source_anchor(), r.target_anchor());
}

std::optional<AnchoredRigidSurjection> divide(const AnchoredRigidSurjection & s, const AnchoredRigidSurjection & t)
{
    if (s.source_size() != t.source_size() || s.source_anchor() != t.source_anchor())
        throw PreconditionError("divide: s and t must share their source and source anchor");

    std::vector<int> r(static_cast<std::size_t>(t.target_size()), -1);
    for (int c = 0; c < t.source_size(); ++c) {
        int & slot = r[static_cast<std::size_t>(t(c))];
        if (slot != -1 && slot != s(c))
            return std::nullopt;
        slot = s(c);
    }
    if (! is_rigid_surjection(r, s.target_size()))
        return std::nullopt;
    for (int i = 0; i < t.target_anchor().p(); ++i)
        if (r[static_cast<std::size_t>(t.target_anchor()[i])] != s.target_anchor()[i])
            return std::nullopt;
    return AnchoredRigidSurjection(std::move(r), s.target_size(), t.target_anchor(), s.target_anchor());
}

} // namespace poramsey

#include "poramsey/recheck.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

namespace poramsey::recheck {

namespace
{
    std::vector<int> members_of(std::uint64_t mask)
    {
        std::vector<int> out;
        for (int i = 0; mask; ++i, mask >>= 1)
            if (mask & 1u)
                out.push_back(i);
        return out;
    }

    std::vector<std::uint64_t> masks(int n, int size)
    {
        std::vector<std::uint64_t> out;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
            if (std::popcount(mask) == size)
                out.push_back(mask);
        return out;
    }

    // Every assignment of one entry per coordinate, coordinates independent.
    template <typename T, typename F>
    void for_each_product(const std::vector<std::vector<T>> & choices, F && f)
    {
        std::vector<T> current;
        auto grow = [&](auto && self, std::size_t i) -> void {
            if (i == choices.size()) {
                f(current);
                return;
            }
            for (const auto & c : choices[i]) {
                current.push_back(c);
                self(self, i + 1);
                current.pop_back();
            }
        };
        grow(grow, 0);
    }

    // Colors seen so far; true while fewer than two distinct colors occurred and nothing was missing.
    class ConeWatch {
    public:
        bool add(std::optional<int> color)
        {
            if (! color) {
                missing_ = true;
                return false;
            }
            if (first_ == -1)
                first_ = *color;
            else if (first_ != *color)
                mixed_ = true;
            return true;
        }
        bool monochromatic() const { return ! missing_ && ! mixed_; }
        bool missing() const { return missing_; }

    private:
        int first_ = -1;
        bool mixed_ = false;
        bool missing_ = false;
    };

    template <typename Key>
    std::map<Key, int> color_map(std::span<const Key> objects, std::span<const int> coloring)
    {
        std::map<Key, int> out;
        for (std::size_t i = 0; i < objects.size(); ++i)
            out.emplace(objects[i], coloring[i]);
        return out;
    }

    template <typename Key>
    std::optional<int> lookup(const std::map<Key, int> & colors, const Key & key)
    {
        auto it = colors.find(key);
        if (it == colors.end())
            return std::nullopt;
        return it->second;
    }

    SetTuple to_sets(const std::vector<std::uint64_t> & tuple)
    {
        SetTuple out;
        for (auto mask : tuple)
            out.push_back(members_of(mask));
        return out;
    }

    std::vector<std::uint64_t> submasks(std::uint64_t mask, int size)
    {
        std::vector<std::uint64_t> out;
        for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
            if (std::popcount(sub) == size)
                out.push_back(sub);
            if (sub == 0)
                break;
        }
        return out;
    }

    std::vector<int> compose_maps(const std::vector<int> & outer, const std::vector<int> & inner)
    {
        std::vector<int> out;
        for (int v : inner)
            out.push_back(outer[static_cast<std::size_t>(v)]);
        return out;
    }
}

std::vector<std::vector<int>> brute_force_rigid_maps(const AnchoredSequence & source_anchor, const AnchoredSequence & target_anchor)
{
    const int source = source_anchor.ambient_size(), target = target_anchor.ambient_size();
    std::vector<std::vector<int>> out;
    std::vector<int> map;

    auto anchors_ok = [&] {
        for (int i = 0; i < source_anchor.p(); ++i)
            if (map[static_cast<std::size_t>(source_anchor[i])] != target_anchor[i])
                return false;
        return true;
    };
    // The image of the initial segment map[0..b] must be {0,...,j} for some j.
    auto prefix_image_is_initial = [&] {
        int highest = -1, distinct = 0;
        std::vector<bool> seen(static_cast<std::size_t>(target), false);
        for (int v : map) {
            highest = std::max(highest, v);
            if (! seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                ++distinct;
            }
        }
        return distinct == highest + 1;
    };
    auto grow = [&](auto && self) -> void {
        if (static_cast<int>(map.size()) == source) {
            const std::set<int> image(map.begin(), map.end());
            if (static_cast<int>(image.size()) == target && anchors_ok())
                out.push_back(map);
            return;
        }
        for (int v = 0; v < target; ++v) {
            map.push_back(v);
            if (prefix_image_is_initial())
                self(self);
            map.pop_back();
        }
    };
    if (source_anchor.p() == target_anchor.p())
        grow(grow);
    return out;
}

std::vector<std::vector<int>> brute_force_embeddings(const Structure & x, const Structure & z)
{
    std::vector<std::vector<int>> out;
    if (x.p() != z.p())
        return out;
    std::vector<int> map;
    std::vector<bool> used(static_cast<std::size_t>(z.size()), false);
    auto consistent = [&](int a) {
        const int fa = map[static_cast<std::size_t>(a)];
        for (int b = 0; b < a; ++b) {
            const int fb = map[static_cast<std::size_t>(b)];
            if (x.partial_order().contains(a, b) != z.partial_order().contains(fa, fb))
                return false;
            if (x.partial_order().contains(b, a) != z.partial_order().contains(fb, fa))
                return false;
            for (int i = 0; i < x.p(); ++i)
                if (x.order(i).less(a, b) != z.order(i).less(fa, fb))
                    return false;
        }
        return true;
    };
    auto grow = [&](auto && self) -> void {
        const int a = static_cast<int>(map.size());
        if (a == x.size()) {
            out.push_back(map);
            return;
        }
        for (int v = 0; v < z.size(); ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            map.push_back(v);
            used[static_cast<std::size_t>(v)] = true;
            if (consistent(a))
                self(self);
            used[static_cast<std::size_t>(v)] = false;
            map.pop_back();
        }
    };
    grow(grow);
    return out;
}

bool product(int n, int k, int l, int m, std::span<const SetTuple> objects, std::span<const int> coloring)
{
    if (objects.size() != coloring.size())
        return false;
    const auto colors = color_map<SetTuple>(objects, coloring);
    const auto targets = masks(n, l);
    std::vector<std::vector<std::uint64_t>> choices(static_cast<std::size_t>(m), targets);
    bool ok = true;
    for_each_product(choices, [&](const std::vector<std::uint64_t> & target) {
        if (! ok)
            return;
        std::vector<std::vector<std::uint64_t>> below;
        for (auto mask : target)
            below.push_back(submasks(mask, k));
        ConeWatch watch;
        for_each_product(below, [&](const std::vector<std::uint64_t> & s) { watch.add(lookup(colors, to_sets(s))); });
        if (watch.monochromatic() || watch.missing())
            ok = false;
    });
    return ok;
}

bool dual(const AnchoredSequence & i_anchor, const AnchoredSequence & a_anchor, const AnchoredSequence & b_anchor,
    std::span<const AnchoredRigidSurjection> objects, std::span<const int> coloring)
{
    if (objects.size() != coloring.size())
        return false;
    std::map<std::vector<int>, int> colors;
    for (std::size_t i = 0; i < objects.size(); ++i)
        colors.emplace(objects[i].map(), coloring[i]);
    const auto inner = brute_force_rigid_maps(i_anchor, b_anchor);
    const auto outer = brute_force_rigid_maps(b_anchor, a_anchor);
    for (const auto & t : inner) {
        ConeWatch watch;
        for (const auto & r : outer)
            watch.add(lookup(colors, compose_maps(r, t)));
        if (watch.monochromatic() || watch.missing())
            return false;
    }
    return true;
}

bool prop2(int n, const AnchoredSequence & i_anchor, const AnchoredSequence & a_anchor, const AnchoredSequence & b_anchor, int k, int l,
    std::span<const Tuple> objects, std::span<const int> coloring)
{
    if (objects.size() != coloring.size())
        return false;
    std::map<std::pair<SetTuple, std::vector<int>>, int> colors;
    for (std::size_t i = 0; i < objects.size(); ++i)
        colors.emplace(std::make_pair(objects[i].sets, objects[i].rs.map()), coloring[i]);

    const int m = i_anchor.ambient_size();
    const auto inner = brute_force_rigid_maps(i_anchor, b_anchor);
    const auto outer = brute_force_rigid_maps(b_anchor, a_anchor);
    std::vector<std::vector<std::uint64_t>> choices(static_cast<std::size_t>(m), masks(n, l));
    bool ok = true;
    for_each_product(choices, [&](const std::vector<std::uint64_t> & target) {
        if (! ok)
            return;
        std::vector<std::vector<std::uint64_t>> below;
        for (auto mask : target)
            below.push_back(submasks(mask, k));
        for (const auto & t : inner) {
            ConeWatch watch;
            for_each_product(below, [&](const std::vector<std::uint64_t> & s) {
                for (const auto & r : outer)
                    watch.add(lookup(colors, std::make_pair(to_sets(s), compose_maps(r, t))));
            });
            if (watch.monochromatic() || watch.missing()) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

bool prop5(int n, const AnchoredSequence & i_anchor, const AnchoredOrderSet & a, const AnchoredOrderSet & b,
    std::span<const Tuple> objects, std::span<const int> coloring)
{
    if (objects.size() != coloring.size())
        return false;
    std::map<std::pair<SetTuple, std::vector<int>>, int> colors;
    for (std::size_t i = 0; i < objects.size(); ++i)
        colors.emplace(std::make_pair(objects[i].sets, objects[i].rs.map()), coloring[i]);

    const int m = i_anchor.ambient_size();
    const int x_size = a.ground_size(), y_size = b.ground_size();
    const auto inner = brute_force_rigid_maps(i_anchor, b.anchor);
    const auto outer = brute_force_rigid_maps(b.anchor, a.anchor);
    std::vector<std::vector<std::uint64_t>> target_choices(static_cast<std::size_t>(m), masks(n, y_size));
    std::vector<std::vector<std::uint64_t>> sigma_choices(static_cast<std::size_t>(m), masks(y_size, x_size));

    bool ok = true;
    for_each_product(target_choices, [&](const std::vector<std::uint64_t> & target) {
        if (! ok)
            return;
        const SetTuple t_sets = to_sets(target);
        for (const auto & t : inner) {
            ConeWatch watch;
            for_each_product(sigma_choices, [&](const std::vector<std::uint64_t> & s_masks) {
                // Coordinate i sends the j-th element of Y in order b[t(i)] to the j-th smallest of T_i.
                SetTuple moved;
                for (int i = 0; i < m; ++i) {
                    const auto & enumeration = b.members[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])].enumeration();
                    std::vector<int> image;
                    for (int y : members_of(s_masks[static_cast<std::size_t>(i)])) {
                        const auto pos = std::find(enumeration.begin(), enumeration.end(), y) - enumeration.begin();
                        image.push_back(t_sets[static_cast<std::size_t>(i)][static_cast<std::size_t>(pos)]);
                    }
                    std::sort(image.begin(), image.end());
                    moved.push_back(std::move(image));
                }
                for (const auto & r : outer)
                    watch.add(lookup(colors, std::make_pair(moved, compose_maps(r, t))));
            });
            if (watch.monochromatic() || watch.missing()) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

bool witness(const Structure & z, const Structure & x, const Structure & y, std::span<const Copy> copies, std::span<const int> coloring)
{
    if (copies.size() != coloring.size())
        return false;
    std::set<std::vector<int>> x_images;
    for (auto map : brute_force_embeddings(x, z)) {
        std::sort(map.begin(), map.end());
        x_images.insert(map);
    }
    std::map<std::vector<int>, int> colors;
    for (std::size_t i = 0; i < copies.size(); ++i)
        colors.emplace(copies[i].elements, coloring[i]);
    if (colors.size() != x_images.size())
        return false;
    for (const auto & img : x_images)
        if (! colors.count(img))
            return false;

    std::set<std::vector<int>> y_images;
    for (auto map : brute_force_embeddings(y, z)) {
        std::sort(map.begin(), map.end());
        y_images.insert(map);
    }
    for (const auto & big : y_images) {
        ConeWatch watch;
        for (const auto & small : x_images)
            if (std::includes(big.begin(), big.end(), small.begin(), small.end()))
                watch.add(colors.at(small));
        if (watch.monochromatic())
            return false;
    }
    return true;
}

} // namespace poramsey::recheck

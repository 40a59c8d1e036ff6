#include "poramsey/linear_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace poramsey {

bool LinearOrder::is_permutation(std::span<const int> sequence)
{
    const auto n = sequence.size();
    std::vector<bool> seen(n, false);
    for (int x : sequence) {
        if (x < 0 || static_cast<std::size_t>(x) >= n || seen[static_cast<std::size_t>(x)])
            return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

LinearOrder::LinearOrder(std::vector<int> enumeration) : enumeration_(std::move(enumeration))
{
    if (! is_permutation(enumeration_))
        throw std::invalid_argument("linear order is not a permutation of its ground set");
    rank_.resize(enumeration_.size());
    for (std::size_t i = 0; i < enumeration_.size(); ++i)
        rank_[static_cast<std::size_t>(enumeration_[i])] = static_cast<int>(i);
}

LinearOrder LinearOrder::natural(int n)
{
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 0);
    return LinearOrder(std::move(e));
}

bool LinearOrder::extends(const Relation & partial_order) const
{
    if (partial_order.size() != size())
        return false;
    for (auto [a, b] : partial_order.pairs())
        if (! less(a, b))
            return false;
    return true;
}

std::vector<int> LinearOrder::enumerate_subset(std::span<const int> subset) const
{
    std::vector<int> out(subset.begin(), subset.end());
    std::sort(out.begin(), out.end(), [this](int a, int b) { return less(a, b); });
    return out;
}

Relation LinearOrder::as_relation() const
{
    Relation r(size());
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            r.insert(at(i), at(j));
    return r;
}

} // namespace poramsey

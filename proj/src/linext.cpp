#include "poramsey/linext.hpp"

#include "poramsey/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace poramsey {

Cut cut(const LinearOrder & k, int x)
{
    if (x < 0 || x >= k.size())
        throw std::out_of_range("cut: element " + std::to_string(x) + " not in ground set");
    const auto & e = k.enumeration();
    return Cut{std::vector<int>(e.begin(), e.begin() + k.rank(x))};
}

bool below(const LinearOrder & l1, const LinearOrder & l2, const LinearOrder & l)
{
    if (l1.size() != l.size() || l2.size() != l.size())
        throw PreconditionError("below: orders live on different ground sets");
    for (int i = 0; i < l.size(); ++i) {
        const int a = l1.at(i), b = l2.at(i);
        if (a != b)
            return l.less(a, b);
    }
    return false;
}

OrderedExtensionSpace::OrderedExtensionSpace(LinearOrder reference, std::optional<Relation> constraint, std::size_t max_members) :
    reference_(std::move(reference)),
    constraint_(std::move(constraint))
{
    const int n = reference_.size();
    if (constraint_) {
        if (constraint_->size() != n)
            throw PreconditionError("extension space: partial order and reference order have different ground sets");
        if (! reference_.extends(*constraint_))
            throw PreconditionError("extension space: reference order does not extend P");
    }

    // Depth-first, always trying the L-smallest available element first, so the output
    // is already sorted by `below`. An element is available once its P-predecessors are placed.
    std::vector<int> missing_predecessors(static_cast<std::size_t>(n), 0);
    if (constraint_)
        for (auto [a, b] : constraint_->pairs())
            ++missing_predecessors[static_cast<std::size_t>(b)];

    std::vector<int> prefix;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto grow = [&](auto && self) -> void {
        if (static_cast<int>(prefix.size()) == n) {
            if (members_.size() >= max_members)
                throw InfeasibleError("extension space has more than " + std::to_string(max_members) + " members");
            members_.emplace_back(prefix);
            return;
        }
        for (int x : reference_.enumeration()) {
            if (used[static_cast<std::size_t>(x)] || missing_predecessors[static_cast<std::size_t>(x)] != 0)
                continue;
            used[static_cast<std::size_t>(x)] = true;
            prefix.push_back(x);
            if (constraint_)
                for (int y = 0; y < n; ++y)
                    if (constraint_->contains(x, y))
                        --missing_predecessors[static_cast<std::size_t>(y)];
            self(self);
            if (constraint_)
                for (int y = 0; y < n; ++y)
                    if (constraint_->contains(x, y))
                        ++missing_predecessors[static_cast<std::size_t>(y)];
            prefix.pop_back();
            used[static_cast<std::size_t>(x)] = false;
        }
    };
    grow(grow);

    for (std::size_t i = 0; i < members_.size(); ++i)
        index_.emplace(members_[i].enumeration(), static_cast<int>(i));
}

std::optional<int> OrderedExtensionSpace::index_of(const LinearOrder & order) const
{
    auto it = index_.find(order.enumeration());
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

AnchoredSequence OrderedExtensionSpace::anchor_of(std::span<const LinearOrder> orders) const
{
    std::vector<int> positions;
    for (const auto & o : orders) {
        auto idx = index_of(o);
        if (! idx)
            throw PreconditionError("anchor: order is not a member of the extension space");
        positions.push_back(*idx);
    }
    if (positions.empty() || positions.front() != 0)
        throw PreconditionError("anchor: first order must be the minimum of the space");
    return AnchoredSequence(std::move(positions), size());
}

OrderedExtensionSpace extension_space(int ground_size, const LinearOrder & reference, const std::optional<Relation> & constraint)
{
    if (reference.size() != ground_size)
        throw PreconditionError("extension space: reference order has the wrong ground set");
    return OrderedExtensionSpace(reference, constraint);
}

OrderedExtensionSpace extension_space(const Structure & s, int order_index)
{
    if (order_index < 0 || order_index >= s.p())
        throw PreconditionError("extension space: no linear order with index " + std::to_string(order_index));
    return OrderedExtensionSpace(s.order(order_index), s.partial_order());
}

AnchoredSequence structure_anchor(const OrderedExtensionSpace & space, const Structure & s)
{
    return space.anchor_of(s.linear_orders());
}

LinearOrder restrict_order(const LinearOrder & order, std::span<const int> subset_in_reference_order)
{
    std::vector<int> relabel(static_cast<std::size_t>(order.size()), -1);
    for (std::size_t j = 0; j < subset_in_reference_order.size(); ++j)
        relabel[static_cast<std::size_t>(subset_in_reference_order[j])] = static_cast<int>(j);
    std::vector<int> e;
    e.reserve(subset_in_reference_order.size());
    for (int x : order.enumeration())
        if (relabel[static_cast<std::size_t>(x)] != -1)
            e.push_back(relabel[static_cast<std::size_t>(x)]);
    return LinearOrder(std::move(e));
}

Restriction restriction_map(const OrderedExtensionSpace & space, std::span<const int> subset, const AnchoredSequence & source_anchor)
{
    const int n = space.ground_size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x : subset) {
        if (x < 0 || x >= n)
            throw std::invalid_argument("res: element " + std::to_string(x) + " not in ground set");
        if (seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("res: repeated element " + std::to_string(x));
        seen[static_cast<std::size_t>(x)] = true;
    }
    if (subset.empty())
        throw std::invalid_argument("res: subset must be non-empty");
    if (source_anchor.ambient_size() != space.size())
        throw PreconditionError("res: anchor does not live in the extension space");

    Restriction out;
    out.subset = space.reference().enumerate_subset(subset);
    std::optional<Relation> constraint;
    if (space.constraint())
        constraint = space.constraint()->induced(out.subset);
    out.target = OrderedExtensionSpace(restrict_order(space.reference(), out.subset), constraint);

    std::vector<int> map;
    map.reserve(static_cast<std::size_t>(space.size()));
    for (const auto & member : space.members()) {
        auto idx = out.target.index_of(restrict_order(member, out.subset));
        if (! idx)
            throw std::logic_error("res: restriction of a member is missing from the target space");
        map.push_back(*idx);
    }

    std::vector<int> target_anchor;
    for (int a : source_anchor.elements())
        target_anchor.push_back(map[static_cast<std::size_t>(a)]);

    out.map = AnchoredRigidSurjection(std::move(map), out.target.size(), source_anchor,
        AnchoredSequence(std::move(target_anchor), out.target.size()));
    return out;
}

} // namespace poramsey

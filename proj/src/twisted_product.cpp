#include "poramsey/twisted_product.hpp"

#include "poramsey/errors.hpp"

#include <algorithm>
#include <string>

namespace poramsey {

void check_tuple(const Tuple & t)
{
    for (const auto & s : t.sets) {
        if (s.size() != t.sets.front().size())
            throw PreconditionError("tuple sets have different cardinalities");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0)
                throw PreconditionError("tuple set contains a negative element");
            if (i > 0 && s[i - 1] >= s[i])
                throw PreconditionError("tuple set is not strictly increasing");
        }
    }
}

bool ll(const Tuple & sigma, const Tuple & tau)
{
    if (sigma.m() != tau.m())
        throw PreconditionError("<<: tuples have different m");
    if (sigma.rs.source_size() != tau.rs.source_size() || sigma.rs.source_anchor() != tau.rs.source_anchor())
        throw PreconditionError("<<: rigid surjections do not share their anchored source");
    for (int i = 0; i < sigma.m(); ++i) {
        const auto & s = sigma.sets[static_cast<std::size_t>(i)];
        const auto & t = tau.sets[static_cast<std::size_t>(i)];
        if (! std::includes(t.begin(), t.end(), s.begin(), s.end()))
            return false;
    }
    return divide(sigma.rs, tau.rs).has_value();
}

std::vector<int> coordinate_isomorphism(const LinearOrder & order, std::span<const int> target)
{
    if (static_cast<int>(target.size()) != order.size())
        throw PreconditionError("coordinate isomorphism: |T_i| = " + std::to_string(target.size()) + " but |Y| = " + std::to_string(order.size()));
    std::vector<int> sorted(target.begin(), target.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> pi(static_cast<std::size_t>(order.size()));
    for (int y = 0; y < order.size(); ++y)
        pi[static_cast<std::size_t>(y)] = sorted[static_cast<std::size_t>(order.rank(y))];
    return pi;
}

namespace
{
    void check_frame(const Tuple & tau, std::span<const LinearOrder> tau_orders)
    {
        check_tuple(tau);
        if (tau.rs.source_size() != tau.m())
            throw PreconditionError("tau's rigid surjection must have source m = " + std::to_string(tau.m()));
        if (static_cast<int>(tau_orders.size()) != tau.rs.target_size())
            throw PreconditionError("tau's rigid surjection targets " + std::to_string(tau.rs.target_size()) + " orders, " + std::to_string(tau_orders.size()) + " supplied");
        for (const auto & o : tau_orders)
            if (o.size() != tau.set_size())
                throw PreconditionError("orders in B must live on a set of size |T_i|");
    }
}

std::vector<std::vector<int>> pi_tau(const Tuple & tau, std::span<const LinearOrder> tau_orders)
{
    check_frame(tau, tau_orders);
    const int y_size = tau.set_size();
    std::vector<std::vector<int>> images(static_cast<std::size_t>(y_size), std::vector<int>(static_cast<std::size_t>(tau.m())));
    for (int i = 0; i < tau.m(); ++i) {
        const auto pi = coordinate_isomorphism(tau_orders[static_cast<std::size_t>(tau.rs(i))], tau.sets[static_cast<std::size_t>(i)]);
        for (int y = 0; y < y_size; ++y)
            images[static_cast<std::size_t>(y)][static_cast<std::size_t>(i)] = pi[static_cast<std::size_t>(y)];
    }
    return images;
}

Tuple twisted_compose(const Tuple & tau, const Tuple & sigma, std::span<const LinearOrder> tau_orders)
{
    check_frame(tau, tau_orders);
    check_tuple(sigma);
    if (sigma.m() != tau.m())
        throw PreconditionError("twisted product: sigma has " + std::to_string(sigma.m()) + " sets, tau has " + std::to_string(tau.m()));
    const int y_size = tau.set_size();
    for (const auto & s : sigma.sets)
        if (! s.empty() && s.back() >= y_size)
            throw PreconditionError("twisted product: sigma's sets must be subsets of Y");

    Tuple out;
    out.sets.reserve(sigma.sets.size());
    for (int i = 0; i < tau.m(); ++i) {
        const auto pi = coordinate_isomorphism(tau_orders[static_cast<std::size_t>(tau.rs(i))], tau.sets[static_cast<std::size_t>(i)]);
        std::vector<int> image;
        for (int y : sigma.sets[static_cast<std::size_t>(i)])
            image.push_back(pi[static_cast<std::size_t>(y)]);
        std::sort(image.begin(), image.end());
        out.sets.push_back(std::move(image));
    }
    out.rs = compose(sigma.rs, tau.rs);
    return out;
}

} // namespace poramsey

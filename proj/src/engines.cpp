#include "poramsey/engines.hpp"

#include "poramsey/errors.hpp"
#include "poramsey/recheck.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace poramsey {

std::vector<std::vector<int>> combinations(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        c[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j) - 1] + 1;
    }
    return out;
}

std::vector<SetTuple> set_tuples(const std::vector<std::vector<int>> & choices, int m)
{
    std::vector<SetTuple> out;
    if (choices.empty() && m > 0)
        return out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    while (true) {
        SetTuple t;
        for (auto i : idx)
            t.push_back(choices[i]);
        out.push_back(std::move(t));
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == choices.size())
            idx[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0)
            break;
        ++idx[static_cast<std::size_t>(pos)];
    }
    return out;
}

namespace
{
    BigInt binomial(int n, int k)
    {
        if (k < 0 || k > n)
            return 0;
        BigInt r = 1;
        for (int i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    }

    void guard(const BigInt & count, std::size_t ceiling, const std::string & what)
    {
        if (count > ceiling)
            throw InfeasibleError(what + " has " + count.str() + " members, ceiling is " + std::to_string(ceiling));
    }

    std::size_t target_ceiling(const SearchLimits & limits)
    {
        return limits.max_objects * 64;
    }

    template <typename Key>
    std::map<Key, std::size_t> index_map(const std::vector<Key> & items)
    {
        std::map<Key, std::size_t> out;
        for (std::size_t i = 0; i < items.size(); ++i)
            out.emplace(items[i], i);
        return out;
    }

    std::vector<Tuple> tuples(const std::vector<SetTuple> & sets, const std::vector<AnchoredRigidSurjection> & maps)
    {
        std::vector<Tuple> out;
        out.reserve(sets.size() * maps.size());
        for (const auto & s : sets)
            for (const auto & r : maps)
                out.push_back(Tuple{s, r});
        return out;
    }

    void require_counterexample_sound(bool rechecked)
    {
        if (! rechecked)
            throw std::logic_error("counterexample coloring failed independent re-check");
    }

    void check_p(const AnchoredSequence & a, const AnchoredSequence & b)
    {
        if (a.p() != b.p())
            throw PreconditionError("anchored sequences have different lengths p");
    }
}

// ---- Product -----------------------------------------------------------------

ProductInstance product_instance(int n, int k, int l, int m, const SearchLimits & limits)
{
    if (k < 0 || l < k || m < 1 || n < 0)
        throw PreconditionError("product: need 0 <= k <= l, m >= 1, n >= 0");
    guard(pow(binomial(n, k), static_cast<unsigned>(m)), limits.max_objects, "(n choose k)^m");
    guard(pow(binomial(n, l), static_cast<unsigned>(m)), target_ceiling(limits), "(n choose l)^m");

    ProductInstance inst{.n = n, .k = k, .l = l, .m = m};
    inst.objects = set_tuples(combinations(n, k), m);
    inst.targets = set_tuples(combinations(n, l), m);
    inst.problem.objects = inst.objects.size();

    const auto index = index_map(inst.objects);
    const auto local = combinations(l, k);
    for (const auto & target : inst.targets) {
        // S_i ranges over k-subsets of T_i: pick positions inside T_i.
        std::vector<std::size_t> cone;
        for (const auto & positions : set_tuples(local, m)) {
            SetTuple s;
            for (int i = 0; i < m; ++i) {
                std::vector<int> subset;
                for (int pos : positions[static_cast<std::size_t>(i)])
                    subset.push_back(target[static_cast<std::size_t>(i)][static_cast<std::size_t>(pos)]);
                s.push_back(std::move(subset));
            }
            cone.push_back(index.at(s));
        }
        inst.problem.cones.push_back(std::move(cone));
    }
    return inst;
}

ColoringCertificate verify_product_witness(int n, int d, int k, int l, int m, const SearchLimits & limits)
{
    const auto inst = product_instance(n, k, l, m, limits);
    auto cert = search_colorings(inst.problem, d, limits);
    if (! cert.holds())
        require_counterexample_sound(recheck::product(n, k, l, m, inst.objects, *cert.coloring));
    return cert;
}

ProductSearchResult search_product(int d, int k, int l, int m, int n_max, const SearchLimits & limits)
{
    std::optional<ColoringCertificate> previous;
    for (int n = l; n <= n_max; ++n) {
        auto cert = verify_product_witness(n, d, k, l, m, limits);
        if (cert.holds())
            return ProductSearchResult{n, std::move(cert), std::move(previous)};
        previous = std::move(cert);
    }
    throw InfeasibleError("product: no witness n <= " + std::to_string(n_max));
}

// ---- Dual --------------------------------------------------------------------

DualInstance dual_instance(const AnchoredSequence & i_anchor, const AnchoredSequence & a_anchor, const AnchoredSequence & b_anchor,
    const SearchLimits & limits)
{
    check_p(i_anchor, a_anchor);
    check_p(i_anchor, b_anchor);
    if (a_anchor.ambient_size() > b_anchor.ambient_size() || b_anchor.ambient_size() > i_anchor.ambient_size())
        throw PreconditionError("dual: need |A| <= |B| <= m");
    guard(count_rs(i_anchor, a_anchor), limits.max_objects, "(m, i / A, a)_rs");
    guard(count_rs(i_anchor, b_anchor), target_ceiling(limits), "(m, i / B, b)_rs");

    DualInstance inst{i_anchor, a_anchor, b_anchor, {}, {}, {}};
    inst.objects = enumerate_rs(i_anchor, a_anchor);
    inst.targets = enumerate_rs(i_anchor, b_anchor);
    inst.problem.objects = inst.objects.size();
    const auto index = index_map(inst.objects);
    const auto outer = enumerate_rs(b_anchor, a_anchor);
    for (const auto & t : inst.targets) {
        std::vector<std::size_t> cone;
        for (const auto & s : outer)
            cone.push_back(index.at(compose(s, t)));
        std::sort(cone.begin(), cone.end());
        cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
        inst.problem.cones.push_back(std::move(cone));
    }
    return inst;
}

ColoringCertificate verify_dual_witness(const AnchoredSequence & i_anchor, int d, const AnchoredSequence & a_anchor,
    const AnchoredSequence & b_anchor, const SearchLimits & limits)
{
    const auto inst = dual_instance(i_anchor, a_anchor, b_anchor, limits);
    auto cert = search_colorings(inst.problem, d, limits);
    if (! cert.holds())
        require_counterexample_sound(recheck::dual(i_anchor, a_anchor, b_anchor, inst.objects, *cert.coloring));
    return cert;
}

namespace
{
    BigInt color_count(int d, const BigInt & rs_count)
    {
        if (rs_count > 1'000'000)
            throw InfeasibleError("color count d^" + rs_count.str() + " is too large to write down");
        return pow(BigInt(d), static_cast<unsigned>(rs_count));
    }
}

WitnessParams search_dual(int d, const AnchoredSequence & a_anchor, const AnchoredSequence & b_anchor, int m_max, const SearchLimits & limits)
{
    check_p(a_anchor, b_anchor);
    for (int m = b_anchor.ambient_size(); m <= m_max; ++m)
        for (const auto & i : enumerate_anchored_sequences(m, a_anchor.p()))
            if (verify_dual_witness(i, d, a_anchor, b_anchor, limits).holds()) {
                WitnessParams params{.m = m, .anchor = i, .verified = true, .rs_count = count_rs(i, a_anchor)};
                params.color_count = color_count(d, params.rs_count);
                return params;
            }
    throw InfeasibleError("dual: no witness m <= " + std::to_string(m_max));
}

// ---- Product with rigid surjections ------------------------------------------

TupleInstance prop2_instance(int n, const AnchoredSequence & i_anchor, const AnchoredSequence & a_anchor, const AnchoredSequence & b_anchor,
    int k, int l, const SearchLimits & limits)
{
    check_p(i_anchor, a_anchor);
    check_p(i_anchor, b_anchor);
    if (k < 0 || l < k || n < 0)
        throw PreconditionError("need 0 <= k <= l and n >= 0");
    const int m = i_anchor.ambient_size();
    guard(pow(binomial(n, k), static_cast<unsigned>(m)) * count_rs(i_anchor, a_anchor), limits.max_objects, "(n choose k)^m x (m, i / A, a)_rs");
    guard(pow(binomial(n, l), static_cast<unsigned>(m)) * count_rs(i_anchor, b_anchor), target_ceiling(limits), "(n choose l)^m x (m, i / B, b)_rs");

    TupleInstance inst;
    inst.objects = tuples(set_tuples(combinations(n, k), m), enumerate_rs(i_anchor, a_anchor));
    inst.targets = tuples(set_tuples(combinations(n, l), m), enumerate_rs(i_anchor, b_anchor));
    inst.problem.objects = inst.objects.size();
    for (const auto & tau : inst.targets) {
        std::vector<std::size_t> cone;
        for (std::size_t o = 0; o < inst.objects.size(); ++o)
            if (ll(inst.objects[o], tau))
                cone.push_back(o);
        inst.problem.cones.push_back(std::move(cone));
    }
    return inst;
}

ColoringCertificate verify_prop2_witness(const WitnessParams & params, int d, const AnchoredSequence & a_anchor,
    const AnchoredSequence & b_anchor, int k, int l, const SearchLimits & limits)
{
    if (! params.n)
        throw PreconditionError("prop2: witness parameters carry no n");
    if (params.anchor.ambient_size() != params.m)
        throw PreconditionError("prop2: anchor does not live in m");
    const auto inst = prop2_instance(*params.n, params.anchor, a_anchor, b_anchor, k, l, limits);
    auto cert = search_colorings(inst.problem, d, limits);
    if (! cert.holds())
        require_counterexample_sound(recheck::prop2(*params.n, params.anchor, a_anchor, b_anchor, k, l, inst.objects, *cert.coloring));
    return cert;
}

ProductOracle desk_product_oracle(int n_max, const SearchLimits & limits)
{
    return [n_max, limits](const BigInt & colors, int k, int l, int m) -> std::optional<int> {
        if (colors > INT_MAX)
            return std::nullopt;
        try {
            return search_product(static_cast<int>(colors), k, l, m, n_max, limits).n;
        }
        catch (const InfeasibleError &) {
            return std::nullopt;
        }
    };
}

WitnessParams compose_prop2_witness(int d, const AnchoredSequence & a_anchor, const AnchoredSequence & b_anchor, int k, int l,
    const WitnessParams & dual_params, const ProductOracle & product_n_oracle, const SearchLimits & limits)
{
    if (dual_params.anchor.ambient_size() != dual_params.m)
        throw PreconditionError("dual parameters: anchor does not live in m");
    if (! verify_dual_witness(dual_params.anchor, d, a_anchor, b_anchor, limits).holds())
        throw PreconditionError("dual parameters are refuted by a counterexample coloring");

    WitnessParams out{.m = dual_params.m, .anchor = dual_params.anchor};
    out.rs_count = count_rs(dual_params.anchor, a_anchor);
    out.color_count = color_count(d, out.rs_count);
    out.n = product_n_oracle(out.color_count, k, l, out.m);
    out.verified = out.n.has_value();
    return out;
}

// ---- Twisted product -----------------------------------------------------------

AnchoredOrderSet AnchoredOrderSet::make(LinearOrder reference, std::vector<LinearOrder> members, AnchoredSequence anchor)
{
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].size() != reference.size())
            throw PreconditionError("order set: member on the wrong ground set");
        if (i > 0 && ! below(members[i - 1], members[i], reference))
            throw PreconditionError("order set: members must be strictly increasing in the below order");
    }
    if (anchor.ambient_size() != static_cast<int>(members.size()))
        throw PreconditionError("order set: anchor does not live in the members");
    return AnchoredOrderSet{std::move(reference), std::move(members), std::move(anchor)};
}

AnchoredOrderSet AnchoredOrderSet::from_space(const OrderedExtensionSpace & space, AnchoredSequence anchor)
{
    return make(space.reference(), space.members(), std::move(anchor));
}

TupleInstance prop5_instance(int n, const AnchoredSequence & i_anchor, const AnchoredOrderSet & a, const AnchoredOrderSet & b,
    const SearchLimits & limits)
{
    check_p(i_anchor, a.anchor);
    check_p(i_anchor, b.anchor);
    const int m = i_anchor.ambient_size();
    const int x_size = a.ground_size(), y_size = b.ground_size();
    if (x_size > y_size)
        throw PreconditionError("prop5: |X| must not exceed |Y|");
    guard(pow(binomial(n, x_size), static_cast<unsigned>(m)) * count_rs(i_anchor, a.anchor), limits.max_objects, "(n choose |X|)^m x (m, i / A, a)_rs");
    guard(pow(binomial(n, y_size), static_cast<unsigned>(m)) * count_rs(i_anchor, b.anchor), target_ceiling(limits), "(n choose |Y|)^m x (m, i / B, b)_rs");

    TupleInstance inst;
    inst.objects = tuples(set_tuples(combinations(n, x_size), m), enumerate_rs(i_anchor, a.anchor));
    inst.targets = tuples(set_tuples(combinations(n, y_size), m), enumerate_rs(i_anchor, b.anchor));
    inst.problem.objects = inst.objects.size();
    const auto index = index_map(inst.objects);
    const auto sigmas = tuples(set_tuples(combinations(y_size, x_size), m), enumerate_rs(b.anchor, a.anchor));

    for (const auto & tau : inst.targets) {
        std::vector<std::size_t> cone;
        for (const auto & sigma : sigmas) {
            Tuple product = twisted_compose(tau, sigma, b.members);
            if (! ll(product, tau))
                throw std::logic_error("twisted product escaped the << cone of tau");
            auto it = index.find(product);
            if (it == index.end())
                throw std::logic_error("twisted product is not an object of the colored domain");
            cone.push_back(it->second);
        }
        std::sort(cone.begin(), cone.end());
        cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
        inst.problem.cones.push_back(std::move(cone));
    }
    return inst;
}

ColoringCertificate verify_prop5_witness(const WitnessParams & params, int d, const AnchoredOrderSet & a, const AnchoredOrderSet & b,
    const SearchLimits & limits)
{
    if (! params.n)
        throw PreconditionError("prop5: witness parameters carry no n");
    if (params.anchor.ambient_size() != params.m)
        throw PreconditionError("prop5: anchor does not live in m");
    const auto inst = prop5_instance(*params.n, params.anchor, a, b, limits);
    auto cert = search_colorings(inst.problem, d, limits);
    if (! cert.holds())
        require_counterexample_sound(recheck::prop5(*params.n, params.anchor, a, b, inst.objects, *cert.coloring));
    return cert;
}

} // namespace poramsey

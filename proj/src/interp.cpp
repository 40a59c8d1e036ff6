#include "poramsey/interp.hpp"

#include "poramsey/errors.hpp"
#include "poramsey/recheck.hpp"

#include <algorithm>
#include <map>

namespace poramsey {

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

    void guard_members(const BigInt & count, const SearchLimits & limits, const char * what)
    {
        if (count > limits.max_objects * 64)
            throw InfeasibleError(std::string(what) + " has " + count.str() + " elements, past the ceiling");
    }

    std::vector<Tuple> tuples(const std::vector<SetTuple> & sets, const std::vector<AnchoredRigidSurjection> & maps)
    {
        std::vector<Tuple> out;
        for (const auto & s : sets)
            for (const auto & r : maps)
                out.push_back(Tuple{s, r});
        return out;
    }

    bool natural_first_order(const Structure & s)
    {
        return s.order(0) == LinearOrder::natural(s.size());
    }
}

InterpFrame InterpFrame::make(const Structure & x, const Structure & y)
{
    if (x.p() != y.p())
        throw PreconditionError("frame: X and Y have different p");
    if (! natural_first_order(x) || ! natural_first_order(y))
        throw PreconditionError("frame: L_0 must be the natural order on both structures");
    InterpFrame f;
    f.x = ExtensionFrame::of(x);
    f.y = ExtensionFrame::of(y);
    f.s_members = enumerate_embeddings(x, y);
    return f;
}

ProductMember product_member(const InterpFrame & frame, int m, int d, const SearchLimits & limits)
{
    if (m < frame.y.space.size())
        throw PreconditionError("product member: m must be at least |B|");
    ProductMember r{m, false};
    bool any_feasible = false;
    for (const auto & i : enumerate_anchored_sequences(m, frame.y.anchor.p())) {
        try {
            if (verify_dual_witness(i, d, frame.x.anchor, frame.y.anchor, limits).holds()) {
                r.dual_verified = true;
                return r;
            }
            any_feasible = true;
        }
        catch (const InfeasibleError &) {
        }
    }
    // Every anchor was checked and refuted.
    if (any_feasible)
        throw PreconditionError("product member: the dual statement fails for m = " + std::to_string(m));
    return r;
}

std::vector<Tuple> product_member_elements(const InterpFrame & frame, int m, const SearchLimits & limits)
{
    guard_members(pow(binomial(frame.l(), frame.k()), static_cast<unsigned>(m)) * count_rs(frame.y.anchor, frame.x.anchor), limits, "R");
    return tuples(set_tuples(combinations(frame.l(), frame.k()), m), enumerate_rs(frame.y.anchor, frame.x.anchor));
}

std::vector<Tuple> twist_member_elements(const InterpFrame & frame, const TwistMember & f, const SearchLimits & limits)
{
    const int m = f.m();
    guard_members(pow(binomial(f.n, frame.l()), static_cast<unsigned>(m)) * count_rs(f.anchor, frame.y.anchor), limits, "F");
    return tuples(set_tuples(combinations(f.n, frame.l()), m), enumerate_rs(f.anchor, frame.y.anchor));
}

bool in_product_member(const InterpFrame & frame, int m, const Tuple & r)
{
    if (r.m() != m)
        return false;
    for (const auto & s : r.sets) {
        if (static_cast<int>(s.size()) != frame.k())
            return false;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] < 0 || s[i] >= frame.l() || (i > 0 && s[i - 1] >= s[i]))
                return false;
    }
    return r.rs.source_size() == frame.y.space.size() && r.rs.source_anchor() == frame.y.anchor
        && r.rs.target_size() == frame.x.space.size() && r.rs.target_anchor() == frame.x.anchor;
}

Tuple alpha(const InterpFrame & frame, int m, const Embedding & s)
{
    if (static_cast<int>(s.map.size()) != frame.k())
        throw PreconditionError("alpha: s is not defined on X");
    std::vector<int> image = s.map;
    std::sort(image.begin(), image.end());
    const auto res = restriction_map(frame.y.space, image, frame.y.anchor);

    // Transport each restricted order back to X along s.
    std::map<int, int> inverse;
    for (int x = 0; x < frame.k(); ++x)
        inverse[s.map[static_cast<std::size_t>(x)]] = x;
    std::vector<int> r;
    for (const auto & member : res.target.members()) {
        std::vector<int> e;
        for (int j : member.enumeration())
            e.push_back(inverse.at(res.subset[static_cast<std::size_t>(j)]));
        auto idx = frame.x.space.index_of(LinearOrder(std::move(e)));
        if (! idx)
            throw PreconditionError("alpha: s is not an embedding of X into Y");
        r.push_back(*idx);
    }
    AnchoredRigidSurjection iso(std::move(r), frame.x.space.size(), res.map.target_anchor(), frame.x.anchor);
    return Tuple{std::vector<std::vector<int>>(static_cast<std::size_t>(m), image), compose(iso, res.map)};
}

Embedding phi(const InterpFrame & frame, const Tuple & tau, const GridStructure & grid)
{
    return grid_embedding(tau, frame.y, grid);
}

InterpretationReport check_interpretation(const InterpFrame & frame, const TwistMember & f, const AlphaMap & alpha_map, const SearchLimits & limits)
{
    const auto members = twist_member_elements(frame, f, limits);
    const GridStructure grid(f.n, f.m(), f.anchor, limits.max_ground_size);
    InterpretationReport report;

    std::vector<Tuple> alphas;
    for (std::size_t si = 0; si < frame.s_members.size(); ++si) {
        alphas.push_back(alpha_map(frame, f.m(), frame.s_members[si]));
        if (! in_product_member(frame, f.m(), alphas.back())) {
            report.violation = InterpretationViolation{InterpretationViolation::Kind::alpha_outside_r, 0, si, 0, si, "alpha(s) is not in R"};
            return report;
        }
    }

    struct Seen {
        std::size_t f, s;
        std::vector<int> value;
    };
    std::map<Tuple, Seen> seen;
    for (std::size_t fi = 0; fi < members.size(); ++fi) {
        const auto g = phi(frame, members[fi], grid);
        for (std::size_t si = 0; si < frame.s_members.size(); ++si) {
            ++report.pairs;
            auto key = twisted_compose(members[fi], alphas[si], frame.y.space.members());
            auto value = compose(g, frame.s_members[si]).map;
            auto [it, fresh] = seen.try_emplace(std::move(key), Seen{fi, si, value});
            if (! fresh && it->second.value != value) {
                report.violation = InterpretationViolation{InterpretationViolation::Kind::implication, it->second.f, it->second.s, fi, si,
                    "equal twisted products, different composed embeddings"};
                return report;
            }
        }
    }
    return report;
}

std::optional<std::pair<std::size_t, std::size_t>> check_alpha_identity(const InterpFrame & frame, const TwistMember & f,
    const AlphaMap & alpha_map, const SearchLimits & limits)
{
    const auto members = twist_member_elements(frame, f, limits);
    const GridStructure grid(f.n, f.m(), f.anchor, limits.max_ground_size);
    for (std::size_t fi = 0; fi < members.size(); ++fi) {
        const auto g = phi(frame, members[fi], grid);
        for (std::size_t si = 0; si < frame.s_members.size(); ++si) {
            const auto rhs = compose(g, frame.s_members[si]).map;
            try {
                const auto product = twisted_compose(members[fi], alpha_map(frame, f.m(), frame.s_members[si]), frame.y.space.members());
                std::vector<int> lhs;
                for (const auto & point : pi_tau(product, frame.x.space.members()))
                    lhs.push_back(grid.index_of(point));
                if (lhs != rhs)
                    return std::pair{fi, si};
            }
            catch (const PreconditionError &) {
                return std::pair{fi, si};
            }
        }
    }
    return std::nullopt;
}

std::optional<F1Witness> ramsey_condition_f1(const InterpFrame & frame, const ProductMember & r, int d, int n_max, const SearchLimits & limits)
{
    const auto a = frame.a_set();
    const auto b = frame.b_set();
    for (int n = frame.l(); n <= n_max; ++n)
        for (const auto & i : enumerate_anchored_sequences(r.m, frame.y.anchor.p())) {
            WitnessParams params{.m = r.m, .n = n, .anchor = i};
            auto cert = verify_prop5_witness(params, d, a, b, limits);
            if (cert.holds())
                return F1Witness{TwistMember{n, i}, std::move(cert)};
        }
    return std::nullopt;
}

GridMemberInstance grid_member_instance(const InterpFrame & frame, const GridStructure & grid, const SearchLimits & limits)
{
    GridMemberInstance inst;
    inst.targets = enumerate_embeddings(frame.y.structure, grid.structure());
    std::map<Embedding, std::size_t> index;
    std::vector<std::vector<Embedding>> composed;
    for (const auto & g : inst.targets) {
        auto & row = composed.emplace_back();
        for (const auto & s : frame.s_members) {
            row.push_back(compose(g, s));
            if (index.try_emplace(row.back(), 0).second)
                inst.objects.push_back(row.back());
        }
    }
    if (inst.objects.size() > limits.max_objects)
        throw InfeasibleError("grid member: " + std::to_string(inst.objects.size()) + " objects exceed the ceiling");
    std::sort(inst.objects.begin(), inst.objects.end());
    for (std::size_t i = 0; i < inst.objects.size(); ++i)
        index[inst.objects[i]] = i;
    inst.problem.objects = inst.objects.size();
    for (const auto & row : composed) {
        std::vector<std::size_t> cone;
        for (const auto & e : row)
            cone.push_back(index.at(e));
        std::sort(cone.begin(), cone.end());
        cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
        inst.problem.cones.push_back(std::move(cone));
    }
    return inst;
}

ColoringCertificate verify_grid_member(const InterpFrame & frame, const GridStructure & grid, int d, const SearchLimits & limits)
{
    const auto inst = grid_member_instance(frame, grid, limits);
    auto cert = search_colorings(inst.problem, d, limits);
    if (! cert.holds()) {
        // Copies of X outside every copy of Y sit in no cone, so any color will do for them.
        const auto copies = enumerate_copies(frame.x.structure, grid.structure());
        std::map<Copy, std::size_t> where;
        for (std::size_t i = 0; i < copies.size(); ++i)
            where.emplace(copies[i], i);
        std::vector<int> full(copies.size(), 0);
        for (std::size_t o = 0; o < inst.objects.size(); ++o)
            full[where.at(image(inst.objects[o]))] = (*cert.coloring)[o];
        if (! recheck::witness(grid.structure(), frame.x.structure, frame.y.structure, copies, full))
            throw std::logic_error("counterexample coloring failed independent re-check");
    }
    return cert;
}

std::optional<F2Witness> ramsey_condition_f2(const InterpFrame & frame, int d, int m_max, int n_max, const SearchLimits & limits)
{
    for (int m = 1; m <= m_max; ++m)
        for (const auto & i : enumerate_anchored_sequences(m, frame.y.anchor.p()))
            for (int n = frame.l(); n <= n_max; ++n) {
                GridStructure grid(n, m, i, limits.max_ground_size);
                auto cert = verify_grid_member(frame, grid, d, limits);
                if (cert.holds())
                    return F2Witness{std::move(grid), std::move(cert)};
            }
    return std::nullopt;
}

TransferReport verify_transfer(const InterpFrame & frame, const TwistMember & f, int d, const SearchLimits & limits)
{
    const auto twisted = prop5_instance(f.n, f.anchor, frame.a_set(), frame.b_set(), limits);
    const GridStructure grid(f.n, f.m(), f.anchor, limits.max_ground_size);
    const auto members = grid_member_instance(frame, grid, limits);
    check_feasible(members.problem, d, limits);

    std::map<Tuple, std::size_t> twisted_index;
    for (std::size_t i = 0; i < twisted.objects.size(); ++i)
        twisted_index.emplace(twisted.objects[i], i);
    std::map<Embedding, std::size_t> member_index;
    for (std::size_t i = 0; i < members.objects.size(); ++i)
        member_index.emplace(members.objects[i], i);

    std::vector<Tuple> alphas;
    for (const auto & s : frame.s_members)
        alphas.push_back(alpha(frame, f.m(), s));

    // pull[j]: the G . S object whose color the F . R object j inherits.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pull(twisted.objects.size(), none);
    std::vector<std::vector<std::size_t>> image_of_phi(twisted.targets.size());
    for (std::size_t fi = 0; fi < twisted.targets.size(); ++fi) {
        const auto g = phi(frame, twisted.targets[fi], grid);
        for (std::size_t si = 0; si < frame.s_members.size(); ++si) {
            const auto j = twisted_index.at(twisted_compose(twisted.targets[fi], alphas[si], frame.y.space.members()));
            const auto o = member_index.at(compose(g, frame.s_members[si]));
            if (pull[j] != none && pull[j] != o)
                throw std::logic_error("transfer: pulled-back coloring is ill-defined");
            pull[j] = o;
            image_of_phi[fi].push_back(o);
        }
    }

    TransferReport report;
    std::vector<int> coloring(members.objects.size(), 0);
    std::vector<int> pulled(twisted.objects.size(), 0);
    while (true) {
        ++report.colorings;
        for (std::size_t j = 0; j < pulled.size(); ++j)
            pulled[j] = pull[j] == none ? 0 : coloring[pull[j]];
        const auto tau = find_monochromatic_cone(twisted.problem, pulled);
        if (! tau)
            throw PreconditionError("transfer: F has no homogeneous element for some coloring");
        const auto & cone = image_of_phi[*tau];
        for (auto o : cone)
            if (coloring[o] != coloring[cone.front()]) {
                report.failure = coloring;
                return report;
            }
        std::size_t i = coloring.size();
        while (i > 0 && coloring[i - 1] == d - 1)
            coloring[--i] = 0;
        if (i == 0)
            break;
        ++coloring[i - 1];
    }
    return report;
}

} // namespace poramsey

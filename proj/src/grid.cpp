#include "poramsey/grid.hpp"

#include "poramsey/errors.hpp"
#include "poramsey/recheck.hpp"

#include <algorithm>
#include <map>

namespace poramsey {

bool pr_less(std::span<const int> k, std::span<const int> l)
{
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] >= l[i])
            return false;
    return true;
}

bool lx_less(std::span<const int> k, std::span<const int> l, int i)
{
    const int m = static_cast<int>(k.size());
    for (int j = 0; j < m; ++j) {
        const auto c = static_cast<std::size_t>((i + j) % m);
        if (k[c] != l[c])
            return k[c] < l[c];
    }
    return false;
}

GridStructure::GridStructure(int n, int m, AnchoredSequence anchor, int max_points) :
    n_(n), m_(m), anchor_(std::move(anchor))
{
    if (n < 1 || m < 1)
        throw PreconditionError("grid: need n, m >= 1");
    if (anchor_.ambient_size() != m)
        throw PreconditionError("grid: anchor must live in m = " + std::to_string(m));
    long long points = 1;
    for (int i = 0; i < m; ++i) {
        points *= n;
        if (points > max_points)
            throw InfeasibleError("grid: " + std::to_string(n) + "^" + std::to_string(m) + " points exceed the ceiling of " + std::to_string(max_points));
    }
    const int size = static_cast<int>(points);

    std::vector<GridPoint> pts;
    pts.reserve(static_cast<std::size_t>(size));
    for (int idx = 0; idx < size; ++idx)
        pts.push_back(coordinates(idx));

    RawStructure raw;
    raw.p = anchor_.p();
    raw.size = size;
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (pr_less(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)]))
                raw.partial_order.emplace_back(a, b);
    for (int i : anchor_.elements()) {
        std::vector<int> e(static_cast<std::size_t>(size));
        for (int idx = 0; idx < size; ++idx)
            e[static_cast<std::size_t>(idx)] = idx;
        std::sort(e.begin(), e.end(), [&](int a, int b) {
            return lx_less(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)], i);
        });
        raw.linear_orders.push_back(std::move(e));
    }
    structure_ = Structure::validate(raw);
}

GridPoint GridStructure::coordinates(int index) const
{
    GridPoint c(static_cast<std::size_t>(m_));
    for (int i = m_ - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = index % n_;
        index /= n_;
    }
    return c;
}

int GridStructure::index_of(std::span<const int> point) const
{
    if (static_cast<int>(point.size()) != m_)
        throw std::out_of_range("grid: point has the wrong dimension");
    int idx = 0;
    for (int c : point) {
        if (c < 0 || c >= n_)
            throw std::out_of_range("grid: coordinate " + std::to_string(c) + " outside n = " + std::to_string(n_));
        idx = idx * n_ + c;
    }
    return idx;
}

ExtensionFrame ExtensionFrame::of(const Structure & s)
{
    ExtensionFrame f;
    f.structure = s;
    f.space = extension_space(s, 0);
    f.anchor = structure_anchor(f.space, s);
    return f;
}

namespace
{
    void check_over_frame(const Tuple & tau, const ExtensionFrame & frame)
    {
        if (tau.set_size() != frame.structure.size())
            throw PreconditionError("tau's sets must have |Y| elements");
        if (tau.rs.target_size() != frame.space.size() || tau.rs.target_anchor() != frame.anchor)
            throw PreconditionError("tau's rigid surjection does not land on (lin(P), L)");
    }
}

Embedding grid_embedding(const Tuple & tau, const ExtensionFrame & frame, const GridStructure & grid)
{
    check_over_frame(tau, frame);
    if (tau.m() != grid.m() || tau.rs.source_anchor() != grid.anchor())
        throw PreconditionError("tau's rigid surjection does not start at (m, i) of the grid");
    Embedding f;
    for (const auto & point : pi_tau(tau, frame.space.members())) {
        try {
            f.map.push_back(grid.index_of(point));
        }
        catch (const std::out_of_range &) {
            throw PreconditionError("tau's sets leave {0,...,n-1}");
        }
    }
    return f;
}

Pullback pullback_copy(const Tuple & tau, const ExtensionFrame & frame, std::span<const GridPoint> x_prime)
{
    check_over_frame(tau, frame);
    if (x_prime.empty())
        throw PreconditionError("pullback: X' must be non-empty");
    const auto points = pi_tau(tau, frame.space.members());

    std::vector<int> subset;
    for (const auto & q : x_prime) {
        auto it = std::find(points.begin(), points.end(), q);
        if (it == points.end())
            throw PreconditionError("pullback: X' is not inside the image of pi^tau");
        subset.push_back(static_cast<int>(it - points.begin()));
    }
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw PreconditionError("pullback: X' repeats a point");

    Pullback out;
    out.subset = subset;
    out.x_frame = ExtensionFrame::of(restrict(frame.structure, subset));
    const auto res = restriction_map(frame.space, subset, frame.anchor);
    if (res.target.members() != out.x_frame.space.members() || res.map.target_anchor() != out.x_frame.anchor)
        throw std::logic_error("pullback: res_X does not land on the frame of X");

    // (pi_i)^{-1}(p_i(X')) is X itself in every coordinate, since each pi_i is injective.
    out.sigma = Tuple{std::vector<std::vector<int>>(static_cast<std::size_t>(tau.m()), subset), res.map};
    out.product = twisted_compose(tau, out.sigma, frame.space.members());

    const auto back = pi_tau(out.product, out.x_frame.space.members());
    const auto listed = res.subset;  // X in reference order, position j is relabelled j
    for (std::size_t j = 0; j < listed.size(); ++j)
        if (back[j] != points[static_cast<std::size_t>(listed[j])])
            throw std::logic_error("pullback: pi^{tau.sigma} disagrees with pi^tau on X");
    return out;
}

WitnessInstance witness_instance(const Structure & z, const Structure & x, const Structure & y, const SearchLimits & limits)
{
    if (x.p() != y.p() || y.p() != z.p())
        throw PreconditionError("witness: structures have different p");
    if (z.size() > limits.max_ground_size)
        throw InfeasibleError("witness: |Z| = " + std::to_string(z.size()) + " exceeds the ground-size ceiling");

    WitnessInstance inst;
    inst.objects = enumerate_copies(x, z);
    if (inst.objects.size() > limits.max_objects)
        throw InfeasibleError("witness: " + std::to_string(inst.objects.size()) + " copies of X exceed the ceiling of " + std::to_string(limits.max_objects));
    inst.problem.objects = inst.objects.size();

    std::map<Copy, std::size_t> index;
    for (std::size_t i = 0; i < inst.objects.size(); ++i)
        index.emplace(inst.objects[i], i);

    const auto inner = enumerate_embeddings(x, y);
    for (const auto & g : enumerate_embeddings(y, z)) {
        std::vector<std::size_t> cone;
        for (const auto & e : inner)
            cone.push_back(index.at(image(compose(g, e))));
        std::sort(cone.begin(), cone.end());
        cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
        inst.targets.push_back(image(g));
        inst.problem.cones.push_back(std::move(cone));
    }
    return inst;
}

ColoringCertificate verify_ramsey_witness(const Structure & z, const Structure & x, const Structure & y, int d, const SearchLimits & limits)
{
    const auto inst = witness_instance(z, x, y, limits);
    auto cert = search_colorings(inst.problem, d, limits);
    if (! cert.holds() && ! recheck::witness(z, x, y, inst.objects, *cert.coloring))
        throw std::logic_error("counterexample coloring failed independent re-check");
    return cert;
}

ConstructResult construct_witness(const Structure & x, const Structure & y, int d, const ConstructOptions & options)
{
    if (x.p() != y.p())
        throw PreconditionError("construct: X and Y have different p");
    if (d < 1)
        throw PreconditionError("construct: number of colors must be positive");
    const auto embeddings = enumerate_embeddings(x, y);
    if (embeddings.empty())
        throw PreconditionError("construct: X does not embed into Y");

    ConstructResult out;
    out.x_in_y = embeddings.front();
    const auto a = ExtensionFrame::of(x);
    const auto b = ExtensionFrame::of(y);
    out.a_size = a.space.size();
    out.b_size = b.space.size();

    try {
        const auto dual = search_dual(d, a.anchor, b.anchor, options.m_max, options.limits);
        out.params = compose_prop2_witness(d, a.anchor, b.anchor, x.size(), y.size(), dual,
            desk_product_oracle(options.n_max, options.limits), options.limits);
    }
    catch (const InfeasibleError & e) {
        out.note = e.what();
        return out;
    }
    if (! out.params->n) {
        out.note = "no n up to " + std::to_string(options.n_max) + " certified for " + out.params->color_count.str() + " colors";
        return out;
    }

    try {
        GridStructure grid(*out.params->n, out.params->m, out.params->anchor, options.limits.max_ground_size);
        auto cert = verify_ramsey_witness(grid.structure(), x, y, d, options.limits);
        if (! cert.holds())
            throw std::logic_error("constructed grid is refuted by a coloring");
        out.grid = std::move(grid);
        out.certificate = std::move(cert);
    }
    catch (const InfeasibleError & e) {
        out.note = e.what();
    }
    return out;
}

namespace
{
    bool is_ideal(const Relation & p, unsigned mask, int count)
    {
        for (int b = 0; b < count; ++b)
            if (mask & (1u << b))
                for (int a = 0; a < count; ++a)
                    if (p.contains(a, b) && ! (mask & (1u << a)))
                        return false;
        return true;
    }

    bool extend_orders(const Structure & poset, const OrderedExtensionSpace & space, std::vector<std::vector<int>> & orders, int p,
        const std::function<bool(const Structure &)> & visit)
    {
        if (static_cast<int>(orders.size()) == p) {
            RawStructure raw = poset.raw();
            raw.p = p;
            raw.linear_orders = orders;
            return visit(Structure::validate(raw));
        }
        for (const auto & member : space.members()) {
            orders.push_back(member.enumeration());
            const bool go_on = extend_orders(poset, space, orders, p, visit);
            orders.pop_back();
            if (! go_on)
                return false;
        }
        return true;
    }

    bool grow(Relation & p, int next, int size, int arity, const std::function<bool(const Structure &)> & visit)
    {
        if (next == size) {
            RawStructure raw;
            raw.size = size;
            raw.partial_order = p.pairs();
            raw.linear_orders = {LinearOrder::natural(size).enumeration()};
            const auto poset = Structure::validate(raw);
            const auto space = extension_space(poset, 0);
            std::vector<std::vector<int>> orders = {LinearOrder::natural(size).enumeration()};
            return extend_orders(poset, space, orders, arity, visit);
        }
        for (unsigned mask = (1u << next); mask-- > 0;) {
            if (! is_ideal(p, mask, next))
                continue;
            for (int a = 0; a < next; ++a)
                if (mask & (1u << a))
                    p.insert(a, next);
            const bool go_on = grow(p, next + 1, size, arity, visit);
            for (int a = 0; a < next; ++a)
                p.erase(a, next);
            if (! go_on)
                return false;
        }
        return true;
    }
}

void for_each_canonical_structure(int size, int p, const std::function<bool(const Structure &)> & visit)
{
    if (size < 0 || size > 16 || p < 1)
        throw PreconditionError("canonical structures: need 0 <= size <= 16 and p >= 1");
    Relation rel(size);
    grow(rel, 0, size, p, visit);
}

MinimalWitness minimal_witness_search(const Structure & x, const Structure & y, int d, int size_bound, const SearchLimits & limits)
{
    if (x.p() != y.p())
        throw PreconditionError("search: X and Y have different p");
    if (size_bound > limits.max_ground_size)
        throw InfeasibleError("search: size bound exceeds the ground-size ceiling");

    std::optional<MinimalWitness> found;
    std::size_t candidates = 0;
    for (int size = y.size(); size <= size_bound && ! found; ++size) {
        for_each_canonical_structure(size, y.p(), [&](const Structure & z) {
            ++candidates;
            if (enumerate_embeddings(y, z).empty())
                return true;
            auto cert = verify_ramsey_witness(z, x, y, d, limits);
            if (! cert.holds())
                return true;
            found = MinimalWitness{z, std::move(cert), 0};
            return false;
        });
    }
    if (! found)
        throw InfeasibleError("search: no witness of size <= " + std::to_string(size_bound));
    found->candidates = candidates;
    return *found;
}

} // namespace poramsey

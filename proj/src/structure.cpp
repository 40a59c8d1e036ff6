#include "poramsey/structure.hpp"

#include "poramsey/errors.hpp"

#include <algorithm>
#include <set>

namespace poramsey {

const char * to_string(StructureErrorKind kind)
{
    switch (kind) {
    case StructureErrorKind::bad_arity: return "bad arity";
    case StructureErrorKind::element_out_of_range: return "element out of range";
    case StructureErrorKind::reflexive_pair: return "reflexive pair";
    case StructureErrorKind::cycle: return "cycle in partial order";
    case StructureErrorKind::not_transitively_closed: return "partial order not transitively closed";
    case StructureErrorKind::wrong_order_count: return "wrong number of linear orders";
    case StructureErrorKind::not_a_permutation: return "linear order is not a permutation";
    case StructureErrorKind::order_does_not_extend: return "order does not extend P";
    }
    return "unknown";
}

InvalidStructure::InvalidStructure(StructureErrorKind kind, const std::string & detail) :
    std::invalid_argument(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
    kind_(kind)
{
}

namespace
{
    std::string pair_text(Pair pr)
    {
        return "(" + std::to_string(pr.first) + "," + std::to_string(pr.second) + ")";
    }
}

Structure Structure::validate(const RawStructure & raw)
{
    if (raw.p < 1)
        throw InvalidStructure(StructureErrorKind::bad_arity, "p must be positive, got " + std::to_string(raw.p));
    if (raw.size < 0)
        throw InvalidStructure(StructureErrorKind::bad_arity, "size must be non-negative");
    if (static_cast<int>(raw.linear_orders.size()) != raw.p)
        throw InvalidStructure(StructureErrorKind::wrong_order_count,
            "expected " + std::to_string(raw.p) + ", got " + std::to_string(raw.linear_orders.size()));

    for (auto pr : raw.partial_order)
        if (pr.first < 0 || pr.first >= raw.size || pr.second < 0 || pr.second >= raw.size)
            throw InvalidStructure(StructureErrorKind::element_out_of_range, pair_text(pr));
    for (auto pr : raw.partial_order)
        if (pr.first == pr.second)
            throw InvalidStructure(StructureErrorKind::reflexive_pair, pair_text(pr));

    Relation given = Relation::from_pairs(raw.size, raw.partial_order);
    Relation closed = given.transitive_closure();
    if (! closed.is_irreflexive())
        throw InvalidStructure(StructureErrorKind::cycle, "");
    if (! raw.hasse && closed != given)
        throw InvalidStructure(StructureErrorKind::not_transitively_closed, "pass hasse=true to close it");

    Structure s;
    s.size_ = raw.size;
    s.partial_order_ = std::move(closed);
    for (std::size_t i = 0; i < raw.linear_orders.size(); ++i) {
        const auto & e = raw.linear_orders[i];
        if (static_cast<int>(e.size()) != raw.size || ! LinearOrder::is_permutation(e))
            throw InvalidStructure(StructureErrorKind::not_a_permutation, "L_" + std::to_string(i));
        LinearOrder order(e);
        if (! order.extends(s.partial_order_))
            throw InvalidStructure(StructureErrorKind::order_does_not_extend, "L_" + std::to_string(i));
        s.orders_.push_back(std::move(order));
    }
    return s;
}

Structure Structure::chain(int n, int p)
{
    RawStructure raw{.p = p, .size = n};
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            raw.partial_order.emplace_back(a, b);
    raw.linear_orders.assign(static_cast<std::size_t>(p), LinearOrder::natural(n).enumeration());
    return validate(raw);
}

Structure Structure::antichain(int n, int p)
{
    RawStructure raw{.p = p, .size = n};
    raw.linear_orders.assign(static_cast<std::size_t>(p), LinearOrder::natural(n).enumeration());
    return validate(raw);
}

RawStructure Structure::raw() const
{
    RawStructure r{.p = p(), .size = size_, .partial_order = partial_order_.pairs()};
    for (const auto & o : orders_)
        r.linear_orders.push_back(o.enumeration());
    return r;
}

Structure restrict(const Structure & s, std::span<const int> subset)
{
    std::vector<bool> seen(static_cast<std::size_t>(s.size()), false);
    for (int x : subset) {
        if (x < 0 || x >= s.size())
            throw std::invalid_argument("restrict: element " + std::to_string(x) + " not in ground set");
        if (seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("restrict: repeated element " + std::to_string(x));
        seen[static_cast<std::size_t>(x)] = true;
    }

    const std::vector<int> relabel_to_old = s.order(0).enumerate_subset(subset);
    const int k = static_cast<int>(relabel_to_old.size());
    std::vector<int> old_to_new(static_cast<std::size_t>(s.size()), -1);
    for (int j = 0; j < k; ++j)
        old_to_new[static_cast<std::size_t>(relabel_to_old[static_cast<std::size_t>(j)])] = j;

    RawStructure raw{.p = s.p(), .size = k, .partial_order = s.partial_order().induced(relabel_to_old).pairs()};
    for (const auto & order : s.linear_orders()) {
        std::vector<int> e;
        for (int x : order.enumerate_subset(relabel_to_old))
            e.push_back(old_to_new[static_cast<std::size_t>(x)]);
        raw.linear_orders.push_back(std::move(e));
    }
    return Structure::validate(raw);
}

namespace
{
    void check_compatible(const Structure & x, const Structure & y)
    {
        if (x.p() != y.p())
            throw PreconditionError("arity mismatch: p = " + std::to_string(x.p()) + " vs " + std::to_string(y.p()));
    }

    // f(a), f(b) agree with a, b on P and on every L_i.
    bool preserves_pair(const Structure & x, const Structure & y, int a, int fa, int b, int fb)
    {
        if (x.partial_order().contains(a, b) != y.partial_order().contains(fa, fb))
            return false;
        if (x.partial_order().contains(b, a) != y.partial_order().contains(fb, fa))
            return false;
        for (int i = 0; i < x.p(); ++i)
            if (x.order(i).less(a, b) != y.order(i).less(fa, fb))
                return false;
        return true;
    }
}

bool is_embedding(const Embedding & f, const Structure & x, const Structure & y)
{
    check_compatible(x, y);
    if (static_cast<int>(f.map.size()) != x.size())
        throw PreconditionError("embedding has " + std::to_string(f.map.size()) + " images for a source of size " + std::to_string(x.size()));
    for (int v : f.map)
        if (v < 0 || v >= y.size())
            throw PreconditionError("embedding image " + std::to_string(v) + " outside target");

    for (int a = 0; a < x.size(); ++a)
        for (int b = a + 1; b < x.size(); ++b) {
            const int fa = f.map[static_cast<std::size_t>(a)], fb = f.map[static_cast<std::size_t>(b)];
            if (fa == fb || ! preserves_pair(x, y, a, fa, b, fb))
                return false;
        }
    return true;
}

std::vector<Embedding> enumerate_embeddings(const Structure & x, const Structure & y)
{
    check_compatible(x, y);
    std::vector<Embedding> out;
    if (x.size() > y.size())
        return out;

    // Embeddings preserve L_0, so walking x in L_0 order the images climb strictly in L_0 of y.
    const LinearOrder & xo = x.order(0);
    const LinearOrder & yo = y.order(0);
    std::vector<int> map(static_cast<std::size_t>(x.size()), -1);

    auto extend = [&](auto && self, int depth, int min_position) -> void {
        if (depth == x.size()) {
            out.push_back(Embedding{map});
            return;
        }
        const int a = xo.at(depth);
        const int remaining = x.size() - depth;
        for (int pos = min_position; pos <= y.size() - remaining; ++pos) {
            const int fa = yo.at(pos);
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                const int b = xo.at(d);
                ok = preserves_pair(x, y, a, fa, b, map[static_cast<std::size_t>(b)]);
            }
            if (! ok)
                continue;
            map[static_cast<std::size_t>(a)] = fa;
            self(self, depth + 1, pos + 1);
            map[static_cast<std::size_t>(a)] = -1;
        }
    };
    extend(extend, 0, 0);

    std::sort(out.begin(), out.end());
    return out;
}

Copy image(const Embedding & f)
{
    Copy c{f.map};
    std::sort(c.elements.begin(), c.elements.end());
    return c;
}

std::vector<Copy> enumerate_copies(const Structure & x, const Structure & z)
{
    std::set<Copy> copies;
    for (const auto & f : enumerate_embeddings(x, z))
        copies.insert(image(f));
    return {copies.begin(), copies.end()};
}

Embedding compose(const Embedding & g, const Embedding & f)
{
    Embedding h;
    h.map.reserve(f.map.size());
    for (int v : f.map) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.map.size())
            throw PreconditionError("compose: embeddings do not chain");
        h.map.push_back(g.map[static_cast<std::size_t>(v)]);
    }
    return h;
}

} // namespace poramsey

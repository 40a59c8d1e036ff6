#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

std::vector<Perm> permutations(int n)
{
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = i;
    std::vector<Perm> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace
{
    bool contains(const std::vector<Pair> & pairs, int a, int b)
    {
        return std::find(pairs.begin(), pairs.end(), Pair{a, b}) != pairs.end();
    }
}

std::vector<std::vector<Pair>> strict_partial_orders(int n)
{
    std::vector<Pair> candidates;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b)
                candidates.emplace_back(a, b);
    std::vector<std::vector<Pair>> out;
    const unsigned long total = 1ul << candidates.size();
    for (unsigned long mask = 0; mask < total; ++mask) {
        std::vector<Pair> rel;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (mask & (1ul << i))
                rel.push_back(candidates[i]);
        bool ok = true;
        for (auto [a, b] : rel)
            if (contains(rel, b, a))
                ok = false;
        for (std::size_t i = 0; i < rel.size() && ok; ++i)
            for (std::size_t j = 0; j < rel.size() && ok; ++j)
                if (rel[i].second == rel[j].first && ! contains(rel, rel[i].first, rel[j].second))
                    ok = false;
        if (ok)
            out.push_back(rel);
    }
    return out;
}

std::vector<std::vector<Pair>> natural_partial_orders(int n)
{
    auto all = strict_partial_orders(n);
    std::vector<std::vector<Pair>> out;
    for (auto & rel : all)
        if (std::all_of(rel.begin(), rel.end(), [](Pair p) { return p.first < p.second; }))
            out.push_back(std::move(rel));
    return out;
}

std::vector<Pair> closure_by_search(int n, const std::vector<Pair> & pairs)
{
    std::vector<std::vector<int>> next(static_cast<std::size_t>(n));
    for (auto [a, b] : pairs)
        next[static_cast<std::size_t>(a)].push_back(b);
    std::vector<Pair> out;
    for (int s = 0; s < n; ++s) {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::vector<int> stack = next[static_cast<std::size_t>(s)];
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (seen[static_cast<std::size_t>(v)])
                continue;
            seen[static_cast<std::size_t>(v)] = true;
            for (int w : next[static_cast<std::size_t>(v)])
                stack.push_back(w);
        }
        for (int t = 0; t < n; ++t)
            if (seen[static_cast<std::size_t>(t)])
                out.emplace_back(s, t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ranks(const Perm & enumeration)
{
    std::vector<int> r(enumeration.size());
    for (std::size_t i = 0; i < enumeration.size(); ++i)
        r[static_cast<std::size_t>(enumeration[i])] = static_cast<int>(i);
    return r;
}

bool extends(const Perm & enumeration, const std::vector<Pair> & pairs)
{
    const auto r = ranks(enumeration);
    for (auto [a, b] : pairs)
        if (r[static_cast<std::size_t>(a)] >= r[static_cast<std::size_t>(b)])
            return false;
    return true;
}

bool lex_before(const Perm & e1, const Perm & e2, const Perm & reference)
{
    const auto r = ranks(reference);
    for (std::size_t i = 0; i < e1.size(); ++i)
        if (e1[i] != e2[i])
            return r[static_cast<std::size_t>(e1[i])] < r[static_cast<std::size_t>(e2[i])];
    return false;
}

bool below_by_cuts(const Perm & e1, const Perm & e2, const Perm & reference)
{
    const auto r = ranks(reference);
    const auto r1 = ranks(e1), r2 = ranks(e2);
    const int n = static_cast<int>(e1.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (r[static_cast<std::size_t>(x)] >= r[static_cast<std::size_t>(y)])
                continue;
            // (e1)_x and (e2)_y as ordered lists of predecessors.
            Perm c1(e1.begin(), e1.begin() + r1[static_cast<std::size_t>(x)]);
            Perm c2(e2.begin(), e2.begin() + r2[static_cast<std::size_t>(y)]);
            if (c1 == c2)
                return true;
        }
    return false;
}

std::vector<Perm> sorted_extensions(int n, const std::vector<Pair> & pairs, const Perm & reference)
{
    std::vector<Perm> out;
    for (auto & p : permutations(n))
        if (extends(p, pairs))
            out.push_back(p);
    std::sort(out.begin(), out.end(), [&](const Perm & a, const Perm & b) { return lex_before(a, b, reference); });
    return out;
}

Perm restrict(const Perm & e, const std::vector<int> & subset, const Perm & reference)
{
    std::vector<int> sorted = subset;
    const auto r = ranks(reference);
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) { return r[static_cast<std::size_t>(a)] < r[static_cast<std::size_t>(b)]; });
    Perm out;
    for (int x : e) {
        auto it = std::find(sorted.begin(), sorted.end(), x);
        if (it != sorted.end())
            out.push_back(static_cast<int>(it - sorted.begin()));
    }
    return out;
}

bool rigid_by_prefixes(const std::vector<int> & map, int target_size)
{
    std::vector<bool> hit(static_cast<std::size_t>(target_size), false);
    for (int v : map) {
        if (v < 0 || v >= target_size)
            return false;
        hit[static_cast<std::size_t>(v)] = true;
        // the image so far must be {0, ..., j} for some j
        int top = -1;
        for (int j = 0; j < target_size; ++j)
            if (hit[static_cast<std::size_t>(j)])
                top = j;
        for (int j = 0; j <= top; ++j)
            if (! hit[static_cast<std::size_t>(j)])
                return false;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

BigInt stirling2_recurrence(int n, int k)
{
    std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(n + 1), std::vector<BigInt>(static_cast<std::size_t>(k + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                j * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace
{
    void for_each_map(int n, int k, const std::function<void(const std::vector<int> &)> & f)
    {
        std::vector<int> map(static_cast<std::size_t>(n), 0);
        while (true) {
            f(map);
            int i = n - 1;
            while (i >= 0 && map[static_cast<std::size_t>(i)] == k - 1)
                map[static_cast<std::size_t>(i--)] = 0;
            if (i < 0)
                return;
            ++map[static_cast<std::size_t>(i)];
        }
    }
}

BigInt stirling2_surjections(int n, int k)
{
    if (k == 0)
        return n == 0 ? 1 : 0;
    long long count = 0;
    for_each_map(n, k, [&](const std::vector<int> & map) {
        std::vector<bool> hit(static_cast<std::size_t>(k), false);
        for (int v : map)
            hit[static_cast<std::size_t>(v)] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
            ++count;
    });
    BigInt fact = 1;
    for (int i = 2; i <= k; ++i)
        fact *= i;
    return BigInt(count) / fact;
}

long long rigid_surjections_brute(int n, int k)
{
    long long count = 0;
    if (k == 0)
        return n == 0 ? 1 : 0;
    for_each_map(n, k, [&](const std::vector<int> & map) {
        if (rigid_by_prefixes(map, k))
            ++count;
    });
    return count;
}

long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<poramsey::Structure> structures_natural_first(int size, int p)
{
    std::vector<poramsey::Structure> out;
    Perm natural(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        natural[static_cast<std::size_t>(i)] = i;
    for (const auto & rel : natural_partial_orders(size)) {
        std::vector<Perm> exts;
        for (auto & e : permutations(size))
            if (extends(e, rel))
                exts.push_back(e);
        std::vector<std::size_t> idx(static_cast<std::size_t>(p - 1), 0);
        while (true) {
            poramsey::RawStructure raw;
            raw.p = p;
            raw.size = size;
            raw.partial_order = rel;
            raw.linear_orders.push_back(natural);
            for (auto i : idx)
                raw.linear_orders.push_back(exts[i]);
            out.push_back(poramsey::Structure::validate(raw));
            int pos = p - 2;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == exts.size())
                idx[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0)
                break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

} // namespace oracle

#include "oracles.hpp"
#include "poramsey/engines.hpp"
#include "poramsey/errors.hpp"
#include "poramsey/linext.hpp"
#include "poramsey/recheck.hpp"
#include "poramsey/twisted_product.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace poramsey;

namespace
{
    using ARS = AnchoredRigidSurjection;

    ARS plain(std::vector<int> map, int target)
    {
        const int source = static_cast<int>(map.size());
        return ARS(std::move(map), target, AnchoredSequence::trivial(source), AnchoredSequence::trivial(target));
    }

    // every tuple of m sets of the given size inside {0,...,n-1}
    std::vector<std::vector<std::vector<int>>> tuples(int n, int size, int m)
    {
        return set_tuples(combinations(n, size), m);
    }

    // x -> element of `s` with the same rank, ranks read in `order` on the relevant ground sets
    std::vector<int> kappa(const LinearOrder & x_order, const std::vector<int> & s, const LinearOrder & y_order)
    {
        std::vector<int> s_sorted = s;
        std::sort(s_sorted.begin(), s_sorted.end(), [&](int a, int b) { return y_order.less(a, b); });
        std::vector<int> out(static_cast<std::size_t>(x_order.size()));
        for (int x = 0; x < x_order.size(); ++x)
            out[static_cast<std::size_t>(x)] = s_sorted[static_cast<std::size_t>(x_order.rank(x))];
        return out;
    }
}

TEST_SUITE("rigsurj")
{
    TEST_CASE("is_rigid_surjection")
    {
        CHECK(is_rigid_surjection(std::vector<int>{0, 1, 2}, 3));
        CHECK(is_rigid_surjection(std::vector<int>{0, 0, 1}, 2));
        CHECK_FALSE(is_rigid_surjection(std::vector<int>{1, 0, 0}, 2));
        CHECK_FALSE(is_rigid_surjection(std::vector<int>{0, 0, 0}, 2));
        CHECK_FALSE(is_rigid_surjection(std::vector<int>{0, 2, 1}, 3));
        for (int n = 1; n <= 5; ++n)
            for (int k = 1; k <= n; ++k)
                for (const auto & map : recheck::brute_force_rigid_maps(AnchoredSequence::trivial(n), AnchoredSequence::trivial(k)))
                    CHECK(oracle::rigid_by_prefixes(map, k));
    }

    TEST_CASE("general form with arbitrary orders")
    {
        // B = 2 < 0 < 1, A = 1 < 0; the map 2->1, 0->1, 1->0 is rigid
        CHECK(is_rigid_surjection(std::vector<int>{1, 0, 1}, LinearOrder({2, 0, 1}), LinearOrder({1, 0})));
        CHECK_FALSE(is_rigid_surjection(std::vector<int>{1, 0, 0}, LinearOrder({2, 0, 1}), LinearOrder({1, 0})));
    }

    TEST_CASE("anchored sequences")
    {
        CHECK_THROWS_AS(AnchoredSequence({1}, 3), std::invalid_argument);
        CHECK_THROWS_AS(AnchoredSequence({0, 3}, 3), std::invalid_argument);
        CHECK_THROWS_AS(AnchoredSequence({}, 3), std::invalid_argument);
        CHECK(enumerate_anchored_sequences(3, 2).size() == 3);
        CHECK(enumerate_anchored_sequences(3, 3).size() == 9);
    }

    TEST_CASE("enumerate_rs")
    {
        CHECK(enumerate_rs(AnchoredSequence::trivial(3), AnchoredSequence::trivial(2)).size() == 3);
        CHECK(enumerate_rs(AnchoredSequence::trivial(4), AnchoredSequence::trivial(2)).size() == 7);
        const auto same = enumerate_rs(AnchoredSequence::trivial(4), AnchoredSequence::trivial(4));
        REQUIRE(same.size() == 1);
        CHECK(same[0] == ARS::identity(AnchoredSequence::trivial(4)));
        CHECK(enumerate_rs(AnchoredSequence::trivial(2), AnchoredSequence::trivial(3)).empty());
    }

    TEST_CASE("enumerate_rs matches the brute force with anchors")
    {
        for (int b = 1; b <= 5; ++b)
            for (int a = 1; a <= b; ++a)
                for (int p = 1; p <= 2; ++p)
                    for (const auto & sa : enumerate_anchored_sequences(b, p))
                        for (const auto & ta : enumerate_anchored_sequences(a, p)) {
                            std::vector<std::vector<int>> maps;
                            for (const auto & r : enumerate_rs(sa, ta)) {
                                maps.push_back(r.map());
                                for (int i = 0; i < p; ++i)
                                    CHECK(r(sa[i]) == ta[i]);
                            }
                            CHECK(maps == recheck::brute_force_rigid_maps(sa, ta));
                            CHECK(count_rs(sa, ta) == static_cast<long long>(maps.size()));
                        }
    }

    TEST_CASE("Stirling numbers")
    {
        for (int n = 1; n <= 6; ++n)
            for (int k = 1; k <= n; ++k)
                CHECK(count_rs(AnchoredSequence::trivial(n), AnchoredSequence::trivial(k)) == oracle::stirling2_surjections(n, k));
        CHECK(count_rs(AnchoredSequence::trivial(5), AnchoredSequence::trivial(3)) == 25);
        CHECK(count_rs(AnchoredSequence::trivial(20), AnchoredSequence::trivial(10)) == oracle::stirling2_recurrence(20, 10));
    }

    TEST_CASE("compose")
    {
        const auto t = plain({0, 1, 0, 2, 3}, 4);
        const auto r = plain({0, 1, 1, 2}, 3);
        CHECK(compose(ARS::identity(AnchoredSequence::trivial(3)), r) == r);
        CHECK(compose(r, ARS::identity(AnchoredSequence::trivial(4))) == r);
        const auto rt = compose(r, t);
        CHECK(rt.map() == std::vector<int>{0, 1, 0, 1, 2});
        CHECK(is_rigid_surjection(rt.map(), 3));
        CHECK_THROWS_AS(compose(t, r), PreconditionError);

        const ARS t2({0, 1, 2, 1}, 3, AnchoredSequence({0, 3}, 4), AnchoredSequence({0, 1}, 3));
        const ARS r2({0, 1, 1}, 2, AnchoredSequence({0, 1}, 3), AnchoredSequence({0, 1}, 2));
        CHECK(compose(r2, t2).target_anchor() == AnchoredSequence({0, 1}, 2));
        CHECK(compose(r2, t2)(3) == 1);
    }

    TEST_CASE("composition is closed and associative")
    {
        for (int c = 1; c <= 5; ++c)
            for (int b = 1; b <= c; ++b)
                for (int a = 1; a <= b; ++a) {
                    const auto ts = enumerate_rs(AnchoredSequence::trivial(c), AnchoredSequence::trivial(b));
                    const auto rs = enumerate_rs(AnchoredSequence::trivial(b), AnchoredSequence::trivial(a));
                    for (const auto & t : ts)
                        for (const auto & r : rs)
                            CHECK(is_rigid_surjection(compose(r, t).map(), a));
                }
        std::mt19937 rng(3);
        for (int trial = 0; trial < 100; ++trial) {
            const auto ds = enumerate_rs(AnchoredSequence::trivial(6), AnchoredSequence::trivial(4));
            const auto cs = enumerate_rs(AnchoredSequence::trivial(4), AnchoredSequence::trivial(3));
            const auto bs = enumerate_rs(AnchoredSequence::trivial(3), AnchoredSequence::trivial(2));
            const auto & x = ds[rng() % ds.size()];
            const auto & y = cs[rng() % cs.size()];
            const auto & z = bs[rng() % bs.size()];
            CHECK(compose(compose(z, y), x) == compose(z, compose(y, x)));
        }
    }

    TEST_CASE("divide")
    {
        const auto t = plain({0, 0, 1}, 2);
        CHECK(divide(t, t) == ARS::identity(AnchoredSequence::trivial(2)));
        CHECK(divide(plain({0, 0, 0}, 1), t) == plain({0, 0}, 1));
        CHECK_FALSE(divide(plain({0, 1, 1}, 2), t).has_value());
        for (int m = 1; m <= 5; ++m)
            for (int b = 1; b <= m; ++b)
                for (int a = 1; a <= b; ++a)
                    for (const auto & s : enumerate_rs(AnchoredSequence::trivial(m), AnchoredSequence::trivial(a)))
                        for (const auto & tt : enumerate_rs(AnchoredSequence::trivial(m), AnchoredSequence::trivial(b)))
                            if (const auto r = divide(s, tt))
                                CHECK(compose(*r, tt) == s);
    }

    TEST_CASE("ll is a preorder")
    {
        const int n = 3, m = 2;
        const auto i = AnchoredSequence::trivial(m);
        std::vector<Tuple> all;
        for (int size = 1; size <= 2; ++size)
            for (int b = 1; b <= m; ++b)
                for (const auto & sets : tuples(n, size, m))
                    for (const auto & t : enumerate_rs(i, AnchoredSequence::trivial(b)))
                        all.push_back(Tuple{sets, t});
        for (const auto & x : all) {
            CHECK(ll(x, x));
            for (const auto & y : all)
                if (ll(x, y))
                    for (const auto & z : all)
                        if (ll(y, z))
                            CHECK(ll(x, z));
        }
        const Tuple tau{{{0, 1}, {1, 2}}, ARS::identity(i)};
        const Tuple off{{{2}, {1}}, ARS::identity(i)};
        CHECK_FALSE(ll(off, tau));
    }

    TEST_CASE("twisted_compose")
    {
        const std::vector<LinearOrder> chain_orders{LinearOrder::natural(2)};
        const auto one = AnchoredSequence::trivial(1);
        const Tuple tau{{{3, 7}}, ARS::identity(one)};
        const Tuple sigma{{{1}}, ARS::identity(one)};
        const auto prod = twisted_compose(tau, sigma, chain_orders);
        CHECK(prod.sets == std::vector<std::vector<int>>{{7}});
        CHECK(ll(prod, tau));

        // full sets and identity rs give tau back
        const auto space = extension_space(2, LinearOrder::natural(2));
        const auto b = AnchoredSequence::trivial(2);
        for (const auto & t : enumerate_rs(AnchoredSequence::trivial(2), b)) {
            const Tuple tau2{{{0, 4}, {1, 3}}, t};
            const Tuple full{{{0, 1}, {0, 1}}, ARS::identity(b)};
            CHECK(twisted_compose(tau2, full, space.members()) == tau2);
        }
    }

    TEST_CASE("twisted product is associative through the coordinate isomorphisms")
    {
        // tau over antichain-3 with B = lin, sigma into antichain-2 with A = lin, rho into a point
        const auto b_space = extension_space(3, LinearOrder::natural(3));
        const auto a_space = extension_space(2, LinearOrder::natural(2));
        const int m = 7;
        const auto i = AnchoredSequence::trivial(m);
        const auto b = AnchoredSequence::trivial(6), a = AnchoredSequence::trivial(2), c = AnchoredSequence::trivial(1);
        const auto ts = enumerate_rs(i, b);
        const auto ss = enumerate_rs(b, a);
        const auto rs = enumerate_rs(a, c);
        std::mt19937 rng(5);
        const auto random_sets = [&](int n, int size) {
            std::vector<std::vector<int>> out;
            for (int k = 0; k < m; ++k) {
                std::vector<int> all(static_cast<std::size_t>(n));
                std::iota(all.begin(), all.end(), 0);
                std::shuffle(all.begin(), all.end(), rng);
                all.resize(static_cast<std::size_t>(size));
                std::sort(all.begin(), all.end());
                out.push_back(all);
            }
            return out;
        };
        for (int trial = 0; trial < 300; ++trial) {
            const Tuple tau{random_sets(6, 3), ts[rng() % ts.size()]};
            const Tuple sigma{random_sets(3, 2), ss[rng() % ss.size()]};
            const Tuple rho{random_sets(2, 1), rs[rng() % rs.size()]};

            const auto left = twisted_compose(twisted_compose(tau, sigma, b_space.members()), rho, a_space.members());

            // rho pushed into Y through kappa_i: (X, A[s(t(i))]) -> (S_i, B[t(i)]), then through pi^tau_i
            std::vector<std::vector<int>> right;
            for (int k = 0; k < m; ++k) {
                const auto & y_order = b_space.member(tau.rs(k));
                const auto into_y = kappa(a_space.member(sigma.rs(tau.rs(k))), sigma.sets[static_cast<std::size_t>(k)], y_order);
                const auto into_n = kappa(y_order, tau.sets[static_cast<std::size_t>(k)], LinearOrder::natural(6));
                std::vector<int> image;
                for (int x : rho.sets[static_cast<std::size_t>(k)])
                    image.push_back(into_n[static_cast<std::size_t>(into_y[static_cast<std::size_t>(x)])]);
                std::sort(image.begin(), image.end());
                right.push_back(image);
            }
            CHECK(left.sets == right);
            CHECK(left.rs == compose(compose(rho.rs, sigma.rs), tau.rs));
            CHECK(left.rs == compose(rho.rs, compose(sigma.rs, tau.rs)));
        }
    }

    TEST_CASE("twisted products stay in the cone")
    {
        const auto space = extension_space(2, LinearOrder::natural(2));
        const auto b = AnchoredSequence::trivial(2);
        for (int m = 1; m <= 3; ++m)
            for (const auto & i : enumerate_anchored_sequences(m, 1))
                for (const auto & t : enumerate_rs(i, b))
                    for (const auto & ts : tuples(4, 2, m))
                        for (const auto & s : enumerate_rs(b, AnchoredSequence::trivial(1)))
                            for (const auto & ss : tuples(2, 1, m))
                                CHECK(ll(twisted_compose(Tuple{ts, t}, Tuple{ss, s}, space.members()), Tuple{ts, t}));
    }
}

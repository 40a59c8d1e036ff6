#include "oracles.hpp"
#include "poramsey/errors.hpp"
#include "poramsey/linext.hpp"

#include <doctest.h>

using namespace poramsey;

namespace
{
    std::vector<std::vector<int>> enumerations(const OrderedExtensionSpace & s)
    {
        std::vector<std::vector<int>> out;
        for (const auto & m : s.members())
            out.push_back(m.enumeration());
        return out;
    }
}

TEST_SUITE("linext")
{
    TEST_CASE("cuts")
    {
        CHECK(cut(LinearOrder::natural(3), 1).elements == std::vector<int>{0});
        CHECK(cut(LinearOrder({2, 0, 1}), 2).elements.empty());
        CHECK(cut(LinearOrder({2, 0, 1}), 1).elements == std::vector<int>{2, 0});
        CHECK_THROWS_AS(cut(LinearOrder::natural(2), 5), std::out_of_range);
    }

    TEST_CASE("below")
    {
        const auto l = LinearOrder::natural(3);
        for (const auto & e : oracle::permutations(3))
            if (e != l.enumeration())
                CHECK(below(l, LinearOrder(e), l));
        CHECK_FALSE(below(l, l, l));
        CHECK(below(LinearOrder({0, 2, 1}), LinearOrder({1, 0, 2}), l));
        CHECK_FALSE(below(LinearOrder({1, 0, 2}), LinearOrder({0, 2, 1}), l));
        // against a different reference the answer can flip
        CHECK(below(LinearOrder({1, 0, 2}), LinearOrder({0, 2, 1}), LinearOrder({1, 0, 2})));
    }

    TEST_CASE("extension spaces")
    {
        const auto l = LinearOrder::natural(3);
        CHECK(enumerations(extension_space(3, l)) == std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}});
        const std::vector<Pair> v{{0, 1}, {0, 2}};
        CHECK(enumerations(extension_space(3, l, Relation::from_pairs(3, v))) == std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 1}});
        for (int n = 1; n <= 5; ++n)
            CHECK(extension_space(Structure::chain(n)).size() == 1);
        CHECK_THROWS_AS(extension_space(2, LinearOrder({1, 0}), Structure::chain(2).partial_order()), PreconditionError);
    }

    TEST_CASE("extension spaces agree with filtering all permutations")
    {
        for (int n = 1; n <= 4; ++n)
            for (const auto & rel : oracle::strict_partial_orders(n))
                for (const auto & ref : oracle::permutations(n)) {
                    if (! oracle::extends(ref, rel))
                        continue;
                    const auto space = extension_space(n, LinearOrder(ref), Relation::from_pairs(n, rel));
                    CHECK(enumerations(space) == oracle::sorted_extensions(n, rel, ref));
                }
    }

    TEST_CASE("P is the intersection of its linear extensions")
    {
        for (int n = 1; n <= 4; ++n)
            for (const auto & rel : oracle::strict_partial_orders(n)) {
                const auto p = Relation::from_pairs(n, rel);
                const auto exts = oracle::sorted_extensions(n, rel, oracle::sorted_extensions(n, rel, oracle::permutations(n)[0])[0]);
                const auto space = extension_space(n, LinearOrder(exts[0]), p);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        bool all = a != b;
                        for (const auto & m : space.members())
                            all = all && m.less(a, b);
                        CHECK(all == p.contains(a, b));
                    }
            }
    }

    TEST_CASE("res_X")
    {
        const auto space = extension_space(3, LinearOrder::natural(3));
        const std::vector<int> x{0, 2};
        const auto res = restriction_map(space, x, AnchoredSequence::trivial(6));
        CHECK(res.map.map() == std::vector<int>{0, 0, 0, 1, 1, 1});
        CHECK(res.target.size() == 2);
        CHECK(res.target.member(1).enumeration() == std::vector<int>{1, 0});

        const std::vector<int> full{0, 1, 2};
        const auto id = restriction_map(space, full, AnchoredSequence({0, 5}, 6));
        CHECK(id.map == AnchoredRigidSurjection::identity(AnchoredSequence({0, 5}, 6)));

        const std::vector<int> one{1};
        const auto constant = restriction_map(space, one, AnchoredSequence::trivial(6));
        CHECK(constant.map.map() == std::vector<int>(6, 0));

        const std::vector<int> repeated{1, 1};
        CHECK_THROWS_AS(restriction_map(space, repeated, AnchoredSequence::trivial(6)), std::invalid_argument);
    }

    TEST_CASE("res_X carries the anchor to the restricted orders")
    {
        // antichain of 3 with L_1 = 201
        const auto space = extension_space(3, LinearOrder::natural(3));
        const auto l1 = *space.index_of(LinearOrder({2, 0, 1}));
        const std::vector<int> x{1, 2};
        const auto res = restriction_map(space, x, AnchoredSequence({0, l1}, 6));
        CHECK(res.target.member(res.map.target_anchor()[1]).enumeration() == std::vector<int>{1, 0});
    }
}

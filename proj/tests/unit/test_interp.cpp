#include "poramsey/errors.hpp"
#include "poramsey/interp.hpp"
#include "poramsey/recheck.hpp"

#include <doctest.h>

using namespace poramsey;

namespace
{
    Structure make(int size, std::vector<Pair> p, std::vector<std::vector<int>> orders)
    {
        RawStructure raw;
        raw.p = static_cast<int>(orders.size());
        raw.size = size;
        raw.partial_order = std::move(p);
        raw.linear_orders = std::move(orders);
        return Structure::validate(raw);
    }

    const auto one = AnchoredSequence::trivial(1);

    Tuple constant_rs(const InterpFrame & fr, int m, const Embedding & s)
    {
        auto t = alpha(fr, m, s);
        t.rs = enumerate_rs(fr.y.anchor, fr.x.anchor).front();
        return t;
    }
}

TEST_SUITE("interp")
{
    TEST_CASE("alpha")
    {
        const auto c3 = Structure::chain(3);
        const auto same = InterpFrame::make(c3, c3);
        REQUIRE(same.s_members.size() == 1);
        const auto id = alpha(same, 2, same.s_members[0]);
        CHECK(id.sets == std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 2}});
        CHECK(id.rs == AnchoredRigidSurjection::identity(same.y.anchor));

        const auto pt = InterpFrame::make(Structure::chain(1), make(3, {{0, 1}, {0, 2}}, {{0, 1, 2}}));
        for (const auto & s : pt.s_members) {
            const auto t = alpha(pt, 1, s);
            CHECK(t.sets == std::vector<std::vector<int>>{{s.map[0]}});
            CHECK(t.rs.map() == std::vector<int>{0, 0});
        }

        const auto v = InterpFrame::make(Structure::chain(2), make(3, {{0, 1}, {0, 2}}, {{0, 1, 2}}));
        const auto t = alpha(v, 2, Embedding{{0, 1}});
        CHECK(t.sets == std::vector<std::vector<int>>{{0, 1}, {0, 1}});
        CHECK(t.rs.map() == std::vector<int>{0, 0});
        CHECK(in_product_member(v, 2, t));
    }

    TEST_CASE("alpha lands in R")
    {
        for (int l = 1; l <= 3; ++l)
            for (const auto & y : {Structure::chain(l), Structure::antichain(l)})
                for (int k = 1; k <= l; ++k)
                    for (const auto & x : {Structure::chain(k), Structure::antichain(k)}) {
                        const auto frame = InterpFrame::make(x, y);
                        const auto r = product_member_elements(frame, 2);
                        for (const auto & s : frame.s_members) {
                            const auto t = alpha(frame, 2, s);
                            CHECK(in_product_member(frame, 2, t));
                            CHECK(std::find(r.begin(), r.end(), t) != r.end());
                        }
                    }
    }

    TEST_CASE("frames need natural first orders")
    {
        CHECK_THROWS_AS(InterpFrame::make(Structure::chain(1), make(2, {}, {{1, 0}})), PreconditionError);
        CHECK_THROWS_AS(InterpFrame::make(Structure::chain(1, 2), Structure::chain(2)), PreconditionError);
    }

    TEST_CASE("phi is pi^tau and an embedding")
    {
        const auto frame = InterpFrame::make(Structure::chain(1), Structure::antichain(2));
        const TwistMember f{3, AnchoredSequence::trivial(2)};
        const GridStructure g(f.n, f.m(), f.anchor);
        for (const auto & tau : twist_member_elements(frame, f)) {
            const auto e = phi(frame, tau, g);
            CHECK(is_embedding(e, frame.y.structure, g.structure()));
            CHECK(e == grid_embedding(tau, frame.y, g));
        }
    }

    TEST_CASE("interpretation and the identity on small frames")
    {
        struct Case {
            Structure x, y;
            TwistMember f;
        };
        const std::vector<Case> cases = {
            {Structure::chain(2), Structure::chain(2), {3, one}},
            {Structure::chain(1), Structure::chain(2), {3, one}},
            {Structure::chain(2), Structure::chain(3), {5, one}},
            {Structure::chain(1), Structure::antichain(2), {3, AnchoredSequence::trivial(2)}},
            {Structure::antichain(2), make(3, {{0, 1}}, {{0, 1, 2}}), {4, AnchoredSequence::trivial(3)}},
        };
        for (const auto & c : cases) {
            const auto frame = InterpFrame::make(c.x, c.y);
            const auto report = check_interpretation(frame, c.f);
            CHECK(report.holds());
            CHECK(report.pairs > 0);
            CHECK_FALSE(check_alpha_identity(frame, c.f).has_value());
        }
    }

    TEST_CASE("a corrupted alpha is caught")
    {
        const auto frame = InterpFrame::make(Structure::antichain(2), make(3, {{0, 1}}, {{0, 1, 2}}));
        const TwistMember f{4, AnchoredSequence::trivial(3)};
        const auto report = check_interpretation(frame, f, constant_rs);
        REQUIRE_FALSE(report.holds());
        CHECK(report.violation->kind == InterpretationViolation::Kind::implication);
        CHECK(check_alpha_identity(frame, f, constant_rs).has_value());

        // moving the sets off s[k] leaves R altogether
        const AlphaMap shifted = [](const InterpFrame & fr, int m, const Embedding & s) {
            auto t = alpha(fr, m, s);
            for (auto & set : t.sets)
                for (auto & v : set)
                    v += 1;
            return t;
        };
        const auto outside = check_interpretation(frame, f, shifted);
        REQUIRE_FALSE(outside.holds());
        CHECK(outside.violation->kind == InterpretationViolation::Kind::alpha_outside_r);
    }

    TEST_CASE("Ramsey condition for twisted members")
    {
        const auto frame = InterpFrame::make(Structure::chain(1), Structure::chain(2));
        const auto r = product_member(frame, 1, 2);
        CHECK(r.dual_verified);
        const auto w = ramsey_condition_f1(frame, r, 2, 5);
        REQUIRE(w.has_value());
        CHECK(w->member.n == 3);
        CHECK(ramsey_condition_f1(frame, product_member(frame, 1, 1), 1, 5)->member.n == 2);
    }

    TEST_CASE("Ramsey condition for grid members")
    {
        const auto frame = InterpFrame::make(Structure::chain(2), Structure::chain(3));
        const auto w = ramsey_condition_f2(frame, 2, 1, 6);
        REQUIRE(w.has_value());
        CHECK(w->grid.structure() == Structure::chain(6));
        const auto below = verify_grid_member(frame, GridStructure(5, 1, one), 2);
        CHECK_FALSE(below.holds());
        CHECK_FALSE(ramsey_condition_f2(frame, 2, 1, 5).has_value());
    }

    TEST_CASE("transfer from twisted members to grids")
    {
        const auto pt = InterpFrame::make(Structure::chain(1), Structure::chain(2));
        const auto t = verify_transfer(pt, TwistMember{3, one}, 2);
        CHECK(t.holds());
        CHECK(t.colorings == 8);
        CHECK_THROWS_AS(verify_transfer(pt, TwistMember{2, one}, 2), PreconditionError);

        const auto anti = InterpFrame::make(Structure::chain(1), Structure::antichain(2));
        const auto w = ramsey_condition_f1(anti, product_member(anti, 2, 2), 2, 5);
        REQUIRE(w.has_value());
        CHECK(w->member.n == 5);
        // 2^25 colorings of the grid points is past a unit test, so only the grid itself is checked
        const GridStructure g(w->member.n, w->member.m(), w->member.anchor);
        CHECK(verify_ramsey_witness(g.structure(), Structure::chain(1), Structure::antichain(2), 2).holds());
    }
}

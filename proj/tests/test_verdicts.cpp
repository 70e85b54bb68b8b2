#include <doctest.h>

#include "support.hpp"

#include <ordalex/errors.hpp>
#include <ordalex/verdicts.hpp>

using namespace ordalex;
using namespace ordalex::testing;

namespace
{

IntVector unit_class(std::size_t m)
{
    IntVector v(m, BigInt(0));
    v[0] = 1;
    return v;
}

ObstructionVerdict obstruct(const GroupPresentation &p, const IntVector &psi)
{
    auto t = default_triple(p, validate_class(p, psi));
    return three_manifold_obstruction(t, gamma_degree(p, t.lambda), gamma_degree(p, t.gamma));
}

} // namespace

TEST_CASE("verdict case split")
{
    // Reference: the inequalities as stated, checked on a grid.
    for (int initial = 0; initial <= 1; ++initial) {
        for (std::int64_t dl = 0; dl <= 8; ++dl) {
            for (std::int64_t dg = 0; dg <= 8; ++dg) {
                Verdict expected = Verdict::no_obstruction;
                if (!initial && dl < dg) expected = Verdict::def_nonpositive_and_not_3manifold;
                if (initial && dl < dg - 1) expected = Verdict::not_3manifold_with_nonsphere_boundary;
                if (initial && dl < dg - 2) expected = Verdict::not_any_3manifold;
                CHECK(classify(initial != 0, dl, dg) == expected);
            }
        }
    }
    CHECK(to_string(Verdict::not_any_3manifold) == "not_any_3manifold");
}

TEST_CASE("obstructions for free abelian groups")
{
    for (std::size_t m = 2; m <= 5; ++m) {
        CAPTURE(m);
        auto p = parse_presentation(examples::free_abelian(m));
        auto v = obstruct(p, unit_class(m));
        CHECK(v.initial);
        CHECK(v.delta_lambda == 0);
        CHECK(v.delta_gamma == static_cast<std::int64_t>(m) - 1);
        if (m >= 4) CHECK(v.verdict == Verdict::not_any_3manifold);
        if (m == 3) CHECK(v.verdict == Verdict::not_3manifold_with_nonsphere_boundary);
        if (m == 2) CHECK(v.verdict == Verdict::no_obstruction);
    }
    auto b = parse_presentation(examples::borromean);
    CHECK(obstruct(b, iv({0, 1, 1})).verdict == Verdict::no_obstruction);

    // Reports for different classes.
    auto p = parse_presentation(examples::free_abelian(2));
    auto t = default_triple(p, validate_class(p, iv({1, 0})));
    CHECK_THROWS_AS(three_manifold_obstruction(t, delta_n(p, iv({1, 0}), 0), delta_n(p, iv({0, 1}), 0)),
                    invalid_input);
}

TEST_CASE("monotonicity examples")
{
    auto b = parse_presentation(examples::borromean);
    auto rb = monotonicity_check(b, {default_triple(b, validate_class(b, iv({0, 1, 1})))});
    CHECK(rb.certified);
    CHECK(rb.rows[0].delta_lambda == 2);
    CHECK(rb.rows[0].delta_gamma == 0);
    CHECK(rb.rows[0].deficiency_form);
    CHECK(rb.violations() == 0);

    auto z3 = parse_presentation(examples::free_abelian(3));
    auto rz = monotonicity_check(z3, {default_triple(z3, validate_class(z3, unit_class(3)))});
    CHECK_FALSE(rz.certified);
    CHECK_FALSE(rz.rows[0].deficiency_form);
    CHECK(rz.rows[0].closed_form);
    CHECK(rz.violations() == 0);

    auto t = parse_presentation(examples::trefoil);
    auto rt = monotonicity_check(t, {default_triple(t, validate_class(t, iv({1, 1})))});
    CHECK(rt.rows[0].initial);
    CHECK(rt.rows[0].delta_lambda == 1);
    CHECK(rt.rows[0].delta_gamma == 2);
    CHECK(rt.rows[0].deficiency_form);

    // A non-initial triple: Z^3 -> Z^2 on the Borromean rings.
    auto sys = abelian_system(b, validate_class(b, iv({0, 1, 2})));
    auto [q, triple] = intermediate_abelian_quotient(b, sys, int_matrix({{1, 0}}));
    (void)q;
    auto rn = monotonicity_check(b, {triple});
    CHECK_FALSE(rn.rows[0].initial);
    CHECK(rn.rows[0].deficiency_form);
}

TEST_CASE("thurston and genus bounds")
{
    auto t = parse_presentation(examples::trefoil);
    CHECK(knot_like(t));
    auto b = thurston_genus_bounds({{0, delta_n(t, iv({1, 1}), 0)}, {1, delta_n(t, iv({1, 1}), 1)}}, 1, true);
    REQUIRE(b.genus);
    CHECK(*b.genus == 1);
    CHECK(b.beta3 == "both");
    REQUIRE(b.thurston.size() == 3);
    CHECK(b.thurston[0].bound == 1);
    CHECK(b.thurston[1].bound == 0);
    CHECK(b.thurston[2].bound == 1);

    auto br = parse_presentation(examples::borromean);
    CHECK_FALSE(knot_like(br));
    auto bb = thurston_genus_bounds({{0, delta_n(br, iv({0, 1, 1}), 0)}}, 3, false);
    REQUIRE(bb.thurston.size() == 1);
    CHECK(bb.thurston[0].bound == 2);
    CHECK_FALSE(bb.genus);

    auto u = parse_presentation(examples::unknot);
    auto bu = thurston_genus_bounds({{0, delta_n(u, iv({1}), 0)}, {1, delta_n(u, iv({1}), 1)}}, 1, knot_like(u));
    REQUIRE(bu.genus);
    CHECK(*bu.genus == 0);

    CHECK_THROWS_AS(thurston_genus_bounds({}, 1, true), invalid_input);
    // Torsion in H_1 or deficiency 0 is not knot-like.
    CHECK_FALSE(knot_like(parse_presentation("< x, y | x^2 y^-2 >")));
    CHECK_FALSE(knot_like(parse_presentation(examples::free_abelian(3))));
}

TEST_CASE("epimorphism comparison")
{
    auto t = parse_presentation(examples::trefoil);
    auto id = epimorphism_compare(t, t, {parse_word("x", t.generators()), parse_word("y", t.generators())}, 0,
                                  iv({1, 1}));
    CHECK(id.pass);
    CHECK(id.delta_source == 2);
    CHECK(id.delta_target == 2);

    auto z = parse_presentation("< s | >");
    auto s = parse_word("s", z.generators());
    auto toz = epimorphism_compare(t, z, {s, s}, 0, iv({1}));
    CHECK(toz.pass);
    CHECK(toz.delta_source == 2);
    CHECK(toz.delta_target == 0);

    auto g = parse_presentation(examples::granny);
    auto map = parse_generator_map("x: x\ny: y\nz: x  # the second summand folds onto the first\n", g, t);
    auto r1 = epimorphism_compare(g, t, map, 1, iv({1, 1}));
    CHECK(r1.psi_source == iv({1, 1, 1}));
    CHECK(r1.delta_target == 1);
    CHECK(r1.delta_source == 3);
    CHECK(r1.pass);
    REQUIRE(r1.source_genus);
    CHECK(*r1.source_genus == 1);

    // Not a homomorphism even on H_1.
    CHECK_THROWS_AS(epimorphism_compare(t, t, {parse_word("x", t.generators()), parse_word("x^2", t.generators())}, 0,
                                        iv({1, 1})),
                    invalid_input);
    // beta_1 mismatch.
    auto f2 = parse_presentation("< a, b | >");
    CHECK_THROWS_AS(epimorphism_compare(f2, z, {s, s}, 0, iv({1})), invalid_input);
    CHECK_THROWS_AS(parse_generator_map("x: x\n", g, t), invalid_input);
    CHECK_THROWS_AS(parse_generator_map("x: x\nq: y\n", g, t), parse_error);
    CHECK_THROWS_AS(parse_generator_map("x: x\nx: y\n", g, t), parse_error);
}

TEST_CASE("property: monotonicity on a small corpus")
{
    auto s = run_corpus(7, 25);
    CHECK(s.computable == 25);
    CHECK(s.violations == 0);
    CHECK(s.cross_mismatches == 0);
    for (const auto &e : s.entries) {
        if (!e.delta1) continue;
        CHECK(e.delta0 - 1 <= *e.delta1);
    }
    // Deterministic in the seed.
    auto again = run_corpus(7, 25);
    REQUIRE(again.entries.size() == s.entries.size());
    for (std::size_t i = 0; i < s.entries.size(); ++i) CHECK(again.entries[i].presentation == s.entries[i].presentation);
}

TEST_CASE("property: degree matches the alexander norm on beta_1 = 2 groups")
{
    auto s = run_commutator_corpus(9, 15, 12);
    CHECK(s.entries.size() == 15);
    CHECK(s.cross_checked > 0);
    CHECK(s.cross_mismatches == 0);
    CHECK(s.violations == 0);
    for (const auto &e : s.entries) CHECK(e.betti == 2);
}

TEST_CASE("property: bounds never exceed a higher-level bound")
{
    auto s = run_corpus(8, 20);
    for (const auto &e : s.entries) {
        if (!e.delta1) continue;
        DegreeReport r0, r1;
        r0.delta = e.delta0;
        r1.delta = *e.delta1;
        auto b = thurston_genus_bounds({{0, r0}, {1, r1}}, e.betti, false);
        std::int64_t top = 0;
        for (const auto &x : b.thurston)
            if (x.level == 1) top = x.bound;
        for (const auto &x : b.thurston)
            if (x.level == 0) CHECK(x.bound <= top);
    }
}

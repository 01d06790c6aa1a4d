#include <doctest.h>

#include <set>

#include "prs/deepholes.hpp"

using namespace prs;

TEST_CASE("family A") {
    Field F5(5, 1);
    PRSCode c2 = make_code(F5, 2);
    DeepHoleClass a0 = family_A(c2, 0, 3);
    CHECK(a0.syndrome == ProjPoint(F5, {0, 0, 1, 0}));  // N_{q+1-k}
    DeepHoleClass a1 = family_A(c2, 1, 3);
    CHECK(a1.syndrome == ProjPoint(F5, {0, 0, 1, 4}));
    CHECK(a1.genpoly.to_poly(F5) == Poly(F5, {0, 4, 1}));  // X^2 - X
    CHECK(error_distance(c2, a1.word) == 3);
    std::set<ProjPoint> syn;
    for (felem a = 0; a < 5; ++a) syn.insert(family_A(c2, a, 3).syndrome);
    CHECK(syn.size() == 5);
    CHECK_THROWS_AS(family_A(c2, 0, 2), std::invalid_argument);  // rho != q-k refused
    Field F4(2, 2);
    // q even, k = 2: rho = 3 != q-k, constructors refuse
    CHECK_THROWS_AS(family_A(make_code(F4, 2), 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(family_A(make_code(F5, 4), 0, 1), std::invalid_argument);  // k > q-3
}

TEST_CASE("family B") {
    Field F5(5, 1);
    PRSCode c2 = make_code(F5, 2);
    // alpha_i = 0: syndrome (a : -1 : 0 : ... : 0)
    for (felem a = 0; a < 5; ++a)
        CHECK(family_B(c2, 1, a, 3).syndrome == ProjPoint(F5, {a, 4, 0, 0}));
    // alpha_i = 1, a = 0: -c'_4(1) = (0:-1:-2:-3) ~ (0:1:2:3)
    CHECK(family_B(c2, 2, 0, 3).syndrome == ProjPoint(F5, {0, 1, 2, 3}));
    std::set<ProjPoint> syn;
    for (unsigned i = 1; i <= 5; ++i)
        for (felem a = 0; a < 5; ++a) {
            DeepHoleClass cls = family_B(c2, i, a, 3);
            CHECK(error_distance(c2, cls.word) == 3);
            syn.insert(cls.syndrome);
        }
    CHECK(syn.size() == 25);
    // disjoint from family A
    for (felem a = 0; a < 5; ++a) CHECK(syn.count(family_A(c2, a, 3).syndrome) == 0);
    CHECK_THROWS_AS(family_B(c2, 0, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(family_B(c2, 6, 0, 3), std::invalid_argument);
}

TEST_CASE("family C") {
    Field F5(5, 1);
    PRSCode c2 = make_code(F5, 2);
    QuadExt E(F5);
    Poly p(F5, {2, 0, 1});  // x^2 + 2
    DeepHoleClass inf = family_C(c2, ExtendedValue::infinity(), p, E, 3);
    // syndrome ~ c_4(mu) + c_4(mu^5) with mu^2 = -2: entries (2, 0, 2mu^2, 0)
    felem musq = F5.neg(2);
    CHECK(inf.syndrome ==
          ProjPoint(F5, {2, 0, F5.mul(2, musq), 0}));
    CHECK(error_distance(c2, inf.word) == 3);

    std::set<ProjPoint> syn;
    for (const Poly& quad : monic_irreducible_quadratics(F5))
        for (std::uint64_t a = 0; a <= 5; ++a) {
            ExtendedValue av =
                a == 5 ? ExtendedValue::infinity() : ExtendedValue::of(felem(a));
            DeepHoleClass cls = family_C(c2, av, quad, E, 3);
            CHECK(error_distance(c2, cls.word) == 3);
            // first two coordinates never both vanish
            CHECK((cls.syndrome.c[0] != 0 || cls.syndrome.c[1] != 0));
            syn.insert(cls.syndrome);
        }
    CHECK(syn.size() == 60);  // (q+1)q(q-1)/2

    CHECK_THROWS_AS(family_C(c2, ExtendedValue::of(0), Poly(F5, {1, 0, 1}), E, 3),
                    std::invalid_argument);  // reducible quadratic
}

TEST_CASE("enumerate deep holes") {
    Field F5(5, 1);
    PRSCode c2 = make_code(F5, 2);
    auto classes = enumerate_deep_holes(c2, covering_radius(c2).rho);
    CHECK(classes.size() == 90);
    // canonical projective order, tagged families
    std::size_t na = 0, nb = 0, nc = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i) CHECK(classes[i - 1].syndrome < classes[i].syndrome);
        CHECK(error_distance(c2, genpoly_word(c2, classes[i].genpoly)) == 3);
        if (classes[i].family == Family::A) ++na;
        if (classes[i].family == Family::B) ++nb;
        if (classes[i].family == Family::C) ++nc;
    }
    CHECK(na == 5);
    CHECK(nb == 25);
    CHECK(nc == 60);

    // k = q-2, odd q: the q^2 points off the curve
    Field F7(7, 1);
    PRSCode c5 = make_code(F7, 5);
    auto q2classes = enumerate_deep_holes(c5, covering_radius(c5).rho);
    CHECK(q2classes.size() == 49);
    std::set<ProjPoint> holes;
    for (const auto& cls : q2classes) holes.insert(cls.syndrome);
    for (std::uint64_t t = 0; t <= 7; ++t) {
        ExtendedValue v = t == 7 ? ExtendedValue::infinity() : ExtendedValue::of(felem(t));
        CHECK(holes.count(ProjPoint(F7, c_vector(F7, 3, v))) == 0);
    }
    CHECK(holes.size() + 8 == 57);  // curve points + deep holes cover P^2

    // k = q-2, even q: single class (0:1:0)
    Field F8(2, 3);
    PRSCode c6 = make_code(F8, 6);
    auto even = enumerate_deep_holes(c6, covering_radius(c6).rho);
    REQUIRE(even.size() == 1);
    CHECK(even[0].syndrome == ProjPoint(F8, {0, 1, 0}));
}

TEST_CASE("classification at k = q-3") {
    Field F5(5, 1);
    ClassificationReport rep = classify_q_minus_3(F5, kDefaultPointBound, 2, true);
    CHECK(rep.ok());
    CHECK(rep.k == 2);
    CHECK(rep.rho == 3);
    CHECK(rep.count_A == 5);
    CHECK(rep.count_B == 25);
    CHECK(rep.count_C == 60);
    CHECK(rep.enumerated == 90);
    CHECK(rep.expected_total == 90);
    CHECK(rep.families_disjoint);
    CHECK(rep.families_match_enumeration);
    CHECK(rep.count_matches_formula);
    CHECK(rep.classes.size() == 90);
    REQUIRE(rep.orbits.has_value());
    // p = 5 does not divide k = 2: A u B is a single orbit of size q^2 + q
    CHECK(rep.orbits->ab_orbit_sizes == std::vector<std::size_t>{30});
    CHECK(rep.orbits->c_set_stable);

    // p | k case: q = 9, k = 6 -> two orbits of sizes q+1 and q^2-1
    Field F9(3, 2);
    ClassificationReport rep9 = classify_q_minus_3(F9, kDefaultPointBound, 4, true);
    CHECK(rep9.ok());
    CHECK(rep9.enumerated == 450);  // q(q+1)^2/2
    REQUIRE(rep9.orbits.has_value());
    std::multiset<std::size_t> sizes(rep9.orbits->ab_orbit_sizes.begin(),
                                     rep9.orbits->ab_orbit_sizes.end());
    CHECK(sizes == std::multiset<std::size_t>{10, 80});
    CHECK(rep9.orbits->c_set_stable);
}

TEST_CASE("tangent and secant geometry") {
    Field F5(5, 1);
    GeometryReport geo = tangent_secant_geometry(F5, 2);
    CHECK(geo.ok());
    CHECK(geo.tangent_lines_pairwise_disjoint);
    CHECK(geo.tangent_points_match_AB);
    CHECK(geo.secant_points_match_C);
    CHECK(geo.tangent_off_curve_points == 30);  // (q+1) q
    CHECK(geo.secant_rational_points == 60);    // (q+1) q (q-1)/2
}

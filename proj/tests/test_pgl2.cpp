#include <doctest.h>

#include <random>
#include <set>

#include "prs/pgl2.hpp"

using namespace prs;

namespace {

Mobius random_mobius(const Field& F, std::mt19937& rng) {
    std::uniform_int_distribution<felem> d(0, felem(F.order() - 1));
    for (;;) {
        felem a = d(rng), b = d(rng), c = d(rng), dd = d(rng);
        if (F.sub(F.mul(a, dd), F.mul(b, c)) != 0) return Mobius(F, a, b, c, dd);
    }
}

bool proportional(const Matrix& A, const Matrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) return false;
    const Field& F = *A.field;
    felem lambda = 0;
    for (std::size_t i = 0; i < A.a.size(); ++i) {
        if ((A.a[i] == 0) != (B.a[i] == 0)) return false;
        if (A.a[i] == 0) continue;
        felem r = F.div(B.a[i], A.a[i]);
        if (lambda == 0)
            lambda = r;
        else if (r != lambda)
            return false;
    }
    return lambda != 0;
}

}  // namespace

TEST_CASE("mobius basics") {
    Field F5(5, 1);
    Mobius id = Mobius::identity(F5);
    for (felem t = 0; t < 5; ++t)
        CHECK(mobius_apply(id, ExtendedValue::of(t)) == ExtendedValue::of(t));
    CHECK(mobius_apply(id, ExtendedValue::infinity()) == ExtendedValue::infinity());

    Mobius recip(F5, 0, 1, 1, 0);  // t -> 1/t
    CHECK(mobius_apply(recip, ExtendedValue::of(2)) == ExtendedValue::of(3));
    CHECK(mobius_apply(recip, ExtendedValue::of(0)) == ExtendedValue::infinity());
    CHECK(mobius_apply(recip, ExtendedValue::infinity()) == ExtendedValue::of(0));

    Mobius shift(F5, 1, 0, 3, 1);  // t -> t + 3
    CHECK(mobius_apply(shift, ExtendedValue::of(4)) == ExtendedValue::of(2));
    CHECK(mobius_apply(shift, ExtendedValue::infinity()) == ExtendedValue::infinity());

    // canonicalization: scalar multiples coincide
    CHECK(Mobius(F5, 2, 0, 0, 2) == Mobius::identity(F5));
    CHECK(Mobius(F5, 0, 2, 4, 0) == Mobius(F5, 0, 1, 2, 0));
    CHECK_THROWS_AS(Mobius(F5, 1, 2, 2, 4), std::invalid_argument);  // det 0

    CHECK(enumerate_pgl2(F5).size() == 5 * 24);
    Field F4(2, 2);
    CHECK(enumerate_pgl2(F4).size() == 4 * 15);
}

TEST_CASE("mobius group structure") {
    Field F7(7, 1);
    std::mt19937 rng(31337);
    for (int t = 0; t < 100; ++t) {
        Mobius g = random_mobius(F7, rng), h = random_mobius(F7, rng);
        Mobius gh = g.compose(h);
        // action convention: (g.compose(h))(t) = g(h(t))
        for (felem x = 0; x < 7; ++x) {
            ExtendedValue v = ExtendedValue::of(x);
            CHECK(mobius_apply(gh, v) == mobius_apply(g, mobius_apply(h, v)));
        }
        CHECK(g.compose(g.inverse()) == Mobius::identity(F7));
    }
}

TEST_CASE("rep_matrix closed forms") {
    Field F5(5, 1);
    Mobius recip(F5, 0, 1, 1, 0);
    for (unsigned m : {3u, 4u, 5u}) {
        Matrix R = rep_matrix(recip, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                CHECK(R.at(i, j) == (i + j == m - 1 ? 1 : 0));
    }
    // translate: lower-triangular binomial rows
    felem c = 2;
    Mobius shift(F5, 1, 0, c, 1);
    Matrix T = rep_matrix(shift, 4);
    Matrix expect(F5, 4, 4);
    // rows are (1), (c,1), (c^2,2c,1), (c^3,3c^2,3c,1) padded with zeros
    felem rows[4][4] = {{1, 0, 0, 0},
                        {c, 1, 0, 0},
                        {F5.mul(c, c), F5.mul(2, c), 1, 0},
                        {F5.pow(c, 3), F5.mul(3, F5.mul(c, c)), F5.mul(3, c), 1}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) expect.at(i, j) = rows[i][j];
    CHECK(T == expect);
    // generic m = 3: middle row is (ac, ad+bc, bd)
    Mobius g(F5, 1, 2, 3, 4);
    Matrix R3 = rep_matrix(g, 3);
    CHECK(R3.at(1, 0) == F5.mul(g.a, g.c));
    CHECK(R3.at(1, 1) == F5.add(F5.mul(g.a, g.d), F5.mul(g.b, g.c)));
    CHECK(R3.at(1, 2) == F5.mul(g.b, g.d));
    CHECK_THROWS_AS(rep_matrix(g, 1), std::invalid_argument);
    CHECK_THROWS_AS(rep_matrix(g, 8), std::invalid_argument);
}

TEST_CASE("homomorphism and curve equivariance") {
    std::mt19937 rng(2024);
    for (auto pm : {std::pair<std::uint64_t, unsigned>{5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        Field F(pm.first, pm.second);
        std::uint64_t q = F.order();
        for (unsigned m = 3; m <= std::min<std::uint64_t>(6, q + 1); ++m) {
            for (int t = 0; t < 50; ++t) {
                Mobius g = random_mobius(F, rng), h = random_mobius(F, rng);
                CHECK(proportional(rep_matrix(g.compose(h), m),
                                   matmul(rep_matrix(g, m), rep_matrix(h, m))));
                // g_m c_m(t) ~ c_m(g(t)) for every t
                Matrix gm = rep_matrix(g, m);
                for (std::uint64_t x = 0; x <= q; ++x) {
                    ExtendedValue v = x == q ? ExtendedValue::infinity()
                                             : ExtendedValue::of(felem(x));
                    std::vector<felem> lhs = matvec(gm, c_vector(F, m, v));
                    std::vector<felem> rhs = c_vector(F, m, mobius_apply(g, v));
                    CHECK(ProjPoint(F, lhs) == ProjPoint(F, rhs));
                }
            }
        }
    }
}

TEST_CASE("monomial automorphisms") {
    Field F5(5, 1);
    MonomialAut id = monomial_automorphism(Mobius::identity(F5), 3);
    for (std::size_t j = 0; j < id.perm.size(); ++j) {
        CHECK(id.perm[j] == j);
        CHECK(id.diag[j] == 1);
    }
    // translate: permutes finite alphas by +c, fixes infinity, unit diagonal
    felem c = 2;
    MonomialAut tr = monomial_automorphism(Mobius(F5, 1, 0, c, 1), 3);
    for (felem j = 0; j < 5; ++j) {
        CHECK(tr.perm[j] == F5.add(j, c));
        CHECK(tr.diag[j] == 1);
    }
    CHECK(tr.perm[5] == 5);

    // defining identity g_m G_m = G_m B_m(g) on random samples
    std::mt19937 rng(555);
    for (auto pm : {std::pair<std::uint64_t, unsigned>{5, 1}, {7, 1}, {2, 3}}) {
        Field F(pm.first, pm.second);
        std::uint64_t q = F.order();
        for (int t = 0; t < 25; ++t) {
            Mobius g = random_mobius(F, rng);
            for (unsigned m = 2; m <= std::min<std::uint64_t>(6, q - 1); ++m) {
                MonomialAut B = monomial_automorphism(g, m);  // self-verifying
                Matrix Gm = make_code(F, m).G;
                CHECK(matmul(rep_matrix(g, m), Gm) == matmul(Gm, B.to_matrix(F)));
                // transpose identity: B_{q+1-m}(g) = B_m(g)^{-t}
                MonomialAut Bdual = monomial_automorphism(g, unsigned(q + 1 - m));
                Matrix prod = matmul(Bdual.to_matrix(F).transpose(), B.to_matrix(F));
                CHECK(prod == Matrix::identity(F, std::size_t(q + 1)));
            }
        }
    }
}

TEST_CASE("syndrome action") {
    Field F5(5, 1);
    ProjPoint s(F5, {1, 2, 3, 4});
    CHECK(act_on_syndrome(Mobius::identity(F5), s) == s);
    // translating u(i, a) to the origin gives syndrome (a : -1 : 0 : ... : 0)
    PRSCode c2 = make_code(F5, 2);
    unsigned m = c2.redundancy();
    for (felem ai = 0; ai < 5; ++ai)
        for (felem a = 0; a < 5; ++a) {
            std::vector<felem> ca = c_vector(F5, m, ExtendedValue::of(ai));
            std::vector<felem> cp = c_prime_vector(F5, m, ExtendedValue::of(ai));
            std::vector<felem> syn(m);
            for (unsigned j = 0; j < m; ++j) syn[j] = F5.sub(F5.mul(a, ca[j]), cp[j]);
            Mobius g(F5, 1, 0, F5.neg(ai), 1);  // t -> t - alpha_i
            ProjPoint moved = act_on_syndrome(g, ProjPoint(F5, syn));
            CHECK(moved == ProjPoint(F5, {a, F5.neg(1), 0, 0}));
        }
}

TEST_CASE("n_point") {
    Field F5(5, 1);
    CHECK(n_point(F5, 3) == ProjPoint(F5, {0, 1, 0}));
    CHECK(n_point(F5, 4) == ProjPoint(F5, {0, 0, 1, 0}));
    CHECK(n_point(F5, 5) == ProjPoint(F5, {0, 0, 0, 1, 0}));
    CHECK_THROWS_AS(n_point(F5, 2), std::invalid_argument);
}

TEST_CASE("orbits and stabilizers") {
    Field F5(5, 1), F4(2, 2);

    OrbitResult n3odd = orbit(n_point(F5, 3), 3);
    CHECK(n3odd.orbit.size() == 15);  // q(q+1)/2
    CHECK(n3odd.orbit.size() * n3odd.stabilizer.size() == 120);
    // stabilizer is {t -> dt} u {t -> d/t}
    for (const Mobius& g : n3odd.stabilizer) {
        bool diag = (g.b == 0 && g.c == 0);
        bool anti = (g.a == 0 && g.d == 0);
        CHECK((diag || anti));
    }

    CHECK(orbit(n_point(F4, 3), 3).orbit.size() == 1);  // q even

    OrbitResult n6 = orbit(n_point(F5, 6), 6);  // m = 6 = 1 mod p
    CHECK(n6.orbit.size() == 6);
    CHECK(n6.stabilizer.size() == 20);
    for (const Mobius& g : n6.stabilizer) {  // {t -> dt + c}
        CHECK(g.b == 0);
        CHECK(g.a == 1);
    }

    // N_6 + c_6(inf) has orbit q^2 - 1 and stabilizer {t -> t + c}
    std::vector<felem> coords(6, 0);
    coords[4] = 1;
    coords[5] = 1;
    OrbitResult shifted = orbit(ProjPoint(F5, coords), 6);
    CHECK(shifted.orbit.size() == 24);
    CHECK(shifted.stabilizer.size() == 5);
    for (const Mobius& g : shifted.stabilizer) {
        CHECK(g.a == 1);
        CHECK(g.b == 0);
        CHECK(g.d == 1);
    }

    // N_4 over F_5: m > 3, m != 1 mod p -> orbit q(q+1)
    OrbitResult n4 = orbit(n_point(F5, 4), 4);
    CHECK(n4.orbit.size() == 30);
    for (const Mobius& g : n4.stabilizer) {
        CHECK(g.b == 0);
        CHECK(g.c == 0);
    }
}

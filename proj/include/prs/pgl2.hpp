#ifndef PRS_PGL2_HPP
#define PRS_PGL2_HPP

#include <vector>

#include "prs/prscode.hpp"

namespace prs {

/// Class of an invertible 2x2 matrix modulo scaling; acts on F_q u {inf} by
/// t -> (c + d t)/(a + b t). Canonical representative scales the first
/// nonzero of (a, b, c, d) to 1.
struct Mobius {
    const Field* field = nullptr;
    felem a = 1, b = 0, c = 0, d = 1;

    Mobius() = default;
    Mobius(const Field& f, felem a, felem b, felem c, felem d);  // canonicalizes

    static Mobius identity(const Field& f) { return Mobius(f, 1, 0, 0, 1); }
    Mobius compose(const Mobius& other) const;  // matrix product this * other
    Mobius inverse() const;
    bool operator==(const Mobius& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

ExtendedValue mobius_apply(const Mobius& g, ExtendedValue t);

/// All q(q^2-1) group elements, ascending encoding of canonical tuples.
std::vector<Mobius> enumerate_pgl2(const Field& F);

/// The m x m matrix with (i,j) entry the coefficient of X^{j-1} in
/// (a + bX)^{m-i} (c + dX)^{i-1}; the symmetric-power representation.
Matrix rep_matrix(const Mobius& g, unsigned m);

/// Monomial code automorphism B_m(g) = Pi(g) Delta_m(g), split into the
/// permutation (perm[j] = i with alpha_i = g(alpha_j), 0-based) and the
/// diagonal scalars.
struct MonomialAut {
    std::vector<std::size_t> perm;
    std::vector<felem> diag;

    Matrix to_matrix(const Field& F) const;
};

/// Builds B_m(g) and verifies the defining identity g_m G_m = G_m B_m(g).
MonomialAut monomial_automorphism(const Mobius& g, unsigned m);

/// Applies g_m to a projective syndrome, renormalizing; two deep hole
/// classes are automorphism-equivalent iff related this way.
ProjPoint act_on_syndrome(const Mobius& g, const ProjPoint& s);

/// The point (0 : ... : 0 : 1 : 0) in P^{m-1}.
ProjPoint n_point(const Field& F, unsigned m);

struct OrbitResult {
    std::vector<ProjPoint> orbit;     // canonically ordered
    std::vector<Mobius> stabilizer;   // enumeration order
};

/// Full PGL2 orbit of a projective point under g -> g_m, with stabilizer.
OrbitResult orbit(const ProjPoint& s, unsigned m);

}  // namespace prs

#endif

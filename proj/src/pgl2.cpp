#include "prs/pgl2.hpp"

#include <algorithm>

namespace prs {

Mobius::Mobius(const Field& f, felem a_, felem b_, felem c_, felem d_)
    : field(&f), a(a_), b(b_), c(c_), d(d_) {
    felem detv = f.sub(f.mul(a, d), f.mul(b, c));
    if (detv == 0) throw std::invalid_argument("Mobius map must have nonzero determinant");
    felem first = a ? a : b ? b : c ? c : d;
    felem inv = f.inv(first);
    a = f.mul(a, inv);
    b = f.mul(b, inv);
    c = f.mul(c, inv);
    d = f.mul(d, inv);
}

Mobius Mobius::compose(const Mobius& o) const {
    const Field& F = *field;
    return Mobius(F, F.add(F.mul(a, o.a), F.mul(b, o.c)), F.add(F.mul(a, o.b), F.mul(b, o.d)),
                  F.add(F.mul(c, o.a), F.mul(d, o.c)), F.add(F.mul(c, o.b), F.mul(d, o.d)));
}

Mobius Mobius::inverse() const {
    const Field& F = *field;
    return Mobius(F, d, F.neg(b), F.neg(c), a);
}

ExtendedValue mobius_apply(const Mobius& g, ExtendedValue t) {
    const Field& F = *g.field;
    if (t.is_infinity) {
        if (g.b == 0) return ExtendedValue::infinity();
        return ExtendedValue::of(F.div(g.d, g.b));
    }
    felem denom = F.add(g.a, F.mul(g.b, t.value));
    felem num = F.add(g.c, F.mul(g.d, t.value));
    if (denom == 0) return ExtendedValue::infinity();
    return ExtendedValue::of(F.div(num, denom));
}

std::vector<Mobius> enumerate_pgl2(const Field& F) {
    std::uint64_t q = F.order();
    std::vector<Mobius> out;
    out.reserve(std::size_t(q * (q * q - 1)));
    for (felem a = 0; a < q; ++a)
        for (felem b = 0; b < q; ++b)
            for (felem c = 0; c < q; ++c)
                for (felem d = 0; d < q; ++d) {
                    felem first = a ? a : b ? b : c ? c : d;
                    if (first != 1) continue;  // canonical representatives only
                    if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) continue;
                    Mobius g;
                    g.field = &F;
                    g.a = a; g.b = b; g.c = c; g.d = d;
                    out.push_back(g);
                }
    return out;
}

Matrix rep_matrix(const Mobius& g, unsigned m) {
    const Field& F = *g.field;
    if (m < 2 || m > F.order() + 1) throw std::invalid_argument("rep_matrix: m out of range");
    Poly row_a(F, {g.a, g.b});  // a + bX
    Poly row_c(F, {g.c, g.d});  // c + dX
    // powers of the two linear factors
    std::vector<Poly> pa(m, Poly(F, {1})), pc(m, Poly(F, {1}));
    for (unsigned i = 1; i < m; ++i) {
        pa[i] = pa[i - 1] * row_a;
        pc[i] = pc[i - 1] * row_c;
    }
    Matrix M(F, m, m);
    for (unsigned i = 1; i <= m; ++i) {
        Poly p = pa[m - i] * pc[i - 1];
        for (unsigned j = 1; j <= m; ++j) M.at(i - 1, j - 1) = p.coeff(j - 1);
    }
    return M;
}

Matrix MonomialAut::to_matrix(const Field& F) const {
    std::size_t n = perm.size();
    Matrix B(F, n, n);
    for (std::size_t j = 0; j < n; ++j) B.at(perm[j], j) = diag[j];
    return B;
}

MonomialAut monomial_automorphism(const Mobius& g, unsigned m) {
    const Field& F = *g.field;
    std::uint64_t q = F.order();
    std::size_t n = std::size_t(q + 1);
    MonomialAut aut;
    aut.perm.resize(n);
    aut.diag.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        ExtendedValue t = (j == q) ? ExtendedValue::infinity() : ExtendedValue::of(felem(j));
        ExtendedValue gt = mobius_apply(g, t);
        aut.perm[j] = gt.is_infinity ? q : gt.value;
        felem delta;
        if (!t.is_infinity) {
            felem denom = F.add(g.a, F.mul(g.b, t.value));
            delta = denom != 0 ? F.pow(denom, m - 1)
                               : F.pow(F.sub(g.c, F.mul(g.d, F.div(g.a, g.b))), m - 1);
        } else {
            delta = g.b != 0 ? F.pow(g.b, m - 1) : F.pow(g.d, m - 1);
        }
        aut.diag[j] = delta;
    }
    // defining identity g_m G_m = G_m B_m(g)
    Matrix G(F, m, n);
    for (std::size_t j = 0; j < n; ++j) {
        ExtendedValue t = (j == q) ? ExtendedValue::infinity() : ExtendedValue::of(felem(j));
        std::vector<felem> col = c_vector(F, m, t);
        for (unsigned i = 0; i < m; ++i) G.at(i, j) = col[i];
    }
    Matrix lhs = matmul(rep_matrix(g, m), G);
    Matrix rhs = matmul(G, aut.to_matrix(F));
    if (!(lhs == rhs)) throw CheckFailure("monomial automorphism identity failed");
    return aut;
}

ProjPoint act_on_syndrome(const Mobius& g, const ProjPoint& s) {
    unsigned m = unsigned(s.c.size());
    return ProjPoint(*s.field, matvec(rep_matrix(g, m), s.c));
}

ProjPoint n_point(const Field& F, unsigned m) {
    if (m < 3) throw std::invalid_argument("n_point needs m >= 3");
    std::vector<felem> v(m, 0);
    v[m - 2] = 1;
    return ProjPoint(F, std::move(v));
}

OrbitResult orbit(const ProjPoint& s, unsigned m) {
    if (s.c.size() != m) throw std::invalid_argument("point dimension mismatch");
    const Field& F = *s.field;
    OrbitResult res;
    std::vector<ProjPoint> seen;
    for (const Mobius& g : enumerate_pgl2(F)) {
        ProjPoint t = act_on_syndrome(g, s);
        if (t == s) res.stabilizer.push_back(g);
        seen.push_back(std::move(t));
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    res.orbit = std::move(seen);
    return res;
}

}  // namespace prs

#include "prs/prscode.hpp"

#include <algorithm>

namespace prs {

std::vector<felem> c_vector(const Field& F, unsigned m, ExtendedValue t) {
    if (m < 1 || m > F.order() + 1) throw std::invalid_argument("c_vector: m out of range");
    std::vector<felem> v(m, 0);
    if (t.is_infinity) {
        v[m - 1] = 1;
    } else {
        felem pw = 1;
        for (unsigned i = 0; i < m; ++i) { v[i] = pw; pw = F.mul(pw, t.value); }
    }
    if (m == 1) v[0] = 1;  // c_1 is identically 1, also at infinity
    return v;
}

std::vector<felem> c_prime_vector(const Field& F, unsigned m, ExtendedValue t) {
    if (t.is_infinity) throw std::invalid_argument("c_prime_vector: infinity not supported");
    if (m < 1 || m > F.order() + 1) throw std::invalid_argument("c_prime_vector: m out of range");
    std::vector<felem> v(m, 0);
    felem pw = 1;  // t^{i-1}
    for (unsigned i = 1; i < m; ++i) {
        felem multiple = felem(i % F.characteristic());  // i as an element of F_q
        v[i] = F.mul(multiple, pw);
        pw = F.mul(pw, t.value);
    }
    return v;
}

namespace {

Matrix evaluation_matrix(const Field& F, unsigned m) {
    std::uint64_t q = F.order();
    Matrix M(F, m, std::size_t(q + 1));
    for (std::uint64_t j = 0; j <= q; ++j) {
        ExtendedValue t = (j == q) ? ExtendedValue::infinity() : ExtendedValue::of(felem(j));
        std::vector<felem> col = c_vector(F, m, t);
        for (unsigned i = 0; i < m; ++i) M.at(i, j) = col[i];
    }
    return M;
}

}  // namespace

PRSCode make_code(const Field& F, unsigned k) {
    std::uint64_t q = F.order();
    if (k < 1 || k > q + 1) throw std::invalid_argument("dimension k out of range");
    PRSCode code;
    code.field = &F;
    code.k = k;
    code.G = evaluation_matrix(F, k);
    if (k <= q) {
        code.H = evaluation_matrix(F, unsigned(q + 1 - k));
        Matrix prod = matmul(code.G, code.H->transpose());
        for (felem e : prod.a)
            if (e != 0) throw CheckFailure("duality G_k G_{q+1-k}^T = 0 failed");
    }
    if (!all_minors_nonzero(code.G, k)) throw CheckFailure("generator matrix is not MDS");
    return code;
}

Word encode(const PRSCode& code, const Poly& f) {
    if (f.degree() != Poly::kNegInfinity && f.degree() > int(code.k) - 1)
        throw std::invalid_argument("message polynomial degree too large");
    const Field& F = *code.field;
    std::uint64_t q = F.order();
    Word w(std::size_t(q + 1));
    for (std::uint64_t j = 0; j < q; ++j) w[j] = f.eval(felem(j));
    w[q] = f.coeff(code.k - 1);
    return w;
}

std::vector<felem> syndrome(const PRSCode& code, const Word& u) {
    if (!code.H) throw std::invalid_argument("PRS(q+1) has no parity check matrix");
    if (u.size() != code.length()) throw std::invalid_argument("word length mismatch");
    return matvec(*code.H, u);
}

bool is_codeword(const PRSCode& code, const Word& u) {
    if (!code.H) return true;  // k = q+1 is the full space
    std::vector<felem> s = syndrome(code, u);
    return std::all_of(s.begin(), s.end(), [](felem x) { return x == 0; });
}

Poly GenPoly::to_poly(const Field& F) const {
    std::uint64_t q = F.order();
    std::vector<felem> c(std::size_t(q), 0);  // degrees 0..q-1
    for (std::size_t i = 0; i < a.size(); ++i) c[std::size_t(q - 1 - i)] = a[i];
    return Poly(F, std::move(c));
}

GenPoly GenPoly::from_poly(const PRSCode& code, const Poly& g) {
    const Field& F = *code.field;
    std::uint64_t q = F.order();
    if (g.is_zero() || !g.is_monic() || g.degree() > int(q) - 1 ||
        g.degree() < int(code.k) - 1)
        throw std::invalid_argument("not a valid generating polynomial");
    for (unsigned i = 0; i + 1 < code.k; ++i)
        if (g.coeff(i) != 0)
            throw std::invalid_argument("generating polynomial has a low-degree coefficient");
    GenPoly out;
    out.k = code.k;
    out.a.resize(std::size_t(q - code.k + 1));
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = g.coeff(unsigned(q - 1 - i));
    return out;
}

ProjPoint genpoly_to_syndrome(const PRSCode& code, const GenPoly& g) {
    if (g.k != code.k || g.a.size() != code.redundancy())
        throw std::invalid_argument("generating polynomial does not match code");
    return ProjPoint(*code.field, g.a);
}

GenPoly syndrome_to_genpoly(const PRSCode& code, const ProjPoint& s) {
    if (s.c.size() != code.redundancy()) throw std::invalid_argument("syndrome length mismatch");
    GenPoly g;
    g.k = code.k;
    g.a = s.c;  // leading-one normalization aligns with monicity
    return g;
}

Word genpoly_word(const PRSCode& code, const GenPoly& g) {
    const Field& F = *code.field;
    std::uint64_t q = F.order();
    Poly p = g.to_poly(F);
    Word w(std::size_t(q + 1), 0);
    for (std::uint64_t j = 0; j < q; ++j) w[j] = p.eval(felem(j));
    return w;
}

unsigned error_distance(const PRSCode& code, const Word& u) {
    std::vector<felem> s = syndrome(code, u);
    auto j = min_support_combination(s, *code.H, code.redundancy());
    if (!j) throw std::logic_error("syndrome outside the column span of a full-rank parity check");
    return unsigned(*j);
}

namespace {

// Sweeps all q^k codewords in message odometer order, reporting each
// codeword to the visitor.
template <class Fn>
void sweep_codewords(const PRSCode& code, std::uint64_t sweep_bound, Fn&& visit) {
    const Field& F = *code.field;
    std::uint64_t q = F.order();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < code.k; ++i) {
        total *= q;
        if (total > sweep_bound) throw BoundExceeded("codeword sweep exceeds bound");
    }
    std::vector<felem> msg(code.k, 0);
    Word cw(code.length(), 0);
    visit(cw);
    for (std::uint64_t n = 1; n < total; ++n) {
        // odometer increment; codeword updated by the changed generator rows
        for (unsigned d = 0; d < code.k; ++d) {
            felem old = msg[d];
            felem nw = (old + 1 == q) ? 0 : old + 1;
            msg[d] = nw;
            felem delta = F.sub(nw, old);
            for (std::size_t j = 0; j < cw.size(); ++j)
                cw[j] = F.add(cw[j], F.mul(delta, code.G.at(d, j)));
            if (nw != 0) break;
        }
        visit(cw);
    }
}

}  // namespace

std::vector<unsigned> brute_force_error_distances(const PRSCode& code,
                                                  const std::vector<Word>& words,
                                                  std::uint64_t sweep_bound) {
    for (const Word& w : words)
        if (w.size() != code.length()) throw std::invalid_argument("word length mismatch");
    std::vector<unsigned> best(words.size(), code.length() + 1);
    sweep_codewords(code, sweep_bound, [&](const Word& cw) {
        for (std::size_t i = 0; i < words.size(); ++i) {
            unsigned d = 0;
            for (std::size_t j = 0; j < cw.size(); ++j) d += (words[i][j] != cw[j]);
            best[i] = std::min(best[i], d);
        }
    });
    return best;
}

unsigned brute_force_error_distance(const PRSCode& code, const Word& u,
                                    std::uint64_t sweep_bound) {
    return brute_force_error_distances(code, {u}, sweep_bound)[0];
}

unsigned brute_force_minimum_distance(const PRSCode& code, std::uint64_t sweep_bound) {
    unsigned best = code.length() + 1;
    sweep_codewords(code, sweep_bound, [&](const Word& cw) {
        unsigned w = 0;
        for (felem x : cw) w += (x != 0);
        if (w != 0) best = std::min(best, w);
    });
    return best;
}

unsigned conjectured_covering_radius(const Field& F, unsigned k) {
    std::uint64_t q = F.order();
    if (k == 1) return unsigned(q);
    if (k == q + 1) return 0;
    if (k == q || k == q - 1) return 1;
    bool exceptional = (q % 2 == 0) && (k == 2 || k == q - 2);
    return unsigned(q - k) + (exceptional ? 1 : 0);
}

CoveringRadiusResult covering_radius(const PRSCode& code, std::uint64_t max_points,
                                     unsigned threads) {
    const Field& F = *code.field;
    std::uint64_t q = F.order();
    unsigned k = code.k;
    if (k == q + 1) return {0, true};
    if (k == q || k == q - 1) return {1, true};
    if (k == 1) return {unsigned(q), true};

    // Scalar invariance makes projective syndromes sufficient.
    std::vector<ProjPoint> pts =
        enumerate_projective_points(F, unsigned(q - k), max_points);
    const Matrix& H = *code.H;
    std::size_t jmax = code.redundancy();
    std::vector<unsigned> partial = run_partitioned<unsigned>(
        pts.size(), threads, [&](std::size_t lo, std::size_t hi) {
            unsigned worst = 0;
            for (std::size_t i = lo; i < hi; ++i) {
                auto j = min_support_combination(pts[i].c, H, jmax);
                worst = std::max(worst, unsigned(j.value()));
            }
            return worst;
        });
    unsigned rho = 0;
    for (unsigned w : partial) rho = std::max(rho, w);
    return {rho, false};
}

bool arc_extension_exists(const Field& F, unsigned m,
                          std::vector<std::vector<felem>>* witnesses,
                          std::uint64_t sweep_bound) {
    if (m < 2) throw std::invalid_argument("arc extension needs m >= 2");
    std::uint64_t q = F.order();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < m; ++i) {
        total *= q;
        if (total > sweep_bound) throw BoundExceeded("arc extension sweep exceeds bound");
    }
    Matrix G = evaluation_matrix(F, m);
    bool found = false;
    std::vector<felem> v(m);
    for (std::uint64_t n = 1; n < total; ++n) {
        std::uint64_t e = n;
        for (unsigned i = 0; i < m; ++i) { v[i] = felem(e % q); e /= q; }
        // [G_m | v] is MDS iff v avoids the span of every m-1 columns.
        if (!min_support_combination(v, G, m - 1)) {
            found = true;
            if (!witnesses) return true;
            witnesses->push_back(v);
        }
    }
    return found;
}

namespace {

void require_mds(const Matrix& A) {
    if (!all_minors_nonzero(A, A.rows)) throw std::invalid_argument("matrix is not MDS");
}

}  // namespace

bool mds_supercode_exists(const Matrix& A, std::uint64_t sweep_bound) {
    require_mds(A);
    const Field& F = *A.field;
    std::uint64_t q = F.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < A.cols; ++i) {
        total *= q;
        if (total > sweep_bound) throw BoundExceeded("supercode sweep exceeds bound");
    }
    Matrix S(F, A.rows + 1, A.cols);
    for (std::size_t r = 0; r < A.rows; ++r)
        for (std::size_t c = 0; c < A.cols; ++c) S.at(r, c) = A.at(r, c);
    for (std::uint64_t n = 1; n < total; ++n) {
        std::uint64_t e = n;
        for (std::size_t c = 0; c < A.cols; ++c) { S.at(A.rows, c) = felem(e % q); e /= q; }
        if (all_minors_nonzero(S, A.rows + 1)) return true;
    }
    return false;
}

bool mds_dual_extension_exists(const Matrix& A, std::uint64_t sweep_bound) {
    require_mds(A);
    const Field& F = *A.field;
    Matrix D = nullspace(A);
    std::uint64_t q = F.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < D.rows; ++i) {
        total *= q;
        if (total > sweep_bound) throw BoundExceeded("dual extension sweep exceeds bound");
    }
    std::vector<felem> v(D.rows);
    for (std::uint64_t n = 1; n < total; ++n) {
        std::uint64_t e = n;
        for (std::size_t i = 0; i < D.rows; ++i) { v[i] = felem(e % q); e /= q; }
        if (!min_support_combination(v, D, D.rows - 1)) return true;
    }
    return false;
}

}  // namespace prs

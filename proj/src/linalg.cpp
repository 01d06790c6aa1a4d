#include "prs/linalg.hpp"

#include <algorithm>

namespace prs {

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix I(f, n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

std::vector<felem> Matrix::column(std::size_t c) const {
    std::vector<felem> v(rows);
    for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix T(*field, cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) T.at(c, r) = at(r, c);
    return T;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matmul dimension mismatch");
    const Field& F = *A.field;
    Matrix C(F, A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            felem aik = A.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

std::vector<felem> matvec(const Matrix& A, const std::vector<felem>& v) {
    if (A.cols != v.size()) throw std::invalid_argument("matvec dimension mismatch");
    const Field& F = *A.field;
    std::vector<felem> r(A.rows, 0);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            r[i] = F.add(r[i], F.mul(A.at(i, j), v[j]));
    return r;
}

namespace {

// In-place row echelon; returns rank. When detp != nullptr accumulates the
// determinant contribution (square matrices only).
std::size_t echelon(Matrix& M, felem* detp = nullptr) {
    const Field& F = *M.field;
    felem d = 1;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < M.cols && pr < M.rows; ++c) {
        std::size_t piv = pr;
        while (piv < M.rows && M.at(piv, c) == 0) ++piv;
        if (piv == M.rows) continue;
        if (piv != pr) {
            for (std::size_t j = c; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(pr, j));
            d = F.neg(d);
        }
        felem inv = F.inv(M.at(pr, c));
        d = F.mul(d, M.at(pr, c));
        for (std::size_t j = c; j < M.cols; ++j) M.at(pr, j) = F.mul(M.at(pr, j), inv);
        for (std::size_t r = 0; r < M.rows; ++r) {
            if (r == pr) continue;
            felem f = M.at(r, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < M.cols; ++j)
                M.at(r, j) = F.sub(M.at(r, j), F.mul(f, M.at(pr, j)));
        }
        ++pr;
    }
    if (detp) *detp = (pr == M.rows && M.rows == M.cols) ? d : 0;
    return pr;
}

}  // namespace

std::size_t rank(Matrix M) { return echelon(M); }

felem det(Matrix M) {
    if (M.rows != M.cols) throw std::invalid_argument("determinant of non-square matrix");
    felem d;
    echelon(M, &d);
    return d;
}

Matrix nullspace(const Matrix& M) {
    const Field& F = *M.field;
    Matrix R = M;
    echelon(R);
    // identify pivot columns of the reduced form
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(R.cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < R.cols && r < R.rows; ++c) {
        if (R.at(r, c) == 1) {
            bool ok = true;
            for (std::size_t rr = 0; rr < R.rows; ++rr)
                if (rr != r && R.at(rr, c) != 0) { ok = false; break; }
            if (ok) { pivot_col.push_back(c); is_pivot[c] = true; ++r; }
        }
    }
    std::size_t rk = pivot_col.size();
    if (rk == R.cols) throw std::invalid_argument("matrix has trivial null space");
    Matrix N(F, R.cols - rk, R.cols);
    std::size_t row = 0;
    for (std::size_t c = 0; c < R.cols; ++c) {
        if (is_pivot[c]) continue;
        N.at(row, c) = 1;
        for (std::size_t i = 0; i < rk; ++i)
            N.at(row, pivot_col[i]) = F.neg(R.at(i, c));
        ++row;
    }
    return N;
}

namespace {

// v in span of the selected columns of M?
bool in_span(const std::vector<felem>& v, const Matrix& M,
             const std::vector<std::size_t>& cols) {
    const Field& F = *M.field;
    Matrix aug(F, M.rows, cols.size() + 1);
    for (std::size_t r = 0; r < M.rows; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) aug.at(r, j) = M.at(r, cols[j]);
        aug.at(r, cols.size()) = v[r];
    }
    echelon(aug);
    // v is in the span iff no pivot lands in the last column
    for (std::size_t r = 0; r < aug.rows; ++r) {
        bool zero_left = true;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (aug.at(r, j) != 0) { zero_left = false; break; }
        if (zero_left && aug.at(r, cols.size()) != 0) return false;
    }
    return true;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::size_t> min_support_combination(const std::vector<felem>& v,
                                                   const Matrix& M, std::size_t jmax) {
    if (v.size() != M.rows) throw std::invalid_argument("vector length must match row count");
    if (jmax > M.cols) throw std::invalid_argument("jmax exceeds column count");
    if (std::all_of(v.begin(), v.end(), [](felem x) { return x == 0; })) return 0;
    for (std::size_t j = 1; j <= jmax; ++j) {
        std::vector<std::size_t> idx(j);
        for (std::size_t i = 0; i < j; ++i) idx[i] = i;
        do {
            if (in_span(v, M, idx)) return j;
        } while (next_combination(idx, M.cols));
    }
    return std::nullopt;
}

bool all_minors_nonzero(const Matrix& M, std::size_t s) {
    if (s > std::min(M.rows, M.cols)) throw std::invalid_argument("minor size too large");
    if (s == 0) return true;
    std::vector<std::size_t> rsel(s), csel(s);
    for (std::size_t i = 0; i < s; ++i) rsel[i] = i;
    do {
        for (std::size_t i = 0; i < s; ++i) csel[i] = i;
        do {
            Matrix sub(*M.field, s, s);
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < s; ++j) sub.at(i, j) = M.at(rsel[i], csel[j]);
            if (det(std::move(sub)) == 0) return false;
        } while (next_combination(csel, M.cols));
    } while (next_combination(rsel, M.rows));
    return true;
}

ProjPoint::ProjPoint(const Field& f, std::vector<felem> coords)
    : field(&f), c(std::move(coords)) {
    std::size_t nz = 0;
    while (nz < c.size() && c[nz] == 0) ++nz;
    if (nz == c.size()) throw std::invalid_argument("projective point cannot be zero");
    felem inv = f.inv(c[nz]);
    for (std::size_t i = nz; i < c.size(); ++i) c[i] = f.mul(c[i], inv);
}

std::uint64_t projective_point_count(const Field& F, unsigned n) {
    std::uint64_t count = 0, pw = 1;
    for (unsigned i = 0; i <= n; ++i) { count += pw; pw *= F.order(); }
    return count;  // (q^{n+1} - 1)/(q - 1)
}

void for_each_projective_point(const Field& F, unsigned n,
                               const std::function<void(const ProjPoint&)>& fn,
                               std::uint64_t max_points) {
    if (projective_point_count(F, n) > max_points)
        throw BoundExceeded("projective space exceeds point bound");
    std::uint64_t q = F.order();
    // Lexicographic order: leading zeros first, so the unit position walks
    // from the last coordinate to the first.
    for (unsigned f = n + 1; f-- > 0;) {
        unsigned free_len = n - f;
        std::vector<felem> coords(n + 1, 0);
        coords[f] = 1;
        std::uint64_t total = 1;
        for (unsigned i = 0; i < free_len; ++i) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t e = idx;
            for (unsigned i = free_len; i-- > 0;) {  // leftmost digit most significant
                coords[f + 1 + i] = felem(e % q);
                e /= q;
            }
            ProjPoint p;
            p.field = &F;
            p.c = coords;  // already normalized: first nonzero is 1
            fn(p);
        }
    }
}

std::vector<ProjPoint> enumerate_projective_points(const Field& F, unsigned n,
                                                   std::uint64_t max_points) {
    std::vector<ProjPoint> out;
    out.reserve(std::size_t(projective_point_count(F, n)));
    for_each_projective_point(F, n, [&](const ProjPoint& p) { out.push_back(p); }, max_points);
    return out;
}

std::vector<std::size_t> partition_bounds(std::size_t total, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::size_t chunks = std::min<std::size_t>(threads, std::max<std::size_t>(total, 1));
    std::vector<std::size_t> b(chunks + 1, 0);
    for (std::size_t i = 0; i <= chunks; ++i) b[i] = total * i / chunks;
    return b;
}

}  // namespace prs

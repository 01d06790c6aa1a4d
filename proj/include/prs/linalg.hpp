#ifndef PRS_LINALG_HPP
#define PRS_LINALG_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "prs/gf.hpp"

namespace prs {

/// Dense row-major matrix over a finite field.
struct Matrix {
    const Field* field = nullptr;
    std::size_t rows = 0, cols = 0;
    std::vector<felem> a;

    Matrix() = default;
    Matrix(const Field& f, std::size_t r, std::size_t c)
        : field(&f), rows(r), cols(c), a(r * c, 0) {
        if (r == 0 || c == 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    felem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    felem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static Matrix identity(const Field& f, std::size_t n);
    std::vector<felem> column(std::size_t c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Matrix matmul(const Matrix& A, const Matrix& B);
std::vector<felem> matvec(const Matrix& A, const std::vector<felem>& v);

std::size_t rank(Matrix M);
felem det(Matrix M);
/// Row basis of the null space {x : M x^T = 0}, i.e. a generator matrix of
/// the dual of the code generated by M.
Matrix nullspace(const Matrix& M);

/// Least j <= jmax such that v lies in the span of some j columns of M,
/// searching subset sizes in increasing order and subsets lexicographically;
/// nullopt if no j <= jmax works. j = 0 iff v = 0.
std::optional<std::size_t> min_support_combination(const std::vector<felem>& v,
                                                   const Matrix& M, std::size_t jmax);

/// True iff every s x s minor of M is nonzero.
bool all_minors_nonzero(const Matrix& M, std::size_t s);

/// Normalized point of projective space: first nonzero coordinate is 1.
struct ProjPoint {
    const Field* field = nullptr;
    std::vector<felem> c;

    ProjPoint() = default;
    ProjPoint(const Field& f, std::vector<felem> coords);  // normalizes

    std::size_t dim() const { return c.size() - 1; }  // point of P^dim
    bool operator==(const ProjPoint& o) const { return c == o.c; }
    bool operator<(const ProjPoint& o) const { return c < o.c; }
};

constexpr std::uint64_t kDefaultPointBound = 10'000'000;

std::uint64_t projective_point_count(const Field& F, unsigned n);

/// All points of P^n(F), normalized, in lexicographic coordinate order.
std::vector<ProjPoint> enumerate_projective_points(
    const Field& F, unsigned n, std::uint64_t max_points = kDefaultPointBound);

/// Visit points of P^n(F) in lexicographic order without materializing them.
void for_each_projective_point(const Field& F, unsigned n,
                               const std::function<void(const ProjPoint&)>& fn,
                               std::uint64_t max_points = kDefaultPointBound);

/// Chunk boundaries splitting [0, total) into at most `threads` ranges.
std::vector<std::size_t> partition_bounds(std::size_t total, unsigned threads);

/// Deterministic partitioned reduction: runs worker(begin, end) on each
/// chunk, possibly concurrently, and returns the per-chunk results in
/// chunk order so the merged outcome is independent of scheduling.
template <class R, class Worker>
std::vector<R> run_partitioned(std::size_t total, unsigned threads, Worker worker) {
    std::vector<std::size_t> b = partition_bounds(total, threads);
    std::vector<R> results(b.size() - 1);
    if (b.size() <= 2) {
        if (b.size() == 2) results[0] = worker(b[0], b[1]);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(b.size() - 1);
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        pool.emplace_back([&, i] { results[i] = worker(b[i], b[i + 1]); });
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace prs

#endif

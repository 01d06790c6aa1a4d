#ifndef PRS_PRSCODE_HPP
#define PRS_PRSCODE_HPP

#include <optional>
#include <vector>

#include "prs/linalg.hpp"

namespace prs {

/// Received word of length q+1, coordinates indexed by alpha_1..alpha_q, inf.
using Word = std::vector<felem>;

constexpr std::uint64_t kDefaultSweepBound = 1'000'000;

/// (1, t, ..., t^{m-1})^T for finite t; (0, ..., 0, 1)^T for t = infinity.
std::vector<felem> c_vector(const Field& F, unsigned m, ExtendedValue t);

/// Derivative column (0, 1, 2t, ..., (m-1) t^{m-2})^T; finite t only.
std::vector<felem> c_prime_vector(const Field& F, unsigned m, ExtendedValue t);

/// The projective Reed-Solomon code of length q+1 and dimension k, with
/// evaluation set alpha_1, ..., alpha_q (ascending encodings), infinity last.
struct PRSCode {
    const Field* field = nullptr;
    unsigned k = 0;
    Matrix G;                   // k x (q+1)
    std::optional<Matrix> H;    // (q+1-k) x (q+1), absent when k = q+1

    unsigned length() const { return unsigned(field->order()) + 1; }
    unsigned redundancy() const { return length() - k; }
};

/// Builds G_k and (for k <= q) the parity check G_{q+1-k}; validates the
/// duality and MDS invariants.
PRSCode make_code(const Field& F, unsigned k);

/// Evaluation encoding; f(infinity) is the coefficient of X^{k-1}.
Word encode(const PRSCode& code, const Poly& f);

/// G_{q+1-k} u^T; zero iff u is a codeword.
std::vector<felem> syndrome(const PRSCode& code, const Word& u);

bool is_codeword(const PRSCode& code, const Word& u);

/// Canonical representative of a deep hole class: a monic polynomial of
/// degree <= q-1 whose coefficients of 1, X, ..., X^{k-2} vanish. Stored as
/// the coefficients a_1..a_{q-k+1} of X^{q-1}, ..., X^{k-1}.
struct GenPoly {
    unsigned k = 0;
    std::vector<felem> a;  // length q-k+1, first nonzero entry equals 1

    Poly to_poly(const Field& F) const;
    static GenPoly from_poly(const PRSCode& code, const Poly& g);
};

ProjPoint genpoly_to_syndrome(const PRSCode& code, const GenPoly& g);
GenPoly syndrome_to_genpoly(const PRSCode& code, const ProjPoint& s);

/// The word (g(alpha_1), ..., g(alpha_q), 0) generated by g.
Word genpoly_word(const PRSCode& code, const GenPoly& g);

/// Error distance via the parity-check column-subset method.
unsigned error_distance(const PRSCode& code, const Word& u);

/// Exact minimum distance to any codeword by sweeping all q^k codewords.
/// Oracle for error_distance.
unsigned brute_force_error_distance(const PRSCode& code, const Word& u,
                                    std::uint64_t sweep_bound = kDefaultSweepBound);

/// Same sweep amortized over many words.
std::vector<unsigned> brute_force_error_distances(const PRSCode& code,
                                                  const std::vector<Word>& words,
                                                  std::uint64_t sweep_bound = kDefaultSweepBound);

/// Minimum distance of the code by full sweep over nonzero codewords.
unsigned brute_force_minimum_distance(const PRSCode& code,
                                      std::uint64_t sweep_bound = kDefaultSweepBound);

struct CoveringRadiusResult {
    unsigned rho = 0;
    bool by_special_case = false;
};

/// Max over projective syndromes of the least column-support; the cases
/// k in {1, q-1, q, q+1} are returned directly.
CoveringRadiusResult covering_radius(const PRSCode& code,
                                     std::uint64_t max_points = kDefaultPointBound,
                                     unsigned threads = 1);

/// The value Conjecture-style case analysis predicts for rho(PRS(k)).
unsigned conjectured_covering_radius(const Field& F, unsigned k);

/// True iff some v makes [G_m | v] generate an MDS code, i.e. the degree
/// (m-1) normal rational curve arc is not complete. Optionally collects all
/// witnesses v (full vectors, exhaustive sweep).
bool arc_extension_exists(const Field& F, unsigned m,
                          std::vector<std::vector<felem>>* witnesses = nullptr,
                          std::uint64_t sweep_bound = kDefaultSweepBound);

/// Lemma-style supercode test, assertion (2): some row u extends the MDS
/// generator A to an MDS code of dimension k+1.
bool mds_supercode_exists(const Matrix& A, std::uint64_t sweep_bound = kDefaultSweepBound);

/// Companion check, assertion (4): the dual extends by one coordinate to an
/// MDS code.
bool mds_dual_extension_exists(const Matrix& A, std::uint64_t sweep_bound = kDefaultSweepBound);

}  // namespace prs

#endif

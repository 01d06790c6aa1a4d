#ifndef PRS_DEEPHOLES_HPP
#define PRS_DEEPHOLES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prs/pgl2.hpp"

namespace prs {

enum class Family { A, B, C, Unclassified };

std::string family_name(Family f);

/// One equivalence class of deep holes, keyed by its projective syndrome.
struct DeepHoleClass {
    unsigned k = 0;
    ProjPoint syndrome;
    GenPoly genpoly;
    Family family = Family::Unclassified;

    // family parameters
    std::optional<felem> a_param;              // A and B: the value a
    std::optional<unsigned> index_param;       // B: the index i, 1-based
    std::optional<ExtendedValue> frac_shift;   // C: a in F_q u {inf}
    std::optional<Poly> quadratic;             // C: the monic irreducible p(X)

    Word word;                 // representative received word
    std::string orbit_label;   // set by orbit decomposition when requested
};

/// Word (alpha_1^k, ..., alpha_q^k, a) with syndrome (0:...:0:1:-a) and
/// generating polynomial X^k - a X^{k-1}. rho must equal q-k.
DeepHoleClass family_A(const PRSCode& code, felem a, unsigned rho,
                       bool validate = true);

/// Word with 1/(alpha_l - alpha_i) away from position i, a at i, 0 at inf;
/// closed-form syndrome a c_{q+1-k}(alpha_i) - c'_{q+1-k}(alpha_i), checked
/// against the parity-check syndrome.
DeepHoleClass family_B(const PRSCode& code, unsigned i, felem a, unsigned rho,
                       bool validate = true);

/// Word with coordinates (alpha + a)/p(alpha) (or 1/p(alpha) for a = inf);
/// closed-form syndrome mu_a c(mu) + mu_a^q c(mu^q) over the quadratic
/// extension, checked against the parity-check syndrome.
DeepHoleClass family_C(const PRSCode& code, ExtendedValue a, const Poly& quadratic,
                       const QuadExt& ext, unsigned rho, bool validate = true);

/// All deep hole classes by exhaustive search over projective syndromes:
/// s is deep iff it avoids every span of rho-1 parity-check columns.
/// Family tags are attached when the closed-form families apply.
std::vector<DeepHoleClass> enumerate_deep_holes(const PRSCode& code, unsigned rho,
                                                std::uint64_t max_points = kDefaultPointBound,
                                                unsigned threads = 1);

/// Closed-form syndromes of the three families, without deep-hole
/// validation; usable for geometry cross-checks.
std::vector<ProjPoint> family_A_syndromes(const PRSCode& code);
std::vector<ProjPoint> family_B_syndromes(const PRSCode& code);
std::vector<ProjPoint> family_C_syndromes(const PRSCode& code, const QuadExt& ext);

struct OrbitSummary {
    std::vector<std::size_t> ab_orbit_sizes;   // PGL2 orbit sizes within A u B
    bool c_set_stable = false;                 // C syndromes closed under PGL2
};

struct ClassificationReport {
    std::uint64_t q = 0;
    unsigned k = 0;
    unsigned rho = 0;
    std::size_t count_A = 0, count_B = 0, count_C = 0;
    std::size_t enumerated = 0;
    std::uint64_t expected_total = 0;   // (q^3 + 2q^2 + q)/2
    bool families_disjoint = false;
    bool families_match_enumeration = false;
    bool count_matches_formula = false;
    std::vector<std::string> failures;  // itemized; report emitted regardless
    std::vector<DeepHoleClass> classes; // canonical syndrome order
    std::optional<OrbitSummary> orbits;

    bool ok() const { return failures.empty(); }
};

/// Complete classification at k = q-3: builds families A, B, C, checks
/// disjointness, the counting formula, and equality with the exhaustive
/// enumeration. Orbit structure is computed when include_orbits is set.
ClassificationReport classify_q_minus_3(const Field& F,
                                        std::uint64_t max_points = kDefaultPointBound,
                                        unsigned threads = 1,
                                        bool include_orbits = false);

struct GeometryReport {
    unsigned k = 0;
    bool tangent_lines_pairwise_disjoint = false;
    bool tangent_points_match_AB = false;
    bool secant_points_match_C = false;
    std::size_t tangent_off_curve_points = 0;   // expect (q+1) q
    std::size_t secant_rational_points = 0;     // expect (q+1) q (q-1)/2
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Tangent lines to the degree (q-k) normal rational curve carry the A u B
/// syndromes off the curve; conjugate secant lines over F_{q^2} carry the C
/// syndromes as their rational points.
GeometryReport tangent_secant_geometry(const Field& F, unsigned k);

}  // namespace prs

#endif

#ifndef PRS_GF_HPP
#define PRS_GF_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace prs {

/// Element of a finite field, stored as an integer encoding in [0, q).
/// The base-p digits of the encoding (little-endian) are the coordinates
/// in the polynomial basis 1, x, ..., x^{m-1}.
using felem = std::uint32_t;

/// Thrown when an enumeration or construction exceeds its configured bound.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a consistency assertion fails (classification mismatch etc).
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The finite field F_{p^m} with a canonical modulus: the first monic
/// irreducible polynomial of degree m over F_p in ascending order of its
/// integer encoding c_0 + c_1 p + ... . For m = 1 the modulus is x.
class Field {
public:
    static constexpr std::uint64_t kDefaultOrderBound = 1u << 16;

    Field(std::uint64_t p, unsigned m,
          std::uint64_t order_bound = kDefaultOrderBound);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint64_t order() const { return q_; }
    /// Modulus coefficients over F_p, low degree first, length m+1, monic.
    const std::vector<felem>& modulus() const { return modulus_; }

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem neg(felem a) const;
    felem mul(felem a, felem b) const;
    felem inv(felem a) const;
    felem div(felem a, felem b) const;
    /// x^e for any integer e; x^0 = 1 (also for x = 0), negative e inverts.
    felem pow(felem a, long long e) const;

    felem zero() const { return 0; }
    felem one() const { return 1; }

    /// Base-p digits of an encoding, little-endian, length m.
    std::vector<felem> digits(felem e) const;
    felem from_digits(const std::vector<felem>& d) const;

    /// Elements in ascending encoding order 0, 1, ..., q-1. This sequence
    /// defines the evaluation points alpha_1, ..., alpha_q everywhere.
    std::vector<felem> elements() const;

    bool operator==(const Field& o) const { return p_ == o.p_ && m_ == o.m_; }

private:
    std::uint64_t p_;
    unsigned m_;
    std::uint64_t q_;
    std::vector<felem> modulus_;

    // lookup tables, built when q is small
    bool tabulated_ = false;
    std::vector<felem> add_tab_, mul_tab_, inv_tab_, neg_tab_;

    felem mul_slow(felem a, felem b) const;
    felem add_slow(felem a, felem b) const;
    felem inv_slow(felem a) const;
};

/// Convenience factory matching the (p, m) -> Field contract.
std::shared_ptr<const Field> make_field(std::uint64_t p, unsigned m,
                                        std::uint64_t order_bound = Field::kDefaultOrderBound);

/// An element bundled with its field; mixed-field arithmetic throws.
class FieldElement {
public:
    FieldElement(const Field& f, felem v) : f_(&f), v_(v) {
        if (v >= f.order()) throw std::invalid_argument("encoding out of range");
    }
    const Field& field() const { return *f_; }
    felem value() const { return v_; }

    FieldElement operator+(const FieldElement& o) const { return with(field_of(o).add(v_, o.v_)); }
    FieldElement operator-(const FieldElement& o) const { return with(field_of(o).sub(v_, o.v_)); }
    FieldElement operator*(const FieldElement& o) const { return with(field_of(o).mul(v_, o.v_)); }
    FieldElement operator/(const FieldElement& o) const { return with(field_of(o).div(v_, o.v_)); }
    FieldElement operator-() const { return with(f_->neg(v_)); }
    FieldElement inv() const { return with(f_->inv(v_)); }
    FieldElement pow(long long e) const { return with(f_->pow(v_, e)); }
    bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }

private:
    const Field* f_;
    felem v_;
    FieldElement with(felem v) const { return FieldElement(*f_, v); }
    const Field& field_of(const FieldElement& o) const {
        if (!(*f_ == *o.f_)) throw std::invalid_argument("mixed-field operands");
        return *f_;
    }
};

/// A field element or the distinguished point at infinity.
struct ExtendedValue {
    bool is_infinity = false;
    felem value = 0;

    static ExtendedValue infinity() { return {true, 0}; }
    static ExtendedValue of(felem v) { return {false, v}; }
    bool operator==(const ExtendedValue& o) const {
        return is_infinity == o.is_infinity && (is_infinity || value == o.value);
    }
};

/// Univariate polynomial over a field, coefficients low degree first.
/// The zero polynomial reports the sentinel degree kNegInfinity.
class Poly {
public:
    static constexpr int kNegInfinity = std::numeric_limits<int>::min();

    Poly(const Field& f, std::vector<felem> coeffs = {});
    static Poly x(const Field& f);  // the monomial X
    static Poly monomial(const Field& f, unsigned deg, felem c = 1);

    const Field& field() const { return *f_; }
    int degree() const { return c_.empty() ? kNegInfinity : int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    felem coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<felem>& coeffs() const { return c_; }
    felem leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    felem eval(felem x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scale(felem c) const;
    /// Remainder modulo a nonzero divisor.
    Poly mod(const Poly& divisor) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

private:
    const Field* f_;
    std::vector<felem> c_;  // trimmed: leading coefficient nonzero
    void trim();
};

/// (base^e) mod m, exponent as unsigned 64-bit.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);
Poly poly_gcd(Poly a, Poly b);

/// True iff f has no nontrivial factorization over its coefficient field.
/// Degree <= 3 uses the root test, higher degrees the Frobenius criterion.
bool is_irreducible(const Poly& f);

/// All monic irreducible quadratics over F, ascending (c_1, c_0) encoding
/// order; there are exactly (q^2 - q)/2 of them.
std::vector<Poly> monic_irreducible_quadratics(const Field& F);

/// The quadratic extension E = F[Y]/(r(Y)) of order q^2, where r is the
/// first monic irreducible quadratic over F. Elements are encoded as
/// lo + hi*q for lo + hi*Y.
class QuadExt {
public:
    using xelem = std::uint64_t;

    explicit QuadExt(const Field& base,
                     std::uint64_t order_bound = Field::kDefaultOrderBound);

    const Field& base() const { return *base_; }
    const Poly& modulus() const { return r_; }
    std::uint64_t order() const { return q_ * q_; }

    xelem embed(felem a) const { return a; }
    bool in_base(xelem x) const { return hi(x) == 0; }
    felem to_base(xelem x) const;

    xelem add(xelem a, xelem b) const;
    xelem sub(xelem a, xelem b) const;
    xelem neg(xelem a) const;
    xelem mul(xelem a, xelem b) const;
    xelem inv(xelem a) const;
    xelem div(xelem a, xelem b) const;
    xelem pow(xelem a, long long e) const;

    /// Frobenius x -> x^q, the nontrivial automorphism over F.
    xelem frobenius(xelem x) const;

    /// The designated root of a monic irreducible quadratic over F: the
    /// root with the smaller encoding in E. Its conjugate is frobenius().
    xelem designated_root(const Poly& quadratic) const;

    felem lo(xelem x) const { return felem(x % q_); }
    felem hi(xelem x) const { return felem(x / q_); }
    xelem make(felem lo, felem hi) const { return xelem(hi) * q_ + lo; }

private:
    const Field* base_;
    std::uint64_t q_;
    Poly r_;
    felem r0_, r1_;
};

bool is_prime(std::uint64_t n);

}  // namespace prs

#endif

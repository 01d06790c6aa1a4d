#include "prs/gf.hpp"

#include <algorithm>

namespace prs {

namespace {
constexpr std::uint64_t kTableLimit = 512;  // build full lookup tables below this order
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------- Field ----------

Field::Field(std::uint64_t p, unsigned m, std::uint64_t order_bound) : p_(p), m_(m) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
    if (m < 1) throw std::invalid_argument("extension degree must be positive");
    q_ = 1;
    for (unsigned i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > order_bound) throw BoundExceeded("field order exceeds bound");
    }

    if (m_ == 1) {
        modulus_ = {0, 1};  // x
    } else {
        // First monic irreducible of degree m over F_p in encoding order.
        Field prime(p, 1, order_bound);
        for (std::uint64_t enc = 0;; ++enc) {
            if (enc >= q_) throw std::logic_error("no irreducible modulus found");
            std::vector<felem> c(m_ + 1);
            std::uint64_t e = enc;
            for (unsigned i = 0; i < m_; ++i) { c[i] = felem(e % p); e /= p; }
            c[m_] = 1;
            if (is_irreducible(Poly(prime, c))) { modulus_ = c; break; }
        }
    }

    if (q_ <= kTableLimit) {
        add_tab_.resize(q_ * q_);
        mul_tab_.resize(q_ * q_);
        inv_tab_.assign(q_, 0);
        neg_tab_.resize(q_);
        for (felem a = 0; a < q_; ++a) {
            for (felem b = 0; b < q_; ++b) {
                add_tab_[a * q_ + b] = add_slow(a, b);
                mul_tab_[a * q_ + b] = mul_slow(a, b);
            }
        }
        for (felem a = 0; a < q_; ++a)
            for (felem b = 0; b < q_; ++b) {
                if (add_tab_[a * q_ + b] == 0) neg_tab_[a] = b;
                if (a != 0 && mul_tab_[a * q_ + b] == 1) inv_tab_[a] = b;
            }
        tabulated_ = true;
    }
}

std::vector<felem> Field::digits(felem e) const {
    std::vector<felem> d(m_);
    for (unsigned i = 0; i < m_; ++i) { d[i] = felem(e % p_); e = felem(e / p_); }
    return d;
}

felem Field::from_digits(const std::vector<felem>& d) const {
    std::uint64_t e = 0;
    for (unsigned i = m_; i-- > 0;) e = e * p_ + (i < d.size() ? d[i] % p_ : 0);
    return felem(e);
}

felem Field::add_slow(felem a, felem b) const {
    if (m_ == 1) return felem((std::uint64_t(a) + b) % p_);
    std::uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a = felem(a / p_); b = felem(b / p_);
        mult *= p_;
    }
    return felem(r);
}

felem Field::add(felem a, felem b) const {
    return tabulated_ ? add_tab_[std::uint64_t(a) * q_ + b] : add_slow(a, b);
}

felem Field::neg(felem a) const {
    if (tabulated_) return neg_tab_[a];
    if (m_ == 1) return a ? felem(p_ - a) : 0;
    std::uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        felem d = felem(a % p_);
        r += (d ? p_ - d : 0) * mult;
        a = felem(a / p_);
        mult *= p_;
    }
    return felem(r);
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Field::mul_slow(felem a, felem b) const {
    if (m_ == 1) return felem(std::uint64_t(a) * b % p_);
    std::vector<felem> da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
    // reduce modulo the monic modulus
    for (unsigned i = 2 * m_ - 2; i >= m_; --i) {
        std::uint64_t c = prod[i] % p_;
        if (c == 0) continue;
        for (unsigned j = 0; j < m_; ++j) {
            std::uint64_t t = c * modulus_[j] % p_;
            prod[i - m_ + j] += (p_ - t);  // subtract c * modulus shifted
        }
        prod[i] = 0;
    }
    std::uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) { r += (prod[i] % p_) * mult; mult *= p_; }
    return felem(r);
}

felem Field::mul(felem a, felem b) const {
    return tabulated_ ? mul_tab_[std::uint64_t(a) * q_ + b] : mul_slow(a, b);
}

felem Field::inv_slow(felem a) const {
    if (a == 0) throw std::invalid_argument("division by zero");
    // a^(q-2)
    felem r = 1, base = a;
    std::uint64_t e = q_ - 2;
    while (e) {
        if (e & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        e >>= 1;
    }
    return r;
}

felem Field::inv(felem a) const {
    if (a == 0) throw std::invalid_argument("division by zero");
    return tabulated_ ? inv_tab_[a] : inv_slow(a);
}

felem Field::div(felem a, felem b) const { return mul(a, inv(b)); }

felem Field::pow(felem a, long long e) const {
    if (e < 0) { a = inv(a); e = -e; }
    felem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::vector<felem> Field::elements() const {
    std::vector<felem> v(q_);
    for (std::uint64_t i = 0; i < q_; ++i) v[i] = felem(i);
    return v;
}

std::shared_ptr<const Field> make_field(std::uint64_t p, unsigned m, std::uint64_t order_bound) {
    return std::make_shared<const Field>(p, m, order_bound);
}

// ---------- Poly ----------

Poly::Poly(const Field& f, std::vector<felem> coeffs) : f_(&f), c_(std::move(coeffs)) {
    for (felem& c : c_)
        if (c >= f.order()) throw std::invalid_argument("coefficient out of range");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::x(const Field& f) { return Poly(f, {0, 1}); }

Poly Poly::monomial(const Field& f, unsigned deg, felem c) {
    std::vector<felem> v(deg + 1, 0);
    v[deg] = c;
    return Poly(f, std::move(v));
}

felem Poly::leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

felem Poly::eval(felem x) const {
    felem r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = f_->add(f_->mul(r, x), *it);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<felem> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(unsigned(i)), o.coeff(unsigned(i)));
    return Poly(*f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<felem> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(coeff(unsigned(i)), o.coeff(unsigned(i)));
    return Poly(*f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(*f_);
    std::vector<felem> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    return Poly(*f_, std::move(r));
}

Poly Poly::scale(felem c) const {
    std::vector<felem> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], c);
    return Poly(*f_, std::move(r));
}

Poly Poly::mod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<felem> r = c_;
    felem linv = f_->inv(divisor.leading());
    int dd = divisor.degree();
    while (int(r.size()) - 1 >= dd && !r.empty()) {
        if (r.back() == 0) { r.pop_back(); continue; }
        felem factor = f_->mul(r.back(), linv);
        size_t shift = r.size() - 1 - dd;
        for (int i = 0; i <= dd; ++i)
            r[shift + i] = f_->sub(r[shift + i], f_->mul(factor, divisor.coeff(i)));
        r.pop_back();
    }
    return Poly(*f_, std::move(r));
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly r(base.field(), {1});
    Poly b = base.mod(m);
    while (e) {
        if (e & 1) r = (r * b).mod(m);
        b = (b * b).mod(m);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.mod(b);
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a.scale(a.field().inv(a.leading()));
    return a;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    const Field& F = f.field();
    int d = f.degree();
    if (d == 0) return false;
    if (d == 1) return true;
    if (d <= 3) {
        for (felem a = 0; a < F.order(); ++a)
            if (f.eval(a) == 0) return false;
        return true;
    }
    // Frobenius criterion: x^(q^d) == x mod f, and for each prime r | d,
    // gcd(x^(q^(d/r)) - x, f) = 1.
    std::uint64_t q = F.order();
    Poly x = Poly::x(F);
    std::vector<Poly> frob;  // frob[i] = x^(q^(i+1)) mod f
    Poly cur = x;
    for (int i = 0; i < d; ++i) {
        cur = powmod(cur, q, f);
        frob.push_back(cur);
    }
    if (!(frob[d - 1] == x.mod(f))) return false;
    for (int r = 2; r <= d; ++r) {
        if (d % r != 0 || !is_prime(std::uint64_t(r))) continue;
        Poly g = poly_gcd(frob[d / r - 1] - x, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

std::vector<Poly> monic_irreducible_quadratics(const Field& F) {
    std::vector<Poly> out;
    for (felem c1 = 0; c1 < F.order(); ++c1)
        for (felem c0 = 0; c0 < F.order(); ++c0) {
            Poly f(F, {c0, c1, 1});
            if (is_irreducible(f)) out.push_back(f);
        }
    return out;
}

// ---------- QuadExt ----------

QuadExt::QuadExt(const Field& base, std::uint64_t order_bound)
    : base_(&base), q_(base.order()), r_(base, {0, 0, 1}) {
    if (q_ * q_ > order_bound) throw BoundExceeded("extension order exceeds bound");
    // modulus: first monic irreducible quadratic over the base field
    for (felem c1 = 0;; ++c1) {
        bool found = false;
        for (felem c0 = 0; c0 < q_ && !found; ++c0) {
            Poly f(base, {c0, c1, 1});
            if (is_irreducible(f)) { r_ = f; found = true; }
        }
        if (found) break;
        if (c1 + 1 >= q_) throw std::logic_error("no irreducible quadratic found");
    }
    r0_ = r_.coeff(0);
    r1_ = r_.coeff(1);
}

felem QuadExt::to_base(xelem x) const {
    if (!in_base(x)) throw std::invalid_argument("element not in base field");
    return lo(x);
}

QuadExt::xelem QuadExt::add(xelem a, xelem b) const {
    return make(base_->add(lo(a), lo(b)), base_->add(hi(a), hi(b)));
}

QuadExt::xelem QuadExt::sub(xelem a, xelem b) const {
    return make(base_->sub(lo(a), lo(b)), base_->sub(hi(a), hi(b)));
}

QuadExt::xelem QuadExt::neg(xelem a) const {
    return make(base_->neg(lo(a)), base_->neg(hi(a)));
}

QuadExt::xelem QuadExt::mul(xelem a, xelem b) const {
    // (a0 + a1 Y)(b0 + b1 Y) with Y^2 = -r1 Y - r0
    felem a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    felem t2 = base_->mul(a1, b1);
    felem c0 = base_->sub(base_->mul(a0, b0), base_->mul(t2, r0_));
    felem c1 = base_->sub(base_->add(base_->mul(a0, b1), base_->mul(a1, b0)),
                          base_->mul(t2, r1_));
    return make(c0, c1);
}

QuadExt::xelem QuadExt::inv(xelem a) const {
    if (a == 0) throw std::invalid_argument("division by zero");
    xelem conj = frobenius(a);
    felem norm = to_base(mul(a, conj));  // a * a^q lies in F
    return mul(conj, embed(base_->inv(norm)));
}

QuadExt::xelem QuadExt::div(xelem a, xelem b) const { return mul(a, inv(b)); }

QuadExt::xelem QuadExt::pow(xelem a, long long e) const {
    if (e < 0) { a = inv(a); e = -e; }
    xelem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

QuadExt::xelem QuadExt::frobenius(xelem x) const { return pow(x, (long long)q_); }

QuadExt::xelem QuadExt::designated_root(const Poly& quadratic) const {
    if (quadratic.degree() != 2 || !quadratic.is_monic() || !is_irreducible(quadratic))
        throw std::invalid_argument("expected a monic irreducible quadratic");
    felem c0 = quadratic.coeff(0), c1 = quadratic.coeff(1);
    for (xelem x = 0; x < order(); ++x) {
        xelem v = add(add(mul(x, x), mul(embed(c1), x)), embed(c0));
        if (v == 0) return x;  // smaller root found first by ascending scan
    }
    throw std::logic_error("irreducible quadratic has no root in its splitting field");
}

}  // namespace prs

#pragma once

// Exact Gaussian rationals and MPFR-backed complex floats.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "hv/errors.hpp"

namespace hv {

inline constexpr int kDefaultPrecision = 256;
inline constexpr int kMinPrecision = 64;

// Gaussian rational re + i*im.  gmpxx keeps each part canonical.
class ExactScalar {
public:
    ExactScalar() = default;
    template <std::integral I>
    ExactScalar(I v) : re_(static_cast<long>(v)) {}
    ExactScalar(const mpq_class& re) : re_(re) {}
    ExactScalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}
    ExactScalar(const mpz_class& re) : re_(re) {}

    static ExactScalar i() { return {mpq_class(0), mpq_class(1)}; }
    static ExactScalar ratio(long num, long den) {
        if (den == 0) throw DomainError("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return ExactScalar(q);
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    ExactScalar conj() const { return {re_, -im_}; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    ExactScalar inverse() const {
        if (is_zero()) throw DomainError("division by exact zero");
        mpq_class n = norm();
        return {re_ / n, -im_ / n};
    }

    ExactScalar operator-() const { return {-re_, -im_}; }
    ExactScalar& operator+=(const ExactScalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& o) {
        if (o.is_real()) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string str() const {
        if (sgn(im_) == 0) return re_.get_str();
        std::string imag;
        if (im_ == 1) imag = "i";
        else if (im_ == -1) imag = "-i";
        else imag = im_.get_str() + "i";
        if (sgn(re_) == 0) return imag;
        return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline ExactScalar pow(const ExactScalar& x, int k) {
    if (k < 0) return pow(x.inverse(), -k);
    ExactScalar r(1), b = x;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline bool is_zero(const ExactScalar& x) { return x.is_zero(); }
inline ExactScalar scalar_like(const ExactScalar&, const ExactScalar& v) { return v; }

// RAII mpfr_t.  Binary ops run at the larger operand precision.
class BigFloat {
public:
    explicit BigFloat(int prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(double d, int prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, d, MPFR_RNDN);
    }
    BigFloat(const mpq_class& q, int prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static BigFloat pow2(long e, int prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(int prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // floor(log2|x|); very negative for zero
    long exponent2() const {
        if (mpfr_zero_p(v_)) return -(1L << 40);
        return mpfr_get_exp(v_) - 1;
    }
    mpq_class to_rational() const {
        mpq_class q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }
    std::string str(int digits = 30) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

#define HV_BIGFLOAT_BINOP(op, fn)                                      \
    friend BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
        BigFloat r(std::max(a.precision(), b.precision()));            \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                               \
        return r;                                                      \
    }
    HV_BIGFLOAT_BINOP(+, mpfr_add)
    HV_BIGFLOAT_BINOP(-, mpfr_sub)
    HV_BIGFLOAT_BINOP(*, mpfr_mul)
    HV_BIGFLOAT_BINOP(/, mpfr_div)
#undef HV_BIGFLOAT_BINOP

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log2(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_log2(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(std::max(x.precision(), y.precision()));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend std::pair<BigFloat, BigFloat> sin_cos(const BigFloat& a) {
        BigFloat s(a.precision()), c(a.precision());
        mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
        return {std::move(s), std::move(c)};
    }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
    friend BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

private:
    mpfr_t v_;
};

// Complex float with a recorded working precision (>= 64 bits).
class ApproxScalar {
public:
    ApproxScalar() : re_(kDefaultPrecision), im_(kDefaultPrecision) {}
    ApproxScalar(double re, double im = 0.0, int prec = kDefaultPrecision)
        : re_(re, check(prec)), im_(im, prec) {}
    ApproxScalar(const ExactScalar& x, int prec = kDefaultPrecision)
        : re_(x.re(), check(prec)), im_(x.im(), prec) {}
    ApproxScalar(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
        check(precision_bits());
    }

    int precision_bits() const { return std::max(re_.precision(), im_.precision()); }
    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }

    static ApproxScalar polar(const BigFloat& r, const BigFloat& theta) {
        auto [s, c] = sin_cos(theta);
        return {r * c, r * s};
    }
    static ApproxScalar i(int prec = kDefaultPrecision) { return {0.0, 1.0, prec}; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    ApproxScalar conj() const { return {re_, -im_}; }
    BigFloat abs() const { return hypot(re_, im_); }
    BigFloat norm() const { return re_ * re_ + im_ * im_; }
    BigFloat arg() const { return atan2(im_, re_); }
    ApproxScalar with_precision(int prec) const {
        BigFloat r(check(prec)), m(prec);
        mpfr_set(r.raw(), re_.raw(), MPFR_RNDN);
        mpfr_set(m.raw(), im_.raw(), MPFR_RNDN);
        return {std::move(r), std::move(m)};
    }

    ApproxScalar operator-() const { return {-re_, -im_}; }
    friend ApproxScalar operator+(const ApproxScalar& a, const ApproxScalar& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend ApproxScalar operator-(const ApproxScalar& a, const ApproxScalar& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend ApproxScalar operator*(const ApproxScalar& a, const ApproxScalar& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend ApproxScalar operator/(const ApproxScalar& a, const ApproxScalar& b) {
        if (b.is_zero()) throw DomainError("division by zero");
        BigFloat n = b.norm();
        return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
    }
    ApproxScalar& operator+=(const ApproxScalar& o) { return *this = *this + o; }
    ApproxScalar& operator-=(const ApproxScalar& o) { return *this = *this - o; }
    ApproxScalar& operator*=(const ApproxScalar& o) { return *this = *this * o; }
    ApproxScalar& operator/=(const ApproxScalar& o) { return *this = *this / o; }

    std::string str(int digits = 25) const {
        if (im_.is_zero()) return re_.str(digits);
        std::string s = re_.str(digits);
        std::string m = im_.str(digits);
        if (m[0] != '-') m = "+" + m;
        return s + m + "i";
    }

private:
    static int check(int prec) {
        if (prec < kMinPrecision) throw DomainError("precision below 64 bits");
        return prec;
    }
    BigFloat re_, im_;
};

// Principal square root.
inline ApproxScalar sqrt(const ApproxScalar& z) {
    int prec = z.precision_bits();
    if (z.is_zero()) return ApproxScalar(0.0, 0.0, prec);
    BigFloat r = z.abs();
    BigFloat half(0.5, prec);
    BigFloat a = sqrt((r + abs(z.re())) * half);
    BigFloat b = abs(z.im()) / (a + a);
    if (z.re().sign() >= 0) return {a, z.im().sign() < 0 ? -b : b};
    return {b, z.im().sign() < 0 ? -a : a};
}

inline ApproxScalar pow(const ApproxScalar& x, int k) {
    if (k < 0) return pow(ApproxScalar(1.0, 0.0, x.precision_bits()) / x, -k);
    ApproxScalar r(1.0, 0.0, x.precision_bits()), b = x;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline bool is_zero(const ApproxScalar& x) { return x.is_zero(); }

namespace detail {
// unqualified so that overloads declared later are found by ADL
template <class T>
bool zero(const T& x) { return is_zero(x); }
}  // namespace detail
inline ApproxScalar scalar_like(const ApproxScalar& ref, const ExactScalar& v) {
    return ApproxScalar(v, ref.precision_bits());
}
inline ApproxScalar to_approx(const ExactScalar& x, int prec = kDefaultPrecision) {
    return ApproxScalar(x, prec);
}
inline std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.str(); }
inline std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }
inline std::ostream& operator<<(std::ostream& os, const ApproxScalar& x) { return os << x.str(); }

// 2^{-prec/2}: the default acceptance threshold at a given precision.
inline BigFloat half_precision_tolerance(int prec) { return BigFloat::pow2(-(prec / 2), prec); }

// Nearest Gaussian rational with bounded denominator (continued fractions).
inline mpq_class nearest_rational(const BigFloat& x, const mpz_class& max_den) {
    mpq_class target = x.to_rational();
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpq_class rem = target;
    for (int it = 0; it < 200; ++it) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rem.get_num_mpz_t(), rem.get_den_mpz_t());
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        mpq_class frac = rem - mpq_class(a);
        if (sgn(frac) == 0) break;
        rem = 1 / frac;
    }
    if (q1 == 0) return mpq_class(0);
    mpq_class r(p1, q1);
    r.canonicalize();
    return r;
}

}  // namespace hv

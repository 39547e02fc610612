#pragma once

// Dense univariate polynomials, ascending coefficients.

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hv/errors.hpp"
#include "hv/scalar.hpp"

namespace hv {

template <class T>
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    UnivariatePoly(std::initializer_list<T> cs) : c_(cs) { trim(); }
    explicit UnivariatePoly(std::vector<T> cs) : c_(std::move(cs)) { trim(); }

    static UnivariatePoly constant(const T& c) { return UnivariatePoly(std::vector<T>{c}); }
    static UnivariatePoly monomial(const T& c, int k) {
        std::vector<T> v(k + 1);
        v[k] = c;
        return UnivariatePoly(std::move(v));
    }
    // prod (z - r_i)
    static UnivariatePoly from_roots(const std::vector<T>& roots, const T& lead) {
        UnivariatePoly p = constant(lead);
        for (const auto& r : roots) p = p * UnivariatePoly({-r, scalar_like(r, ExactScalar(1))});
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coefficients() const { return c_; }
    T coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : T{}; }
    const T& leading() const {
        if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }

    template <class U>
    U operator()(const U& x) const {
        U r{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + lift<U>(*it, x);
        return r;
    }

    UnivariatePoly derivative() const {
        std::vector<T> d;
        for (std::size_t k = 1; k < c_.size(); ++k)
            d.push_back(c_[k] * scalar_like(c_[k], ExactScalar(static_cast<long>(k))));
        return UnivariatePoly(std::move(d));
    }

    template <class F>
    auto map(F f) const {
        using U = decltype(f(std::declval<T>()));
        std::vector<U> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(f(c));
        return UnivariatePoly<U>(std::move(out));
    }

    UnivariatePoly operator-() const {
        std::vector<T> v;
        for (const auto& c : c_) v.push_back(-c);
        return UnivariatePoly(std::move(v));
    }
    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
        std::vector<T> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k < a.c_.size() && k < b.c_.size()) v[k] = a.c_[k] + b.c_[k];
            else v[k] = k < a.c_.size() ? a.c_[k] : b.c_[k];
        }
        return UnivariatePoly(std::move(v));
    }
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) { return a + (-b); }
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return UnivariatePoly(std::move(v));
    }
    friend UnivariatePoly operator*(const T& s, const UnivariatePoly& a) {
        std::vector<T> v;
        for (const auto& c : a.c_) v.push_back(s * c);
        return UnivariatePoly(std::move(v));
    }
    UnivariatePoly& operator+=(const UnivariatePoly& o) { return *this = *this + o; }
    UnivariatePoly& operator-=(const UnivariatePoly& o) { return *this = *this - o; }
    UnivariatePoly& operator*=(const UnivariatePoly& o) { return *this = *this * o; }
    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "z") const {
        if (c_.empty()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            if (detail::zero(c_[k])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[k].str() + ")";
            if (k > 0) s += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
        }
        return s;
    }

private:
    template <class U>
    static U lift(const T& c, const U& ref) {
        if constexpr (std::is_same_v<U, T>) {
            (void)ref;
            return c;
        } else {
            return scalar_like(ref, c);
        }
    }
    void trim() {
        while (!c_.empty() && detail::zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
bool is_zero(const UnivariatePoly<T>& p) { return p.is_zero(); }
template <class T>
UnivariatePoly<T> scalar_like(const UnivariatePoly<T>& ref, const ExactScalar& v) {
    const auto& cs = ref.coefficients();
    T r = cs.empty() ? scalar_like(T{}, v) : scalar_like(cs[0], v);
    return UnivariatePoly<T>::constant(r);
}

template <class T>
UnivariatePoly<T> pow(const UnivariatePoly<T>& p, int k) {
    UnivariatePoly<T> r = UnivariatePoly<T>::constant(scalar_like(T{}, ExactScalar(1)));
    UnivariatePoly<T> b = p;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

// p(q(z))
template <class T>
UnivariatePoly<T> compose(const UnivariatePoly<T>& p, const UnivariatePoly<T>& q) {
    UnivariatePoly<T> r;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * q + UnivariatePoly<T>::constant(*it);
    return r;
}

// Division over a field.
template <class T>
std::pair<UnivariatePoly<T>, UnivariatePoly<T>> divmod(const UnivariatePoly<T>& a, const UnivariatePoly<T>& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<T> r = a.coefficients();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {UnivariatePoly<T>{}, a};
    std::vector<T> q(dq + 1);
    T inv = scalar_like(b.leading(), ExactScalar(1)) / b.leading();
    for (int k = dq; k >= 0; --k) {
        T f = r[k + db] * inv;
        q[k] = f;
        for (int j = 0; j <= db; ++j) r[k + j] = r[k + j] - f * b.coefficients()[j];
        r[k + db] = T{};
    }
    r.resize(db);
    return {UnivariatePoly<T>(std::move(q)), UnivariatePoly<T>(std::move(r))};
}

inline UnivariatePoly<ExactScalar> monic(const UnivariatePoly<ExactScalar>& p) {
    if (p.is_zero()) return p;
    return p.leading().inverse() * p;
}

inline UnivariatePoly<ExactScalar> gcd(UnivariatePoly<ExactScalar> a, UnivariatePoly<ExactScalar> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

struct SquareFreeFactor {
    UnivariatePoly<ExactScalar> factor;  // monic, square-free
    int multiplicity;
};

// Yun's algorithm: p = lead * prod f_i^i, exact over Q(i).
inline std::vector<SquareFreeFactor> square_free_decomposition(const UnivariatePoly<ExactScalar>& p) {
    if (p.is_zero()) throw DomainError("square-free decomposition of zero polynomial");
    std::vector<SquareFreeFactor> out;
    if (p.degree() == 0) return out;
    auto dp = p.derivative();
    auto a = gcd(p, dp);
    auto b = divmod(p, a).first;
    auto c = divmod(dp, a).first;
    auto d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        a = gcd(b, d);
        if (a.degree() > 0) out.push_back({monic(a), i});
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

inline UnivariatePoly<ApproxScalar> to_approx(const UnivariatePoly<ExactScalar>& p, int prec = kDefaultPrecision) {
    return p.map([prec](const ExactScalar& c) { return ApproxScalar(c, prec); });
}

}  // namespace hv

#pragma once

// Homogeneous polynomials in x1,x2,x3.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hv/linalg.hpp"
#include "hv/scalar.hpp"

namespace hv {

using Exp3 = std::array<int, 3>;

// Exponent triples of a given degree, x1-major descending.
inline std::vector<Exp3> ternary_monomials(int degree) {
    std::vector<Exp3> out;
    for (int i = degree; i >= 0; --i)
        for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
    return out;
}

template <class T>
class TernaryForm {
public:
    TernaryForm() = default;
    explicit TernaryForm(int degree) : degree_(degree) {}

    static TernaryForm var(int k, const T& one = scalar_like(T{}, ExactScalar(1))) {
        TernaryForm f(1);
        Exp3 e{0, 0, 0};
        e[k] = 1;
        f.c_[e] = one;
        return f;
    }
    static TernaryForm constant(const T& c) {
        TernaryForm f(0);
        f.set({0, 0, 0}, c);
        return f;
    }
    // a1 x1 + a2 x2 + a3 x3
    static TernaryForm linear(const T& a1, const T& a2, const T& a3) {
        TernaryForm f(1);
        f.set({1, 0, 0}, a1);
        f.set({0, 1, 0}, a2);
        f.set({0, 0, 1}, a3);
        return f;
    }

    int degree() const { return degree_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Exp3, T>& terms() const { return c_; }
    T coeff(const Exp3& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? T{} : it->second;
    }
    void set(const Exp3& e, const T& v) {
        if (e[0] + e[1] + e[2] != degree_) throw DomainError("exponent triple does not match the degree");
        if (detail::zero(v)) c_.erase(e);
        else c_[e] = v;
    }

    template <class R>
    R operator()(const R& x1, const R& x2, const R& x3) const {
        R out{};
        for (const auto& [e, c] : c_) {
            R m = scalar_like(x1, ExactScalar(1));
            for (int k = 0; k < e[0]; ++k) m = m * x1;
            for (int k = 0; k < e[1]; ++k) m = m * x2;
            for (int k = 0; k < e[2]; ++k) m = m * x3;
            if constexpr (std::is_same_v<R, T>) out = out + c * m;
            else out = out + scalar_like(x1, c) * m;
        }
        return out;
    }
    template <class R>
    R operator()(const std::array<R, 3>& x) const {
        return (*this)(x[0], x[1], x[2]);
    }

    TernaryForm operator-() const {
        TernaryForm r = *this;
        for (auto& [e, c] : r.c_) c = -c;
        return r;
    }
    friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree_ != b.degree_) throw DomainError("adding forms of different degree");
        TernaryForm r = a;
        for (const auto& [e, c] : b.c_) r.set(e, r.coeff(e) + c);
        return r;
    }
    friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) { return a + (-b); }
    friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
        TernaryForm r(a.degree_ + b.degree_);
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) {
                Exp3 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
                r.set(e, r.coeff(e) + ca * cb);
            }
        return r;
    }
    friend TernaryForm operator*(const T& s, const TernaryForm& a) {
        TernaryForm r(a.degree_);
        for (const auto& [e, c] : a.c_) r.set(e, s * c);
        return r;
    }
    friend bool operator==(const TernaryForm& a, const TernaryForm& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree_ == b.degree_ && a.c_ == b.c_;
    }

    TernaryForm derivative(int k) const {
        TernaryForm r(degree_ > 0 ? degree_ - 1 : 0);
        for (const auto& [e, c] : c_) {
            if (e[k] == 0) continue;
            Exp3 f = e;
            f[k] -= 1;
            r.set(f, r.coeff(f) + c * scalar_like(c, ExactScalar(e[k])));
        }
        return r;
    }

    // (f o R)(x) = f(R x) for a 3x3 matrix R.
    TernaryForm compose_linear(const Matrix<T>& m) const {
        std::array<TernaryForm, 3> y;
        for (int r = 0; r < 3; ++r) y[r] = linear(m[r][0], m[r][1], m[r][2]);
        TernaryForm out(degree_);
        for (const auto& [e, c] : c_) {
            TernaryForm t = constant(c);
            for (int k = 0; k < 3; ++k)
                for (int j = 0; j < e[k]; ++j) t = t * y[k];
            out = out + t;
        }
        out.degree_ = degree_;
        return out;
    }

    template <class F>
    auto map(F f) const {
        using U = decltype(f(std::declval<T>()));
        TernaryForm<U> r(degree_);
        for (const auto& [e, c] : c_) r.set(e, f(c));
        return r;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        static const char* names[3] = {"x1", "x2", "x3"};
        for (const auto& [e, c] : c_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            for (int k = 0; k < 3; ++k)
                if (e[k]) s += "*" + std::string(names[k]) + (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
        }
        return s;
    }

private:
    int degree_ = 0;
    std::map<Exp3, T> c_;
};

template <class T>
bool is_zero(const TernaryForm<T>& f) { return f.is_zero(); }
template <class T>
TernaryForm<T> scalar_like(const TernaryForm<T>&, const ExactScalar& v) {
    return TernaryForm<T>::constant(scalar_like(T{}, v));
}

template <class T>
TernaryForm<T> pow(const TernaryForm<T>& f, int k) {
    TernaryForm<T> r = TernaryForm<T>::constant(scalar_like(T{}, ExactScalar(1)));
    for (int j = 0; j < k; ++j) r = r * f;
    return r;
}

template <class T>
TernaryForm<T> laplacian(const TernaryForm<T>& f) {
    if (f.degree() < 2) return TernaryForm<T>(0);
    TernaryForm<T> r(f.degree() - 2);
    for (int k = 0; k < 3; ++k) r = r + f.derivative(k).derivative(k);
    return r;
}

// x1^2 + x2^2 + x3^2
template <class T>
TernaryForm<T> euclidean_quadric() {
    TernaryForm<T> r(2);
    T one = scalar_like(T{}, ExactScalar(1));
    r.set({2, 0, 0}, one);
    r.set({0, 2, 0}, one);
    r.set({0, 0, 2}, one);
    return r;
}

struct Sample3 {
    std::array<ApproxScalar, 3> point;
    ApproxScalar value;
};

struct InterpolationResult {
    TernaryForm<ApproxScalar> form;
    BigFloat residual;
    int rank = 0;
};

// Least-squares fit of a degree-d form through the samples.
inline InterpolationResult interpolate_homogeneous(int degree, const std::vector<Sample3>& samples,
                                                   int prec = kDefaultPrecision) {
    auto mons = ternary_monomials(degree);
    if (samples.size() < mons.size())
        throw ConditioningError("need at least " + std::to_string(mons.size()) + " samples",
                                static_cast<int>(samples.size()));
    Matrix<ApproxScalar> a;
    std::vector<ApproxScalar> y;
    for (const auto& s : samples) {
        std::vector<ApproxScalar> row;
        for (const auto& e : mons) {
            ApproxScalar m(1.0, 0.0, prec);
            for (int k = 0; k < 3; ++k) m = m * pow(s.point[k].with_precision(prec), e[k]);
            row.push_back(m);
        }
        a.push_back(std::move(row));
        y.push_back(s.value.with_precision(prec));
    }
    auto ls = least_squares(std::move(a), std::move(y), prec);
    TernaryForm<ApproxScalar> f(degree);
    for (std::size_t k = 0; k < mons.size(); ++k) f.set(mons[k], ls.x[k]);
    return {std::move(f), ls.residual, ls.rank};
}

}  // namespace hv

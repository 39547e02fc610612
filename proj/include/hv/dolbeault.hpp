#pragma once

// Exact d-bar calculus on P^1 for forms z^a zbar^b (1 + z zbar)^{-c}.
//
// Terms are kept as z^a y^e (a, e integers) using zbar = (y - 1)/z, which
// makes the representation unique.  A term's partial in zbar is
// e z^{a+1} y^{e-1}; integrating back is the naive y-integral.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "hv/binary_forms.hpp"
#include "hv/linalg.hpp"
#include "hv/multipoly.hpp"
#include "hv/poly.hpp"
#include "hv/random.hpp"
#include "hv/ternary.hpp"

namespace hv {

namespace detail {
template <class T>
bool negligible(const T& x) { return zero(x); }
inline bool negligible(const ApproxScalar& x) { return x.abs() < half_precision_tolerance(x.precision_bits()); }
}  // namespace detail

template <class T>
struct YTerm {
    T coef;
    int a = 0;  // power of z
    int b = 0;  // power of zbar
    int c = 0;  // power of y^{-1}
};

template <class T>
class YExpansion {
public:
    using Key = std::pair<int, int>;  // (a, e): z^a y^e

    // bundle_degree: the form is a section of O(bundle_degree), times dzbar if flagged.
    explicit YExpansion(int bundle_degree = 0, bool dzbar = false) : degree_(bundle_degree), dzbar_(dzbar) {}

    static YExpansion from_terms(const std::vector<YTerm<T>>& terms, int bundle_degree, bool dzbar) {
        YExpansion r(bundle_degree, dzbar);
        for (const auto& t : terms) {
            if (t.b < 0 || t.c < 0) throw DomainError("zbar and y^{-1} powers must be non-negative");
            // zbar^b = z^{-b} (y - 1)^b
            for (int j = 0; j <= t.b; ++j) {
                mpz_class w = detail::binomial(t.b, j);
                if ((t.b - j) % 2) w = -w;
                r.add(t.a - t.b, j - t.c, scalar_like(t.coef, ExactScalar(w)) * t.coef);
            }
        }
        return r;
    }
    static YExpansion monomial(const T& coef, int a, int e, int bundle_degree, bool dzbar = false) {
        YExpansion r(bundle_degree, dzbar);
        r.add(a, e, coef);
        return r;
    }
    static YExpansion polynomial(const UnivariatePoly<T>& p, int bundle_degree) {
        YExpansion r(bundle_degree, false);
        for (int k = 0; k <= p.degree(); ++k) r.add(k, 0, p.coeff(k));
        return r;
    }

    int bundle_degree() const { return degree_; }
    bool has_dzbar() const { return dzbar_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Key, T>& terms() const { return t_; }
    T coeff(int a, int e) const {
        auto it = t_.find({a, e});
        return it == t_.end() ? T{} : it->second;
    }

    // The same function written as z^a zbar^b y^{-c} with b, c >= 0.
    std::vector<YTerm<T>> abc_terms() const {
        std::map<std::array<int, 3>, T> acc;
        for (const auto& [k, c] : t_) {
            auto [a, e] = k;
            if (e <= 0) {
                accumulate(acc, {a, 0, -e}, c);
                continue;
            }
            // y^e = sum_j C(e,j) z^j zbar^j
            for (int j = 0; j <= e; ++j)
                accumulate(acc, {a + j, j, 0}, scalar_like(c, ExactScalar(detail::binomial(e, j))) * c);
        }
        std::vector<YTerm<T>> out;
        for (const auto& [k, c] : acc) out.push_back({c, k[0], k[1], k[2]});
        return out;
    }

    YExpansion with_degree(int bundle_degree) const {
        YExpansion r = *this;
        r.degree_ = bundle_degree;
        return r;
    }

    YExpansion operator-() const {
        YExpansion r = *this;
        for (auto& [k, c] : r.t_) c = -c;
        return r;
    }
    friend YExpansion operator+(const YExpansion& x, const YExpansion& y) {
        check_compatible(x, y);
        YExpansion r = x;
        for (const auto& [k, c] : y.t_) r.add(k.first, k.second, c);
        return r;
    }
    friend YExpansion operator-(const YExpansion& x, const YExpansion& y) { return x + (-y); }
    friend YExpansion operator*(const YExpansion& x, const YExpansion& y) {
        if (x.dzbar_ && y.dzbar_) throw DomainError("product of two (0,1)-forms");
        YExpansion r(x.degree_ + y.degree_, x.dzbar_ || y.dzbar_);
        for (const auto& [kx, cx] : x.t_)
            for (const auto& [ky, cy] : y.t_) r.add(kx.first + ky.first, kx.second + ky.second, cx * cy);
        return r;
    }
    friend YExpansion operator*(const T& s, const YExpansion& x) {
        YExpansion r(x.degree_, x.dzbar_);
        for (const auto& [k, c] : x.t_) r.add(k.first, k.second, s * c);
        return r;
    }
    friend bool operator==(const YExpansion& x, const YExpansion& y) {
        return x.degree_ == y.degree_ && x.dzbar_ == y.dzbar_ && x.t_ == y.t_;
    }

    YExpansion multiply_y_power(int k) const {
        YExpansion r(degree_, dzbar_);
        for (const auto& [key, c] : t_) r.add(key.first, key.second + k, c);
        return r;
    }
    YExpansion multiply_zbar_power(int n) const {
        const T* ref = t_.empty() ? nullptr : &t_.begin()->second;
        YTerm<T> one{ref ? scalar_like(*ref, ExactScalar(1)) : scalar_like(T{}, ExactScalar(1)), 0, n, 0};
        return *this * from_terms({one}, 0, false);
    }

    // Termwise partial in zbar: z^a y^e -> e z^{a+1} y^{e-1}, attaching dzbar.
    YExpansion dbar() const {
        if (dzbar_) throw DomainError("dbar of a (0,1)-form");
        YExpansion r(degree_, true);
        for (const auto& [k, c] : t_)
            if (k.second != 0) r.add(k.first + 1, k.second - 1, scalar_like(c, ExactScalar(k.second)) * c);
        return r;
    }

private:
    static void accumulate(std::map<std::array<int, 3>, T>& acc, std::array<int, 3> k, const T& c) {
        auto [it, fresh] = acc.try_emplace(k, c);
        if (!fresh) it->second = it->second + c;
        if (detail::zero(it->second)) acc.erase(it);
    }
    static void check_compatible(const YExpansion& x, const YExpansion& y) {
        if (x.is_zero() || y.is_zero()) return;
        if (x.degree_ != y.degree_ || x.dzbar_ != y.dzbar_)
            throw DomainError("adding forms of different bundle type");
    }
    void add(int a, int e, const T& c) {
        if (detail::zero(c)) return;
        auto [it, fresh] = t_.try_emplace(Key{a, e}, c);
        if (!fresh) it->second = it->second + c;
        if (detail::zero(it->second)) t_.erase(it);
    }
    std::map<Key, T> t_;
    int degree_ = 0;
    bool dzbar_ = false;
};

template <class T>
YExpansion<T> operator+(const YExpansion<T>& x, const T& c) {
    return x + YExpansion<T>::monomial(c, 0, 0, x.bundle_degree(), x.has_dzbar());
}

// Antiderivative in zbar at fixed z: z^a y^e -> z^{a-1} y^{e+1}/(e+1).
template <class T>
YExpansion<T> naive_integral(const YExpansion<T>& g) {
    if (!g.has_dzbar()) throw DomainError("naive integral needs a (0,1)-form");
    YExpansion<T> h(g.bundle_degree(), false);
    for (const auto& [k, c] : g.terms()) {
        auto [a, e] = k;
        if (e == -1) throw LogObstruction("term z^" + std::to_string(a) + " y^-1 integrates to a logarithm");
        if (e >= 0) throw DivergenceError("term z^" + std::to_string(a) + " y^" + std::to_string(e) +
                                          " is not integrable in zbar");
        h = h + YExpansion<T>::monomial(scalar_like(c, ExactScalar::ratio(1, e + 1)) * c, a - 1, e + 1,
                                        g.bundle_degree());
    }
    return h;
}

struct RegularityReport {
    std::vector<int> pole_orders_at_zero;  // one entry per singular frequency
    mpq_class decay_exponent_at_infinity;  // least slack over frequencies; >= 0 iff regular at infinity
    bool regular_at_infinity = true;
    bool is_global_section = true;
};

namespace detail {

// Coefficients of sum_e c_e (1+t)^{e-emin} t^{shift(e)} as a dense vector.
template <class T>
std::vector<T> regularized(const std::map<int, T>& by_e, bool at_infinity) {
    int emin = by_e.begin()->first, emax = by_e.rbegin()->first;
    std::vector<T> out;
    for (const auto& [e, c] : by_e) {
        int n = e - emin;
        int shift = at_infinity ? emax - e : 0;
        if (static_cast<int>(out.size()) < n + shift + 1) out.resize(n + shift + 1);
        for (int j = 0; j <= n; ++j)
            out[j + shift] = out[j + shift] + scalar_like(c, ExactScalar(binomial(n, j))) * c;
    }
    return out;
}

template <class T>
std::optional<int> lowest_order(const std::vector<T>& v) {
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!negligible(v[k])) return static_cast<int>(k);
    return std::nullopt;
}

}  // namespace detail

// Smoothness at 0 and at infinity of h dz^{-d/2} (dzbar), d the bundle degree.
template <class T>
RegularityReport regularity(const YExpansion<T>& h, int bundle_degree) {
    std::map<int, std::map<int, T>> freq;
    for (const auto& [k, c] : h.terms()) freq[k.first][k.second] = c;
    RegularityReport r;
    const int f = h.has_dzbar() ? 1 : 0;
    bool first = true;
    for (const auto& [a, by_e] : freq) {
        // near 0: z^a g(t), t = |z|^2, needs ord_t g >= -a
        if (a < 0) {
            auto ord = detail::lowest_order(detail::regularized(by_e, false));
            if (ord && *ord < -a) r.pole_orders_at_zero.push_back(-a - *ord);
        }
        // near infinity: w^{d-a} wbar^{-2f} H(s), s = |w|^2
        auto ordp = detail::lowest_order(detail::regularized(by_e, true));
        if (!ordp) continue;
        int ord = *ordp - by_e.rbegin()->first;
        int need = std::max(a - bundle_degree, 2 * f);
        mpq_class slack(ord - need);
        if (first || slack < r.decay_exponent_at_infinity) r.decay_exponent_at_infinity = slack;
        first = false;
    }
    if (first) r.decay_exponent_at_infinity = mpq_class(std::numeric_limits<int>::max());
    r.regular_at_infinity = sgn(r.decay_exponent_at_infinity) >= 0;
    r.is_global_section = r.pole_orders_at_zero.empty() && r.regular_at_infinity;
    return r;
}

template <class T>
struct PolarPart {
    YExpansion<T> correction;  // holomorphic Laurent tail, killed by dbar
    YExpansion<T> corrected;   // h + correction
    RegularityReport report;
};

// For each negative frequency a, add -g_a(0) z^a so that h is regular at 0
// whenever that is possible with a dbar-closed term.
template <class T>
PolarPart<T> polar_part(const YExpansion<T>& h, int bundle_degree) {
    std::map<int, T> at_zero;
    for (const auto& [k, c] : h.terms())
        if (k.first < 0) at_zero[k.first] = at_zero[k.first] + c;
    YExpansion<T> corr(h.bundle_degree(), h.has_dzbar());
    for (const auto& [a, s] : at_zero)
        if (!detail::zero(s)) corr = corr + YExpansion<T>::monomial(-s, a, 0, h.bundle_degree(), h.has_dzbar());
    YExpansion<T> fixed = h + corr;
    return {corr, fixed, regularity(fixed, bundle_degree)};
}

// (1/pi) * integral over P^1 of a (0,1)-form with values in O(-2).
// Only the rotation-invariant part contributes: z^0 y^e gives -1/(e+1).
template <class T>
T bracket(const YExpansion<T>& g) {
    if (!g.has_dzbar()) throw DomainError("bracket needs a (0,1)-form");
    if (g.bundle_degree() != -2) throw DomainError("bracket needs a form with values in O(-2)");
    T s{};
    for (const auto& [k, c] : g.terms()) {
        if (k.first != 0) continue;
        if (k.second >= -1) throw DivergenceError("radial integral of y^" + std::to_string(k.second) + " diverges");
        s = s + scalar_like(c, ExactScalar::ratio(-1, k.second + 1)) * c;
    }
    return s;
}

// Coordinates of [beta] in H^1(O(-4)): (v0 + v1 zbar + v2 zbar^2) / y^4 dz^2 dzbar.
template <class T>
struct DolbeaultClass {
    T v0{}, v1{}, v2{};
    T operator[](int k) const { return k == 0 ? v0 : (k == 1 ? v1 : v2); }
};

template <class T>
YExpansion<T> beta(const DolbeaultClass<T>& v) {
    return YExpansion<T>::from_terms({{v.v0, 0, 0, 4}, {v.v1, 0, 1, 4}, {v.v2, 0, 2, 4}}, -4, true);
}

// zbar^m / y^{2k} dz^k dzbar, a representative of H^1(O(-2k)).
inline YExpansion<ExactScalar> representative(int k, int m) {
    return YExpansion<ExactScalar>::from_terms({{ExactScalar(1), 0, m, 2 * k}}, -2 * k, true);
}

// (1, -2t, t^2)
template <class T>
DolbeaultClass<T> conic_class(const T& t) {
    return {scalar_like(t, ExactScalar(1)), scalar_like(t, ExactScalar(-2)) * t, t * t};
}

template <class T>
UnivariatePoly<T> lift_poly(const UnivariatePoly<ExactScalar>& p, const T& like) {
    return p.map([&](const ExactScalar& c) { return scalar_like(like, c); });
}

// Pairings [z^j u beta] for u = w0 + w1 z against the test sections 1, z, scaled by 6.
template <class T>
Matrix<T> null_cone_system(const DolbeaultClass<T>& v) {
    auto b = beta(v);
    Matrix<T> m(2, std::vector<T>(2));
    T one = scalar_like(v.v0, ExactScalar(1));
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            auto zz = YExpansion<T>::monomial(one, j + k, 0, 2);
            m[j][k] = scalar_like(one, ExactScalar(6)) * bracket(zz * b);
        }
    return m;
}

struct NullConeResult {
    ExactScalar value;                                     // v1^2 - 4 v0 v2
    std::optional<std::pair<ExactScalar, ExactScalar>> kernel;  // (w0, w1)
    Matrix<ExactScalar> system;
};

inline NullConeResult null_cone_test(const DolbeaultClass<ExactScalar>& v) {
    if (v.v0.is_zero() && v.v1.is_zero() && v.v2.is_zero()) throw DomainError("zero class");
    NullConeResult r{ExactScalar(), std::nullopt, null_cone_system(v)};
    const auto& m = r.system;
    r.value = -(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    if (r.value.is_zero()) {
        if (!m[0][0].is_zero() || !m[0][1].is_zero()) r.kernel = std::pair{-m[0][1], m[0][0]};
        else r.kernel = std::pair{m[1][1], -m[1][0]};
    }
    return r;
}

struct SixPoints {
    std::vector<ApproxScalar> roots;       // z_i
    std::vector<ApproxScalar> parameters;  // t_i = -z_i: the kernel section of (1,-2t,t^2) vanishes at z_i
};

inline SixPoints six_points(const UnivariatePoly<ExactScalar>& p, int prec = kDefaultPrecision) {
    if (p.degree() != 6) throw DomainError("six_points needs a sextic");
    SixPoints s;
    s.roots = simple_roots(p, prec);
    for (const auto& z : s.roots) s.parameters.push_back(-z);
    return s;
}

template <class T>
struct QuadraticFormResult {
    Matrix<T> q;  // basis (u0, u2)
    T det;
};

// Solve dbar b = g in O(d) and insist on a global solution.
template <class T>
YExpansion<T> solve_dbar(const YExpansion<T>& g, int d) {
    auto pp = polar_part(naive_integral(g), d);
    if (!pp.report.is_global_section) throw CalculusError("dbar-solve did not produce a global section");
    return pp.corrected.with_degree(d);
}

// Quadratic form of b_1 = (u0 + u2 z^2) f - p_1 at v = (0,1,0), paired against p.
template <class T>
QuadraticFormResult<T> trope_quadratic_form(const UnivariatePoly<T>& p) {
    T one = scalar_like(p.coeff(0), ExactScalar(1));
    auto b = beta(DolbeaultClass<T>{T{}, one, T{}});
    auto f = naive_integral(b);
    std::vector<YExpansion<T>> basis;
    for (int j : {0, 2}) {
        auto pp = polar_part(YExpansion<T>::monomial(one, j, 0, 2) * f, -2);
        if (!pp.report.is_global_section) throw CalculusError("kernel section is not global");
        basis.push_back(pp.corrected);
    }
    auto pz = YExpansion<T>::polynomial(p, 6);
    QuadraticFormResult<T> r{Matrix<T>(2, std::vector<T>(2)), T{}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.q[i][j] = bracket(basis[i] * basis[j] * pz * b);
    r.det = r.q[0][0] * r.q[1][1] - r.q[0][1] * r.q[1][0];
    return r;
}

template <class T>
struct C4Brackets {
    T q_beta;   // [q beta]
    T qb_beta;  // [q b beta]
    T cubic;    // C([beta]) = [b^2 q beta]
    T quartic;  // [q beta] C - [q b beta]^2
};

// b solves dbar b = r beta in O(0), fixed up to the additive constant given.
template <class T>
C4Brackets<T> c4_brackets(const UnivariatePoly<T>& q, const UnivariatePoly<T>& r, const DolbeaultClass<T>& v,
                          const T& b_constant = T{}) {
    auto be = beta(v);
    auto qz = YExpansion<T>::polynomial(q, 2);
    auto rz = YExpansion<T>::polynomial(r, 4);
    auto b = solve_dbar(rz * be, 0);
    if (!detail::zero(b_constant)) b = b + b_constant;
    C4Brackets<T> out;
    out.q_beta = bracket(qz * be);
    out.qb_beta = bracket(qz * b * be);
    out.cubic = bracket(b * b * qz * be);
    out.quartic = out.q_beta * out.cubic - out.qb_beta * out.qb_beta;
    return out;
}

template <class T>
struct C6Result {
    Matrix<T> m;  // m[i][j] = [u'_i q b2(u_j) beta], u, u' in {1, z}
    T det;
};

template <class T>
C6Result<T> c6_matrix(const UnivariatePoly<T>& q, const UnivariatePoly<T>& r, const DolbeaultClass<T>& v) {
    auto be = beta(v);
    auto qz = YExpansion<T>::polynomial(q, 2);
    auto rz = YExpansion<T>::polynomial(r, 4);
    T one = scalar_like(v.v0, ExactScalar(1));
    C6Result<T> out{Matrix<T>(2, std::vector<T>(2)), T{}};
    for (int j = 0; j < 2; ++j) {
        auto u = YExpansion<T>::monomial(one, j, 0, 1);
        auto b1 = solve_dbar(qz * u * be, -1);
        auto b2 = solve_dbar(rz * b1 * be, -1);
        for (int i = 0; i < 2; ++i) {
            auto up = YExpansion<T>::monomial(one, i, 0, 1);
            out.m[i][j] = bracket(up * qz * b2 * be);
        }
    }
    out.det = out.m[0][0] * out.m[1][1] - out.m[0][1] * out.m[1][0];
    return out;
}

// Generic symbolic class (v0, v1, v2) as polynomial variables.
inline DolbeaultClass<MultiPoly> symbolic_class() {
    return {MultiPoly::var(0), MultiPoly::var(1), MultiPoly::var(2)};
}

struct CurveFit {
    TernaryForm<ApproxScalar> form;
    BigFloat residual;          // at the claimed degree
    BigFloat residual_lower;    // same samples, one degree lower
    int rank = 0;
    int samples = 0;
};

// Fit a homogeneous form of the given degree to exact values at random rational classes.
template <class F>
CurveFit fit_class_function(F value, int degree, CounterRng rng, int prec, int extra = 10) {
    const int n = static_cast<int>(ternary_monomials(degree).size()) + extra;
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<Sample3> samples;
        for (int s = 0; s < n; ++s) {
            DolbeaultClass<ExactScalar> v{rng.exact(20), rng.exact(20), rng.exact(20)};
            ExactScalar val = value(v);
            samples.push_back({{to_approx(v.v0, prec), to_approx(v.v1, prec), to_approx(v.v2, prec)},
                               to_approx(val, prec)});
        }
        try {
            auto fit = interpolate_homogeneous(degree, samples, prec);
            BigFloat lower(1.0, prec);
            try {
                lower = interpolate_homogeneous(degree - 1, samples, prec).residual;
            } catch (const ConditioningError&) {
            }
            return {std::move(fit.form), fit.residual, lower, fit.rank, n};
        } catch (const ConditioningError&) {
            continue;  // resample
        }
    }
    throw ConditioningError("could not find well-conditioned samples", 0);
}

inline CurveFit c4_equation(const UnivariatePoly<ExactScalar>& q, const UnivariatePoly<ExactScalar>& r,
                            CounterRng rng, int prec = kDefaultPrecision) {
    return fit_class_function(
        [&](const DolbeaultClass<ExactScalar>& v) { return c4_brackets(q, r, v).quartic; }, 4, rng, prec);
}

inline CurveFit c6_equation(const UnivariatePoly<ExactScalar>& q, const UnivariatePoly<ExactScalar>& r,
                            CounterRng rng, int prec = kDefaultPrecision) {
    return fit_class_function(
        [&](const DolbeaultClass<ExactScalar>& v) { return c6_matrix(q, r, v).det; }, 6, rng, prec);
}

}  // namespace hv

#pragma once

// Harmonic cubics attached to binary sextics, the trope sextic, and its
// contact with the null conic (x,x) = 0.

#include <array>
#include <optional>
#include <vector>

#include "hv/dolbeault.hpp"
#include "hv/projective.hpp"
#include "hv/resultant.hpp"
#include "hv/roots.hpp"
#include "hv/ternary.hpp"

namespace hv {

enum class PairingMode { literal, apolar };

inline const char* to_string(PairingMode m) { return m == PairingMode::literal ? "literal" : "apolar"; }

using Form3 = TernaryForm<ExactScalar>;

// z-coefficients P_0..P_6 of ((x1 + i x2) + 2 x3 z - (x1 - i x2) z^2)^3.
inline std::vector<Form3> cube_coefficients() {
    const ExactScalar i = ExactScalar::i();
    Form3 a = Form3::linear(ExactScalar(1), i, ExactScalar());
    Form3 b = Form3::linear(ExactScalar(), ExactScalar(), ExactScalar(2));
    Form3 c = Form3::linear(ExactScalar(-1), i, ExactScalar());
    UnivariatePoly<Form3> quad({a, b, c});
    auto cube = pow(quad, 3);
    std::vector<Form3> out;
    for (int k = 0; k <= 6; ++k) out.push_back(cube.coeff(k));
    return out;
}

// Weight on P_i c_{6-i}.
inline ExactScalar pairing_weight(PairingMode mode, int i) {
    if (mode == PairingMode::literal) return ExactScalar(1);
    mpq_class w(1, detail::binomial(6, i));
    return ExactScalar(i % 2 ? mpq_class(-w) : w);
}

inline Form3 harmonic_cubic(const UnivariatePoly<ExactScalar>& p, PairingMode mode = PairingMode::literal) {
    if (p.degree() > 6) throw DomainError("harmonic_cubic needs degree <= 6");
    static const std::vector<Form3> cube = cube_coefficients();
    Form3 phi(3);
    for (int i = 0; i <= 6; ++i) {
        ExactScalar c = p.coeff(6 - i);
        if (c.is_zero()) continue;
        phi = phi + (pairing_weight(mode, i) * c) * cube[i];
    }
    return phi;
}

// S = (x,x)^2 lap^2 phi^2 + alpha (x,x) lap phi^2 + gamma phi^2
struct SexticConstants {
    ExactScalar alpha{-16};
    ExactScalar gamma{-3456};
};

// Constants for which the apolar S agrees with the d-bar calculus.
inline SexticConstants calculus_sextic_constants() { return {ExactScalar(-16), ExactScalar(-128)}; }

inline Form3 trope_sextic(const UnivariatePoly<ExactScalar>& p, PairingMode mode = PairingMode::literal,
                          const SexticConstants& k = {}) {
    Form3 phi = harmonic_cubic(p, mode);
    Form3 phi2 = phi * phi;
    Form3 q = euclidean_quadric<ExactScalar>();
    Form3 l1 = laplacian(phi2);
    Form3 l2 = laplacian(l1);
    Form3 s = q * q * l2 + k.alpha * (q * l1) + k.gamma * phi2;
    return s;
}

// x(t) = ((t^2 - 1)/2, -i (t^2 + 1)/2, -t)
template <class T>
std::array<T, 3> conic_point(const T& t) {
    T half = scalar_like(t, ExactScalar::ratio(1, 2));
    T one = scalar_like(t, ExactScalar(1));
    T mi = scalar_like(t, -ExactScalar::i());
    T t2 = t * t;
    return {half * (t2 - one), mi * half * (t2 + one), -t};
}

// Limit of x(t)/t^2.
template <class T>
std::array<T, 3> conic_point_at_infinity(const T& like) {
    return {scalar_like(like, ExactScalar::ratio(1, 2)), scalar_like(like, ExactScalar(mpq_class(0), mpq_class(-1, 2))),
            T{}};
}

inline std::array<ApproxScalar, 3> conic_point(const std::optional<ApproxScalar>& t, int prec = kDefaultPrecision) {
    if (t) return conic_point(*t);
    return conic_point_at_infinity(ApproxScalar(0.0, 0.0, prec));
}

// Coefficients X_0, X_1, X_2 of x(t) = X_0 + X_1 t + X_2 t^2.
inline Matrix<ExactScalar> conic_coefficient_matrix() {
    UnivariatePoly<ExactScalar> t({ExactScalar(), ExactScalar(1)});
    auto x = conic_point(t);
    Matrix<ExactScalar> m(3, std::vector<ExactScalar>(3));
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k) m[r][k] = x[r].coeff(k);
    return m;
}

// f(x(t)) as a polynomial in t.
inline UnivariatePoly<ExactScalar> conic_pullback(const Form3& f) {
    UnivariatePoly<ExactScalar> t({ExactScalar(), ExactScalar(1)});
    return f(conic_point(t));
}

// R with x(t) -> (ct + d)^2 x((at + b)/(ct + d)), so that phi_{g.p} = phi_p o R in apolar mode.
inline Matrix<ExactScalar> rotation_for(const Sl2Action& g) {
    auto x = conic_coefficient_matrix();
    UnivariatePoly<ExactScalar> num({g.b, g.a}), den({g.d, g.c});
    Matrix<ExactScalar> y(3, std::vector<ExactScalar>(3));
    for (int r = 0; r < 3; ++r) {
        UnivariatePoly<ExactScalar> acc;
        for (int k = 0; k < 3; ++k)
            acc = acc + x[r][k] * (pow(num, k) * pow(den, 2 - k));
        for (int k = 0; k < 3; ++k) y[r][k] = acc.coeff(k);
    }
    return matmul(y, inverse(x));
}

// sum_j C(6,j) c_j (-t)^j: the conic restriction of the literal cubic.
inline UnivariatePoly<ExactScalar> reweighted_sextic(const UnivariatePoly<ExactScalar>& p) {
    std::vector<ExactScalar> c(7);
    for (int j = 0; j <= 6; ++j) {
        ExactScalar w(detail::binomial(6, j));
        c[j] = (j % 2 ? -w : w) * p.coeff(j);
    }
    return UnivariatePoly<ExactScalar>(c);
}

struct ConicTangencyReport {
    PairingMode mode = PairingMode::literal;
    UnivariatePoly<ExactScalar> pullback;  // S(x(t)), degree <= 12
    std::vector<SquareFreeFactor> factors;
    int multiplicity_at_infinity = 0;
    std::vector<RootEntry> points;  // finite tangency parameters
    int multiplicity_sum = 0;
    bool all_even = false;
    int distinct_points = 0;
    bool proportional_to_p_squared = false;           // parameters are the roots of p
    bool proportional_to_reweighted_squared = false;  // parameters are the roots of sum C(6,j) c_j (-t)^j
    bool restriction_is_gamma_phi_squared = false;    // S|conic == gamma phi|conic^2
};

namespace detail {
inline bool proportional(const UnivariatePoly<ExactScalar>& f, const UnivariatePoly<ExactScalar>& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    return f.leading() * g == g.leading() * f;
}
}  // namespace detail

inline ConicTangencyReport conic_tangency_report(const UnivariatePoly<ExactScalar>& p,
                                                 PairingMode mode = PairingMode::literal,
                                                 const SexticConstants& k = {}, int prec = kDefaultPrecision) {
    if (p.degree() < 1 || discriminant(p).is_zero()) throw DegeneracyError("sextic must have distinct roots");
    ConicTangencyReport r;
    r.mode = mode;
    r.pullback = conic_pullback(trope_sextic(p, mode, k));
    if (r.pullback.is_zero()) throw DegeneracyError("trope sextic contains the null conic");
    auto phi_t = conic_pullback(harmonic_cubic(p, mode));
    r.restriction_is_gamma_phi_squared = r.pullback == k.gamma * (phi_t * phi_t);
    r.factors = square_free_decomposition(r.pullback);
    r.multiplicity_at_infinity = 12 - r.pullback.degree();
    r.all_even = r.multiplicity_at_infinity % 2 == 0;
    r.distinct_points = r.multiplicity_at_infinity > 0 ? 1 : 0;
    r.multiplicity_sum = r.multiplicity_at_infinity;
    for (const auto& f : r.factors) {
        if (f.multiplicity % 2) r.all_even = false;
        r.distinct_points += f.factor.degree();
        r.multiplicity_sum += f.multiplicity * f.factor.degree();
    }
    r.points = roots(r.pullback, prec);
    r.proportional_to_p_squared = detail::proportional(r.pullback, p * p);
    auto w = reweighted_sextic(p);
    r.proportional_to_reweighted_squared = detail::proportional(r.pullback, w * w);
    return r;
}

struct HyperellipticData {
    UnivariatePoly<ExactScalar> p;
    std::vector<ApproxScalar> roots;

    explicit HyperellipticData(UnivariatePoly<ExactScalar> sextic, int prec = kDefaultPrecision) : p(std::move(sextic)) {
        if (p.degree() != 6) throw DomainError("need a sextic");
        if (discriminant(p).is_zero()) throw DegeneracyError("sextic has a repeated root");
        roots = simple_roots(p, prec);
    }
};

struct TropeLineReport {
    std::array<ApproxScalar, 3> line;              // v -> [q beta] = l0 v0 + l1 v1 + l2 v2
    std::vector<ApproxScalar> conic_parameters;    // t with (1,-2t,t^2) on the line
    std::array<ApproxScalar, 2> expected;          // -z_i, -z_j
    BigFloat parameter_error;
    BigFloat min_other_value;                      // smallest relative |[q beta]| at the other four points
    std::array<ApproxScalar, 3> bitangent_form;    // [q b beta] on c1 V_i + c2 V_j: (A, B, C) with A c1^2 + 2B c1c2 + C c2^2
    std::vector<ApproxScalar> bitangent_points;    // c1/c2
    ApproxScalar cross_ratio;                      // (V_j, V_i; s_1, s_2)
    BigFloat cross_ratio_residual;                 // |cross_ratio + 1|
    std::array<ApproxScalar, 2> localized_ratio;   // A / (r(z_i)/(2(z_i - z_j))), C / (r(z_j)/(2(z_j - z_i)))
};

inline TropeLineReport trope_line_intersection(const HyperellipticData& h, int i, int j, int prec = kDefaultPrecision) {
    if (i == j) throw DomainError("need two different roots");
    if (i < 0 || j < 0 || i >= 6 || j >= 6) throw DomainError("root index out of range");
    const ApproxScalar one(1.0, 0.0, prec), zero(0.0, 0.0, prec);
    const ApproxScalar& zi = h.roots[i];
    const ApproxScalar& zj = h.roots[j];
    UnivariatePoly<ApproxScalar> q = UnivariatePoly<ApproxScalar>::from_roots({zi, zj}, one);
    auto [r, rem] = divmod(to_approx(h.p, prec), q);
    (void)rem;

    TropeLineReport out;
    auto qz = YExpansion<ApproxScalar>::polynomial(q, 2);
    for (int k = 0; k < 3; ++k) {
        DolbeaultClass<ApproxScalar> e{zero, zero, zero};
        (k == 0 ? e.v0 : k == 1 ? e.v1 : e.v2) = one;
        out.line[k] = bracket(qz * beta(e));
    }
    auto eval_line = [&](const DolbeaultClass<ApproxScalar>& v) {
        return out.line[0] * v.v0 + out.line[1] * v.v1 + out.line[2] * v.v2;
    };
    UnivariatePoly<ApproxScalar> onconic({out.line[0], ApproxScalar(-2.0, 0.0, prec) * out.line[1], out.line[2]});
    out.conic_parameters = aberth(onconic, prec, "line meets conic");
    out.expected = {-zi, -zj};
    {
        auto d = [&](int a, int b) { return (out.conic_parameters[a] - out.expected[b]).abs(); };
        out.parameter_error = min(max(d(0, 0), d(1, 1)), max(d(0, 1), d(1, 0)));
    }
    BigFloat lnorm = vector_norm({out.line[0], out.line[1], out.line[2]}, prec);
    bool first = true;
    for (int k = 0; k < 6; ++k) {
        if (k == i || k == j) continue;
        auto v = conic_class(-h.roots[k]);
        BigFloat rel = eval_line(v).abs() / (lnorm * vector_norm({v.v0, v.v1, v.v2}, prec));
        if (first || rel < out.min_other_value) out.min_other_value = rel;
        first = false;
    }

    auto vi = conic_class(-zi), vj = conic_class(-zj);
    DolbeaultClass<ApproxScalar> vs{vi.v0 + vj.v0, vi.v1 + vj.v1, vi.v2 + vj.v2};
    ApproxScalar a = c4_brackets(q, r, vi).qb_beta;
    ApproxScalar c = c4_brackets(q, r, vj).qb_beta;
    ApproxScalar s = c4_brackets(q, r, vs).qb_beta;
    ApproxScalar b = (s - a - c) * ApproxScalar(0.5, 0.0, prec);
    out.bitangent_form = {a, b, c};
    out.bitangent_points = aberth(UnivariatePoly<ApproxScalar>({c, b + b, a}), prec, "bitangent points");
    // V_j is c1/c2 = 0, V_i is c1/c2 = infinity
    ProjectivePoint<ApproxScalar> p0(zero, one), pinf(one, zero);
    ProjectivePoint<ApproxScalar> s1(out.bitangent_points[0], one), s2(out.bitangent_points[1], one);
    out.cross_ratio = cross_ratio(p0, pinf, s1, s2);
    out.cross_ratio_residual = (out.cross_ratio + one).abs();
    ApproxScalar two(2.0, 0.0, prec);
    out.localized_ratio = {a / (r(zi) / (two * (zi - zj))), c / (r(zj) / (two * (zj - zi)))};
    return out;
}

}  // namespace hv

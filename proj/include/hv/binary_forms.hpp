#pragma once

// SL(2) structure on S^m C^2: symplectic form, action, moment maps.

#include <string>
#include <vector>

#include "hv/linalg.hpp"
#include "hv/poly.hpp"
#include "hv/roots.hpp"

namespace hv {

// a[0] z^m + a[1] z^{m-1} + ... + a[m]
template <class T>
struct BinaryForm {
    int m = 1;
    std::vector<T> a;

    BinaryForm() : a(2) {}
    BinaryForm(int degree, std::vector<T> coeffs) : m(degree), a(std::move(coeffs)) {
        if (static_cast<int>(a.size()) != m + 1) throw DomainError("binary form needs m+1 coefficients");
    }
    static BinaryForm from_poly(const UnivariatePoly<T>& p, int degree) {
        if (p.degree() > degree) throw DomainError("polynomial degree exceeds form degree");
        std::vector<T> c(degree + 1);
        for (int l = 0; l <= degree; ++l) c[l] = p.coeff(degree - l);
        return BinaryForm(degree, std::move(c));
    }
    UnivariatePoly<T> to_poly() const {
        std::vector<T> c(m + 1);
        for (int l = 0; l <= m; ++l) c[m - l] = a[l];
        return UnivariatePoly<T>(std::move(c));
    }
    bool is_odd() const { return m % 2 == 1; }
    friend bool operator==(const BinaryForm& x, const BinaryForm& y) { return x.m == y.m && x.a == y.a; }
};

// b0 z^2 + b1 z + b2, identified with [[b1/2, b2], [-b0, -b1/2]].
template <class T>
struct MomentImage {
    T b0{}, b1{}, b2{};

    Matrix<T> matrix() const {
        T half = scalar_like(b1, ExactScalar::ratio(1, 2));
        return {{half * b1, b2}, {-b0, -(half * b1)}};
    }
    // det of the matrix: b0 b2 - b1^2/4
    T det() const { return b0 * b2 - scalar_like(b1, ExactScalar::ratio(1, 4)) * b1 * b1; }
    // b1^2 - 4 b0 b2
    T discriminant() const { return b1 * b1 - scalar_like(b0, ExactScalar(4)) * b0 * b2; }
    UnivariatePoly<T> to_poly() const { return UnivariatePoly<T>({b2, b1, b0}); }
    BinaryForm<T> to_form() const { return BinaryForm<T>(2, {b0, b1, b2}); }
    static MomentImage from_form(const BinaryForm<T>& f) {
        if (f.m != 2) throw DomainError("moment image is a quadratic");
        return {f.a[0], f.a[1], f.a[2]};
    }
    friend bool operator==(const MomentImage& x, const MomentImage& y) {
        return x.b0 == y.b0 && x.b1 == y.b1 && x.b2 == y.b2;
    }
};

struct Sl2Action {
    ExactScalar a{1}, b{0}, c{0}, d{1};

    Sl2Action() = default;
    Sl2Action(ExactScalar a_, ExactScalar b_, ExactScalar c_, ExactScalar d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (!(a * d - b * c == ExactScalar(1))) throw DomainError("SL(2) element must have determinant 1");
    }
    friend Sl2Action operator*(const Sl2Action& g, const Sl2Action& h) {
        return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
    }
    Sl2Action inverse() const { return {d, -b, -c, a}; }
};

namespace detail {

inline mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}
inline mpz_class binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}
inline mpz_class falling(int x, int k) {
    mpz_class r = 1;
    for (int j = 0; j < k; ++j) r *= (x - j);
    return r;
}

}  // namespace detail

// sum_{l<k} (-1)^l l!(m-l)! (a_l(p) a_{m-l}(q) - a_{m-l}(p) a_l(q))
template <class T>
T symplectic_form(const BinaryForm<T>& p, const BinaryForm<T>& q) {
    if (p.m != q.m) throw DomainError("symplectic form of forms of different degree");
    const int m = p.m;
    T out{};
    for (int l = 0; 2 * l < m; ++l) {
        mpz_class w = detail::factorial(l) * detail::factorial(m - l);
        if (l % 2) w = -w;
        T term = p.a[l] * q.a[m - l] - p.a[m - l] * q.a[l];
        out = out + scalar_like(term, ExactScalar(w)) * term;
    }
    return out;
}

// (cz+d)^m p((az+b)/(cz+d)) = sum_l a_l (az+b)^{m-l} (cz+d)^l
template <class T>
BinaryForm<T> act(const Sl2Action& g, const BinaryForm<T>& p) {
    const int m = p.m;
    auto lift = [&](const ExactScalar& x) { return scalar_like(p.a[0], x); };
    UnivariatePoly<T> num({lift(g.b), lift(g.a)}), den({lift(g.d), lift(g.c)});
    UnivariatePoly<T> out;
    for (int l = 0; l <= m; ++l) {
        if (is_zero(p.a[l])) continue;
        out = out + p.a[l] * (pow(num, m - l) * pow(den, l));
    }
    return BinaryForm<T>::from_poly(out, m);
}

// Adjoint action: the m = 2 case of act.
template <class T>
MomentImage<T> adjoint(const Sl2Action& g, const MomentImage<T>& mu) {
    return MomentImage<T>::from_form(act(g, mu.to_form()));
}

// Coefficients of the transvectant Omega^{m-1}(f (x) f):
// b_k = sum_{i,j} table[k][i][j] a_i a_j.
inline std::vector<Matrix<mpz_class>> moment_coefficient_table(int m) {
    if (m < 1 || m % 2 == 0) throw DomainError("moment map needs odd m");
    const int n = m - 1;
    std::vector<Matrix<mpz_class>> t(3, Matrix<mpz_class>(m + 1, std::vector<mpz_class>(m + 1)));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) {
            int k = i + j - n;
            if (k < 0 || k > 2) continue;
            const int al = m - i, be = i, ga = m - j, de = j;
            mpz_class sum = 0;
            for (int s = 0; s <= n; ++s) {
                mpz_class term = detail::binomial(n, s) * detail::falling(al, n - s) * detail::falling(be, s) *
                                 detail::falling(de, n - s) * detail::falling(ga, s);
                if (s % 2) term = -term;
                sum += term;
            }
            t[k][i][j] = sum;
        }
    return t;
}

template <class T>
MomentImage<T> moment_map_coeffs(const BinaryForm<T>& p) {
    auto table = moment_coefficient_table(p.m);
    T b[3] = {T{}, T{}, T{}};
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i <= p.m; ++i)
            for (int j = 0; j <= p.m; ++j) {
                const mpz_class& c = table[k][i][j];
                if (c == 0) continue;
                T term = p.a[i] * p.a[j];
                b[k] = b[k] + scalar_like(term, ExactScalar(c)) * term;
            }
    return {b[0], b[1], b[2]};
}

// The cubic case written in coefficients.
template <class T>
MomentImage<T> moment_map_m3(const BinaryForm<T>& p) {
    if (p.m != 3) throw DomainError("moment_map_m3 needs m = 3");
    const auto& a = p.a;
    auto k = [&](long v) { return scalar_like(a[0], ExactScalar(v)); };
    return {k(3) * a[0] * a[2] - a[1] * a[1], k(9) * a[0] * a[3] - a[1] * a[2], k(3) * a[1] * a[3] - a[2] * a[2]};
}

// (u0 z + u1)^2: the symmetric square of u.
template <class T>
MomentImage<T> nilpotent_moment(const T& u0, const T& u1) {
    return {u0 * u0, scalar_like(u0, ExactScalar(2)) * u0 * u1, u1 * u1};
}

inline int nilpotent_stratum_dimension(int g, int k) {
    if (g < 2) throw DomainError("genus must be at least 2");
    if (k < 0 || k > g - 1) throw DomainError("k must lie in [0, g-1]");
    return 3 * (g - 1) - k;
}

inline long divisor_degree(int m) {
    if (m < 1 || m % 2 == 0) throw DomainError("divisor degree needs odd positive m");
    long k = (m + 1) / 2;
    return k * (4 * k * k - 1) / 3;
}

struct IsotropicFlagReport {
    int m = 1, k = 1;
    // bases[j] spans V_j = {a_0 = ... = a_{j-1} = 0}, j = 0..m (decreasing)
    std::vector<std::vector<BinaryForm<ExactScalar>>> bases;
    std::vector<bool> isotropic;  // per j
    bool vk_isotropic = false;
    bool vk_maximal = false;
    int vk_dimension = 0;
};

inline BinaryForm<ExactScalar> unit_form(int m, int l) {
    std::vector<ExactScalar> c(m + 1);
    c[l] = ExactScalar(1);
    return BinaryForm<ExactScalar>(m, std::move(c));
}

inline IsotropicFlagReport isotropic_flag(int m) {
    if (m < 1 || m % 2 == 0) throw DomainError("isotropic flag needs odd m");
    IsotropicFlagReport r;
    r.m = m;
    r.k = (m + 1) / 2;
    auto isotropic = [&](const std::vector<BinaryForm<ExactScalar>>& basis) {
        for (const auto& v : basis)
            for (const auto& w : basis)
                if (!symplectic_form(v, w).is_zero()) return false;
        return true;
    };
    for (int j = 0; j <= m; ++j) {
        std::vector<BinaryForm<ExactScalar>> basis;
        for (int l = j; l <= m; ++l) basis.push_back(unit_form(m, l));
        r.isotropic.push_back(isotropic(basis));
        r.bases.push_back(std::move(basis));
    }
    const auto& vk = r.bases[r.k];
    r.vk_dimension = static_cast<int>(vk.size());
    r.vk_isotropic = r.isotropic[r.k];
    // adding any further coordinate direction breaks isotropy
    bool maximal = 2 * r.vk_dimension == m + 1;
    for (int l = 0; l < r.k; ++l) {
        auto bigger = vk;
        bigger.push_back(unit_form(m, l));
        if (isotropic(bigger)) maximal = false;
    }
    r.vk_maximal = maximal;
    return r;
}

struct KernelReport {
    std::vector<ApproxScalar> b;
    BigFloat residual;  // ||A b|| / (||A|| ||b||)
    bool rank_warning = false;
};

inline Matrix<ApproxScalar> skew_matrix(const std::vector<ApproxScalar>& alphas, int m) {
    Matrix<ApproxScalar> a;
    for (const auto& ai : alphas) {
        std::vector<ApproxScalar> row;
        for (const auto& aj : alphas) row.push_back(pow(aj - ai, m));
        a.push_back(std::move(row));
    }
    return a;
}

// Kernel of A_ij = (alpha_j - alpha_i)^m, largest entry scaled to 1.
inline KernelReport skew_matrix_kernel(const std::vector<ApproxScalar>& alphas, int m,
                                       int prec = kDefaultPrecision) {
    if (m < 1 || m % 2 == 0) throw DomainError("skew kernel needs odd m");
    BigFloat tol = half_precision_tolerance(prec);
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j)
            if ((alphas[i] - alphas[j]).abs() < tol) throw DegeneracyError("repeated roots in skew kernel");
    auto a = skew_matrix(alphas, m);
    auto kr = kernel_vector(a, prec);
    const int n = static_cast<int>(alphas.size());
    KernelReport out{kr.vector, BigFloat(prec), kr.rank < n - 1};
    if (kr.rank == n) throw DegeneracyError("skew matrix has trivial kernel");
    BigFloat an(prec);
    std::vector<ApproxScalar> ab(n, ApproxScalar(0.0, 0.0, prec));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            an = an + a[i][j].norm();
            ab[i] = ab[i] + a[i][j] * out.b[j];
        }
    BigFloat denom = sqrt(an) * vector_norm(out.b, prec);
    out.residual = vector_norm(ab, prec);
    if (!denom.is_zero()) out.residual = out.residual / denom;
    return out;
}

struct PowerSumReconstruction {
    std::vector<ApproxScalar> b;
    std::vector<ApproxScalar> alphas;
    BigFloat residual;  // max coefficient error of sum b_i (z-alpha_i)^m - p
};

inline std::vector<ApproxScalar> simple_roots(const UnivariatePoly<ExactScalar>& p, int prec) {
    std::vector<ApproxScalar> out;
    for (auto& r : roots(p, prec)) {
        if (r.multiplicity != 1) throw DegeneracyError("repeated roots in " + p.str());
        out.push_back(r.root);
    }
    return out;
}

inline UnivariatePoly<ApproxScalar> power_sum(const std::vector<ApproxScalar>& b,
                                              const std::vector<ApproxScalar>& alphas, int m, int prec) {
    UnivariatePoly<ApproxScalar> s;
    for (std::size_t i = 0; i < b.size(); ++i) {
        UnivariatePoly<ApproxScalar> lin({-alphas[i], ApproxScalar(1.0, 0.0, prec)});
        s = s + b[i] * pow(lin, m);
    }
    return s;
}

inline PowerSumReconstruction reconstruct_from_powers(const BinaryForm<ExactScalar>& p,
                                                      int prec = kDefaultPrecision) {
    if (p.a[0].is_zero()) throw DomainError("reconstruction needs a_0 != 0");
    auto poly = p.to_poly();
    auto alphas = simple_roots(poly, prec);
    auto kr = skew_matrix_kernel(alphas, p.m, prec);
    ApproxScalar sum(0.0, 0.0, prec);
    for (const auto& x : kr.b) sum = sum + x;
    if (sum.abs() < half_precision_tolerance(prec)) throw DegeneracyError("kernel vector sums to zero");
    ApproxScalar scale = ApproxScalar(p.a[0], prec) / sum;
    PowerSumReconstruction out{{}, alphas, BigFloat(prec)};
    for (const auto& x : kr.b) out.b.push_back(x * scale);
    auto s = power_sum(out.b, alphas, p.m, prec);
    auto target = to_approx(poly, prec);
    for (int k = 0; k <= p.m; ++k) out.residual = max(out.residual, (s.coeff(k) - target.coeff(k)).abs());
    return out;
}

// sum_{i,j} b_i b_j (alpha_i - alpha_j)^{m-1} (z - alpha_i)(z - alpha_j)
inline MomentImage<ApproxScalar> moment_map_roots(const BinaryForm<ExactScalar>& p, int prec = kDefaultPrecision) {
    auto rec = reconstruct_from_powers(p, prec);
    const std::size_t n = rec.b.size();
    MomentImage<ApproxScalar> mu{ApproxScalar(0.0, 0.0, prec), ApproxScalar(0.0, 0.0, prec),
                                 ApproxScalar(0.0, 0.0, prec)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ApproxScalar w = rec.b[i] * rec.b[j];
            if (p.m > 1) w = w * pow(rec.alphas[i] - rec.alphas[j], p.m - 1);
            const auto& ai = rec.alphas[i];
            const auto& aj = rec.alphas[j];
            mu.b0 = mu.b0 + w;
            mu.b1 = mu.b1 - w * (ai + aj);
            mu.b2 = mu.b2 + w * ai * aj;
        }
    return mu;
}

}  // namespace hv

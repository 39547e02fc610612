#pragma once

// Small dense linear algebra: exact elimination and complex Householder QR.

#include <cstddef>
#include <vector>

#include "hv/errors.hpp"
#include "hv/scalar.hpp"

namespace hv {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Determinant by Gaussian elimination over a field (exact zero pivots only).
template <class T>
T determinant(Matrix<T> a) {
    const std::size_t n = a.size();
    if (n == 0) return scalar_like(T{}, ExactScalar(1));
    T det = scalar_like(a[0][0], ExactScalar(1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) return T{};
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        T inv = scalar_like(a[col][col], ExactScalar(1)) / a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero(a[r][col])) continue;
            T f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
        }
    }
    return det;
}

// Determinant with no division (cofactor expansion).  For ring-valued 2x2/3x3 use.
template <class T>
T det2(const T& a, const T& b, const T& c, const T& d) {
    return a * d - b * c;
}

// Exact inverse of a square matrix over a field.
template <class T>
Matrix<T> inverse(Matrix<T> a) {
    const std::size_t n = a.size();
    Matrix<T> inv(n, std::vector<T>(n));
    for (std::size_t k = 0; k < n; ++k) inv[k][k] = scalar_like(a[0][0], ExactScalar(1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) throw DomainError("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        T s = scalar_like(a[col][col], ExactScalar(1)) / a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] = a[col][c] * s;
            inv[col][c] = inv[col][c] * s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            T f = a[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] = a[r][c] - f * a[col][c];
                inv[r][c] = inv[r][c] - f * inv[col][c];
            }
        }
    }
    return inv;
}

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.size(), std::vector<T>(b.empty() ? 0 : b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}

inline BigFloat vector_norm(const std::vector<ApproxScalar>& v, int prec) {
    BigFloat s(prec);
    for (const auto& x : v) s = s + x.norm();
    return sqrt(s);
}

struct LeastSquaresResult {
    std::vector<ApproxScalar> x;
    BigFloat residual;  // ||Ax - y|| / ||y||
    int rank = 0;
};

// Complex least squares by Householder QR with column pivoting.
// Throws ConditioningError when the numerical rank is below the column count.
inline LeastSquaresResult least_squares(Matrix<ApproxScalar> a, std::vector<ApproxScalar> y, int prec) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    if (m < n) throw ConditioningError("fewer samples than unknowns", static_cast<int>(m));
    const Matrix<ApproxScalar> a0 = a;
    const std::vector<ApproxScalar> y0 = y;
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    BigFloat tol = BigFloat::pow2(-(prec / 2), prec);
    BigFloat r00(prec);
    int rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
        // pivot on the largest remaining column
        std::size_t best = k;
        BigFloat bestn(prec);
        for (std::size_t c = k; c < n; ++c) {
            BigFloat s(prec);
            for (std::size_t r = k; r < m; ++r) s = s + a[r][c].norm();
            if (bestn < s) {
                bestn = s;
                best = c;
            }
        }
        if (best != k) {
            for (auto& row : a) std::swap(row[k], row[best]);
            std::swap(perm[k], perm[best]);
        }
        BigFloat colnorm = sqrt(bestn);
        if (k == 0) r00 = colnorm;
        if (colnorm.is_zero() || colnorm < tol * r00) break;
        // v = x - alpha e1, alpha = -phase(x0) ||x||
        ApproxScalar x0 = a[k][k];
        ApproxScalar phase = x0.is_zero() ? ApproxScalar(1.0, 0.0, prec) : x0 / ApproxScalar(x0.abs(), BigFloat(prec));
        ApproxScalar alpha = -phase * ApproxScalar(colnorm, BigFloat(prec));
        std::vector<ApproxScalar> v(m - k);
        for (std::size_t r = k; r < m; ++r) v[r - k] = a[r][k];
        v[0] = v[0] - alpha;
        BigFloat vn(prec);
        for (const auto& e : v) vn = vn + e.norm();
        if (!vn.is_zero()) {
            auto reflect = [&](auto get) {
                ApproxScalar dot(0.0, 0.0, prec);
                for (std::size_t r = 0; r < v.size(); ++r) dot = dot + v[r].conj() * get(r + k);
                ApproxScalar f = dot * ApproxScalar(BigFloat(2.0, prec) / vn, BigFloat(prec));
                for (std::size_t r = 0; r < v.size(); ++r) get(r + k) = get(r + k) - f * v[r];
            };
            for (std::size_t c = k; c < n; ++c) reflect([&](std::size_t r) -> ApproxScalar& { return a[r][c]; });
            reflect([&](std::size_t r) -> ApproxScalar& { return y[r]; });
        }
        ++rank;
    }
    if (rank < static_cast<int>(n))
        throw ConditioningError("rank-deficient sample set", rank);
    std::vector<ApproxScalar> z(n, ApproxScalar(0.0, 0.0, prec));
    for (std::size_t k = n; k-- > 0;) {
        ApproxScalar s = y[k];
        for (std::size_t c = k + 1; c < n; ++c) s = s - a[k][c] * z[c];
        z[k] = s / a[k][k];
    }
    LeastSquaresResult out{std::vector<ApproxScalar>(n, ApproxScalar(0.0, 0.0, prec)), BigFloat(prec), rank};
    for (std::size_t k = 0; k < n; ++k) out.x[perm[k]] = z[k];
    std::vector<ApproxScalar> res(m, ApproxScalar(0.0, 0.0, prec));
    for (std::size_t r = 0; r < m; ++r) {
        ApproxScalar s = -y0[r];
        for (std::size_t c = 0; c < n; ++c) s = s + a0[r][c] * out.x[c];
        res[r] = s;
    }
    BigFloat yn = vector_norm(y0, prec);
    out.residual = vector_norm(res, prec);
    if (!yn.is_zero()) out.residual = out.residual / yn;
    return out;
}

struct KernelResult {
    std::vector<ApproxScalar> vector;  // largest entry scaled to 1
    int rank = 0;                      // numerical rank of the matrix
};

// Null vector of a square complex matrix via elimination with complete pivoting.
inline KernelResult kernel_vector(Matrix<ApproxScalar> a, int prec) {
    const std::size_t n = a.size();
    std::vector<std::size_t> cperm(n);
    for (std::size_t k = 0; k < n; ++k) cperm[k] = k;
    BigFloat scale(prec);
    for (const auto& row : a)
        for (const auto& e : row) scale = max(scale, e.abs());
    BigFloat tol = BigFloat::pow2(-(prec / 2), prec) * scale;
    std::size_t rank = 0;
    for (; rank < n; ++rank) {
        std::size_t pr = rank, pc = rank;
        BigFloat best(prec);
        for (std::size_t r = rank; r < n; ++r)
            for (std::size_t c = rank; c < n; ++c)
                if (best < a[r][c].abs()) {
                    best = a[r][c].abs();
                    pr = r;
                    pc = c;
                }
        if (best <= tol) break;
        std::swap(a[pr], a[rank]);
        for (auto& row : a) std::swap(row[pc], row[rank]);
        std::swap(cperm[pc], cperm[rank]);
        for (std::size_t r = rank + 1; r < n; ++r) {
            ApproxScalar f = a[r][rank] / a[rank][rank];
            for (std::size_t c = rank; c < n; ++c) a[r][c] = a[r][c] - f * a[rank][c];
        }
    }
    KernelResult out{std::vector<ApproxScalar>(n, ApproxScalar(0.0, 0.0, prec)), static_cast<int>(rank)};
    if (rank == n) return out;  // trivial kernel; caller checks rank
    std::vector<ApproxScalar> z(n, ApproxScalar(0.0, 0.0, prec));
    z[rank] = ApproxScalar(1.0, 0.0, prec);
    for (std::size_t k = rank; k-- > 0;) {
        ApproxScalar s(0.0, 0.0, prec);
        for (std::size_t c = k + 1; c < n; ++c) s = s - a[k][c] * z[c];
        z[k] = s / a[k][k];
    }
    for (std::size_t k = 0; k < n; ++k) out.vector[cperm[k]] = z[k];
    std::size_t big = 0;
    for (std::size_t k = 1; k < n; ++k)
        if (out.vector[big].abs() < out.vector[k].abs()) big = k;
    ApproxScalar piv = out.vector[big];
    for (auto& e : out.vector) e = e / piv;
    return out;
}

}  // namespace hv

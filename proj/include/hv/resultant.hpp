#pragma once

#include "hv/linalg.hpp"
#include "hv/poly.hpp"

namespace hv {

template <class T>
Matrix<T> sylvester_matrix(const UnivariatePoly<T>& p, const UnivariatePoly<T>& q) {
    const int m = p.degree(), n = q.degree();
    const int size = m + n;
    Matrix<T> s(size, std::vector<T>(size));
    // rows hold descending coefficients
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[r][r + k] = p.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[n + r][r + k] = q.coeff(n - k);
    return s;
}

template <class T>
T resultant(const UnivariatePoly<T>& p, const UnivariatePoly<T>& q) {
    if (p.is_zero() || q.is_zero()) throw DomainError("resultant of a zero polynomial");
    if (p.degree() == 0 && q.degree() == 0) return scalar_like(p.leading(), ExactScalar(1));
    return determinant(sylvester_matrix(p, q));
}

// (-1)^{n(n-1)/2} Res(p, p') / a_n
template <class T>
T discriminant(const UnivariatePoly<T>& p) {
    if (p.degree() < 2) throw DomainError("discriminant needs degree >= 2");
    const int n = p.degree();
    T r = resultant(p, p.derivative()) / p.leading();
    return ((n * (n - 1) / 2) % 2) ? -r : r;
}

}  // namespace hv

#pragma once

// Points of P^1 as [x:y]; infinity is [1:0].

#include <array>

#include "hv/errors.hpp"
#include "hv/scalar.hpp"

namespace hv {

template <class T>
class ProjectivePoint {
public:
    ProjectivePoint(const T& finite) : x_(finite), y_(scalar_like(finite, ExactScalar(1))) {}
    ProjectivePoint(const T& x, const T& y) : x_(x), y_(y) {
        if (is_zero(x) && is_zero(y)) throw DomainError("[0:0] is not a point");
    }
    static ProjectivePoint infinity(const T& like = T{}) {
        return ProjectivePoint(scalar_like(like, ExactScalar(1)), T{});
    }
    bool is_infinity() const { return is_zero(y_); }
    const T& x() const { return x_; }
    const T& y() const { return y_; }
    T affine() const {
        if (is_infinity()) throw DomainError("affine value of infinity");
        return x_ / y_;
    }

private:
    T x_, y_;
};

template <class T>
T bracket2(const ProjectivePoint<T>& a, const ProjectivePoint<T>& b) {
    return a.x() * b.y() - a.y() * b.x();
}

namespace detail {
inline bool coincident(const ExactScalar& d) { return d.is_zero(); }
inline bool coincident(const ApproxScalar& d) {
    return d.abs() < half_precision_tolerance(d.precision_bits());
}
}  // namespace detail

// ((a-c)(b-d)) / ((a-d)(b-c)), extended to infinity by homogeneous determinants.
template <class T>
T cross_ratio(const ProjectivePoint<T>& a, const ProjectivePoint<T>& b, const ProjectivePoint<T>& c,
              const ProjectivePoint<T>& d) {
    T ac = bracket2(a, c), bd = bracket2(b, d), ad = bracket2(a, d), bc = bracket2(b, c);
    T ab = bracket2(a, b), cd = bracket2(c, d);
    for (const T* v : {&ac, &bd, &ad, &bc, &ab, &cd})
        if (detail::coincident(*v)) throw DomainError("cross-ratio of coincident points");
    return (ac * bd) / (ad * bc);
}

// z -> (az+b)/(cz+d)
template <class T>
ProjectivePoint<T> mobius(const std::array<T, 4>& g, const ProjectivePoint<T>& p) {
    return ProjectivePoint<T>(g[0] * p.x() + g[1] * p.y(), g[2] * p.x() + g[3] * p.y());
}

}  // namespace hv

#pragma once

// Roots with exact multiplicities: Yun decomposition decides multiplicity,
// Aberth-Ehrlich iteration refines each square-free factor.

#include <string>
#include <vector>

#include "hv/poly.hpp"

namespace hv {

struct RootEntry {
    ApproxScalar root;
    int multiplicity = 1;
};

namespace detail {

inline ApproxScalar horner(const UnivariatePoly<ApproxScalar>& p, const ApproxScalar& z, ApproxScalar& dp) {
    int prec = z.precision_bits();
    ApproxScalar v(0.0, 0.0, prec);
    dp = ApproxScalar(0.0, 0.0, prec);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + v;
        v = v * z + *it;
    }
    return v;
}

}  // namespace detail

// Simultaneous refinement of all roots of a polynomial with approximate
// coefficients, assumed square-free.
inline std::vector<ApproxScalar> aberth(const UnivariatePoly<ApproxScalar>& p, int prec, const std::string& label) {
    const int n = p.degree();
    if (n < 1) return {};
    const int work = prec + 32;
    UnivariatePoly<ApproxScalar> f = p.map([work](const ApproxScalar& c) { return c.with_precision(work); });
    ApproxScalar lead = f.leading();
    if (n == 1) return {(-f.coeff(0) / lead).with_precision(prec)};
    // Cauchy bound for the starting circle
    BigFloat radius(1.0, work);
    for (int k = 0; k < n; ++k) radius = max(radius, BigFloat(1.0, work) + (f.coeff(k) / lead).abs());
    BigFloat half(0.5, work);
    std::vector<ApproxScalar> z;
    BigFloat twopi = BigFloat::pi(work) * BigFloat(2.0, work);
    for (int k = 0; k < n; ++k) {
        BigFloat theta = twopi * BigFloat(static_cast<double>(k) / n, work) + BigFloat(0.4, work);
        z.push_back(ApproxScalar::polar(radius * half, theta));
    }
    BigFloat stop = BigFloat::pow2(-(work - 8), work);
    bool done = false;
    for (int iter = 0; iter < 2000 && !done; ++iter) {
        done = true;
        for (int k = 0; k < n; ++k) {
            ApproxScalar d;
            ApproxScalar v = detail::horner(f, z[k], d);
            if (v.is_zero()) continue;
            ApproxScalar w = v / d;
            ApproxScalar s(0.0, 0.0, work);
            for (int j = 0; j < n; ++j)
                if (j != k) s = s + ApproxScalar(1.0, 0.0, work) / (z[k] - z[j]);
            ApproxScalar step = w / (ApproxScalar(1.0, 0.0, work) - w * s);
            z[k] = z[k] - step;
            if (stop * (BigFloat(1.0, work) + z[k].abs()) < step.abs()) done = false;
        }
    }
    // Newton polish
    for (auto& r : z)
        for (int it = 0; it < 3; ++it) {
            ApproxScalar d;
            ApproxScalar v = detail::horner(f, r, d);
            if (v.is_zero() || d.is_zero()) break;
            r = r - v / d;
        }
    if (!done) throw PrecisionError("root iteration did not converge for " + label);
    std::vector<ApproxScalar> out;
    for (auto& r : z) out.push_back(r.with_precision(prec));
    return out;
}

inline BigFloat max_coeff_abs(const UnivariatePoly<ApproxScalar>& p, int prec) {
    BigFloat m(prec);
    for (const auto& c : p.coefficients()) m = max(m, c.abs());
    return m;
}

// All roots of an exact polynomial with exact multiplicities.
inline std::vector<RootEntry> roots(const UnivariatePoly<ExactScalar>& p, int precision_bits = kDefaultPrecision) {
    if (p.is_zero()) throw DomainError("roots of the zero polynomial");
    if (p.degree() < 1) throw DomainError("roots of a constant polynomial");
    std::vector<RootEntry> out;
    for (const auto& sf : square_free_decomposition(p)) {
        for (auto& r : aberth(to_approx(sf.factor, precision_bits + 32), precision_bits, p.str()))
            out.push_back({std::move(r), sf.multiplicity});
    }
    // postcondition: lead * prod (z - r)^m reproduces p
    int work = precision_bits + 32;
    UnivariatePoly<ApproxScalar> rebuilt = UnivariatePoly<ApproxScalar>::constant(ApproxScalar(p.leading(), work));
    int total = 0;
    for (const auto& e : out) {
        UnivariatePoly<ApproxScalar> lin({-e.root.with_precision(work), ApproxScalar(1.0, 0.0, work)});
        for (int k = 0; k < e.multiplicity; ++k) rebuilt = rebuilt * lin;
        total += e.multiplicity;
    }
    auto ap = to_approx(p, work);
    BigFloat err(work);
    for (int k = 0; k <= p.degree(); ++k) err = max(err, (rebuilt.coeff(k) - ap.coeff(k)).abs());
    BigFloat scale = max(BigFloat(1.0, work), max_coeff_abs(ap, work));
    if (total != p.degree() || half_precision_tolerance(precision_bits) * scale < err)
        throw PrecisionError("root reconstruction failed for " + p.str());
    return out;
}

}  // namespace hv

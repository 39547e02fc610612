#pragma once

// Partial moment maps of a tensor in C^2 (x) C^2 (x) C^2.

#include <array>
#include <optional>

#include "hv/binary_forms.hpp"

namespace hv {

template <class T>
using Mat2 = std::array<std::array<T, 2>, 2>;

template <class T>
struct TripleTensor {
    // psi[i][j][k] in the basis u_i (x) v_j (x) w_k
    std::array<std::array<std::array<T, 2>, 2>, 2> psi{};
    // <u1,u2>, <v1,v2>, <w1,w2>
    std::array<T, 3> pairing{};

    static TripleTensor with_unit_pairings() {
        TripleTensor t;
        for (auto& p : t.pairing) p = scalar_like(T{}, ExactScalar(1));
        return t;
    }
    T& at(int i, int j, int k) { return psi[i][j][k]; }
    const T& at(int i, int j, int k) const { return psi[i][j][k]; }
};

// Entry of psi with the chosen leg index first: slot `pos` of (i,j,k).
template <class T>
const T& leg_entry(const TripleTensor<T>& t, int leg, int s, int r, int c) {
    switch (leg) {
        case 1: return t.psi[s][r][c];
        case 2: return t.psi[r][s][c];
        case 3: return t.psi[r][c][s];
    }
    throw DomainError("leg must be 1, 2 or 3");
}

// psi = x_1 (x) e_1 + x_2 (x) e_2 along the chosen leg.
template <class T>
std::array<Mat2<T>, 2> slice(const TripleTensor<T>& t, int leg) {
    std::array<Mat2<T>, 2> e;
    for (int s = 0; s < 2; ++s)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) e[s][r][c] = leg_entry(t, leg, s, r, c);
    return e;
}

template <class T>
TripleTensor<T> unslice(const std::array<Mat2<T>, 2>& e, int leg, const std::array<T, 3>& pairing) {
    TripleTensor<T> t;
    t.pairing = pairing;
    for (int s = 0; s < 2; ++s)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                switch (leg) {
                    case 1: t.psi[s][r][c] = e[s][r][c]; break;
                    case 2: t.psi[r][s][c] = e[s][r][c]; break;
                    case 3: t.psi[r][c][s] = e[s][r][c]; break;
                    default: throw DomainError("leg must be 1, 2 or 3");
                }
            }
    return t;
}

// Pairings of the two legs other than `leg`, and of `leg` itself.
template <class T>
std::pair<T, T> other_pairings(const TripleTensor<T>& t, int leg) {
    switch (leg) {
        case 1: return {t.pairing[1], t.pairing[2]};
        case 2: return {t.pairing[0], t.pairing[2]};
        case 3: return {t.pairing[0], t.pairing[1]};
    }
    throw DomainError("leg must be 1, 2 or 3");
}

// (e, e') = sum e_jk e'_j'k' <v_j, v_j'> <w_k, w_k'>
template <class T>
T product_pairing(const Mat2<T>& e, const Mat2<T>& f, const T& wv, const T& ww) {
    T s = e[0][0] * f[1][1] - e[0][1] * f[1][0] - e[1][0] * f[0][1] + e[1][1] * f[0][0];
    return wv * ww * s;
}

// phi = (e1,e1) x1x1 + (e1,e2)(x1x2 + x2x1) + (e2,e2) x2x2, as b0 z^2 + b1 z + b2.
template <class T>
MomentImage<T> phi(const TripleTensor<T>& t, int leg) {
    auto e = slice(t, leg);
    auto [wv, ww] = other_pairings(t, leg);
    T e11 = product_pairing(e[0], e[0], wv, ww);
    T e12 = product_pairing(e[0], e[1], wv, ww);
    T e22 = product_pairing(e[1], e[1], wv, ww);
    return {e11, scalar_like(e12, ExactScalar(2)) * e12, e22};
}

// 2 <x1,x2>^2 ((e1,e1)(e2,e2) - (e1,e2)^2)
template <class T>
T trace_phi_squared(const TripleTensor<T>& t, int leg) {
    auto e = slice(t, leg);
    auto [wv, ww] = other_pairings(t, leg);
    const T& w = t.pairing[leg - 1];
    T e11 = product_pairing(e[0], e[0], wv, ww);
    T e12 = product_pairing(e[0], e[1], wv, ww);
    T e22 = product_pairing(e[1], e[1], wv, ww);
    return scalar_like(w, ExactScalar(2)) * w * w * (e11 * e22 - e12 * e12);
}

template <class T>
struct TraceReport {
    std::array<T, 3> traces;
    bool equal = false;
    T common{};
};

template <class T>
TraceReport<T> verify_trace_equality(const TripleTensor<T>& t) {
    TraceReport<T> r;
    for (int leg = 1; leg <= 3; ++leg) r.traces[leg - 1] = trace_phi_squared(t, leg);
    r.equal = r.traces[0] == r.traces[1] && r.traces[1] == r.traces[2];
    r.common = r.traces[0];
    return r;
}

// e2 in the basis where e1 = v'_1 (x) w_1 + v'_2 (x) w_2, v' = E1^T v.
struct SliceData {
    ExactScalar a, b, c, d;
    Mat2<ExactScalar> e1;         // basis change
    ExactScalar pairing_scale;    // <v'_1, v'_2> / <v_1, v_2> = det E1
};

inline std::optional<SliceData> slice_data(const TripleTensor<ExactScalar>& t, int leg) {
    auto e = slice(t, leg);
    ExactScalar det = e[0][0][0] * e[0][1][1] - e[0][0][1] * e[0][1][0];
    if (det.is_zero()) return std::nullopt;
    Matrix<ExactScalar> e1 = {{e[0][0][0], e[0][0][1]}, {e[0][1][0], e[0][1][1]}};
    Matrix<ExactScalar> e2 = {{e[1][0][0], e[1][0][1]}, {e[1][1][0], e[1][1][1]}};
    auto m = matmul(inverse(e1), e2);
    return SliceData{m[0][0], m[0][1], m[1][0], m[1][1], e[0], det};
}

// Rebuild the leg-slices from SliceData: E2 = E1 M.
inline std::array<Mat2<ExactScalar>, 2> slices_from_data(const SliceData& s) {
    Matrix<ExactScalar> e1 = {{s.e1[0][0], s.e1[0][1]}, {s.e1[1][0], s.e1[1][1]}};
    auto e2 = matmul(e1, Matrix<ExactScalar>{{s.a, s.b}, {s.c, s.d}});
    return {s.e1, Mat2<ExactScalar>{{{e2[0][0], e2[0][1]}, {e2[1][0], e2[1][1]}}}};
}

// Apply g to one leg.
template <class T>
TripleTensor<T> act_on_leg(const Sl2Action& g, const TripleTensor<T>& t, int leg) {
    auto e = slice(t, leg);
    T ga = scalar_like(t.pairing[0], g.a), gb = scalar_like(t.pairing[0], g.b);
    T gc = scalar_like(t.pairing[0], g.c), gd = scalar_like(t.pairing[0], g.d);
    std::array<Mat2<T>, 2> out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            out[0][r][c] = ga * e[0][r][c] + gb * e[1][r][c];
            out[1][r][c] = gc * e[0][r][c] + gd * e[1][r][c];
        }
    return unslice(out, leg, t.pairing);
}

// Cayley's hyperdeterminant of the 2x2x2 array.
template <class T>
T hyperdeterminant(const TripleTensor<T>& t) {
    auto a = [&](int i, int j, int k) { return t.psi[i][j][k]; };
    auto k2 = [&](long v) { return scalar_like(t.pairing[0], ExactScalar(v)); };
    T s1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
           a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) + a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
    T s2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 0, 1) * a(1, 1, 0) + a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 0) * a(1, 0, 1) +
           a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 0) * a(0, 1, 1) + a(0, 0, 1) * a(1, 1, 0) * a(0, 1, 0) * a(1, 0, 1) +
           a(0, 0, 1) * a(1, 1, 0) * a(1, 0, 0) * a(0, 1, 1) + a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 0) * a(0, 1, 1);
    T s3 = a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) + a(1, 1, 1) * a(1, 0, 0) * a(0, 1, 0) * a(0, 0, 1);
    return s1 - k2(2) * s2 + k2(4) * s3;
}

}  // namespace hv

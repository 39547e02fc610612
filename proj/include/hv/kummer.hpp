#pragma once

// Theta characteristics of y^2 = p(z) as subsets of the six branch points
// modulo complement, and the 16_6 incidence of tropes and nodes.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hv/errors.hpp"

namespace hv {

namespace detail {
constexpr std::uint8_t kAllBranchPoints = 0x3f;

// |T| <= 3, and for |T| = 3 the representative containing point 1.
constexpr std::uint8_t normalize_subset(std::uint8_t mask) {
    mask &= kAllBranchPoints;
    int n = std::popcount(static_cast<unsigned>(mask));
    if (n > 3 || (n == 3 && !(mask & 1))) mask = static_cast<std::uint8_t>(~mask & kAllBranchPoints);
    return mask;
}

inline std::uint8_t mask_of(const std::vector<int>& points) {
    std::uint8_t m = 0;
    for (int p : points) {
        if (p < 1 || p > 6) throw DomainError("branch points are numbered 1..6");
        m ^= static_cast<std::uint8_t>(1u << (p - 1));
    }
    return m;
}

inline std::string subset_str(std::uint8_t mask) {
    std::string s = "{";
    for (int k = 0; k < 6; ++k)
        if (mask & (1u << k)) {
            if (s.size() > 1) s += ",";
            s += std::to_string(k + 1);
        }
    return s + "}";
}
}  // namespace detail

class ThetaChar {
public:
    explicit ThetaChar(const std::vector<int>& points) : ThetaChar(detail::mask_of(points)) {}
    ThetaChar(std::initializer_list<int> points) : ThetaChar(std::vector<int>(points)) {}
    static ThetaChar from_mask(std::uint8_t mask) { return ThetaChar(mask); }

    std::uint8_t mask() const { return mask_; }
    int size() const { return std::popcount(static_cast<unsigned>(mask_)); }
    std::string str() const { return detail::subset_str(mask_); }
    friend bool operator==(const ThetaChar&, const ThetaChar&) = default;
    friend auto operator<=>(const ThetaChar&, const ThetaChar&) = default;

private:
    explicit ThetaChar(std::uint8_t mask) : mask_(detail::normalize_subset(mask)) {
        if (size() % 2 == 0) throw DomainError("a theta characteristic is an odd subset");
    }
    std::uint8_t mask_;
};

class TwoTorsion {
public:
    TwoTorsion() = default;
    explicit TwoTorsion(const std::vector<int>& points) : TwoTorsion(detail::mask_of(points)) {}
    TwoTorsion(std::initializer_list<int> points) : TwoTorsion(std::vector<int>(points)) {}
    static TwoTorsion from_mask(std::uint8_t mask) { return TwoTorsion(mask); }

    std::uint8_t mask() const { return mask_; }
    bool is_identity() const { return mask_ == 0; }
    std::string str() const { return detail::subset_str(mask_); }
    friend bool operator==(const TwoTorsion&, const TwoTorsion&) = default;
    friend auto operator<=>(const TwoTorsion&, const TwoTorsion&) = default;

private:
    explicit TwoTorsion(std::uint8_t mask) : mask_(detail::normalize_subset(mask)) {
        if (std::popcount(static_cast<unsigned>(mask_)) % 2) throw DomainError("a 2-torsion point is an even subset");
    }
    std::uint8_t mask_ = 0;
};

enum class Parity { odd, even };

inline Parity theta_parity(const ThetaChar& t) { return t.size() == 1 ? Parity::odd : Parity::even; }

inline ThetaChar translate(const ThetaChar& t, const TwoTorsion& e) {
    return ThetaChar::from_mask(static_cast<std::uint8_t>(t.mask() ^ e.mask()));
}

inline std::vector<ThetaChar> all_theta_chars() {
    std::vector<ThetaChar> out;
    for (unsigned m = 0; m < 64; ++m)
        if (std::popcount(m) % 2 == 1 && detail::normalize_subset(static_cast<std::uint8_t>(m)) == m)
            out.push_back(ThetaChar::from_mask(static_cast<std::uint8_t>(m)));
    return out;
}

inline std::vector<TwoTorsion> all_two_torsion() {
    std::vector<TwoTorsion> out;
    for (unsigned m = 0; m < 64; ++m)
        if (std::popcount(m) % 2 == 0 && detail::normalize_subset(static_cast<std::uint8_t>(m)) == m)
            out.push_back(TwoTorsion::from_mask(static_cast<std::uint8_t>(m)));
    return out;
}

struct IncidenceTable {
    ThetaChar kappa;
    std::vector<TwoTorsion> tropes;  // trope for spin structure kappa + e'
    std::vector<TwoTorsion> nodes;
    std::vector<std::vector<bool>> incident;  // [trope][node]

    std::vector<int> row_sums() const {
        std::vector<int> s;
        for (const auto& row : incident) {
            int n = 0;
            for (bool b : row) n += b;
            s.push_back(n);
        }
        return s;
    }
    std::vector<int> column_sums() const {
        std::vector<int> s(nodes.size(), 0);
        for (const auto& row : incident)
            for (std::size_t k = 0; k < row.size(); ++k) s[k] += row[k];
        return s;
    }
};

inline ThetaChar default_spin_structure() { return ThetaChar({1, 2, 3}); }

// Node e lies on the trope of kappa + e' iff kappa + e' + e is odd.
inline IncidenceTable kummer_incidence(const ThetaChar& kappa = default_spin_structure()) {
    IncidenceTable t{kappa, all_two_torsion(), all_two_torsion(), {}};
    for (const auto& ep : t.tropes) {
        std::vector<bool> row;
        for (const auto& e : t.nodes) row.push_back(theta_parity(translate(translate(kappa, ep), e)) == Parity::odd);
        t.incident.push_back(std::move(row));
    }
    return t;
}

}  // namespace hv

#pragma once

// Sparse multivariate polynomials over Q(i).  Used as a scalar type so that
// the generic formulas can be expanded symbolically.

#include <map>
#include <string>
#include <vector>

#include "hv/scalar.hpp"

namespace hv {

class MultiPoly {
public:
    using Exponent = std::vector<int>;  // trailing zeros trimmed

    MultiPoly() = default;
    MultiPoly(const ExactScalar& c) {
        if (!c.is_zero()) t_[{}] = c;
    }
    template <std::integral I>
    MultiPoly(I c) : MultiPoly(ExactScalar(c)) {}

    static MultiPoly var(int i) {
        Exponent e(i + 1, 0);
        e[i] = 1;
        MultiPoly p;
        p.t_[e] = ExactScalar(1);
        return p;
    }
    static MultiPoly term(const ExactScalar& c, Exponent e) {
        trim(e);
        MultiPoly p;
        if (!c.is_zero()) p.t_[std::move(e)] = c;
        return p;
    }

    const std::map<Exponent, ExactScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int k : e) s += k;
            d = std::max(d, s);
        }
        return d;
    }
    bool is_homogeneous(int degree) const {
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int k : e) s += k;
            if (s != degree) return false;
        }
        return true;
    }
    ExactScalar coefficient(Exponent e) const {
        trim(e);
        auto it = t_.find(e);
        return it == t_.end() ? ExactScalar() : it->second;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exponent e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
                for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }

    // Substitute values for every variable.
    template <class R>
    R evaluate(const std::vector<R>& vals) const {
        R out{};
        for (const auto& [e, c] : t_) {
            R m = vals.empty() ? scalar_like(R{}, c) : scalar_like(vals[0], c);
            for (std::size_t k = 0; k < e.size(); ++k)
                for (int j = 0; j < e[k]; ++j) m = m * vals.at(k);
            out = out + m;
        }
        return out;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k]) s += "*x" + std::to_string(k) + (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
        }
        return s;
    }

private:
    static void trim(Exponent& e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }
    void add_term(Exponent e, const ExactScalar& c) {
        trim(e);
        auto [it, fresh] = t_.try_emplace(std::move(e), c);
        if (!fresh) it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
    std::map<Exponent, ExactScalar> t_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline MultiPoly scalar_like(const MultiPoly&, const ExactScalar& v) { return MultiPoly(v); }

}  // namespace hv

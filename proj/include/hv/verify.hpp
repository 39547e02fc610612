#pragma once

// The verification checks shared by the CLI and the acceptance binary.
// Every check is deterministic in (seed, trials, precision).

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hv/binary_forms.hpp"
#include "hv/dolbeault.hpp"
#include "hv/exotic_triple.hpp"
#include "hv/kummer.hpp"
#include "hv/random.hpp"
#include "hv/resultant.hpp"
#include "hv/trope.hpp"

namespace hv {

using json = nlohmann::json;

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"appendix", "c4c6", "exotic", "kummer", "moment", "trope"};
    return names;
}

struct RunConfig {
    std::uint64_t seed = 7;
    int precision_bits = kDefaultPrecision;
    int trials = 100;
    std::set<std::string> suites;
    std::string output_path;
    std::string format = "json";
    std::optional<int> m;
    std::optional<UnivariatePoly<ExactScalar>> sextic;
};

struct CheckResult {
    int id = 0;
    std::string suite;
    std::string name;
    std::string anchor;
    bool pass = false;
    json witness = json::object();
    double wall_time_ms = 0;
};

// Tolerances.
inline BigFloat reconstruction_tolerance(int prec) { return BigFloat::pow2(-100, prec); }
inline BigFloat cross_ratio_tolerance(int prec) { return BigFloat::pow2(-64, prec); }
inline BigFloat fit_closes_tolerance(int prec) { return BigFloat::pow2(-100, prec); }
inline BigFloat fit_fails_threshold(int prec) { return BigFloat::pow2(-32, prec); }

// "c0,c1,...,c6" with rational entries such as -2/5
inline UnivariatePoly<ExactScalar> parse_coefficients(const std::string& s) {
    std::vector<ExactScalar> c;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        mpq_class q;
        if (q.set_str(item, 10) != 0) throw DomainError("bad coefficient '" + item + "'");
        q.canonicalize();
        c.emplace_back(q);
    }
    if (c.empty()) throw DomainError("empty coefficient list");
    return UnivariatePoly<ExactScalar>(c);
}

namespace detail {

inline int scaled(int trials, int base, int target) { return std::max(1, trials * target / base); }

inline UnivariatePoly<ExactScalar> random_poly(CounterRng& rng, int degree, long height) {
    std::vector<ExactScalar> c;
    for (int k = 0; k < degree; ++k) c.push_back(rng.exact(height));
    c.emplace_back(rng.nonzero_rational(height));
    return UnivariatePoly<ExactScalar>(c);
}

inline BinaryForm<ExactScalar> random_form(CounterRng& rng, int m, long height) {
    return BinaryForm<ExactScalar>::from_poly(random_poly(rng, m, height), m);
}

// Random sextic with distinct roots.
inline UnivariatePoly<ExactScalar> random_sextic(CounterRng& rng, long height) {
    for (;;) {
        auto p = random_poly(rng, 6, height);
        if (!discriminant(p).is_zero()) return p;
    }
}

inline std::vector<ExactScalar> distinct_rationals(CounterRng& rng, int n, long height) {
    std::vector<ExactScalar> out;
    while (static_cast<int>(out.size()) < n) {
        ExactScalar x = rng.exact(height);
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
}

inline std::string bits(const BigFloat& x) {
    if (x.is_zero()) return "0";
    std::ostringstream s;
    s << "2^" << x.exponent2();
    return s.str();
}

inline int multiplicity_at(UnivariatePoly<ExactScalar> f, const ExactScalar& root) {
    if (f.is_zero()) return std::numeric_limits<int>::max();
    UnivariatePoly<ExactScalar> lin({-root, ExactScalar(1)});
    int k = 0;
    for (;;) {
        auto [quo, rem] = divmod(f, lin);
        if (!rem.is_zero()) return k;
        f = quo;
        ++k;
    }
}

// f(s V1 + V2) for a ternary form with approximate coefficients.
inline UnivariatePoly<ApproxScalar> restrict_to_line(const TernaryForm<ApproxScalar>& f,
                                                     const std::array<ApproxScalar, 3>& v1,
                                                     const std::array<ApproxScalar, 3>& v2, int prec) {
    std::array<UnivariatePoly<ApproxScalar>, 3> x;
    for (int k = 0; k < 3; ++k) x[k] = UnivariatePoly<ApproxScalar>({v2[k], v1[k]});
    UnivariatePoly<ApproxScalar> out;
    for (const auto& [e, c] : f.terms()) {
        auto m = UnivariatePoly<ApproxScalar>::constant(c);
        for (int k = 0; k < 3; ++k) m = m * pow(x[k], e[k]);
        out = out + m;
    }
    (void)prec;
    return out;
}

inline BigFloat poly_norm(const UnivariatePoly<ApproxScalar>& p, int prec) {
    return vector_norm(p.coefficients(), prec);
}

inline std::array<ApproxScalar, 3> approx3(const DolbeaultClass<ExactScalar>& v, int prec) {
    return {to_approx(v.v0, prec), to_approx(v.v1, prec), to_approx(v.v2, prec)};
}

inline json str_list(const std::vector<ExactScalar>& v) {
    json j = json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

}  // namespace detail

// 1
inline CheckResult check_moment_square(const RunConfig& cfg) {
    CheckResult r{1, "moment", "moment_m1_square", "m=1 moment map equals p squared"};
    CounterRng rng = CounterRng(cfg.seed).split("moment_m1_square");
    int bad = 0;
    for (int k = 0; k < cfg.trials; ++k) {
        auto p = detail::random_form(rng, 1, kSampleHeight);
        auto poly = p.to_poly();
        if (!(moment_map_coeffs(p).to_poly() == poly * poly)) ++bad;
    }
    r.pass = bad == 0;
    r.witness = {{"cases", cfg.trials}, {"mismatches", bad}};
    return r;
}

// 2
inline CheckResult check_moment_discriminant(const RunConfig& cfg) {
    CheckResult r{2, "moment", "moment_m3_discriminant", "det of the m=3 moment map is the discriminant"};
    CounterRng rng = CounterRng(cfg.seed).split("moment_m3_discriminant");
    std::optional<ExactScalar> ratio;
    bool constant = true, zero_iff_repeated = true;
    for (int k = 0; k < cfg.trials; ++k) {
        auto p = detail::random_form(rng, 3, kSampleHeight);
        ExactScalar d = moment_map_m3(p).det(), disc = discriminant(p.to_poly());
        if (disc.is_zero() != d.is_zero()) zero_iff_repeated = false;
        if (disc.is_zero()) continue;
        ExactScalar q = d / disc;
        if (!ratio) ratio = q;
        else if (!(q == *ratio)) constant = false;
        // a repeated-root cubic with the same leading coefficient
        ExactScalar a = rng.exact(kSampleHeight), b = rng.exact(kSampleHeight);
        auto rep = UnivariatePoly<ExactScalar>::from_roots({a, a, b}, p.a[0]);
        if (!moment_map_m3(BinaryForm<ExactScalar>::from_poly(rep, 3)).det().is_zero()) zero_iff_repeated = false;
    }
    r.pass = constant && zero_iff_repeated && ratio && !ratio->is_zero();
    r.witness = {{"cases", cfg.trials},
                 {"det_over_discriminant", ratio ? ratio->str() : "none"},
                 {"constant", constant},
                 {"zero_iff_repeated_root", zero_iff_repeated}};
    return r;
}

// 3
inline CheckResult check_root_reconstruction(const RunConfig& cfg) {
    CheckResult r{3, "moment", "root_reconstruction", "p is a sum of m-th powers of its root factors"};
    const int prec = cfg.precision_bits;
    const int cases = detail::scaled(cfg.trials, 100, 25);
    BigFloat worst(0.0, prec);
    json per_m = json::object();
    bool ok = true;
    for (int m : {1, 3, 5, 7}) {
        CounterRng rng = CounterRng(cfg.seed).split("root_reconstruction").split(static_cast<std::uint64_t>(m));
        BigFloat wm(0.0, prec);
        for (int k = 0; k < cases; ++k) {
            for (;;) {
                auto p = detail::random_form(rng, m, kSampleHeight);
                try {
                    auto rec = reconstruct_from_powers(p, prec);
                    wm = max(wm, rec.residual / max(BigFloat(1.0, prec), max_coeff_abs(to_approx(p.to_poly(), prec), prec)));
                    break;
                } catch (const DegeneracyError&) {
                    continue;
                }
            }
        }
        per_m[std::to_string(m)] = detail::bits(wm);
        worst = max(worst, wm);
        if (!(wm < reconstruction_tolerance(prec))) ok = false;
    }
    r.pass = ok;
    r.witness = {{"cases_per_m", cases}, {"max_relative_residual", per_m}, {"tolerance", "2^-100"}};
    return r;
}

// 4
inline CheckResult check_cross_formula(const RunConfig& cfg) {
    CheckResult r{4, "moment", "coefficient_vs_root_formula", "transvectant and root-sum moment maps agree"};
    const int prec = cfg.precision_bits;
    const int cases = detail::scaled(cfg.trials, 100, 25);
    bool ok = true;
    json per_m = json::object();
    for (int m : {1, 3, 5}) {
        CounterRng rng = CounterRng(cfg.seed).split("cross_formula").split(static_cast<std::uint64_t>(m));
        std::optional<ApproxScalar> scale;
        BigFloat worst(0.0, prec);
        for (int k = 0; k < cases; ++k) {
            auto p = detail::random_form(rng, m, kSampleHeight);
            MomentImage<ApproxScalar> roots_mu;
            try {
                roots_mu = moment_map_roots(p, prec);
            } catch (const DegeneracyError&) {
                continue;
            }
            auto exact = moment_map_coeffs(p);
            std::array<ApproxScalar, 3> a{to_approx(exact.b0, prec), to_approx(exact.b1, prec), to_approx(exact.b2, prec)};
            std::array<ApproxScalar, 3> b{roots_mu.b0, roots_mu.b1, roots_mu.b2};
            // lambda = <a, b> / <a, a>
            ApproxScalar num(0.0, 0.0, prec), den(0.0, 0.0, prec);
            for (int i = 0; i < 3; ++i) {
                num = num + a[i].conj() * b[i];
                den = den + a[i].conj() * a[i];
            }
            ApproxScalar lambda = num / den;
            if (!scale) scale = lambda;
            std::vector<ApproxScalar> diff;
            for (int i = 0; i < 3; ++i) diff.push_back(b[i] - *scale * a[i]);
            BigFloat rel = vector_norm(diff, prec) / vector_norm({b[0], b[1], b[2]}, prec);
            worst = max(worst, rel);
        }
        if (!scale || !(worst < reconstruction_tolerance(prec))) ok = false;
        json w = {{"max_relative_residual", detail::bits(worst)}};
        if (scale) w["root_over_transvectant"] = ExactScalar(nearest_rational(scale->re(), mpz_class(100000000))).str();
        per_m[std::to_string(m)] = w;
    }
    r.pass = ok;
    r.witness = {{"cases_per_m", cases}, {"per_m", per_m}, {"tolerance", "2^-100"}};
    return r;
}

// 5
inline CheckResult check_isotropic_flag(const RunConfig&) {
    CheckResult r{5, "moment", "isotropic_flag", "middle subspace of the flag is maximal isotropic"};
    bool ok = true;
    json per_m = json::object();
    for (int m : {1, 3, 5, 7, 9}) {
        auto f = isotropic_flag(m);
        ok = ok && f.vk_isotropic && f.vk_maximal && f.vk_dimension == (m + 1) / 2;
        per_m[std::to_string(m)] = {{"k", f.k}, {"dim", f.vk_dimension}, {"isotropic", f.vk_isotropic},
                                    {"maximal", f.vk_maximal}};
    }
    r.pass = ok;
    r.witness = per_m;
    return r;
}

// 6
inline CheckResult check_exotic_trace(const RunConfig& cfg) {
    CheckResult r{6, "exotic", "triple_trace_equality", "the three partial moment maps have equal tr phi^2"};
    TripleTensor<MultiPoly> sym;
    int v = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) sym.psi[i][j][k] = MultiPoly::var(v++);
    for (auto& p : sym.pairing) p = MultiPoly::var(v++);
    bool symbolic = verify_trace_equality(sym).equal;

    CounterRng rng = CounterRng(cfg.seed).split("exotic");
    const int cases = 2 * cfg.trials;
    int bad = 0;
    for (int n = 0; n < cases; ++n) {
        TripleTensor<ExactScalar> t;
        for (auto& a : t.psi)
            for (auto& b : a)
                for (auto& c : b) c = rng.gaussian(kSampleHeight);
        for (auto& p : t.pairing) p = rng.gaussian(kSampleHeight);
        if (!verify_trace_equality(t).equal) ++bad;
    }

    auto ghz = TripleTensor<ExactScalar>::with_unit_pairings();
    ghz.psi[0][0][0] = ExactScalar(1);
    ghz.psi[1][1][1] = ExactScalar(1);
    auto g = verify_trace_equality(ghz);

    // slices e1 = identity, e2 = [[a,b],[c,d]]
    TripleTensor<MultiPoly> s = TripleTensor<MultiPoly>::with_unit_pairings();
    MultiPoly a = MultiPoly::var(0), b = MultiPoly::var(1), c = MultiPoly::var(2), d = MultiPoly::var(3);
    MultiPoly one = scalar_like(a, ExactScalar(1));
    s.psi[0][0][0] = one;
    s.psi[0][1][1] = one;
    s.psi[1][0][0] = a;
    s.psi[1][0][1] = b;
    s.psi[1][1][0] = c;
    s.psi[1][1][1] = d;
    MultiPoly expect = scalar_like(a, ExactScalar(2)) *
                       (scalar_like(a, ExactScalar(4)) * (a * d - b * c) - (a + d) * (a + d));
    bool form1 = trace_phi_squared(s, 1) == expect;

    r.pass = symbolic && bad == 0 && g.equal && g.common == ExactScalar(-2) && form1;
    r.witness = {{"symbolic_identity", symbolic},
                 {"random_cases", cases},
                 {"random_mismatches", bad},
                 {"ghz_value", g.common.str()},
                 {"slice_form_matches", form1}};
    return r;
}

// 7
inline CheckResult check_divisor_degree(const RunConfig&) {
    CheckResult r{7, "moment", "divisor_degree", "degree of the discriminant locus"};
    r.pass = divisor_degree(3) == 10 && divisor_degree(1) == 1;
    r.witness = {{"m1", divisor_degree(1)}, {"m3", divisor_degree(3)}};
    return r;
}

// 8
inline CheckResult check_appendix_calculus(const RunConfig& cfg) {
    CheckResult r{8, "appendix", "dbar_calculus", "naive primitive, non-trivial volume class, dimension 2k-1"};
    CounterRng rng = CounterRng(cfg.seed).split("dbar_calculus");
    int bad = 0;
    for (int n = 0; n < cfg.trials; ++n) {
        YExpansion<ExactScalar> h(0, false);
        int terms = static_cast<int>(rng.uniform(1, 6));
        for (int k = 0; k < terms; ++k)
            h = h + YExpansion<ExactScalar>::monomial(rng.exact(kSampleHeight), static_cast<int>(rng.uniform(-4, 4)),
                                                      static_cast<int>(rng.uniform(-6, -1)), 0);
        if (!(naive_integral(h.dbar()) == h)) ++bad;
    }

    auto vol = representative(1, 0);
    auto fix = polar_part(naive_integral(vol), -2);
    bool volume_nontrivial = !fix.report.is_global_section && !fix.report.regular_at_infinity &&
                             fix.report.pole_orders_at_zero.empty() && bracket(vol) == ExactScalar(1);

    json dims = json::object();
    bool dims_ok = true;
    for (int k = 1; k <= 3; ++k) {
        int count = 0;
        std::vector<int> smooth;
        for (int m = 0; m <= 2 * k + 2; ++m) {
            auto g = representative(k, m);
            if (!regularity(g, -2 * k).is_global_section) continue;
            smooth.push_back(m);
            auto pp = polar_part(naive_integral(g), -2 * k);
            if (!pp.report.is_global_section) ++count;
        }
        // pairing against the sections z^j of O(2k-2)
        Matrix<ExactScalar> pair;
        for (int m : smooth) {
            std::vector<ExactScalar> row;
            for (int j = 0; j <= 2 * k - 2; ++j)
                row.push_back(bracket(YExpansion<ExactScalar>::monomial(ExactScalar(1), j, 0, 2 * k - 2) *
                                      representative(k, m)));
            pair.push_back(row);
        }
        int rank = 0;
        {
            auto a = pair;
            std::size_t col = 0;
            for (std::size_t row = 0; row < a.size() && col < (a.empty() ? 0 : a[0].size()); ++col) {
                std::size_t piv = row;
                while (piv < a.size() && a[piv][col].is_zero()) ++piv;
                if (piv == a.size()) continue;
                std::swap(a[piv], a[row]);
                for (std::size_t i = row + 1; i < a.size(); ++i) {
                    ExactScalar f = a[i][col] / a[row][col];
                    for (std::size_t j = col; j < a[i].size(); ++j) a[i][j] = a[i][j] - f * a[row][j];
                }
                ++row;
                ++rank;
            }
        }
        dims[std::to_string(k)] = {{"nontrivial_representatives", count}, {"pairing_rank", rank}};
        dims_ok = dims_ok && count == 2 * k - 1 && rank == 2 * k - 1;
    }
    r.pass = bad == 0 && volume_nontrivial && dims_ok;
    r.witness = {{"random_cases", cfg.trials},
                 {"primitive_mismatches", bad},
                 {"volume_class_nontrivial", volume_nontrivial},
                 {"volume_decay_at_infinity", fix.report.decay_exponent_at_infinity.get_str()},
                 {"dimensions", dims}};
    return r;
}

// 9
inline CheckResult check_null_cone(const RunConfig& cfg) {
    CheckResult r{9, "appendix", "null_cone", "null cone of the pairing system and its six points"};
    const int prec = cfg.precision_bits;
    auto sys = null_cone_system(symbolic_class());
    MultiPoly v0 = MultiPoly::var(0), v1 = MultiPoly::var(1), v2 = MultiPoly::var(2);
    MultiPoly det = sys[0][0] * sys[1][1] - sys[0][1] * sys[1][0];
    bool det_ok = -det == v1 * v1 - scalar_like(v0, ExactScalar(4)) * v0 * v2;

    CounterRng rng = CounterRng(cfg.seed).split("null_cone");
    bool param_ok = true;
    for (int n = 0; n < cfg.trials; ++n) {
        ExactScalar t = rng.exact(kSampleHeight);
        auto nc = null_cone_test(conic_class(t));
        if (!nc.value.is_zero() || !nc.kernel || nc.kernel->second.is_zero() ||
            !(nc.kernel->first / nc.kernel->second == t))
            param_ok = false;
    }

    const int sextics = detail::scaled(cfg.trials, 100, 20);
    BigFloat worst(0.0, prec);
    for (int n = 0; n < sextics; ++n) {
        auto p = detail::random_sextic(rng, kSampleHeight);
        auto sp = six_points(p, prec);
        for (std::size_t i = 0; i < sp.roots.size(); ++i) {
            auto v = conic_class(sp.parameters[i]);
            auto m = null_cone_system(v);
            ApproxScalar w0 = -m[0][1], w1 = m[0][0];
            const auto& z = sp.roots[i];
            BigFloat rel = (w0 + w1 * z).abs() / (w0.abs() + w1.abs() * z.abs());
            BigFloat cone = (v.v1 * v.v1 - ApproxScalar(4.0, 0.0, prec) * v.v0 * v.v2).abs();
            worst = max(worst, max(rel, cone));
        }
    }
    bool six_ok = worst < reconstruction_tolerance(prec);
    r.pass = det_ok && param_ok && six_ok;
    r.witness = {{"determinant_identity", det_ok},
                 {"parametrization_cases", cfg.trials},
                 {"kernel_ratio_is_t", param_ok},
                 {"sextics", sextics},
                 {"six_point_residual", detail::bits(worst)},
                 {"parameter_convention", "t_i = -z_i"}};
    return r;
}

// 10
inline CheckResult check_singular_form(const RunConfig&) {
    CheckResult r{10, "appendix", "singular_quadratic_form", "det Q is a multiple of c3^2 - 4 c1 c5"};
    std::vector<MultiPoly> c;
    for (int i = 0; i <= 6; ++i) c.push_back(MultiPoly::var(i));
    auto qf = trope_quadratic_form(UnivariatePoly<MultiPoly>(c));
    ExactScalar kappa = qf.det.coefficient({0, 0, 0, 2});
    MultiPoly target = c[3] * c[3] - scalar_like(c[0], ExactScalar(4)) * c[1] * c[5];
    bool identity = qf.det == MultiPoly(kappa) * target;
    r.pass = identity && !kappa.is_zero();
    r.witness = {{"kappa", kappa.str()}, {"identity", identity}, {"q00", qf.q[0][0].str()},
                 {"q01", qf.q[0][1].str()}, {"q11", qf.q[1][1].str()}};
    return r;
}

// 11
inline CheckResult check_trope_sextic(const RunConfig& cfg) {
    CheckResult r{11, "trope", "trope_sextic", "trope sextic: axis value, conic restriction, tangency"};
    CounterRng rng = CounterRng(cfg.seed).split("trope_sextic");
    const int axis_cases = detail::scaled(cfg.trials, 100, 50);
    const ExactScalar zero, one(1);
    std::optional<ExactScalar> ratio;
    bool axis_ok = true;
    json ratios = json::array();
    for (int n = 0; n < axis_cases; ++n) {
        auto p = detail::random_sextic(rng, kSampleHeight);
        ExactScalar d = p.coeff(3) * p.coeff(3) - ExactScalar(4) * p.coeff(1) * p.coeff(5);
        if (d.is_zero()) continue;
        ExactScalar q = trope_sextic(p, PairingMode::literal)(zero, zero, one) / d;
        if (ratios.size() < 3) ratios.push_back(q.str());
        if (!ratio) ratio = q;
        else if (!(q == *ratio)) axis_ok = false;
    }

    std::vector<UnivariatePoly<ExactScalar>> inputs;
    if (cfg.sextic) inputs.push_back(*cfg.sextic);
    const int tangency_cases = detail::scaled(cfg.trials, 100, 20);
    for (int n = 0; n < tangency_cases; ++n) inputs.push_back(detail::random_sextic(rng, kSampleHeight));
    bool restriction_ok = true, tangency_ok = true;
    json modes = json::object();
    for (auto mode : {PairingMode::literal, PairingMode::apolar}) {
        int double_points = 0, matches_p = 0, matches_reweighted = 0;
        for (const auto& p : inputs) {
            auto rep = conic_tangency_report(p, mode, {}, cfg.precision_bits);
            restriction_ok = restriction_ok && rep.restriction_is_gamma_phi_squared;
            bool six_double = rep.all_even && rep.distinct_points == 6 && rep.multiplicity_sum == 12;
            for (const auto& f : rep.factors) six_double = six_double && f.multiplicity == 2;
            six_double = six_double && (rep.multiplicity_at_infinity == 0 || rep.multiplicity_at_infinity == 2);
            tangency_ok = tangency_ok && six_double;
            double_points += six_double;
            matches_p += rep.proportional_to_p_squared;
            matches_reweighted += rep.proportional_to_reweighted_squared;
        }
        modes[to_string(mode)] = {{"six_double_points", double_points},
                                  {"parameters_are_roots_of_p", matches_p},
                                  {"parameters_are_roots_of_reweighted_p", matches_reweighted}};
    }
    r.pass = axis_ok && restriction_ok && tangency_ok;
    r.witness = {{"axis_value_proportional_literal", axis_ok},
                 {"axis_ratio_samples", ratios},
                 {"conic_restriction_is_gamma_phi2", restriction_ok},
                 {"tangency_cases", static_cast<int>(inputs.size())},
                 {"tangency", modes},
                 {"constants", {{"alpha", "-16"}, {"gamma", "-3456"}}}};
    return r;
}

// 12
inline CheckResult check_harmonicity(const RunConfig&) {
    CheckResult r{12, "trope", "harmonic_cubics", "the cubic attached to a sextic is harmonic"};
    bool ok = true;
    for (auto mode : {PairingMode::literal, PairingMode::apolar})
        for (int k = 0; k <= 6; ++k) {
            auto p = UnivariatePoly<ExactScalar>::monomial(ExactScalar(1), k);
            auto phi = harmonic_cubic(p, mode);
            ok = ok && !phi.is_zero() && laplacian(phi).is_zero();
        }
    r.pass = ok;
    r.witness = {{"generators", 7}, {"modes", {"literal", "apolar"}}};
    return r;
}

// Sextic with rational roots z_1..z_6; q = (z - z_1)(z - z_2).
struct SplitSextic {
    std::vector<ExactScalar> roots;
    UnivariatePoly<ExactScalar> q, r;
};

inline SplitSextic random_split_sextic(CounterRng& rng) {
    SplitSextic s;
    s.roots = detail::distinct_rationals(rng, 6, 20);
    s.q = UnivariatePoly<ExactScalar>::from_roots({s.roots[0], s.roots[1]}, ExactScalar(1));
    s.r = UnivariatePoly<ExactScalar>::from_roots({s.roots[2], s.roots[3], s.roots[4], s.roots[5]}, ExactScalar(1));
    return s;
}

// 13
inline CheckResult check_c4(const RunConfig& cfg) {
    CheckResult r{13, "c4c6", "c4_quartic", "quartic C4: bitangent line, harmonic points, contact, localization"};
    const int prec = cfg.precision_bits;
    CounterRng rng = CounterRng(cfg.seed).split("c4");
    const int cases = detail::scaled(cfg.trials, 100, 5);
    bool closes = true, square = true, harmonic = true, contact = true, localized = true;
    json per_case = json::array();
    using P = UnivariatePoly<ExactScalar>;
    const P t({ExactScalar(), ExactScalar(1)});
    for (int n = 0; n < cases; ++n) {
        auto s = random_split_sextic(rng);
        const auto& z = s.roots;
        auto fit = c4_equation(s.q, s.r, rng.split(static_cast<std::uint64_t>(n)), prec);
        bool c_ok = fit.residual < fit_closes_tolerance(prec);

        auto V1 = conic_class(-z[0]), V2 = conic_class(-z[1]);
        auto F = detail::restrict_to_line(fit.form, detail::approx3(V1, prec), detail::approx3(V2, prec), prec);
        // -F = H^2 with H quadratic
        ApproxScalar two(2.0, 0.0, prec);
        ApproxScalar h2 = sqrt(-F.coeff(4));
        ApproxScalar h1 = -F.coeff(3) / (two * h2);
        ApproxScalar h0 = (-F.coeff(2) - h1 * h1) / (two * h2);
        UnivariatePoly<ApproxScalar> H({h0, h1, h2});
        BigFloat sq_res = detail::poly_norm(-F - H * H, prec) / detail::poly_norm(F, prec);
        bool s_ok = sq_res < cross_ratio_tolerance(prec);
        auto bit = aberth(H, prec, "bitangent points");
        ApproxScalar zero(0.0, 0.0, prec), one(1.0, 0.0, prec);
        ApproxScalar cr = cross_ratio(ProjectivePoint<ApproxScalar>(zero, one), ProjectivePoint<ApproxScalar>(one, zero),
                                      ProjectivePoint<ApproxScalar>(bit[0], one), ProjectivePoint<ApproxScalar>(bit[1], one));
        bool h_ok = (cr + one).abs() < cross_ratio_tolerance(prec);

        // exact Q4 along the conic
        auto pull = c4_brackets(lift_poly(s.q, t), lift_poly(s.r, t), conic_class(t)).quartic;
        std::vector<int> mult;
        bool m_ok = true;
        for (int k = 0; k < 6; ++k) {
            mult.push_back(std::min(detail::multiplicity_at(pull, -z[k]), 99));
            if (k >= 2 && mult.back() < 2) m_ok = false;
        }

        // exact [q b beta] on c1 V1 + c2 V2
        DolbeaultClass<ExactScalar> V12{V1.v0 + V2.v0, V1.v1 + V2.v1, V1.v2 + V2.v2};
        ExactScalar A = c4_brackets(s.q, s.r, V1).qb_beta, C = c4_brackets(s.q, s.r, V2).qb_beta;
        ExactScalar B = (c4_brackets(s.q, s.r, V12).qb_beta - A - C) * ExactScalar::ratio(1, 2);
        ExactScalar la = A / (s.r(z[0]) / (ExactScalar(2) * (z[0] - z[1])));
        ExactScalar lc = C / (s.r(z[1]) / (ExactScalar(2) * (z[1] - z[0])));
        bool l_ok = B.is_zero() && la == lc;

        closes = closes && c_ok;
        square = square && s_ok;
        harmonic = harmonic && h_ok;
        contact = contact && m_ok;
        localized = localized && l_ok;
        per_case.push_back({{"roots", detail::str_list(z)},
                            {"fit_residual", detail::bits(fit.residual)},
                            {"square_residual", detail::bits(sq_res)},
                            {"cross_ratio_residual", detail::bits((cr + one).abs())},
                            {"conic_multiplicities", mult},
                            {"localized_constant", la.str()},
                            {"cross_term", B.str()}});
    }
    r.pass = closes && square && harmonic && contact && localized;
    r.witness = {{"cases", per_case},
                 {"fit_closes", closes},
                 {"minus_perfect_square_on_line", square},
                 {"bitangent_points_harmonic", harmonic},
                 {"double_contact_at_other_four", contact},
                 {"localized_formula", localized}};
    if (cfg.sextic) {
        try {
            HyperellipticData h(*cfg.sextic, prec);
            auto tl = trope_line_intersection(h, 0, 1, prec);
            r.witness["given_sextic_line"] = {{"parameter_error", detail::bits(tl.parameter_error)},
                                              {"cross_ratio_residual", detail::bits(tl.cross_ratio_residual)}};
        } catch (const std::exception& e) {
            r.witness["given_sextic_line"] = e.what();
        }
    }
    return r;
}

// 14
inline CheckResult check_c6(const RunConfig& cfg) {
    CheckResult r{14, "c4c6", "c6_sextic", "C6 determinant: degree 6 and contact at the six points"};
    const int prec = cfg.precision_bits;
    CounterRng rng = CounterRng(cfg.seed).split("c6");
    const int cases = detail::scaled(cfg.trials, 100, 5);
    bool degree_ok = true, vanish_ok = true;
    json per_case = json::array();
    using P = UnivariatePoly<ExactScalar>;
    const P t({ExactScalar(), ExactScalar(1)});
    for (int n = 0; n < cases; ++n) {
        auto s = random_split_sextic(rng);
        auto fit = c6_equation(s.q, s.r, rng.split(static_cast<std::uint64_t>(n)), prec);
        bool d_ok = fit.residual < fit_closes_tolerance(prec) && fit.residual_lower > fit_fails_threshold(prec);
        auto pull = c6_matrix(lift_poly(s.q, t), lift_poly(s.r, t), conic_class(t)).det;
        std::vector<int> mult;
        bool v_ok = true;
        for (int k = 0; k < 6; ++k) {
            mult.push_back(std::min(detail::multiplicity_at(pull, -s.roots[k]), 99));
            if (mult.back() < 1) v_ok = false;
        }
        degree_ok = degree_ok && d_ok;
        vanish_ok = vanish_ok && v_ok;
        per_case.push_back({{"roots", detail::str_list(s.roots)},
                            {"residual_degree6", detail::bits(fit.residual)},
                            {"residual_degree5", detail::bits(fit.residual_lower)},
                            {"conic_multiplicities", mult}});
    }
    r.pass = degree_ok && vanish_ok;
    r.witness = {{"cases", per_case}, {"degree_six", degree_ok}, {"vanishes_at_six_points", vanish_ok}};
    return r;
}

// 15
inline CheckResult check_kummer(const RunConfig&) {
    CheckResult r{15, "kummer", "kummer_16_6", "16_6 configuration of tropes and nodes"};
    auto table = kummer_incidence();
    auto rows = table.row_sums(), cols = table.column_sums();
    bool sums = table.tropes.size() == 16 && table.nodes.size() == 16;
    for (int x : rows) sums = sums && x == 6;
    for (int x : cols) sums = sums && x == 6;
    bool symmetric = true;
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) symmetric = symmetric && table.incident[i][j] == table.incident[j][i];

    std::set<std::uint8_t> base, odd;
    for (std::size_t j = 0; j < 16; ++j)
        if (table.incident[0][j]) base.insert(translate(table.kappa, table.nodes[j]).mask());
    for (const auto& c : all_theta_chars())
        if (theta_parity(c) == Parity::odd) odd.insert(c.mask());
    bool base_ok = table.tropes[0].is_identity() && base == odd && odd.size() == 6;

    r.pass = sums && symmetric && base_ok;
    json incident = json::array();
    for (const auto& row : table.incident) {
        std::string s;
        for (bool b : row) s += b ? '1' : '0';
        incident.push_back(s);
    }
    r.witness = {{"kappa", table.kappa.str()}, {"row_sums", rows}, {"column_sums", cols},
                 {"symmetric", symmetric}, {"base_trope_nodes_are_odd_translates", base_ok}, {"incidence", incident}};
    return r;
}

// Criteria for the moment suite with --m: reconstruction and coefficient/root agreement for one m.
inline CheckResult check_selected_m(const RunConfig& cfg) {
    const int m = *cfg.m;
    CheckResult r{0, "moment", "selected_m", "moment map for the requested m"};
    if (m < 1 || m % 2 == 0) throw DomainError("--m must be a positive odd integer");
    const int prec = cfg.precision_bits;
    CounterRng rng = CounterRng(cfg.seed).split("selected_m");
    const int cases = detail::scaled(cfg.trials, 100, 25);
    BigFloat worst(0.0, prec);
    std::optional<ExactScalar> det_ratio;
    bool det_constant = true;
    for (int k = 0; k < cases; ++k) {
        auto p = detail::random_form(rng, m, kSampleHeight);
        try {
            worst = max(worst, reconstruct_from_powers(p, prec).residual /
                                   max(BigFloat(1.0, prec), max_coeff_abs(to_approx(p.to_poly(), prec), prec)));
        } catch (const DegeneracyError&) {
            continue;
        }
        if (m == 3) {
            ExactScalar q = moment_map_coeffs(p).det() / discriminant(p.to_poly());
            if (!det_ratio) det_ratio = q;
            else det_constant = det_constant && q == *det_ratio;
        }
    }
    r.pass = worst < reconstruction_tolerance(prec) && det_constant;
    r.witness = {{"m", m}, {"cases", cases}, {"max_relative_residual", detail::bits(worst)},
                 {"divisor_degree", divisor_degree(m)}};
    if (det_ratio) r.witness["transvectant_det_over_discriminant"] = det_ratio->str();
    return r;
}

struct Criterion {
    int id;
    const char* suite;
    std::function<CheckResult(const RunConfig&)> run;
};

inline const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "moment", check_moment_square},     {2, "moment", check_moment_discriminant},
        {3, "moment", check_root_reconstruction}, {4, "moment", check_cross_formula},
        {5, "moment", check_isotropic_flag},    {6, "exotic", check_exotic_trace},
        {7, "moment", check_divisor_degree},    {8, "appendix", check_appendix_calculus},
        {9, "appendix", check_null_cone},       {10, "appendix", check_singular_form},
        {11, "trope", check_trope_sextic},      {12, "trope", check_harmonicity},
        {13, "c4c6", check_c4},                 {14, "c4c6", check_c6},
        {15, "kummer", check_kummer},
    };
    return all;
}

inline CheckResult timed(const std::function<CheckResult(const RunConfig&)>& f, const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = f(cfg);
    } catch (const std::exception& e) {
        r.pass = false;
        r.witness = {{"error", e.what()}};
    }
    r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline CheckResult run_criterion(int id, const RunConfig& cfg) {
    for (const auto& c : criteria())
        if (c.id == id) {
            auto r = timed(c.run, cfg);
            r.id = id;
            r.suite = c.suite;
            return r;
        }
    throw DomainError("no criterion " + std::to_string(id));
}

struct VerificationReport {
    RunConfig config;
    std::vector<CheckResult> results;  // sorted by (suite, id)

    bool passed() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

inline std::set<std::string> expand_suites(const std::set<std::string>& requested) {
    std::set<std::string> out;
    for (const auto& s : requested) {
        if (s == "all") {
            out.insert(suite_names().begin(), suite_names().end());
            continue;
        }
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw DomainError("unknown suite '" + s + "'");
        out.insert(s);
    }
    return out;
}

inline VerificationReport run(const RunConfig& cfg) {
    VerificationReport rep{cfg, {}};
    auto suites = expand_suites(cfg.suites);
    for (const auto& s : suites) {
        for (const auto& c : criteria())
            if (c.suite == s) rep.results.push_back(run_criterion(c.id, cfg));
        if (s == "moment" && cfg.m) {
            auto r = timed(check_selected_m, cfg);
            r.suite = "moment";
            rep.results.push_back(r);
        }
    }
    return rep;
}

inline json to_json(const VerificationReport& rep) {
    json results = json::array();
    int passed = 0;
    for (const auto& r : rep.results) {
        results.push_back({{"criterion", r.id},
                           {"name", r.name},
                           {"suite", r.suite},
                           {"status", r.pass ? "pass" : "fail"},
                           {"anchor", r.anchor},
                           {"witness", r.witness}});
        passed += r.pass;
    }
    json config = {{"seed", rep.config.seed},
                   {"precision_bits", rep.config.precision_bits},
                   {"trials", rep.config.trials},
                   {"suites", std::vector<std::string>(rep.config.suites.begin(), rep.config.suites.end())}};
    if (rep.config.m) config["m"] = *rep.config.m;
    if (rep.config.sextic) {
        std::vector<std::string> c;
        for (int k = 0; k <= rep.config.sextic->degree(); ++k) c.push_back(rep.config.sextic->coeff(k).str());
        config["sextic"] = c;
    }
    return {{"schema_version", 1},
            {"config", config},
            {"results", results},
            {"summary", {{"passed", passed}, {"failed", static_cast<int>(rep.results.size()) - passed}}}};
}

inline std::string to_text(const VerificationReport& rep) {
    std::ostringstream out;
    int passed = 0;
    for (const auto& r : rep.results) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.1f", r.wall_time_ms);
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.suite << "/" << r.name;
        if (r.id) out << " (criterion " << r.id << ")";
        out << "  " << ms << " ms\n";
        out << "      " << r.anchor << "\n";
        out << "      " << r.witness.dump() << "\n";
        passed += r.pass;
    }
    out << passed << "/" << rep.results.size() << " passed\n";
    return out.str();
}

}  // namespace hv

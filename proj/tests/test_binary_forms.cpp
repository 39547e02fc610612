#include <gtest/gtest.h>

#include "hv/binary_forms.hpp"
#include "hv/multipoly.hpp"
#include "hv/random.hpp"
#include "hv/resultant.hpp"

using namespace hv;

namespace {

using BF = BinaryForm<ExactScalar>;
using P = UnivariatePoly<ExactScalar>;

BF form(std::initializer_list<long> c) {
    std::vector<ExactScalar> v;
    for (long x : c) v.emplace_back(x);
    return BF(static_cast<int>(v.size()) - 1, v);
}

BF random_form(CounterRng& rng, int m, long height = 50) {
    std::vector<ExactScalar> c;
    c.emplace_back(rng.nonzero_rational(height));
    for (int k = 1; k <= m; ++k) c.push_back(rng.gaussian(height));
    return BF(m, c);
}

Sl2Action random_group_element(CounterRng& rng) {
    ExactScalar a(rng.nonzero_rational(20)), b = rng.gaussian(20), c = rng.gaussian(20);
    return Sl2Action(a, b, c, (ExactScalar(1) + b * c) / a);
}

// the scalar s with x = s y, or nullopt if none
std::optional<ExactScalar> ratio(const MomentImage<ExactScalar>& x, const MomentImage<ExactScalar>& y) {
    std::optional<ExactScalar> s;
    for (auto [u, v] : {std::pair{x.b0, y.b0}, std::pair{x.b1, y.b1}, std::pair{x.b2, y.b2}}) {
        if (v.is_zero()) {
            if (!u.is_zero()) return std::nullopt;
            continue;
        }
        ExactScalar r = u / v;
        if (s && !(*s == r)) return std::nullopt;
        s = r;
    }
    return s;
}

BigFloat tol(int bits, int prec = 256) { return BigFloat::pow2(-bits, prec); }

}  // namespace

TEST(SymplecticForm, SpecExamples) {
    EXPECT_EQ(symplectic_form(form({1, 0}), form({0, 1})), ExactScalar(1));
    EXPECT_EQ(symplectic_form(form({1, 0, 0, 0}), form({0, 0, 0, 1})), ExactScalar(6));
    EXPECT_THROW(symplectic_form(form({1, 0}), form({1, 0, 0, 0})), DomainError);
}

TEST(SymplecticForm, Antisymmetric) {
    CounterRng rng(1);
    for (int m : {1, 3, 5, 7}) {
        BF p = random_form(rng, m), q = random_form(rng, m);
        EXPECT_TRUE(symplectic_form(p, p).is_zero());
        EXPECT_EQ(symplectic_form(p, q), -symplectic_form(q, p));
    }
}

TEST(Act, SpecExamples) {
    BF p = form({2, -3, 0, 5});
    EXPECT_EQ(act(Sl2Action(), p), p);
    Sl2Action shift(ExactScalar(1), ExactScalar(1), ExactScalar(0), ExactScalar(1));
    EXPECT_EQ(act(shift, form({1, 0})), form({1, 1}));
    Sl2Action w(ExactScalar(0), ExactScalar(1), ExactScalar(-1), ExactScalar(0));
    EXPECT_EQ(act(w, form({1, 0, 0, 0})), form({0, 0, 0, 1}));
}

TEST(Act, RejectsNonUnimodular) {
    EXPECT_THROW(Sl2Action(ExactScalar(2), ExactScalar(0), ExactScalar(0), ExactScalar(1)), DomainError);
}

// (cz+d)^m p((az+b)/(cz+d)) composes as a right action.
TEST(Act, RightActionLaw) {
    CounterRng rng(2);
    for (int n = 0; n < 20; ++n) {
        Sl2Action g = random_group_element(rng), h = random_group_element(rng);
        BF p = random_form(rng, 3);
        EXPECT_EQ(act(g * h, p), act(h, act(g, p)));
        EXPECT_EQ(act(g.inverse(), act(g, p)), p);
    }
}

TEST(IsotropicFlag, SmallDegrees) {
    for (int m : {1, 3, 5}) {
        auto r = isotropic_flag(m);
        EXPECT_EQ(r.k, (m + 1) / 2);
        EXPECT_EQ(r.vk_dimension, r.k);
        EXPECT_TRUE(r.vk_isotropic);
        EXPECT_TRUE(r.vk_maximal);
        ASSERT_EQ(static_cast<int>(r.bases.size()), m + 1);
        for (int j = 0; j <= m; ++j) EXPECT_EQ(static_cast<int>(r.bases[j].size()), m + 1 - j);
        for (const auto& v : r.bases[r.k])
            for (const auto& w : r.bases[r.k]) EXPECT_TRUE(symplectic_form(v, w).is_zero());
        EXPECT_FALSE(r.isotropic[r.k - 1]);
    }
    EXPECT_EQ(isotropic_flag(3).bases[2], (std::vector<BF>{form({0, 0, 1, 0}), form({0, 0, 0, 1})}));
    EXPECT_THROW(isotropic_flag(4), DomainError);
}

TEST(SkewKernel, CubicExample) {
    const int prec = 256;
    std::vector<ApproxScalar> alphas{ApproxScalar(0.0, 0.0, prec), ApproxScalar(1.0, 0.0, prec),
                                     ApproxScalar(-1.0, 0.0, prec)};
    auto k = skew_matrix_kernel(alphas, 3, prec);
    ASSERT_EQ(k.b.size(), 3u);
    // largest entry scaled to 1: (1, -1/8, -1/8)
    EXPECT_LT((k.b[0] - ApproxScalar(1.0, 0.0, prec)).abs(), tol(200));
    EXPECT_LT((k.b[1] - ApproxScalar(-0.125, 0.0, prec)).abs(), tol(200));
    EXPECT_LT((k.b[2] - ApproxScalar(-0.125, 0.0, prec)).abs(), tol(200));
    EXPECT_FALSE(k.rank_warning);
}

TEST(SkewKernel, SingleRootAndQuinticResidual) {
    const int prec = 256;
    auto one = skew_matrix_kernel({ApproxScalar(3.0, 0.0, prec)}, 1, prec);
    ASSERT_EQ(one.b.size(), 1u);
    EXPECT_LT((one.b[0] - ApproxScalar(1.0, 0.0, prec)).abs(), tol(200));

    CounterRng rng(3);
    std::vector<ApproxScalar> alphas;
    for (int k = 0; k < 5; ++k) alphas.push_back(ApproxScalar(ExactScalar(mpq_class(k * 7 - 10, 3)) + rng.exact(1) * ExactScalar::ratio(1, 100), prec));
    auto r = skew_matrix_kernel(alphas, 5, prec);
    EXPECT_LT(r.residual, tol(100));
}

TEST(SkewKernel, Errors) {
    const int prec = 256;
    std::vector<ApproxScalar> rep{ApproxScalar(1.0, 0.0, prec), ApproxScalar(1.0, 0.0, prec),
                                  ApproxScalar(2.0, 0.0, prec)};
    EXPECT_THROW(skew_matrix_kernel(rep, 3, prec), DegeneracyError);
    EXPECT_THROW(skew_matrix_kernel(rep, 2, prec), DomainError);
}

TEST(SkewKernel, OddMatrixIsAntisymmetricEvenIsRegular) {
    const int prec = 256;
    CounterRng rng(4);
    for (int m : {2, 4, 6}) {
        std::vector<ApproxScalar> alphas;
        for (int k = 0; k < m; ++k) alphas.push_back(ApproxScalar(rng.gaussian(1000), prec));
        EXPECT_EQ(kernel_vector(skew_matrix(alphas, m), prec).rank, m);
        auto odd = skew_matrix(alphas, m + 1);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) EXPECT_LT((odd[i][j] + odd[j][i]).abs(), tol(200));
    }
}

TEST(Reconstruct, SpecExamples) {
    const int prec = 256;
    auto r = reconstruct_from_powers(form({6, 0, -6, 0}), prec);
    ASSERT_EQ(r.b.size(), 3u);
    EXPECT_LT(r.residual, tol(200));
    for (std::size_t i = 0; i < 3; ++i) {
        double expected = (r.alphas[i].abs() < tol(100)) ? 8.0 : -1.0;
        EXPECT_LT((r.b[i] - ApproxScalar(expected, 0.0, prec)).abs(), tol(200));
    }
    auto lin = reconstruct_from_powers(form({1, -5}), prec);
    EXPECT_LT((lin.b[0] - ApproxScalar(1.0, 0.0, prec)).abs(), tol(200));
    EXPECT_LT((lin.alphas[0] - ApproxScalar(5.0, 0.0, prec)).abs(), tol(200));
    EXPECT_THROW(reconstruct_from_powers(form({1, 0, -3, 2}), prec), DegeneracyError);
}

TEST(Reconstruct, RandomSeptic) {
    CounterRng rng(5);
    for (int n = 0; n < 5; ++n) EXPECT_LT(reconstruct_from_powers(random_form(rng, 7), 256).residual, tol(100));
}

TEST(MomentMap, LinearIsSquare) {
    CounterRng rng(6);
    for (int n = 0; n < 20; ++n) {
        BF p = random_form(rng, 1);
        auto mu = moment_map_coeffs(p);
        EXPECT_EQ(mu.to_poly(), p.to_poly() * p.to_poly());
    }
    MultiPoly a0 = MultiPoly::var(0), a1 = MultiPoly::var(1);
    BinaryForm<MultiPoly> sym(1, {a0, a1});
    auto mu = moment_map_coeffs(sym);
    EXPECT_EQ(mu.b0, a0 * a0);
    EXPECT_EQ(mu.b1, MultiPoly(2) * a0 * a1);
    EXPECT_EQ(mu.b2, a1 * a1);
}

TEST(MomentMap, CubicExamples) {
    auto mu = moment_map_m3(form({1, 0, -1, 0}));
    EXPECT_EQ(ratio(mu, MomentImage<ExactScalar>{ExactScalar(3), ExactScalar(0), ExactScalar(1)}),
              std::optional<ExactScalar>(ExactScalar(-1)));
    BF dbl = BF::from_poly(P({ExactScalar(2), ExactScalar(-3), ExactScalar(0), ExactScalar(1)}), 3);  // (z-1)^2 (z+2)
    EXPECT_TRUE(moment_map_m3(dbl).discriminant().is_zero());
    EXPECT_THROW(moment_map_m3(form({1, 0})), DomainError);
}

TEST(MomentMap, CubicDeterminantIsFixedMultipleOfDiscriminant) {
    CounterRng rng(7);
    for (int n = 0; n < 100; ++n) {
        BF p = random_form(rng, 3);
        EXPECT_EQ(moment_map_m3(p).det(), ExactScalar::ratio(3, 4) * discriminant(p.to_poly()));
    }
}

TEST(MomentMap, TransvectantIsEightTimesCubicFormula) {
    CounterRng rng(8);
    for (int n = 0; n < 20; ++n) {
        BF p = random_form(rng, 3);
        EXPECT_EQ(ratio(moment_map_coeffs(p), moment_map_m3(p)), std::optional<ExactScalar>(ExactScalar(8)));
    }
}

TEST(MomentMap, RootFormulaConstants) {
    const int prec = 256;
    CounterRng rng(9);
    const std::vector<std::pair<int, ExactScalar>> expected{
        {1, ExactScalar(1)}, {3, ExactScalar::ratio(1, 36)}, {5, ExactScalar::ratio(1, 14400)}};
    for (const auto& [m, c] : expected)
        for (int n = 0; n < 5; ++n) {
            BF p = random_form(rng, m, 20);
            auto exact = moment_map_coeffs(p);
            auto approx = moment_map_roots(p, prec);
            ApproxScalar k(c, prec);
            EXPECT_LT((approx.b0 - k * ApproxScalar(exact.b0, prec)).abs(), tol(100) * max(BigFloat(1.0, prec), ApproxScalar(exact.b0, prec).abs()));
            EXPECT_LT((approx.b1 - k * ApproxScalar(exact.b1, prec)).abs(), tol(100) * max(BigFloat(1.0, prec), ApproxScalar(exact.b1, prec).abs()));
            EXPECT_LT((approx.b2 - k * ApproxScalar(exact.b2, prec)).abs(), tol(100) * max(BigFloat(1.0, prec), ApproxScalar(exact.b2, prec).abs()));
        }
}

TEST(MomentMap, LinearRootFormula) {
    const int prec = 256;
    auto mu = moment_map_roots(form({3, -6}), prec);  // 3(z - 2)
    EXPECT_LT((mu.b0 - ApproxScalar(9.0, 0.0, prec)).abs(), tol(200));
    EXPECT_LT((mu.b1 - ApproxScalar(-36.0, 0.0, prec)).abs(), tol(200));
    EXPECT_LT((mu.b2 - ApproxScalar(36.0, 0.0, prec)).abs(), tol(200));
}

TEST(MomentMap, Equivariance) {
    CounterRng rng(10);
    for (int n = 0; n < 100; ++n) {
        int m = 2 * static_cast<int>(rng.uniform(0, 2)) + 1;
        Sl2Action g = random_group_element(rng);
        BF p = random_form(rng, m, 20);
        EXPECT_EQ(moment_map_coeffs(act(g, p)), adjoint(g, moment_map_coeffs(p)));
    }
}

TEST(MomentMap, QuadraticHomogeneity) {
    CounterRng rng(11);
    for (int m : {1, 3, 5, 7}) {
        BF p = random_form(rng, m);
        ExactScalar l = rng.gaussian(30);
        BF lp = p;
        for (auto& a : lp.a) a = l * a;
        auto mu = moment_map_coeffs(p), mul = moment_map_coeffs(lp);
        EXPECT_EQ(mul.b0, l * l * mu.b0);
        EXPECT_EQ(mul.b1, l * l * mu.b1);
        EXPECT_EQ(mul.b2, l * l * mu.b2);
    }
}

TEST(MomentMap, CoefficientTableRejectsEvenDegree) {
    EXPECT_THROW(moment_coefficient_table(2), DomainError);
}

TEST(Nilpotent, SpecExamples) {
    auto a = nilpotent_moment(ExactScalar(1), ExactScalar(0));
    EXPECT_EQ(a.to_poly(), P({ExactScalar(0), ExactScalar(0), ExactScalar(1)}));
    EXPECT_EQ(a.matrix(), (Matrix<ExactScalar>{{ExactScalar(0), ExactScalar(0)}, {ExactScalar(-1), ExactScalar(0)}}));
    EXPECT_TRUE(nilpotent_moment(ExactScalar(0), ExactScalar(0)).to_poly().is_zero());
    auto c = nilpotent_moment(ExactScalar(1), ExactScalar(2));
    EXPECT_EQ(c.to_poly(), P({ExactScalar(4), ExactScalar(4), ExactScalar(1)}));
    EXPECT_TRUE(c.det().is_zero());
    CounterRng rng(12);
    for (int n = 0; n < 20; ++n) EXPECT_TRUE(nilpotent_moment(rng.gaussian(100), rng.gaussian(100)).det().is_zero());
}

TEST(Counts, StratumDimension) {
    EXPECT_EQ(nilpotent_stratum_dimension(2, 0), 3);
    EXPECT_EQ(nilpotent_stratum_dimension(3, 0), 6);
    EXPECT_EQ(nilpotent_stratum_dimension(2, 1), 2);
    EXPECT_THROW(nilpotent_stratum_dimension(2, 2), DomainError);
    EXPECT_THROW(nilpotent_stratum_dimension(1, 0), DomainError);
}

TEST(Counts, DivisorDegree) {
    EXPECT_EQ(divisor_degree(1), 1);
    EXPECT_EQ(divisor_degree(3), 10);
    EXPECT_EQ(divisor_degree(5), 35);
    EXPECT_THROW(divisor_degree(4), DomainError);
}

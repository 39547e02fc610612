#include <gtest/gtest.h>

#include "hv/random.hpp"
#include "hv/trope.hpp"

using namespace hv;

namespace {

using P = UnivariatePoly<ExactScalar>;

ExactScalar q_(long n, long d = 1) { return ExactScalar::ratio(n, d); }

P monomial(int k) { return P::monomial(ExactScalar(1), k); }

P random_sextic(CounterRng& rng, long height = 30) {
    for (;;) {
        std::vector<ExactScalar> c;
        for (int k = 0; k < 6; ++k) c.push_back(rng.exact(height));
        c.emplace_back(rng.nonzero_rational(height));
        P p(c);
        if (!discriminant(p).is_zero()) return p;
    }
}

ExactScalar at_pole(const Form3& f) { return f(ExactScalar(0), ExactScalar(0), ExactScalar(1)); }

// f = s g for a nonzero scalar s
bool proportional(const Form3& f, const Form3& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    const auto& [e, c] = *g.terms().begin();
    ExactScalar s = f.coeff(e) / c;
    return !s.is_zero() && f == s * g;
}

const std::vector<Sl2Action>& generators() {
    static const std::vector<Sl2Action> g{
        Sl2Action(ExactScalar(0), ExactScalar(1), ExactScalar(-1), ExactScalar(0)),
        Sl2Action(ExactScalar(1), ExactScalar(1), ExactScalar(0), ExactScalar(1)),
        Sl2Action(ExactScalar::i(), ExactScalar(0), ExactScalar(0), -ExactScalar::i()),
        Sl2Action(q_(2), q_(0), q_(0), q_(1, 2)),
    };
    return g;
}

}  // namespace

TEST(HarmonicCubic, LiteralExamples) {
    const ExactScalar i = ExactScalar::i();
    Form3 w = Form3::linear(ExactScalar(1), -i, ExactScalar());  // x1 - i x2
    Form3 x3 = Form3::var(2);
    EXPECT_EQ(harmonic_cubic(monomial(0)), -pow(w, 3));
    EXPECT_EQ(harmonic_cubic(monomial(3)),
              ExactScalar(8) * pow(x3, 3) - ExactScalar(12) * x3 * (pow(Form3::var(0), 2) + pow(Form3::var(1), 2)));
    EXPECT_EQ(harmonic_cubic(monomial(1)), ExactScalar(6) * x3 * pow(w, 2));
    EXPECT_THROW(harmonic_cubic(monomial(7)), DomainError);
}

TEST(HarmonicCubic, HarmonicAndLinear) {
    for (auto mode : {PairingMode::literal, PairingMode::apolar}) {
        for (int k = 0; k <= 6; ++k) {
            Form3 phi = harmonic_cubic(monomial(k), mode);
            EXPECT_EQ(phi.degree(), 3);
            EXPECT_FALSE(phi.is_zero());
            EXPECT_TRUE(laplacian(phi).is_zero()) << k;
        }
        CounterRng rng(31);
        for (int n = 0; n < 10; ++n) {
            P p = random_sextic(rng), q = random_sextic(rng);
            ExactScalar a = rng.gaussian(10);
            EXPECT_EQ(harmonic_cubic(p + a * q, mode), harmonic_cubic(p, mode) + a * harmonic_cubic(q, mode));
        }
    }
}

// The seven cubics are independent: p -> phi is injective onto the harmonic cubics.
TEST(HarmonicCubic, MonomialImagesAreIndependent) {
    std::vector<std::vector<ExactScalar>> rows;
    auto mons = ternary_monomials(3);
    for (int k = 0; k <= 6; ++k) {
        Form3 phi = harmonic_cubic(monomial(k));
        std::vector<ExactScalar> row;
        for (const auto& e : mons) row.push_back(phi.coeff(e));
        rows.push_back(row);
    }
    // Gram determinant of the 7 x 10 coefficient matrix
    Matrix<ExactScalar> gram(7, std::vector<ExactScalar>(7));
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            for (std::size_t k = 0; k < mons.size(); ++k) gram[a][b] = gram[a][b] + rows[a][k] * rows[b][k].conj();
    EXPECT_FALSE(determinant(gram).is_zero());
}

TEST(ConicPoint, Examples) {
    auto a = conic_point(ExactScalar(0));
    EXPECT_EQ(a[0], q_(-1, 2));
    EXPECT_EQ(a[1], ExactScalar(mpq_class(0), mpq_class(-1, 2)));
    EXPECT_EQ(a[2], ExactScalar(0));
    auto b = conic_point(ExactScalar(1));
    EXPECT_EQ(b[0], ExactScalar(0));
    EXPECT_EQ(b[1], -ExactScalar::i());
    EXPECT_EQ(b[2], ExactScalar(-1));
    Form3 xx = euclidean_quadric<ExactScalar>();
    CounterRng rng(32);
    for (int n = 0; n < 20; ++n) {
        ExactScalar t = rng.gaussian(100);
        auto x = conic_point(t);
        EXPECT_TRUE(xx(x).is_zero());
        // (x1 + i x2) + 2 x3 z - (x1 - i x2) z^2 = (z - t)^2
        const ExactScalar i = ExactScalar::i();
        P quad({x[0] + i * x[1], ExactScalar(2) * x[2], -(x[0] - i * x[1])});
        P lin({-t, ExactScalar(1)});
        EXPECT_EQ(quad, lin * lin);
    }
    EXPECT_TRUE(xx(conic_point(std::optional<ApproxScalar>{}, 128)).abs().is_zero());
}

TEST(TropeSextic, LiteralValueAtPole) {
    CounterRng rng(33);
    for (int n = 0; n < 50; ++n) {
        P p = random_sextic(rng);
        ExactScalar c1 = p.coeff(1), c3 = p.coeff(3), c5 = p.coeff(5);
        EXPECT_EQ(at_pole(trope_sextic(p)), ExactScalar(4608) * (c1 * c5 - ExactScalar(49) * c3 * c3));
        EXPECT_EQ(at_pole(trope_sextic(p, PairingMode::apolar)),
                  q_(32, 25) * (ExactScalar(100) * c1 * c5 - ExactScalar(441) * c3 * c3));
    }
}

// With the constants matching the d-bar calculus the apolar sextic at the pole is a
// fixed multiple of the determinant of the trope quadratic form.
TEST(TropeSextic, CalculusConstantsMatchQuadraticForm) {
    CounterRng rng(34);
    std::optional<ExactScalar> ratio;
    for (int n = 0; n < 50; ++n) {
        P p = random_sextic(rng);
        ExactScalar d = trope_quadratic_form(p).det;
        if (d.is_zero()) continue;
        ExactScalar s = at_pole(trope_sextic(p, PairingMode::apolar, calculus_sextic_constants()));
        ExactScalar r = s / d;
        if (ratio) EXPECT_EQ(r, *ratio);
        ratio = r;
        ExactScalar c1 = p.coeff(1), c3 = p.coeff(3), c5 = p.coeff(5);
        EXPECT_EQ(s * (c3 * c3 - ExactScalar(4) * c1 * c5).inverse(),
                  at_pole(trope_sextic(P({{}, ExactScalar(1), {}, ExactScalar(1), {}, ExactScalar(1), ExactScalar(1)}),
                                       PairingMode::apolar, calculus_sextic_constants())) /
                      ExactScalar(-3));
    }
    ASSERT_TRUE(ratio.has_value());
}

TEST(TropeSextic, EvenSexticVanishesAtPole) {
    P even({ExactScalar(3), {}, ExactScalar(-2), {}, ExactScalar(5), {}, ExactScalar(1)});
    for (auto mode : {PairingMode::literal, PairingMode::apolar}) {
        EXPECT_TRUE(at_pole(trope_sextic(even, mode)).is_zero());
        EXPECT_TRUE(at_pole(trope_sextic(even, mode, calculus_sextic_constants())).is_zero());
    }
}

TEST(TropeSextic, ConicRestrictionIsGammaPhiSquared) {
    CounterRng rng(35);
    for (int n = 0; n < 10; ++n) {
        P p = random_sextic(rng);
        for (auto mode : {PairingMode::literal, PairingMode::apolar}) {
            Form3 phi = harmonic_cubic(p, mode);
            P phi_t = conic_pullback(phi);
            EXPECT_EQ(conic_pullback(trope_sextic(p, mode)), ExactScalar(-3456) * phi_t * phi_t);
        }
        EXPECT_EQ(conic_pullback(harmonic_cubic(p, PairingMode::apolar)), p);
        EXPECT_EQ(conic_pullback(harmonic_cubic(p, PairingMode::literal)), reweighted_sextic(p));
    }
}

TEST(TropeSextic, Equivariance) {
    CounterRng rng(36);
    for (const auto& g : generators()) {
        auto r = rotation_for(g);
        // R preserves the null cone up to scale
        Form3 xx = euclidean_quadric<ExactScalar>();
        EXPECT_TRUE(proportional(xx.compose_linear(r), xx));
        for (int n = 0; n < 5; ++n) {
            P p = random_sextic(rng);
            P gp = act(g, BinaryForm<ExactScalar>::from_poly(p, 6)).to_poly();
            EXPECT_EQ(harmonic_cubic(gp, PairingMode::apolar), harmonic_cubic(p, PairingMode::apolar).compose_linear(r));
            auto k = calculus_sextic_constants();
            EXPECT_TRUE(proportional(trope_sextic(gp, PairingMode::apolar, k),
                                     trope_sextic(p, PairingMode::apolar, k).compose_linear(r)));
        }
    }
}

TEST(ConicTangency, RandomSextics) {
    CounterRng rng(37);
    for (int n = 0; n < 10; ++n) {
        P p = random_sextic(rng);
        auto a = conic_tangency_report(p, PairingMode::apolar);
        EXPECT_TRUE(a.all_even);
        EXPECT_EQ(a.distinct_points, 6);
        EXPECT_EQ(a.multiplicity_sum, 12);
        EXPECT_TRUE(a.proportional_to_p_squared);
        EXPECT_TRUE(a.restriction_is_gamma_phi_squared);
        auto l = conic_tangency_report(p, PairingMode::literal);
        EXPECT_TRUE(l.all_even);
        EXPECT_EQ(l.multiplicity_sum, 12);
        EXPECT_TRUE(l.proportional_to_reweighted_squared);
        for (const auto& e : l.points) EXPECT_EQ(e.multiplicity % 2, 0);
    }
}

TEST(ConicTangency, SixthRootsOfUnity) {
    const int prec = 256;
    P p({ExactScalar(-1), {}, {}, {}, {}, {}, ExactScalar(1)});
    auto r = conic_tangency_report(p, PairingMode::apolar, {}, prec);
    ASSERT_EQ(r.points.size(), 6u);
    for (const auto& e : r.points) {
        EXPECT_EQ(e.multiplicity, 2);
        EXPECT_LT((pow(e.root, 6) - ApproxScalar(1.0, 0.0, prec)).abs(), BigFloat::pow2(-200, prec));
    }
    EXPECT_THROW(conic_tangency_report(P({ExactScalar(1), ExactScalar(2), ExactScalar(1)})), DegeneracyError);
}

TEST(Hyperelliptic, RejectsRepeatedRoots) {
    EXPECT_THROW(HyperellipticData(P::from_roots({q_(1), q_(1), q_(2), q_(3), q_(4), q_(5)}, ExactScalar(1))),
                 DegeneracyError);
    EXPECT_THROW(HyperellipticData(P::from_roots({q_(1), q_(2)}, ExactScalar(1))), DomainError);
}

TEST(TropeLine, UnitPair) {
    const int prec = 256;
    P p = P::from_roots({q_(1), q_(-1), q_(2), q_(-3), q_(1, 2), q_(5)}, ExactScalar(1));
    HyperellipticData h(p, prec);
    int i = -1, j = -1;
    for (int k = 0; k < 6; ++k) {
        if ((h.roots[k] - ApproxScalar(1.0, 0.0, prec)).abs() < BigFloat::pow2(-100, prec)) i = k;
        if ((h.roots[k] + ApproxScalar(1.0, 0.0, prec)).abs() < BigFloat::pow2(-100, prec)) j = k;
    }
    ASSERT_GE(i, 0);
    ASSERT_GE(j, 0);
    auto r = trope_line_intersection(h, i, j, prec);
    ASSERT_EQ(r.conic_parameters.size(), 2u);
    EXPECT_LT(r.parameter_error, BigFloat::pow2(-100, prec));
    EXPECT_LT((r.conic_parameters[0] * r.conic_parameters[0] - ApproxScalar(1.0, 0.0, prec)).abs(),
              BigFloat::pow2(-100, prec));
    EXPECT_GT(r.min_other_value, BigFloat::pow2(-32, prec));
    EXPECT_LT(r.cross_ratio_residual, BigFloat::pow2(-64, prec));
    // common constant (z_i - z_j)^2 / 9
    for (const auto& x : r.localized_ratio)
        EXPECT_LT((x - ApproxScalar(q_(4, 9), prec)).abs(), BigFloat::pow2(-100, prec));
    EXPECT_THROW(trope_line_intersection(h, i, i, prec), DomainError);
}

TEST(TropeLine, RandomPairsSeparateHarmonically) {
    const int prec = 256;
    CounterRng rng(38);
    for (int n = 0; n < 5; ++n) {
        HyperellipticData h(random_sextic(rng), prec);
        int i = static_cast<int>(rng.uniform(0, 5));
        int j = (i + 1 + static_cast<int>(rng.uniform(0, 4))) % 6;
        auto r = trope_line_intersection(h, i, j, prec);
        EXPECT_LT(r.parameter_error, BigFloat::pow2(-100, prec));
        EXPECT_LT(r.cross_ratio_residual, BigFloat::pow2(-64, prec));
    }
}

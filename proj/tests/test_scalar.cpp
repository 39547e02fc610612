#include <gtest/gtest.h>

#include <set>

#include "hv/random.hpp"
#include "hv/scalar.hpp"

using namespace hv;

TEST(ExactScalar, GaussianArithmetic) {
    ExactScalar i = ExactScalar::i();
    EXPECT_EQ(i * i, ExactScalar(-1));
    ExactScalar z(mpq_class(3, 4), mpq_class(-2));
    EXPECT_EQ(z * z.inverse(), ExactScalar(1));
    EXPECT_EQ(z * z.conj(), ExactScalar(z.norm()));
    EXPECT_EQ((z + i) - i, z);
    EXPECT_EQ(pow(i, 4), ExactScalar(1));
    EXPECT_EQ(pow(ExactScalar(2), -3), ExactScalar::ratio(1, 8));
    EXPECT_THROW(ExactScalar().inverse(), DomainError);
    EXPECT_THROW(ExactScalar::ratio(1, 0), DomainError);
}

TEST(ExactScalar, CanonicalStrings) {
    EXPECT_EQ(ExactScalar::ratio(6, -4).str(), "-3/2");
    EXPECT_EQ(ExactScalar(mpq_class(1), mpq_class(-1)).str(), "1-i");
    EXPECT_TRUE(ExactScalar::ratio(2, 4) == ExactScalar::ratio(1, 2));
}

TEST(ApproxScalar, PrecisionFloorIsEnforced) {
    EXPECT_THROW(ApproxScalar(1.0, 0.0, 32), DomainError);
    EXPECT_NO_THROW(ApproxScalar(1.0, 0.0, kMinPrecision));
}

TEST(ApproxScalar, ArithmeticMatchesExact) {
    ExactScalar a(mpq_class(1, 3), mpq_class(2, 7)), b(mpq_class(-5, 11), mpq_class(1, 2));
    const int prec = 256;
    ApproxScalar x = to_approx(a, prec), y = to_approx(b, prec);
    BigFloat tol = BigFloat::pow2(-240, prec);
    EXPECT_LT((x * y - to_approx(a * b, prec)).abs(), tol);
    EXPECT_LT((x / y - to_approx(a / b, prec)).abs(), tol);
    ApproxScalar s = sqrt(x);
    EXPECT_LT((s * s - x).abs(), tol);
}

TEST(ApproxScalar, NearestRationalRecoversSmallFractions) {
    BigFloat x(mpq_class(-355, 113), 256);
    EXPECT_EQ(nearest_rational(x, mpz_class(1000)), mpq_class(-355, 113));
}

TEST(CounterRng, SameSeedSameStream) {
    CounterRng a(42), b(42);
    for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next(), b.next());
}

TEST(CounterRng, SplitStreamsAreIndependentOfDrawOrder) {
    CounterRng root(9);
    CounterRng s1 = root.split("alpha");
    std::uint64_t first = s1.next();
    CounterRng other = root.split("beta");
    other.next();
    EXPECT_EQ(CounterRng(9).split("alpha").next(), first);
    EXPECT_NE(CounterRng(9).split("beta").next(), first);
    EXPECT_NE(root.split(std::uint64_t{1}).next(), root.split(std::uint64_t{2}).next());
}

TEST(CounterRng, RationalsRespectHeight) {
    CounterRng rng(1);
    std::set<std::string> seen;
    for (int k = 0; k < 500; ++k) {
        mpq_class q = rng.rational(10);
        EXPECT_LE(abs(q.get_num()), 10);
        EXPECT_GE(q.get_den(), 1);
        EXPECT_LE(q.get_den(), 10);
        seen.insert(q.get_str());
    }
    EXPECT_GT(seen.size(), 20u);
}

TEST(Errors, HierarchyIsCatchable) {
    EXPECT_THROW(throw LogObstruction("x"), CalculusError);
    EXPECT_THROW(throw DivergenceError("x"), CalculusError);
    try {
        throw ConditioningError("bad", 3);
    } catch (const ConditioningError& e) {
        EXPECT_EQ(e.numerical_rank, 3);
    }
}

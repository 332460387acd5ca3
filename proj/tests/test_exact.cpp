#include <nbar/exact.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <random>

using namespace nbar;
using big_float = boost::multiprecision::cpp_bin_float_100;

TEST(Rational, ReducesAndNormalizesSign) {
    EXPECT_EQ(reduce(4, 6), Rational(2, 3));
    EXPECT_EQ(reduce(-2, -4), Rational(1, 2));
    EXPECT_EQ(reduce(2, -4).str(), "-1/2");
    EXPECT_TRUE(reduce(3, 0).is_infinite());
    EXPECT_EQ(reduce(3, 0), Rational::infinity());
    EXPECT_EQ(reduce(-3, 0).str(), "1/0");
    EXPECT_THROW(reduce(0, 0), std::invalid_argument);
}

TEST(Rational, InfinityIsOnlyAVertex) {
    Rational inf = Rational::infinity();
    EXPECT_GT(inf, Rational(1000000));
    EXPECT_THROW(inf + Rational(1), std::domain_error);
    EXPECT_THROW((void)inf.floor(), std::domain_error);
}

TEST(Rational, CompareAgreesWithCrossProducts) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
    for (int i = 0; i < 2000; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        int s = (a.num() * b.den() - b.num() * a.den()).sign();
        EXPECT_EQ((a <=> b) < 0, s < 0);
        EXPECT_EQ(a == b, s == 0);
    }
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
    EXPECT_TRUE(Rational::parse("1/0").is_infinite());
    EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
}

TEST(Padic, Valuations) {
    EXPECT_EQ(padic_valuation(12, 2), 2u);
    EXPECT_EQ(padic_valuation(7, 7), 1u);
    EXPECT_EQ(padic_valuation(1, 5), 0u);
    EXPECT_THROW(padic_valuation(8, 1), std::invalid_argument);
}

TEST(Surd, SquareFactorsExtracted) {
    QuadraticSurd s = QuadraticSurd::parse("(3+sqrt(45))/9");
    EXPECT_EQ(s, QuadraticSurd::parse("(1+sqrt(5))/3"));
    EXPECT_EQ(s.d(), 5);
    EXPECT_TRUE(QuadraticSurd::parse("(1+sqrt(4))/3").is_rational());
    EXPECT_EQ(QuadraticSurd::parse("(1+sqrt(4))/3").to_rational(), Rational(1));
    EXPECT_EQ(QuadraticSurd::parse("(-1+sqrt(5))/2").str(), "(-1+sqrt(5))/2");
    EXPECT_EQ(QuadraticSurd::parse("(2-sqrt(8))/4").str(), "(1-sqrt(2))/2");
    EXPECT_EQ(QuadraticSurd::parse("sqrt(2)").str(), "(0+sqrt(2))/1");
}

TEST(Surd, SquarefreeSplitLargeCofactors) {
    auto [f, s] = squarefree_split(integer(1000003) * 1000003 * 6);
    EXPECT_EQ(f, 1000003);
    EXPECT_EQ(s, 6);
    auto [f2, s2] = squarefree_split(integer(999983) * 1000003);
    EXPECT_EQ(f2, 1);
    EXPECT_EQ(s2, integer(999983) * 1000003);
}

TEST(Surd, CompareExamples) {
    auto golden = QuadraticSurd::parse("(-1+sqrt(5))/2");
    EXPECT_GT(surd_compare(golden, QuadraticSurd(Rational(1, 2))), 0);
    EXPECT_EQ(surd_compare(QuadraticSurd(Rational(3, 2)), QuadraticSurd(Rational(3, 2))), 0);
    EXPECT_LT(surd_compare(QuadraticSurd::parse("sqrt(2)"), QuadraticSurd(Rational(3, 2))), 0);
}

TEST(Surd, CanonicalPqdDividesDiscriminantGap) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> v(-40, 40), c(1, 40), d(2, 60);
    for (int i = 0; i < 500; ++i) {
        int b = v(rng);
        if (b == 0) b = 1;
        QuadraticSurd s(v(rng), b, d(rng), c(rng));
        if (s.is_rational()) continue;
        auto [P, D, Q] = s.canonical_pqd();
        EXPECT_EQ((D - P * P) % Q, 0);
        EXPECT_EQ(QuadraticSurd::pqd(P, D, Q), s);
    }
}

static big_float numeric(const QuadraticSurd& s) {
    big_float a(s.a()), b(s.b()), c(s.c()), d(s.d());
    return (a + b * boost::multiprecision::sqrt(d)) / c;
}

TEST(Surd, CompareMatchesHighPrecisionOnRandomSurds) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> v(-1000, 1000), c(1, 1000), dd(2, 30);
    for (int i = 0; i < 10000; ++i) {
        int d = dd(rng);
        QuadraticSurd x(v(rng), v(rng), d, c(rng)), y(v(rng), v(rng), d, c(rng));
        int exact = surd_compare(x, y);
        big_float diff = numeric(x) - numeric(y);
        if (exact == 0)
            EXPECT_LT(boost::multiprecision::abs(diff), big_float(1e-60));
        else
            EXPECT_EQ(exact, diff > 0 ? 1 : -1) << x << " vs " << y;
    }
}

TEST(Surd, CompareIsTransitive) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> v(-30, 30), c(1, 30);
    std::vector<QuadraticSurd> xs;
    for (int i = 0; i < 60; ++i) xs.emplace_back(v(rng), v(rng), 7, c(rng));
    for (auto& a : xs)
        for (auto& b : xs)
            for (auto& c2 : xs)
                if (surd_compare(a, b) <= 0 && surd_compare(b, c2) <= 0) EXPECT_LE(surd_compare(a, c2), 0);
}

TEST(Surd, FloorExact) {
    EXPECT_EQ(QuadraticSurd::parse("sqrt(2)").floor(), 1);
    EXPECT_EQ(QuadraticSurd::parse("(-1+sqrt(5))/2").floor(), 0);
    EXPECT_EQ(QuadraticSurd::parse("(-1-sqrt(5))/2").floor(), -2);
    EXPECT_EQ(QuadraticSurd(Rational(-7, 2)).floor(), -4);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> v(-500, 500), c(1, 50), d(2, 99);
    for (int i = 0; i < 2000; ++i) {
        QuadraticSurd s(v(rng), v(rng), d(rng), c(rng));
        integer f = s.floor();
        EXPECT_GE(s.compare(Rational(f)), 0);
        EXPECT_LT(s.compare(Rational(f + 1)), 0);
    }
}

TEST(Surd, ArithmeticClosedUnderCanonicalForm) {
    auto x = QuadraticSurd::parse("(3+sqrt(7))/2");
    auto checks = {x + QuadraticSurd(Rational(5, 3)), x * QuadraticSurd(Rational(4)), x.reciprocal(),
                   x - QuadraticSurd(Rational(2))};
    for (const auto& y : checks) {
        auto [P, D, Q] = y.canonical_pqd();
        EXPECT_EQ((D - P * P) % Q, 0) << y;
        EXPECT_NEAR(static_cast<double>(numeric(y)), static_cast<double>(numeric(QuadraticSurd::pqd(P, D, Q))), 1e-12);
    }
    EXPECT_EQ(x * x.reciprocal(), QuadraticSurd(Rational(1)));
}

TEST(Mobius, ActsOnRationalsAndSurds) {
    Mobius t{1, 1, 0, 1};
    EXPECT_EQ(t(Rational(0)), Rational(1));
    EXPECT_TRUE(t(Rational::infinity()).is_infinite());
    Mobius s{0, -1, 1, 0};
    EXPECT_EQ(s(Rational(2)), Rational(-1, 2));
    EXPECT_TRUE(s(Rational(0)).is_infinite());
    auto g = QuadraticSurd::parse("(-1+sqrt(5))/2");
    EXPECT_EQ((t * s)(g), t(s(g)));
    EXPECT_EQ((t.inverse() * t)(g), g);
}

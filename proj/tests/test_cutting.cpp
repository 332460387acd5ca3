#include <nbar/corpus.hpp>
#include <nbar/cutting.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace nbar;

static ContinuedFraction CF(const char* s) { return ContinuedFraction::parse(s); }
static QuadraticSurd S(const char* s) { return QuadraticSurd::parse(s); }
static CuttingWord W(std::initializer_list<long long> e) {
    CuttingWord w;
    for (auto x : e) w.exponents.emplace_back(x);
    return w;
}

TEST(Trace, Examples) {
    EXPECT_EQ(trace(S("(-1+sqrt(5))/2"), 1).str(), "[0;(1)]");
    EXPECT_EQ(trace(QuadraticSurd(Rational(3, 2)), 1).str(), "[1;2]");
    EXPECT_EQ(trace(S("(-1+sqrt(5))/2"), 2).str(), "[1;(4)]");
    EXPECT_EQ(trace(QuadraticSurd(Rational(2)), 1).str(), "[2]");
    EXPECT_EQ(trace(QuadraticSurd(Rational(3, 7)), 7).str(), "[3]");
    EXPECT_THROW(trace(QuadraticSurd(Rational(0)), 1), std::domain_error);
    EXPECT_THROW(trace(S("(1-sqrt(5))/2"), 3), std::domain_error);
}

TEST(Trace, TruncatesAtHorizon) {
    auto r = trace_detailed(QuadraticSurd(Rational(355, 113)), 1, 2);
    EXPECT_TRUE(r.truncated);
    EXPECT_EQ(r.cf.str(), "[3;7]");
    auto full = trace_detailed(QuadraticSurd(Rational(355, 113)), 1);
    EXPECT_FALSE(full.truncated);
    EXPECT_EQ(full.cf.str(), "[3;7,16]");
}

TEST(Trace, HugeQuotientUsesFewComparisons) {
    QuadraticSurd x = QuadraticSurd::pqd(0, integer(1) << 80, 1) + QuadraticSurd(Rational(1, 3));
    auto cf = trace(x, 1, 3);
    EXPECT_EQ(cf.a0, (integer(1) << 40));
}

TEST(Trace, IdentityWithScaleOne) {
    for (const auto& cf : random_corpus(300, 17)) EXPECT_EQ(trace(cf_to_surd(cf), 1), cf) << cf;
}

TEST(MultiplyNbar, Examples) {
    EXPECT_EQ(multiply_nbar(CF("[0;(1)]"), 2).str(), "[1;(4)]");
    EXPECT_EQ(multiply_nbar(CF("[0;2,(1,1,2)]"), 7), multiply_oracle(CF("[0;2,(1,1,2)]"), 7));
    EXPECT_EQ(multiply_nbar(CF("[0;2,(1,1,2)]"), 7).str(), "[2;(1,2,2,8,2,2,1,14,22,14)]");
    EXPECT_EQ(multiply_nbar(CF("[5;2,(1,1)]"), 9).str(), "[48;2,(3,1,1,19,1,1)]");
    EXPECT_EQ(multiply_nbar(CF("[1;2]"), 3).str(), "[4;2]");
}

TEST(MultiplyNbar, MatchesOracleOnCorpus) {
    auto corpus = random_corpus(60, 99);
    for (const auto& cf : corpus)
        for (int n = 1; n <= 12; ++n) ASSERT_EQ(multiply_nbar(cf, n), multiply_oracle(cf, n)) << cf << " n=" << n;
}

TEST(MultiplyNbar, FiniteInputs) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> num(1, 400), den(1, 60);
    for (int i = 0; i < 300; ++i) {
        Rational r(num(rng), den(rng));
        auto cf = surd_to_cf(QuadraticSurd(r));
        for (int n = 1; n <= 12; ++n) ASSERT_EQ(multiply_nbar(cf, n), multiply_oracle(cf, n)) << cf << " n=" << n;
    }
}

TEST(ConvergentVertices, Examples) {
    std::vector<Rational> golden{Rational::infinity(), 0, 1, Rational(1, 2), Rational(2, 3), Rational(3, 5),
                                 Rational(5, 8)};
    EXPECT_EQ(convergent_vertices(S("(-1+sqrt(5))/2"), 1, 7), golden);
    std::vector<Rational> three_halves{Rational::infinity(), 1, Rational(3, 2)};
    EXPECT_EQ(convergent_vertices(QuadraticSurd(Rational(3, 2)), 1, 2), three_halves);
    std::vector<Rational> half{Rational::infinity(), Rational(1, 2), Rational(5, 8)};
    EXPECT_EQ(convergent_vertices(S("(-1+sqrt(5))/2"), 2, 3), half);
}

TEST(ConvergentVertices, AreConvergentsAfterRescaling) {
    for (const auto& cf : random_corpus(80, 5))
        for (int d : {1, 2, 3, 5, 8}) {
            auto x = cf_to_surd(cf);
            auto vs = convergent_vertices(x, d, 12);
            auto cs = convergents(surd_to_cf(QuadraticSurd(Rational(d)) * x), 11);
            ASSERT_EQ(vs.size(), 12u);
            EXPECT_TRUE(vs[0].is_infinite());
            for (std::size_t k = 0; k < cs.size(); ++k) EXPECT_EQ(scale(vs[k + 1], d), cs[k].value());
        }
}

TEST(FanLaw, PivotSharedByEntryAndExitAndLettersAlternate) {
    for (const auto& cf : random_corpus(80, 8))
        for (int d = 1; d <= 9; ++d) {
            auto r = trace_detailed(cf_to_surd(cf), d, 40, false);
            for (std::size_t k = 0; k < r.fans.size(); ++k) {
                const auto& f = r.fans[k];
                if (k) EXPECT_NE(f.letter, r.fans[k - 1].letter);
                EXPECT_TRUE(f.entry.valid());
                EXPECT_TRUE(f.exit.valid());
                EXPECT_TRUE(f.entry.has_vertex(f.pivot));
                EXPECT_TRUE(f.exit.has_vertex(f.pivot));
                if (k) EXPECT_EQ(f.entry, r.fans[k - 1].exit);
            }
        }
}

TEST(ReduceWord, Examples) {
    EXPECT_EQ(reduce_word(W({0, 1, 1, 1, 0, -1, 1, 1, 1})), W({0, 1, 2, 1, 1}));
    EXPECT_EQ(reduce_word(W({2, 0, 3})), W({5}));
    EXPECT_EQ(reduce_word(W({0, 3, 1})), W({0, 3, 1}));
    EXPECT_EQ(reduce_word(W({4, 2, 0})), W({4, 2}));
    EXPECT_EQ(eta(W({0, 1, 2, 1, 1})).str(), "[0;1,2,1,1]");
}

TEST(ReduceWord, IdempotentAndMatchesConcatenation) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> len(1, 12), e(0, 4);
    for (int i = 0; i < 2000; ++i) {
        CuttingWord w;
        int n = len(rng);
        for (int k = 0; k < n; ++k) w.exponents.emplace_back(k == 0 || e(rng) > 0 ? e(rng) + (k > 0) : 0);
        w.exponents.emplace_back(1 + e(rng));
        auto r = reduce_word(w);
        EXPECT_EQ(reduce_word(r), r);
        for (std::size_t k = 1; k < r.exponents.size(); ++k) EXPECT_NE(r.exponents[k], 0);
        // concatenation rule on the CF side gives the same value
        EXPECT_EQ(cf_to_surd(eta(r)), cf_to_surd(absorb_zero_quotients(eta(w))));
    }
}

TEST(ClosedCurve, Examples) {
    EXPECT_TRUE(is_closed_curve(CF("[(1)]")));
    EXPECT_TRUE(is_closed_curve(CF("[2;(1,3)]")));
    EXPECT_FALSE(is_closed_curve(CF("[3;(1,2)]")));
}

TEST(ClosedCurve, EspClosedUnderScaling) {
    int checked = 0;
    for (const auto& cf : random_corpus(200, 31)) {
        if (!is_closed_curve(cf)) continue;
        ++checked;
        for (int n = 2; n <= 12; ++n) {
            EXPECT_TRUE(is_closed_curve(multiply_nbar(cf, n))) << cf << " n=" << n;
            EXPECT_TRUE(is_closed_curve(multiply_oracle(cf, Rational(1, n)))) << cf << " /" << n;
        }
    }
    EXPECT_GT(checked, 10);
}

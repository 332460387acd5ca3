#pragma once

// Seeded random eventually periodic continued fractions.

#include "continued_fraction.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace nbar {

struct CorpusShape {
    unsigned max_quotient = 9;
    unsigned max_period = 6;
    unsigned max_preperiod = 4;
};

// positive CFs a0 in [0, max_quotient], preperiod length in [0, max_preperiod],
// period length in [1, max_period]; stored in canonical form
inline std::vector<ContinuedFraction> random_corpus(std::size_t count, std::uint64_t seed, CorpusShape shape = {}) {
    std::mt19937_64 rng(seed);
    auto pick = [&](unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(rng() % (hi - lo + 1)); };
    std::vector<ContinuedFraction> out;
    out.reserve(count);
    while (out.size() < count) {
        ContinuedFraction cf;
        cf.a0 = pick(0, shape.max_quotient);
        for (unsigned k = pick(0, shape.max_preperiod); k > 0; --k) cf.pre.push_back(pick(1, shape.max_quotient));
        for (unsigned k = pick(1, shape.max_period); k > 0; --k) cf.period.push_back(pick(1, shape.max_quotient));
        out.push_back(normalize(cf));
    }
    return out;
}

// strictly periodic members: [(a0;p1..ps)] with a0 >= 1, or [0;(p1..ps)]
inline std::vector<ContinuedFraction> random_sp_corpus(std::size_t count, std::uint64_t seed, CorpusShape shape = {}) {
    std::mt19937_64 rng(seed);
    auto pick = [&](unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(rng() % (hi - lo + 1)); };
    std::vector<ContinuedFraction> out;
    while (out.size() < count) {
        ContinuedFraction cf;
        for (unsigned k = pick(1, shape.max_period); k > 0; --k) cf.period.push_back(pick(1, shape.max_quotient));
        if (rng() % 2)
            cf.a0 = 0;
        else
            cf.a0 = cf.period.back();
        out.push_back(normalize(cf));
    }
    return out;
}

}  // namespace nbar

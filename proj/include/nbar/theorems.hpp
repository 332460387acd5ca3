#pragma once

// Executable checks of the number-theoretic consequences of n-bar: divisible
// convergents, heights after scaling, EVP -> ESP decompositions, growth bounds.

#include "cutting.hpp"

#include <optional>

namespace nbar {

struct Pro2Witness {
    std::size_t k;
    integer q_k, n, a_k;
    std::optional<integer> a_next;  // a_{k+1}, the length of the fan pivoting on p_k/q_k
    integer B_observed;
    Rational promoted;  // p_k / (q_k / n)
    bool bound_n = false;       // B >= n
    bool bound_n_ak = false;    // B >= n a_k
    bool bound_n_anext = false; // B >= n a_{k+1}
    bool promoted_in_trace = false;
    bool promoted_in_oracle = false;

    bool proposition_holds() const { return bound_n && promoted_in_trace && promoted_in_oracle; }
};

inline std::vector<Pro2Witness> verify_pro2(const ContinuedFraction& cf, const integer& n, std::size_t horizon) {
    if (n < 2) throw std::invalid_argument("verify_pro2: n must be at least 2");
    std::vector<Pro2Witness> out;
    auto cs = convergents(cf, cf.periodic() ? horizon + 2 : std::min(horizon + 2, cf.size()));
    integer B = height_B(multiply_nbar(cf, n));
    for (std::size_t k = 0; k <= horizon && k < cs.size(); ++k) {
        const auto& c = cs[k];
        if (c.q % n != 0 || c.q <= n) continue;
        Pro2Witness w{k, c.q, n, cf.quotient(k), std::nullopt, B, Rational(c.p, c.q / n)};
        if (k + 1 < cs.size()) w.a_next = cf.quotient(k + 1);
        w.bound_n = B >= n;
        w.bound_n_ak = B >= n * w.a_k;
        w.bound_n_anext = w.a_next && B >= n * *w.a_next;
        out.push_back(w);
    }
    if (out.empty()) return out;
    // convergents of n alpha up to the largest promoted denominator, from the oracle and from the trace
    integer qmax = out.back().promoted.den();
    ContinuedFraction oracle = multiply_oracle(cf, Rational(n));
    std::vector<Convergent> ocs;
    for (std::size_t len = 8;; len *= 2) {
        if (!oracle.periodic()) len = std::min(len, oracle.size());
        ocs = convergents(oracle, len);
        if (ocs.back().q > qmax || (!oracle.periodic() && len == oracle.size())) break;
    }
    auto vs = convergent_vertices(cf_to_surd(cf) * QuadraticSurd(Rational(n)), 1, ocs.size() + 1);
    for (auto& w : out) {
        for (const auto& oc : ocs) w.promoted_in_oracle |= oc.value() == w.promoted;
        for (const auto& v : vs) w.promoted_in_trace |= v == w.promoted;
    }
    return out;
}

enum class ConvergentSide { Denominators, Numerators };

// indices k <= horizon with n | q_k (or n | p_k), tracked mod n
inline std::vector<std::size_t> scan_divisible_convergents(const ContinuedFraction& cf, const integer& n, std::size_t horizon,
                                                           ConvergentSide side) {
    if (n < 2) throw std::invalid_argument("scan_divisible_convergents: n must be at least 2");
    std::vector<std::size_t> hits;
    integer p1 = 1, q1 = 0, p2 = 0, q2 = 1;
    std::size_t len = cf.periodic() ? horizon + 1 : std::min(horizon + 1, cf.size());
    for (std::size_t k = 0; k < len; ++k) {
        integer a = mod(cf.quotient(k), n);
        integer p = mod(a * p1 + p2, n), q = mod(a * q1 + q2, n);
        p2 = p1, q2 = q1, p1 = p, q1 = q;
        if ((side == ConvergentSide::Denominators ? q : p) == 0) hits.push_back(k);
    }
    return hits;
}

enum class EvpStatus { Trivial, Found, Obstructed, Exhausted };

inline const char* to_string(EvpStatus s) {
    switch (s) {
        case EvpStatus::Trivial: return "trivial";
        case EvpStatus::Found: return "found";
        case EvpStatus::Obstructed: return "obstructed";
        case EvpStatus::Exhausted: return "exhausted";
    }
    return "?";
}

struct EvpDecomposition {
    EvpStatus status = EvpStatus::Exhausted;
    std::size_t k = 0;
    integer a = 0;
    QuadraticSurd scaled;                    // n^k beta
    QuadraticSurd alpha;                     // n^k beta - a, ESP+
    std::optional<ContinuedFraction> alpha_cf;  // when the expansion is short enough to store
    bool classify_agrees = true;             // classify(alpha_cf) is SP/ESP whenever alpha_cf is known
    bool purely_periodic_tail = false;       // n^k beta = [a'_0; (a_1..a_s)] with a'_0 > a_s
    std::size_t m_checked = 0;
    bool m_claim = true;

    bool ok() const {
        return (status == EvpStatus::Trivial || status == EvpStatus::Found) && classify_agrees && m_claim;
    }
};

inline bool esp_plus(const QuadraticSurd& x) { return !x.is_rational() && x.sign() > 0 && x.conjugate().sign() < 0; }

// For m <= m_max: CF(m x) and CF(m (x - a)) agree after the integer part, which differs by m a.
// The left side is expanded from the surd, the right side traced through (1/m)F; compared
// exactly when both expansions are short, otherwise on the first `prefix` quotients.
inline bool check_m_claim(const QuadraticSurd& x, const integer& a, std::size_t m_max, std::size_t prefix = 64) {
    QuadraticSurd rest = x - QuadraticSurd(Rational(a));
    for (std::size_t m = 1; m <= m_max; ++m) {
        QuadraticSurd M(Rational(static_cast<long long>(m)));
        auto whole = try_surd_to_cf(M * x, 4 * prefix);
        auto part = trace_detailed(rest, integer(m), (whole ? 4 * prefix : prefix) + 2);
        if (whole && !part.truncated) {
            if (whole->pre != part.cf.pre || whole->period != part.cf.period || whole->a0 != part.cf.a0 + integer(m) * a)
                return false;
            continue;
        }
        // a truncated trace ends inside a fan, and normal form may fold a trailing 1 into it
        std::vector<integer> lhs = surd_prefix(M * x, prefix);
        const ContinuedFraction& c = part.cf;
        if (c.size() <= prefix || lhs[0] != c.a0 + integer(m) * a) return false;
        for (std::size_t t = 1; t < prefix; ++t)
            if (lhs[t] != c.quotient(t)) return false;
    }
    return true;
}

// Smallest k <= k_max with an integer a such that n^k beta - a is ESP+, taking the largest
// such a. Since x - a is ESP+ iff conj x < a < x, only a = floor(x) needs testing.
inline EvpDecomposition find_evp_decomposition(const ContinuedFraction& beta, const integer& n, std::size_t k_max = 12,
                                               std::size_t m_max = 8) {
    if (n < 2) throw std::invalid_argument("find_evp_decomposition: n must be at least 2");
    Periodicity p = classify(beta);
    if (p == Periodicity::FINITE) throw std::domain_error("find_evp_decomposition: finite continued fraction");
    EvpDecomposition d;
    QuadraticSurd b = cf_to_surd(beta);
    if (is_esp(p)) {
        d.status = EvpStatus::Trivial;
        d.scaled = d.alpha = b;
        d.alpha_cf = normalize(beta);
        return d;
    }
    integer nk = 1;
    for (std::size_t k = 0; k <= k_max; ++k, nk *= n) {
        QuadraticSurd x = QuadraticSurd(Rational(nk)) * b;
        integer a = x.floor();
        QuadraticSurd rest = x - QuadraticSurd(Rational(a));
        if (!esp_plus(rest)) continue;
        d.status = EvpStatus::Found;
        d.k = k;
        d.a = a;
        d.scaled = x;
        d.alpha = rest;
        d.alpha_cf = try_surd_to_cf(rest, 4096);
        if (d.alpha_cf) d.classify_agrees = is_esp(classify(*d.alpha_cf));
        QuadraticSurd tail = rest.reciprocal();
        d.purely_periodic_tail = is_reduced(tail) && a > (QuadraticSurd(Rational(-1)) / tail.conjugate()).floor();
        d.m_checked = m_max;
        d.m_claim = check_m_claim(x, a, m_max);
        return d;
    }
    // n^k (beta - conj beta) keeps the sign of beta - conj beta: with conj beta > beta no
    // integer ever fits between the conjugates, so no k can work
    d.status = b.conjugate() > b ? EvpStatus::Obstructed : EvpStatus::Exhausted;
    return d;
}

struct GrowthStep {
    std::size_t i;
    integer bound;
    integer B;  // a quotient >= bound when the step holds, otherwise the exact height
    bool holds() const { return B >= bound; }
};

struct GrowthReport {
    EvpDecomposition decomposition;
    std::size_t k = 0;  // total exponent: decomposition k plus the extra scaling j
    integer a0 = 0;     // floor(n^j alpha), the first such value above 1
    std::vector<GrowthStep> steps;

    bool ok() const {
        return decomposition.ok() &&
               std::all_of(steps.begin(), steps.end(), [](const GrowthStep& s) { return s.holds(); });
    }
};

// n^i a0 <= B(n^{i+k} beta) for i = 0..i_max, where n^{k'} beta = a + alpha with alpha
// ESP+, k = k' + j and a0 = floor(n^j alpha) > 1.
inline GrowthReport verify_exponential_growth(const ContinuedFraction& beta, const integer& n, std::size_t i_max,
                                              std::size_t k_max = 12) {
    GrowthReport r;
    r.decomposition = find_evp_decomposition(beta, n, k_max);
    if (!r.decomposition.ok()) return r;
    const QuadraticSurd& alpha = r.decomposition.alpha;
    QuadraticSurd b = cf_to_surd(beta);
    integer nj = 1;
    std::size_t j = 0;
    while ((QuadraticSurd(Rational(nj)) * alpha).floor() <= 1) nj *= n, ++j;
    r.a0 = (QuadraticSurd(Rational(nj)) * alpha).floor();
    r.k = r.decomposition.k + j;
    integer nk = 1, ni = 1;
    for (std::size_t t = 0; t < r.k; ++t) nk *= n;
    for (std::size_t i = 0; i <= i_max; ++i, ni *= n) {
        QuadraticSurd x = QuadraticSurd(Rational(ni * nk)) * b;
        integer bound = ni * r.a0;
        auto hit = quotient_at_least(x, bound);
        r.steps.push_back({i, bound, hit ? *hit : height_B(surd_to_cf(x))});
    }
    return r;
}

// B(m alpha) >= floor(m alpha) for ESP+ alpha
inline std::vector<std::size_t> verify_height_floor(const ContinuedFraction& alpha, std::size_t m_max) {
    std::vector<std::size_t> violations;
    QuadraticSurd a = cf_to_surd(alpha);
    for (std::size_t m = 1; m <= m_max; ++m) {
        QuadraticSurd x = QuadraticSurd(Rational(static_cast<long long>(m))) * a;
        if (!quotient_at_least(x, x.floor())) violations.push_back(m);
    }
    return violations;
}

}  // namespace nbar

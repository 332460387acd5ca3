#pragma once

// Cutting sequences of the geodesic from the imaginary axis to alpha against the
// scaled Farey complex (1/d)F, read off fan by fan.

#include "continued_fraction.hpp"
#include "farey.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace nbar {

enum class Letter { L, R };

inline char to_char(Letter l) { return l == Letter::L ? 'L' : 'R'; }

// L^{e0} R^{e1} L^{e2} ... ; only exponents are stored, letters alternate from L
struct CuttingWord {
    std::vector<integer> exponents;

    Letter letter(std::size_t i) const { return i % 2 == 0 ? Letter::L : Letter::R; }
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (i) s += ' ';
            s += to_char(letter(i));
            s += '^';
            s += exponents[i].str();
        }
        return s;
    }
    friend bool operator==(const CuttingWord&, const CuttingWord&) = default;
};

// L^x R^0 L^y = L^{x+y}; a trailing zero exponent contributes nothing
inline CuttingWord reduce_word(const CuttingWord& w) {
    CuttingWord out{detail::absorb_interior(w.exponents)};
    while (out.exponents.size() > 1 && out.exponents.back() == 0) out.exponents.pop_back();
    return out;
}

inline ContinuedFraction eta(const CuttingWord& w) {
    if (w.exponents.empty()) throw std::invalid_argument("eta: empty word");
    ContinuedFraction cf;
    cf.a0 = w.exponents[0];
    cf.pre.assign(w.exponents.begin() + 1, w.exponents.end());
    return cf;
}

// Convergent bookkeeping for x = d*alpha. Fan k pivots on c_{k-1} and starts at
// c_{k-2}; the tail t with x = [a0;...,a_{k-1},t] is a Mobius image of x, so a
// repeated tail closes the period.
class FanTracker {
public:
    explicit FanTracker(QuadraticSurd x) : x_(std::move(x)) {}

    // returns the index where the period starts if the tail at this boundary repeats
    std::optional<std::size_t> boundary() {
        if (x_.is_rational()) return std::nullopt;
        QuadraticSurd t = (QuadraticSurd(Rational(p2_)) - QuadraticSurd(Rational(q2_)) * x_) /
                          (QuadraticSurd(Rational(q1_)) * x_ - QuadraticSurd(Rational(p1_)));
        auto key = t.canonical_pqd();
        auto [it, fresh] = seen_.emplace(key, terms_.size());
        if (!fresh) return it->second;
        return std::nullopt;
    }

    void push(const integer& a) {
        terms_.push_back(a);
        integer p = p2_ + a * p1_, q = q2_ + a * q1_;
        p2_ = p1_, q2_ = q1_;
        p1_ = p, q1_ = q;
    }

    const std::vector<integer>& terms() const { return terms_; }
    // c_{k-1}, c_{k-2} as integer pairs
    std::pair<integer, integer> pivot() const { return {p1_, q1_}; }
    std::pair<integer, integer> other() const { return {p2_, q2_}; }
    const QuadraticSurd& x() const { return x_; }

private:
    QuadraticSurd x_;
    integer p1_ = 1, q1_ = 0, p2_ = 0, q2_ = 1;
    std::vector<integer> terms_;
    std::map<std::tuple<integer, integer, integer>, std::size_t> seen_;
};

struct Fan {
    Letter letter;
    integer length;
    Rational pivot;
    FareyEdge entry, exit;
};

struct TraceResult {
    ContinuedFraction cf;
    CuttingWord word;
    std::vector<Fan> fans;
    std::optional<Rational> terminal;
    bool periodic = false;
    bool truncated = false;
};

inline TraceResult trace_detailed(const QuadraticSurd& alpha, const integer& d, std::size_t max_quotients = 10000,
                                  bool stop_on_period = true) {
    if (d < 1) throw std::invalid_argument("trace: scale must be positive");
    if (alpha.sign() <= 0) throw std::domain_error("trace: endpoint must be positive, got " + alpha.str());
    FanTracker tr(QuadraticSurd(Rational(d)) * alpha);
    const QuadraticSurd& x = tr.x();
    auto vertex = [&](const integer& p, const integer& q) { return q == 0 ? Rational::infinity() : Rational(p, q * d); };

    TraceResult res;
    for (std::size_t k = 0;; ++k) {
        if (auto start = stop_on_period ? tr.boundary() : std::nullopt) {
            res.cf = detail::from_terms(tr.terms(), *start);
            res.periodic = true;
            break;
        }
        if (k == max_quotients) {
            res.cf = detail::from_terms(tr.terms(), tr.terms().size());
            res.truncated = true;
            break;
        }
        Letter letter = k % 2 == 0 ? Letter::L : Letter::R;
        auto [pp, pq] = tr.pivot();
        auto [op, oq] = tr.other();
        // >0 while the j-th triangle of the fan is still cut on the same side, 0 on a hit
        auto side = [&](const integer& j) {
            int s = x.compare(Rational(op + j * pp, oq + j * pq));
            return letter == Letter::L ? s : -s;
        };
        integer lo = 0, hi = 1;
        while (side(hi) > 0) lo = hi, hi *= 2;
        while (hi - lo > 1) {
            integer mid = (lo + hi) / 2;
            (side(mid) > 0 ? lo : hi) = mid;
        }
        bool hit = side(hi) == 0;
        integer a = hit ? hi : lo;
        Rational piv = vertex(pp, pq);
        Fan fan{letter, a, piv, FareyEdge(vertex(op, oq), piv, d),
                FareyEdge(vertex(op + a * pp, oq + a * pq), piv, d)};
        res.fans.push_back(fan);
        tr.push(a);
        if (hit) {
            res.terminal = vertex(op + a * pp, oq + a * pq);
            res.cf = detail::from_terms(tr.terms(), tr.terms().size());
            break;
        }
    }
    res.word.exponents = tr.terms();
    return res;
}

inline ContinuedFraction trace(const QuadraticSurd& alpha, const integer& d, std::size_t max_quotients = 10000) {
    return trace_detailed(alpha, d, max_quotients).cf;
}

inline ContinuedFraction multiply_nbar(const ContinuedFraction& cf, const integer& n) {
    return trace(cf_to_surd(cf), n);
}

// fan pivots in order (oo first), then the terminal vertex when the trace ends
inline std::vector<Rational> convergent_vertices(const QuadraticSurd& alpha, const integer& d, std::size_t count) {
    auto res = trace_detailed(alpha, d, count, false);
    std::vector<Rational> out;
    for (const auto& f : res.fans) {
        if (out.size() == count) break;
        out.push_back(f.pivot);
    }
    if (res.terminal && res.fans.size() <= count) out.push_back(*res.terminal);
    return out;
}

inline bool is_closed_curve(const ContinuedFraction& cf) { return is_esp(classify(cf)); }

}  // namespace nbar

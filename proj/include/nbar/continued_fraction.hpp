#pragma once

// Continued fractions [a0; b1..br, (p1..ps)]: convergents, height B, the
// SP/ESP/EVP classes, zero-quotient absorption and the exact surd oracle.

#include "exact.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nbar {

struct ContinuedFraction {
    integer a0 = 0;
    std::vector<integer> pre;     // b1..br
    std::vector<integer> period;  // empty for a finite CF

    bool periodic() const { return !period.empty(); }

    // number of partial quotients of a finite CF, a0 included
    std::size_t size() const { return 1 + pre.size(); }

    // a_k, unrolling the period
    const integer& quotient(std::size_t k) const {
        if (k == 0) return a0;
        if (k <= pre.size()) return pre[k - 1];
        if (!periodic()) throw std::out_of_range("quotient index past finite CF");
        return period[(k - 1 - pre.size()) % period.size()];
    }

    std::string str() const {
        std::string s = "[" + a0.str();
        if (pre.empty() && period.empty()) return s + "]";
        s += ";";
        for (std::size_t i = 0; i < pre.size(); ++i) s += (i ? "," : "") + pre[i].str();
        if (periodic()) {
            s += pre.empty() ? "(" : ",(";
            for (std::size_t i = 0; i < period.size(); ++i) s += (i ? "," : "") + period[i].str();
            s += ")";
        }
        return s + "]";
    }

    static ContinuedFraction parse(std::string_view text);

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf) { return os << cf.str(); }

namespace detail {

inline std::vector<integer> parse_list(std::string_view s) {
    std::vector<integer> out;
    std::size_t i = 0;
    while (i <= s.size()) {
        auto j = s.find(',', i);
        if (j == std::string_view::npos) j = s.size();
        out.push_back(parse_integer(s.substr(i, j - i)));
        i = j + 1;
    }
    return out;
}

// smallest p dividing n with w[i] == w[i+p]
inline std::size_t minimal_period(const std::vector<integer>& w) {
    std::size_t n = w.size();
    std::vector<std::size_t> fail(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && w[i] != w[k]) k = fail[k];
        if (w[i] == w[k]) ++k;
        fail[i + 1] = k;
    }
    std::size_t p = n - fail[n];
    return n % p == 0 ? p : n;
}

// x, 0, y -> x + y over a word whose first entry is never absorbed; a trailing
// "x, 0" is left in place for the caller
inline std::vector<integer> absorb_interior(const std::vector<integer>& w) {
    std::vector<integer> st;
    for (const auto& e : w) {
        st.push_back(e);
        while (st.size() >= 3 && st[st.size() - 2] == 0) {
            integer y = std::move(st.back());
            st.pop_back();
            st.pop_back();
            st.back() += y;
        }
    }
    return st;
}

}  // namespace detail

inline ContinuedFraction ContinuedFraction::parse(std::string_view text) {
    std::string t;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') t.push_back(ch);
    if (t.size() < 3 || t.front() != '[' || t.back() != ']') throw std::invalid_argument("bad continued fraction: " + t);
    std::string body = t.substr(1, t.size() - 2);
    ContinuedFraction cf;
    if (body.front() == '(') {
        // [(a0;p1,..,ps)]: purely periodic including a0
        if (body.back() != ')') throw std::invalid_argument("bad continued fraction: " + t);
        std::string inner = body.substr(1, body.size() - 2);
        auto semi = inner.find(';');
        cf.a0 = parse_integer(inner.substr(0, semi));
        if (semi != std::string::npos) cf.period = detail::parse_list(std::string_view(inner).substr(semi + 1));
        cf.period.push_back(cf.a0);
        return cf;
    }
    auto semi = body.find(';');
    cf.a0 = parse_integer(body.substr(0, semi));
    if (semi == std::string::npos) return cf;
    std::string rest = body.substr(semi + 1);
    if (rest.empty()) throw std::invalid_argument("bad continued fraction: " + t);
    auto open = rest.find('(');
    if (open != std::string::npos) {
        if (rest.back() != ')' || (open > 0 && rest[open - 1] != ',')) throw std::invalid_argument("bad continued fraction: " + t);
        cf.period = detail::parse_list(std::string_view(rest).substr(open + 1, rest.size() - open - 2));
        rest = open > 0 ? rest.substr(0, open - 1) : std::string();
    }
    if (!rest.empty()) cf.pre = detail::parse_list(rest);
    for (const auto& q : cf.pre)
        if (q < 0) throw std::invalid_argument("negative partial quotient in " + t);
    for (const auto& q : cf.period)
        if (q < 0) throw std::invalid_argument("negative partial quotient in " + t);
    return cf;
}

inline bool has_zero_quotient(const ContinuedFraction& cf) {
    auto z = [](const integer& q) { return q == 0; };
    return std::any_of(cf.pre.begin(), cf.pre.end(), z) || std::any_of(cf.period.begin(), cf.period.end(), z);
}

// Eliminates zero quotients by concatenating flanking fans: [.., x, 0, y, ..] = [.., x+y, ..].
inline ContinuedFraction absorb_zero_quotients(const ContinuedFraction& cf) {
    std::vector<integer> lin{cf.a0};
    lin.insert(lin.end(), cf.pre.begin(), cf.pre.end());
    if (!cf.periodic()) {
        lin = detail::absorb_interior(lin);
        // [.., w, x, 0] = [.., w]: the tail x + 1/0 is infinite
        while (lin.size() >= 2 && lin.back() == 0) {
            lin.pop_back();
            lin.pop_back();
        }
        if (lin.empty()) throw std::domain_error("continued fraction collapses to infinity");
        return {lin[0], std::vector<integer>(lin.begin() + 1, lin.end()), {}};
    }
    std::vector<integer> per = cf.period;
    std::size_t s = per.size();
    // rotate so the period neither starts nor ends with a zero
    std::optional<std::size_t> rot;
    for (std::size_t r = 0; r < s && !rot; ++r)
        if (per[r] != 0 && per[(r + s - 1) % s] != 0) rot = r;
    if (!rot) throw std::domain_error("zero quotients leave no convergent periodic tail");
    auto r = static_cast<std::ptrdiff_t>(*rot);
    lin.insert(lin.end(), per.begin(), per.begin() + r);
    std::rotate(per.begin(), per.begin() + r, per.end());
    per = detail::absorb_interior(per);
    lin = detail::absorb_interior(lin);
    if (lin.size() >= 2 && lin.back() == 0) {
        // a trailing prefix zero swallows the head of the period
        lin.pop_back();
        lin.back() += per.front();
        std::rotate(per.begin(), per.begin() + 1, per.end());
    }
    return {lin[0], std::vector<integer>(lin.begin() + 1, lin.end()), per};
}

// Canonical form: zero-free, minimal period, shortest preperiod, no trailing 1 in finite CFs.
inline ContinuedFraction normalize(const ContinuedFraction& in) {
    ContinuedFraction cf = has_zero_quotient(in) ? absorb_zero_quotients(in) : in;
    if (!cf.periodic()) {
        if (!cf.pre.empty() && cf.pre.back() == 1) {
            cf.pre.pop_back();
            if (cf.pre.empty())
                cf.a0 += 1;
            else
                cf.pre.back() += 1;
        }
        return cf;
    }
    cf.period.resize(detail::minimal_period(cf.period));
    while (!cf.pre.empty() && cf.pre.back() == cf.period.back()) {
        cf.pre.pop_back();
        std::rotate(cf.period.rbegin(), cf.period.rbegin() + 1, cf.period.rend());
    }
    return cf;
}

struct Convergent {
    integer p, q;
    std::size_t k;
    Rational value() const { return Rational(p, q); }
};

inline std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count) {
    if (count == 0) throw std::invalid_argument("convergents: count must be positive");
    if (!cf.periodic() && count > cf.size()) throw std::out_of_range("convergents: count exceeds finite CF length");
    std::vector<Convergent> out;
    integer p1 = 1, q1 = 0, p0 = cf.a0, q0 = 1;
    out.push_back({p0, q0, 0});
    for (std::size_t k = 1; k < count; ++k) {
        const integer& a = cf.quotient(k);
        integer p = a * p0 + p1, q = a * q0 + q1;
        p1 = std::move(p0), q1 = std::move(q0);
        p0 = std::move(p), q0 = std::move(q);
        out.push_back({p0, q0, k});
    }
    return out;
}

// sup of a_i, i >= 1; exact for periodic input, otherwise over the first horizon quotients
inline integer height_B(const ContinuedFraction& cf, std::size_t horizon = 500) {
    integer best = 0;
    std::size_t n = cf.periodic() ? cf.pre.size() : std::min(cf.pre.size(), horizon);
    for (std::size_t i = 0; i < n; ++i) best = std::max(best, cf.pre[i]);
    for (const auto& q : cf.period) best = std::max(best, q);
    return best;
}

enum class Periodicity { SP, ESP, EVP, FINITE };

inline const char* to_string(Periodicity p) {
    switch (p) {
        case Periodicity::SP: return "SP";
        case Periodicity::ESP: return "ESP";
        case Periodicity::EVP: return "EVP";
        default: return "FINITE";
    }
}

// Forms: SP = [(a0;..)] or [0;(..)]; ESP adds [a0;(a1..as)] with 0 < a0 <= as and
// [0;a1,(a2..)] with a1 <= the last stored period entry.
inline Periodicity classify(const ContinuedFraction& input) {
    ContinuedFraction cf = normalize(input);
    if (cf.a0 < 0 || (cf.a0 == 0 && cf.pre.empty() && !cf.periodic()))
        throw std::domain_error("classify: value must be positive");
    if (!cf.periodic()) return Periodicity::FINITE;
    const integer& last = cf.period.back();
    if (cf.pre.empty() && (cf.a0 == last || cf.a0 == 0)) return Periodicity::SP;
    if (cf.pre.empty() && cf.a0 > 0 && cf.a0 <= last) return Periodicity::ESP;
    if (cf.a0 == 0 && cf.pre.size() == 1 && cf.pre[0] <= last) return Periodicity::ESP;
    return Periodicity::EVP;
}

inline bool is_esp(Periodicity p) { return p == Periodicity::SP || p == Periodicity::ESP; }

inline ContinuedFraction normalize_even_period(const ContinuedFraction& in, bool even_preperiod = false) {
    if (!in.periodic()) throw std::invalid_argument("normalize_even_period: finite continued fraction");
    ContinuedFraction cf = in;
    if (even_preperiod && cf.pre.size() % 2) {
        cf.pre.push_back(cf.period.front());
        std::rotate(cf.period.begin(), cf.period.begin() + 1, cf.period.end());
    }
    if (cf.period.size() % 2) {
        auto copy = cf.period;
        cf.period.insert(cf.period.end(), copy.begin(), copy.end());
    }
    return cf;
}

namespace detail {

inline Mobius quotient_matrix(const integer& a) { return {a, 1, 1, 0}; }

inline Mobius word_matrix(const integer& a0, const std::vector<integer>& w) {
    Mobius m = quotient_matrix(a0);
    for (const auto& q : w) m = m * quotient_matrix(q);
    return m;
}

}  // namespace detail

namespace detail {

// terms[start..] repeat forever; start == terms.size() means finite
inline ContinuedFraction from_terms(const std::vector<integer>& terms, std::size_t start) {
    ContinuedFraction cf;
    cf.a0 = terms.at(0);
    auto at = [&](std::size_t i) { return terms.begin() + static_cast<std::ptrdiff_t>(i); };
    if (start >= terms.size()) {
        cf.pre.assign(at(1), terms.end());
    } else if (start == 0) {
        // a0 itself repeats: the period is a1..as,a0
        cf.period.assign(at(1), terms.end());
        cf.period.push_back(terms[0]);
    } else {
        cf.pre.assign(at(1), at(start));
        cf.period.assign(at(start), terms.end());
    }
    return normalize(cf);
}

}  // namespace detail

inline QuadraticSurd cf_to_surd(const ContinuedFraction& input) {
    ContinuedFraction cf = has_zero_quotient(input) ? absorb_zero_quotients(input) : input;
    if (!cf.periodic()) {
        // evaluate from the back
        Rational x(cf.pre.empty() ? cf.a0 : cf.pre.back());
        for (std::size_t i = cf.pre.size(); i-- > 0;) {
            const integer& a = i == 0 ? cf.a0 : cf.pre[i - 1];
            x = Rational(a) + Rational(x.den(), x.num());
        }
        return QuadraticSurd(x);
    }
    // tail t = [p1;p2,..] satisfies t = M(t), M = prod [[p,1],[1,0]]; take the root > 1
    Mobius m{1, 0, 0, 1};
    for (const auto& q : cf.period) m = m * detail::quotient_matrix(q);
    // C t^2 + (D - A) t - B = 0
    integer disc = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
    QuadraticSurd t(m.a - m.d, integer(1), disc, 2 * m.c);
    if (t.compare(Rational(1)) < 0) t = QuadraticSurd(m.a - m.d, integer(-1), disc, 2 * m.c);
    // alpha = [a0; pre.., t]
    Mobius head{1, 0, 0, 1};
    std::vector<integer> lin{cf.a0};
    lin.insert(lin.end(), cf.pre.begin(), cf.pre.end());
    for (const auto& q : lin) head = head * detail::quotient_matrix(q);
    return head(t);
}

inline ContinuedFraction surd_to_cf(const QuadraticSurd& x) {
    if (x.is_rational()) {
        Rational r = x.to_rational();
        integer p = r.num(), q = r.den();
        ContinuedFraction cf;
        cf.a0 = floor_div(p, q);
        integer rem = p - cf.a0 * q;
        p = q, q = rem;
        while (q != 0) {
            integer a = p / q;
            cf.pre.push_back(a);
            integer r2 = p - a * q;
            p = q, q = r2;
        }
        return normalize(cf);
    }
    auto [P, D, Q] = x.canonical_pqd();
    std::vector<integer> terms;
    std::map<std::pair<integer, integer>, std::size_t> seen;
    while (true) {
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) return detail::from_terms(terms, it->second);
        seen.emplace(key, terms.size());
        // floor((P + sqrt D)/Q), exact
        integer a = QuadraticSurd::pqd(P, D, Q).floor();
        terms.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

// the first `count` partial quotients a_0, a_1, ... of irrational x
inline std::vector<integer> surd_prefix(const QuadraticSurd& x, std::size_t count) {
    if (x.is_rational()) throw std::invalid_argument("surd_prefix: rational input");
    auto [P, D, Q] = x.canonical_pqd();
    std::vector<integer> out;
    while (out.size() < count) {
        out.push_back(QuadraticSurd::pqd(P, D, Q).floor());
        P = out.back() * Q - P;
        Q = (D - P * P) / Q;
    }
    return out;
}

// reduced: y > 1 and -1 < conj(y) < 0, i.e. purely periodic
inline bool is_reduced(const QuadraticSurd& y) {
    QuadraticSurd c = y.conjugate();
    return !y.is_rational() && y > QuadraticSurd(Rational(1)) && c.sign() < 0 && c > QuadraticSurd(Rational(-1));
}

// Some partial quotient a_i, i >= 1, of irrational x with a_i >= bound, or nullopt when
// B(x) < bound. Besides the quotients met while scanning, the first reduced complete
// quotient y contributes the last quotient of its period, floor(-1/conj y) (Galois), so
// long periods rarely have to be walked.
inline std::optional<integer> quotient_at_least(const QuadraticSurd& x, const integer& bound) {
    if (x.is_rational()) throw std::invalid_argument("quotient_at_least: rational input");
    auto [P, D, Q] = x.canonical_pqd();
    std::set<std::pair<integer, integer>> seen;
    const auto start = std::make_pair(P, Q);
    integer a0 = x.floor();
    bool galois_done = false;
    for (bool first = true;; first = false) {
        // back at the start: a_0 recurs later in the expansion
        if (!seen.emplace(P, Q).second) return std::make_pair(P, Q) == start && a0 >= bound ? std::optional(a0) : std::nullopt;
        QuadraticSurd y = QuadraticSurd::pqd(P, D, Q);
        if (!galois_done && is_reduced(y)) {
            galois_done = true;
            integer last = (QuadraticSurd(Rational(-1)) / y.conjugate()).floor();
            if (last >= bound) return last;
        }
        integer a = y.floor();
        if (!first && a >= bound) return a;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

// the full expansion, or nullopt if preperiod plus period exceed max_terms
inline std::optional<ContinuedFraction> try_surd_to_cf(const QuadraticSurd& x, std::size_t max_terms) {
    if (x.is_rational()) return surd_to_cf(x);
    auto [P, D, Q] = x.canonical_pqd();
    std::set<std::pair<integer, integer>> seen;
    for (std::size_t t = 0; t <= max_terms; ++t) {
        if (!seen.emplace(P, Q).second) return surd_to_cf(x);
        integer a = QuadraticSurd::pqd(P, D, Q).floor();
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    return std::nullopt;
}

inline ContinuedFraction multiply_oracle(const ContinuedFraction& cf, const Rational& q) {
    if (q.is_infinite() || q <= Rational(0)) throw std::invalid_argument("multiply_oracle: multiplier must be positive");
    return surd_to_cf(QuadraticSurd(q) * cf_to_surd(cf));
}

}  // namespace nbar

#pragma once

// The Farey complex F on Q u {oo} and its scalings (1/d)F, combinatorially.

#include "exact.hpp"

#include <utility>
#include <vector>

namespace nbar {

// ps - qr on reduced forms, oo = 1/0
inline integer farey_det(const Rational& a, const Rational& b) { return a.num() * b.den() - a.den() * b.num(); }

inline bool is_neighbor(const Rational& a, const Rational& b) { return abs(farey_det(a, b)) == 1; }

inline Rational scale(const Rational& x, const integer& d) {
    if (x.is_infinite()) return x;
    return Rational(x.num() * d, x.den());
}

// neighbors in (1/d)F
inline bool is_edge(const Rational& a, const Rational& b, const integer& d) {
    return is_neighbor(scale(a, d), scale(b, d));
}

inline Rational mediant(const Rational& a, const Rational& b) {
    if (!is_neighbor(a, b)) throw std::invalid_argument("mediant of non-neighbors " + a.str() + ", " + b.str());
    return Rational(a.num() + b.num(), a.den() + b.den());
}

inline Rational farey_sub(const Rational& a, const Rational& b) {
    if (!is_neighbor(a, b)) throw std::invalid_argument("farey_sub of non-neighbors " + a.str() + ", " + b.str());
    return Rational(a.num() - b.num(), a.den() - b.den());
}

// the two common neighbors {a (+) b, a (-) b} of an edge of (1/d)F
inline std::pair<Rational, Rational> scaled_common_neighbors(const Rational& a, const Rational& b, const integer& d) {
    Rational A = scale(a, d), B = scale(b, d);
    Rational inv(1, d);
    auto unscale = [&](const Rational& x) { return x.is_infinite() ? x : x * inv; };
    return {unscale(mediant(A, B)), unscale(farey_sub(A, B))};
}

inline std::vector<integer> divisors(const integer& n) {
    std::vector<integer> out, big;
    for (integer k = 1; k * k <= n; ++k)
        if (n % k == 0) {
            out.push_back(k);
            if (k * k != n) big.push_back(n / k);
        }
    out.insert(out.end(), big.rbegin(), big.rend());
    return out;
}

// Reduced forms a = x/(c n1), b = y/(e n2) with n = n1 n2 and |x e n2 - y c n1| = 1.
inline bool neighbors_in_both(const Rational& a, const Rational& b, const integer& n) {
    if (a == b) return false;
    for (const auto& n1 : divisors(n)) {
        integer n2 = n / n1;
        if (a.den() % n1 != 0 || b.den() % n2 != 0) continue;
        integer c = a.den() / n1, e = b.den() / n2;
        if (abs(a.num() * e * n2 - b.num() * c * n1) == 1) return true;
    }
    return false;
}

// Between consecutive common neighbors of F and (1/n)F around a vertex: how many
// F-neighbors and how many (1/n)F-neighbors lie strictly in between.
inline std::pair<integer, integer> fan_split_counts(const Rational& vertex, const integer& n) {
    if (n < 1) throw std::invalid_argument("fan_split_counts: n must be positive");
    integer g = vertex.is_infinite() ? n : gcd(vertex.den(), n);
    // e.g. 1/2 with n = 4: no edge at the vertex is shared by both complexes
    if (gcd(g, n / g) != 1)
        throw std::domain_error("fan_split_counts: " + vertex.str() + " has no common neighbors for n=" + n.str());
    return {n / g - 1, g - 1};
}

struct FareyEdge {
    Rational a, b;
    integer scale = 1;

    FareyEdge() = default;
    FareyEdge(Rational x, Rational y, integer d = 1) : a(std::move(x)), b(std::move(y)), scale(std::move(d)) {
        if (b < a) std::swap(a, b);
    }
    bool valid() const { return a != b && is_edge(a, b, scale); }
    bool has_vertex(const Rational& v) const { return a == v || b == v; }

    friend bool operator==(const FareyEdge&, const FareyEdge&) = default;
    friend auto operator<=>(const FareyEdge& x, const FareyEdge& y) {
        if (auto c = x.a <=> y.a; c != 0) return c;
        return x.b <=> y.b;
    }
};

}  // namespace nbar

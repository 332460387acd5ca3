#pragma once

// Exact upper-half-plane geometry over Q(sqrt D): ideal points, geodesics, and
// interior points stored as (x, y^2).

#include "exact.hpp"

#include <optional>

namespace nbar {

// a point of R u {oo}
struct Ideal {
    std::optional<QuadraticSurd> v;

    Ideal() = default;
    Ideal(const QuadraticSurd& s) : v(s) {}
    Ideal(const Rational& r) {
        if (!r.is_infinite()) v = QuadraticSurd(r);
    }
    static Ideal infinity() { return Ideal(); }
    bool is_infinite() const { return !v.has_value(); }
    const QuadraticSurd& value() const { return *v; }

    friend bool operator==(const Ideal&, const Ideal&) = default;
    std::string str() const { return v ? v->str() : "1/0"; }
};

// oo sorts last
inline int compare(const Ideal& a, const Ideal& b) {
    if (a.is_infinite() || b.is_infinite()) return int(a.is_infinite()) - int(b.is_infinite());
    return surd_compare(a.value(), b.value());
}

inline Ideal apply(const Mobius& m, const Ideal& z) {
    if (z.is_infinite()) return Ideal(Rational(m.a, m.c));
    const QuadraticSurd& s = z.value();
    if (s.is_rational()) return Ideal(m(s.to_rational()));
    return Ideal(m(s));
}

struct HPoint {
    QuadraticSurd x, y2;
    friend bool operator==(const HPoint&, const HPoint&) = default;
};

// the geodesic with endpoints u, v (unordered)
struct Geodesic {
    Ideal u, v;

    Geodesic(Ideal a, Ideal b) : u(std::move(a)), v(std::move(b)) {
        if (compare(u, v) > 0) std::swap(u, v);
        if (compare(u, v) == 0) throw std::invalid_argument("degenerate geodesic");
    }
    bool vertical() const { return v.is_infinite(); }

    // -1 strictly inside (under the arc, or right of a vertical), 0 on it, +1 outside
    int side(const HPoint& p) const {
        if (vertical()) return -(p.x - u.value()).sign();
        return ((p.x - u.value()) * (p.x - v.value()) + p.y2).sign();
    }
    int side(const Ideal& w) const {
        if (w == u || w == v) return 0;
        if (w.is_infinite()) return 1;
        return compare(u, w) < 0 && compare(w, v) < 0 ? -1 : 1;
    }
    bool separates(const Ideal& a, const Ideal& b) const { return side(a) * side(b) < 0; }
    bool crosses(const Geodesic& o) const { return separates(o.u, o.v); }
};

inline std::optional<HPoint> intersection(const Geodesic& g, const Geodesic& h) {
    if (!g.crosses(h)) return std::nullopt;
    if (g.vertical() || h.vertical()) {
        const Geodesic& vert = g.vertical() ? g : h;
        const Geodesic& arc = g.vertical() ? h : g;
        QuadraticSurd x = vert.u.value();
        return HPoint{x, -((x - arc.u.value()) * (x - arc.v.value()))};
    }
    const auto &u1 = g.u.value(), &v1 = g.v.value(), &u2 = h.u.value(), &v2 = h.v.value();
    QuadraticSurd x = (u2 * v2 - u1 * v1) / (u2 + v2 - u1 - v1);
    return HPoint{x, -((x - u1) * (x - v1))};
}

// Orientation from `from` to `to`; smaller key = earlier along the geodesic.
struct Direction {
    Ideal from, to;

    int order(const HPoint& p, const HPoint& q) const {
        if (from.is_infinite()) return (q.y2 - p.y2).sign();
        if (to.is_infinite()) return (p.y2 - q.y2).sign();
        int s = (p.x - q.x).sign();
        return compare(from, to) < 0 ? s : -s;
    }
    // ideal w lies to the left when travelling from -> to
    bool left(const Ideal& w) const {
        int a = compare(from, to), b = compare(to, w), c = compare(w, from);
        // cyclically increasing triple (from, to, w)
        return (a < 0 && b < 0) || (b < 0 && c < 0) || (c < 0 && a < 0);
    }
};

}  // namespace nbar

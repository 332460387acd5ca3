#pragma once

// Farey symbols and special polygons for Gamma0(n), side pairings, orbifold
// invariants, decorated tiles T_{d,n}, and multiplication by walking tiles.

#include "cutting.hpp"
#include "farey.hpp"
#include "geometry.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>

namespace nbar {

// --- arithmetic of the level ---

inline std::vector<integer> prime_factors(integer n) {
    std::vector<integer> ps;
    for (integer p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline integer euler_phi(integer n) {
    integer r = n;
    for (const auto& p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

inline integer gamma0_index(const integer& n) {
    integer r = n;
    for (const auto& p : prime_factors(n)) r = r / p * (p + 1);
    return r;
}

inline integer gamma0_cusps(const integer& n) {
    integer t = 0;
    for (const auto& a : divisors(n)) t += euler_phi(gcd(a, n / a));
    return t;
}

inline bool in_gamma0(const Mobius& m, const integer& n) { return m.det() == 1 && mod(m.c, n) == 0; }

// --- Farey symbols ---

enum class IntervalKind { Free, Even, Odd };

struct IntervalLabel {
    IntervalKind kind = IntervalKind::Free;
    int pair = 0;             // free pairs only, numbered from 1
    std::size_t partner = 0;  // free pairs only
};

struct FareySymbol {
    integer n;
    std::vector<Rational> vertices;
    // coherent lifts: a_{k+1} b_k - a_k b_{k+1} = 1, first oo = (-1,0), last oo = (1,0)
    std::vector<std::pair<integer, integer>> lifts;
    std::vector<IntervalLabel> labels;

    std::size_t size() const { return labels.size(); }
    std::size_t count(IntervalKind k) const {
        return static_cast<std::size_t>(
            std::count_if(labels.begin(), labels.end(), [&](const auto& l) { return l.kind == k; }));
    }
    integer index() const { return 3 * (integer(size()) - 2) + integer(count(IntervalKind::Odd)); }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const Rational& v = vertices[i];
            s += v.is_infinite() ? "∞" : v.is_integer() ? v.num().str() : v.str();
            if (i == size()) break;
            const auto& l = labels[i];
            s += ' ';
            s += l.kind == IntervalKind::Even ? "∘" : l.kind == IntervalKind::Odd ? "•" : std::to_string(l.pair);
            s += ' ';
        }
        return s + "}";
    }
};

namespace detail {

inline bool even_test(const FareySymbol& s, std::size_t i) {
    const auto &b0 = s.lifts[i].second, &b1 = s.lifts[i + 1].second;
    return mod(b0 * b0 + b1 * b1, s.n) == 0;
}
inline bool odd_test(const FareySymbol& s, std::size_t i) {
    const auto &b0 = s.lifts[i].second, &b1 = s.lifts[i + 1].second;
    return mod(b0 * b0 + b0 * b1 + b1 * b1, s.n) == 0;
}
inline bool free_test(const FareySymbol& s, std::size_t i, std::size_t j) {
    return mod(s.lifts[i].second * s.lifts[j].second + s.lifts[i + 1].second * s.lifts[j + 1].second, s.n) == 0;
}

}  // namespace detail

// Seed {oo, 0, 1, oo} with the two vertical sides paired by z -> z+1; label
// intervals (odd, then even, then earliest free partner) and split the first
// interval that admits no label at its mediant, then its mirror image.
inline FareySymbol build_farey_symbol(const integer& n) {
    if (n < 2) throw std::invalid_argument("build_farey_symbol: level must be at least 2");
    FareySymbol s;
    s.n = n;
    s.lifts = {{-1, 0}, {0, 1}, {1, 1}, {1, 0}};
    std::vector<std::optional<IntervalLabel>> lab(3);
    lab[0] = IntervalLabel{IntervalKind::Free, 1, 0};
    lab[2] = IntervalLabel{IntervalKind::Free, 1, 0};
    int next_pair = 2;
    const integer cap = 4 * gamma0_index(n) + 8;

    auto try_label = [&]() {
        bool changed = false;
        for (std::size_t i = 0; i < lab.size(); ++i) {
            if (lab[i]) continue;
            if (detail::odd_test(s, i)) {
                lab[i] = IntervalLabel{IntervalKind::Odd};
            } else if (detail::even_test(s, i)) {
                lab[i] = IntervalLabel{IntervalKind::Even};
            } else {
                for (std::size_t j = 0; j < lab.size(); ++j)
                    if (j != i && !lab[j] && detail::free_test(s, i, j)) {
                        lab[i] = lab[j] = IntervalLabel{IntervalKind::Free, next_pair++};
                        break;
                    }
            }
            changed |= lab[i].has_value();
        }
        return changed;
    };

    auto vertex = [&](std::size_t k) {
        const auto& [a, b] = s.lifts[k];
        return b == 0 ? Rational::infinity() : Rational(a, b);
    };
    // z -> 1 - z normalizes Gamma0(n); splitting mirror pairs keeps the symbol symmetric
    std::optional<std::pair<Rational, Rational>> mirror;
    for (;;) {
        while (try_label()) {
        }
        std::size_t i = lab.size();
        if (mirror)
            for (std::size_t k = 0; k < lab.size(); ++k)
                if (!lab[k] && vertex(k) == mirror->first && vertex(k + 1) == mirror->second) i = k;
        if (i == lab.size()) {
            auto it = std::find_if(lab.begin(), lab.end(), [](const auto& l) { return !l; });
            if (it == lab.end()) break;
            i = static_cast<std::size_t>(it - lab.begin());
            mirror = {Rational(1) - vertex(i + 1), Rational(1) - vertex(i)};
        } else {
            mirror.reset();
        }
        auto m = std::make_pair(s.lifts[i].first + s.lifts[i + 1].first, s.lifts[i].second + s.lifts[i + 1].second);
        s.lifts.insert(s.lifts.begin() + static_cast<std::ptrdiff_t>(i + 1), m);
        lab.insert(lab.begin() + static_cast<std::ptrdiff_t>(i), std::nullopt);
        if (integer(lab.size()) > cap)
            throw std::logic_error("build_farey_symbol: subdivision does not terminate for n=" + n.str());
    }

    // renumber free pairs left to right and resolve partners
    std::map<int, int> renum;
    std::map<int, std::size_t> first;
    for (std::size_t i = 0; i < lab.size(); ++i) {
        IntervalLabel l = *lab[i];
        if (l.kind == IntervalKind::Free) {
            auto [it, fresh] = renum.emplace(l.pair, static_cast<int>(renum.size()) + 1);
            l.pair = it->second;
            if (fresh) {
                first[l.pair] = i;
            } else {
                l.partner = first[l.pair];
                s.labels[first[l.pair]].partner = i;
            }
        }
        s.labels.push_back(l);
    }
    for (const auto& [a, b] : s.lifts) s.vertices.push_back(b == 0 ? Rational::infinity() : Rational(a, b));
    return s;
}

// Side pairing of interval i: free sends x_i -> x_{j+1}, x_{i+1} -> x_j; even
// swaps x_i, x_{i+1}; odd cycles x_i -> x_{i+1} -> x_i (+) x_{i+1} -> x_i.
inline Mobius pairing_matrix(const FareySymbol& s, std::size_t i) {
    if (i >= s.size()) throw std::out_of_range("pairing_matrix: no interval " + std::to_string(i));
    const auto& l = s.labels[i];
    auto [ai, bi] = s.lifts[i];
    auto [ai1, bi1] = s.lifts[i + 1];
    integer aj, bj, aj1, bj1;
    if (l.kind == IntervalKind::Free) {
        std::tie(aj, bj) = s.lifts[l.partner];
        std::tie(aj1, bj1) = s.lifts[l.partner + 1];
    } else if (l.kind == IntervalKind::Even) {
        aj = ai, bj = bi, aj1 = ai1, bj1 = bi1;
    } else {
        aj = ai + ai1, bj = bi + bi1, aj1 = ai1, bj1 = bi1;
    }
    Mobius m{aj * bi + aj1 * bi1, -ai * aj - ai1 * aj1, bi * bj + bi1 * bj1, -ai * bj - ai1 * bj1};
    if (m.det() != 1) throw std::logic_error("pairing_matrix: determinant " + m.det().str());
    Rational xj = bj == 0 ? Rational::infinity() : Rational(aj, bj);
    Rational xj1 = bj1 == 0 ? Rational::infinity() : Rational(aj1, bj1);
    if (m(s.vertices[i]) != xj1 || m(s.vertices[i + 1]) != xj)
        throw std::logic_error("pairing_matrix: vertex mapping fails on interval " + std::to_string(i));
    if (!in_gamma0(m, s.n)) throw std::logic_error("pairing_matrix: not in Gamma0(" + s.n.str() + ")");
    return m;
}

// vertex classes under the side pairings
inline integer symbol_cusps(const FareySymbol& s) {
    std::vector<std::size_t> parent(s.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    unite(0, s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& l = s.labels[i];
        if (l.kind == IntervalKind::Free) {
            unite(i, l.partner + 1);
            unite(i + 1, l.partner);
        } else {
            unite(i, i + 1);
        }
    }
    integer t = 0;
    for (std::size_t v = 0; v < parent.size(); ++v) t += find(v) == v;
    return t;
}

struct OrbifoldInvariants {
    integer index, cusps, e2, e3, genus;
};

inline OrbifoldInvariants invariants(const FareySymbol& s) {
    OrbifoldInvariants inv{gamma0_index(s.n), gamma0_cusps(s.n), integer(s.count(IntervalKind::Even)),
                           integer(s.count(IntervalKind::Odd)), 0};
    integer twelve_g = inv.index - 3 * inv.e2 - 4 * inv.e3 - 6 * inv.cusps + 12;
    if (twelve_g < 0 || twelve_g % 12 != 0)
        throw std::logic_error("Riemann-Hurwitz fails for n=" + s.n.str() + ": 12g = " + twelve_g.str());
    inv.genus = twelve_g / 12;
    return inv;
}

inline OrbifoldInvariants invariants(const integer& n) { return invariants(build_farey_symbol(n)); }

// --- the special polygon ---

struct PolygonSide {
    Geodesic line;
    std::size_t interval;
    int part;  // 0 whole interval; odd intervals: 1 from x_i to the center, 2 from the center to x_{i+1}
};

class SpecialPolygon {
public:
    explicit SpecialPolygon(FareySymbol sym) : sym_(std::move(sym)) {
        const auto& x = sym_.vertices;
        for (std::size_t i = 0; i < sym_.size(); ++i) {
            if (sym_.labels[i].kind != IntervalKind::Odd) {
                sides_.push_back({Geodesic(Ideal(x[i]), Ideal(x[i + 1])), i, 0});
                continue;
            }
            Rational m = mediant(x[i], x[i + 1]);
            auto other = [&](const Rational& a, const Rational& b, const Rational& not_this) {
                Rational p = mediant(a, b), q = farey_sub(a, b);
                return p == not_this ? q : p;
            };
            sides_.push_back({Geodesic(Ideal(x[i]), Ideal(other(x[i + 1], m, x[i]))), i, 1});
            sides_.push_back({Geodesic(Ideal(x[i + 1]), Ideal(other(x[i], m, x[i + 1]))), i, 2});
            // image of (1 + i sqrt 3)/2 under [[a1, a0], [b1, b0]]
            auto [a0, b0] = sym_.lifts[i];
            auto [a1, b1] = sym_.lifts[i + 1];
            integer nrm = b1 * b1 + b1 * b0 + b0 * b0;
            Rational cx(2 * a1 * b1 + a1 * b0 + a0 * b1 + 2 * a0 * b0, 2 * nrm);
            centers_.emplace(i, HPoint{QuadraticSurd(cx), QuadraticSurd(Rational(3, 4 * nrm * nrm))});
        }
    }

    const FareySymbol& symbol() const { return sym_; }
    const std::vector<PolygonSide>& sides() const { return sides_; }
    const std::map<std::size_t, HPoint>& centers() const { return centers_; }

    std::size_t side_index(std::size_t interval, int part) const {
        for (std::size_t k = 0; k < sides_.size(); ++k)
            if (sides_[k].interval == interval && sides_[k].part == part) return k;
        throw std::out_of_range("no such polygon side");
    }

    // closed polygon
    bool contains(const HPoint& p) const {
        const auto& x = sym_.vertices;
        auto arc = [&](std::size_t i) { return ((p.x - QuadraticSurd(x[i])) * (p.x - QuadraticSurd(x[i + 1])) + p.y2).sign(); };
        if (p.x.sign() >= 0 && p.x.compare(Rational(1)) <= 0) {
            bool above = true;
            for (std::size_t i = 1; i + 1 < sym_.size() && above; ++i) above = arc(i) >= 0;
            if (above) return true;
        }
        for (const auto& [i, c] : centers_) {
            if (arc(i) > 0) continue;
            const auto& s1 = sides_[side_index(i, 1)].line;
            const auto& s2 = sides_[side_index(i, 2)].line;
            int a = s1.side(p), b = s2.side(p);
            if ((a == 0 || a == s1.side(Ideal(x[i + 1]))) && (b == 0 || b == s2.side(Ideal(x[i])))) return true;
        }
        return false;
    }

    // true iff the geodesic has polygon vertices strictly on both sides
    bool meets_interior(const Geodesic& g) const {
        bool neg = false, pos = false;
        auto see = [&](int s) { neg |= s < 0, pos |= s > 0; };
        for (const auto& v : sym_.vertices) see(g.side(Ideal(v)));
        for (const auto& [i, c] : centers_) see(g.side(c));
        return neg && pos;
    }

    // pairing across a side: the neighbouring tile is h(P) and the walk re-enters h(P) through `entry`
    std::pair<Mobius, std::size_t> transition(std::size_t side) const {
        const auto& sd = sides_.at(side);
        const auto& l = sym_.labels[sd.interval];
        Mobius phi = pairing_matrix(sym_, sd.interval);
        switch (l.kind) {
            case IntervalKind::Free: return {phi.inverse(), side_index(l.partner, 0)};
            case IntervalKind::Even: return {phi, side};
            case IntervalKind::Odd:
                if (sd.part == 2) return {phi, side_index(sd.interval, 1)};
                return {phi.inverse(), side_index(sd.interval, 2)};
        }
        throw std::logic_error("unreachable");
    }

private:
    FareySymbol sym_;
    std::vector<PolygonSide> sides_;
    std::map<std::size_t, HPoint> centers_;
};

// --- decorated tiles ---

enum class FaceType { I, II, IIIa, IIIb, IIIc, IV };

inline const char* to_string(FaceType t) {
    switch (t) {
        case FaceType::I: return "I";
        case FaceType::II: return "II";
        case FaceType::IIIa: return "IIIa";
        case FaceType::IIIb: return "IIIb";
        case FaceType::IIIc: return "IIIc";
        case FaceType::IV: return "IV";
    }
    return "?";
}

using Triangle = std::array<Rational, 3>;

namespace detail {

inline std::pair<integer, integer> primitive(const Rational& x, const integer& d) {
    if (x.is_infinite()) return {1, 0};
    Rational s = scale(x, d);
    return {s.num(), s.den()};
}

}  // namespace detail

// The element of Gamma0(n) sending the (1/d)F-edge (p, q) to (r, s) in that
// order with the same orientation, if any.
inline std::optional<Mobius> gamma0_edge_map(const Rational& p, const Rational& q, const Rational& r, const Rational& s,
                                             const integer& n, const integer& d) {
    auto [v1a, v1b] = detail::primitive(p, d);
    auto [v2a, v2b] = detail::primitive(q, d);
    auto [w1a, w1b] = detail::primitive(r, d);
    auto [w2a, w2b] = detail::primitive(s, d);
    Mobius V{v1a, v2a, v1b, v2b}, W{w1a, w2a, w1b, w2b};
    if (abs(V.det()) != 1 || abs(W.det()) != 1) throw std::invalid_argument("gamma0_edge_map: not edges");
    if (V.det() < 0) V.b = -V.b, V.d = -V.d;
    if (W.det() < 0) W.b = -W.b, W.d = -W.d;
    Mobius h = W * V.inverse();
    if (h.b % d != 0) return std::nullopt;
    Mobius g{h.a, h.b / d, h.c * d, h.d};
    if (!in_gamma0(g, n)) return std::nullopt;
    return g;
}

inline FaceType classify_face(const Triangle& t, const integer& n, const integer& d) {
    for (int k = 1; k <= 2; ++k) {
        auto g = gamma0_edge_map(t[0], t[1], t[k % 3], t[(k + 1) % 3], n, d);
        if (g && (*g)(t[2]) == t[(k + 2) % 3]) return FaceType::IV;
    }
    int halves = 0;
    for (int k = 0; k < 3; ++k)
        if (gamma0_edge_map(t[k], t[(k + 1) % 3], t[(k + 1) % 3], t[k], n, d)) ++halves;
    if (halves == 1) return FaceType::IIIa;
    if (halves == 2) return FaceType::IIIb;
    if (halves == 3) return FaceType::IIIc;
    for (int e = 0; e < 3; ++e)
        for (int f = 0; f < 3; ++f) {
            if (e == f) continue;
            const Rational &p = t[e], &q = t[(e + 1) % 3], &r = t[f], &s = t[(f + 1) % 3];
            if (gamma0_edge_map(p, q, r, s, n, d) || gamma0_edge_map(p, q, s, r, n, d)) return FaceType::II;
        }
    return FaceType::I;
}

inline bool gamma0_equivalent(const Triangle& a, const Triangle& b, const integer& n, const integer& d) {
    for (int k = 0; k < 3; ++k) {
        auto g = gamma0_edge_map(a[0], a[1], b[k], b[(k + 1) % 3], n, d);
        if (g && (*g)(a[2]) == b[(k + 2) % 3]) return true;
    }
    return false;
}

struct TileFace {
    Triangle vertices;  // ascending, oo last
    FaceType type;
    std::size_t orbit;
};

struct DecoratedTile {
    SpecialPolygon polygon;
    integer n, scale;
    std::vector<FareyEdge> edges;           // (1/d)F edges through the interior
    std::vector<FareyEdge> boundary_edges;  // polygon sides that are (1/d)F edges
    std::vector<TileFace> faces;
    std::vector<FaceType> orbit_types;

    std::size_t orbit_count(FaceType t) const {
        return static_cast<std::size_t>(std::count(orbit_types.begin(), orbit_types.end(), t));
    }
    // each orbit covers three copies of the modular triangle, type IV orbits one
    integer orbit_area() const {
        integer a = 0;
        for (auto t : orbit_types) a += t == FaceType::IV ? 1 : 3;
        return a;
    }
};

inline Geodesic edge_geodesic(const FareyEdge& e) { return Geodesic(Ideal(e.a), Ideal(e.b)); }

inline DecoratedTile decorated_tile(const FareySymbol& sym, const integer& d) {
    const integer& n = sym.n;
    if (d < 1 || n % d != 0) throw std::invalid_argument("decorated_tile: scale " + d.str() + " does not divide " + n.str());
    DecoratedTile tile{SpecialPolygon(sym), n, d, {}, {}, {}, {}};
    const auto& poly = tile.polygon;

    auto sorted = [](Triangle t) {
        std::sort(t.begin(), t.end());
        return t;
    };
    std::set<Triangle> seen;
    std::set<FareyEdge> edges;
    std::vector<Triangle> queue{sorted({Rational(0), Rational(1, d), Rational::infinity()})};
    seen.insert(queue[0]);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Triangle t = queue[qi];
        for (int k = 0; k < 3; ++k) {
            const Rational &a = t[k], &b = t[(k + 1) % 3], &c = t[(k + 2) % 3];
            FareyEdge e(a, b, d);
            if (!poly.meets_interior(edge_geodesic(e))) continue;
            edges.insert(e);
            auto [m, s] = scaled_common_neighbors(a, b, d);
            Triangle nb = sorted({a, b, m == c ? s : m});
            if (seen.insert(nb).second) queue.push_back(nb);
        }
    }
    tile.edges.assign(edges.begin(), edges.end());
    for (const auto& sd : poly.sides()) {
        if (sd.part != 0) continue;
        const auto& x = sym.vertices;
        FareyEdge e(x[sd.interval], x[sd.interval + 1], d);
        if (e.valid()) tile.boundary_edges.push_back(e);
    }

    std::vector<Triangle> reps;
    for (const auto& t : queue) {
        std::size_t orbit = reps.size();
        for (std::size_t r = 0; r < reps.size(); ++r)
            if (gamma0_equivalent(t, reps[r], n, d)) {
                orbit = r;
                break;
            }
        FaceType type = classify_face(t, n, d);
        if (orbit == reps.size()) {
            reps.push_back(t);
            tile.orbit_types.push_back(type);
        }
        tile.faces.push_back({t, type, orbit});
    }
    return tile;
}

inline DecoratedTile decorated_tile(const integer& n, const integer& d) { return decorated_tile(build_farey_symbol(n), d); }

// --- multiplication by walking tiles ---

struct TileWalkResult {
    ContinuedFraction cf;
    std::size_t tiles = 0;
    std::size_t crossings = 0;
    bool truncated = false;
};

// Follow the geodesic from beta < 0 to alpha through the translates g(P); in
// each translate, read the decoration edges it crosses in the local frame, then
// leave through the exit side using that side's pairing.
inline TileWalkResult tile_walk(const ContinuedFraction& cf, const DecoratedTile& tile, std::size_t max_quotients = 10000) {
    const QuadraticSurd alpha = cf_to_surd(cf);
    if (alpha.sign() <= 0) throw std::domain_error("tile_walk: endpoint must be positive");
    const auto& poly = tile.polygon;
    std::vector<FareyEdge> candidates = tile.edges;
    candidates.insert(candidates.end(), tile.boundary_edges.begin(), tile.boundary_edges.end());
    const std::size_t first_side = poly.side_index(0, 0);

    for (integer beta = -1;; --beta) {
        TileWalkResult res;
        FanTracker tr(QuadraticSurd(Rational(tile.scale)) * alpha);
        tr.boundary();
        Letter cur = Letter::L;
        integer run = 0;
        bool done = false;
        auto feed = [&](Letter l) {
            if (l == cur) {
                ++run;
                return;
            }
            tr.push(run);
            cur = l, run = 1;
            if (auto start = tr.boundary()) {
                res.cf = detail::from_terms(tr.terms(), *start);
                done = true;
            } else if (tr.terms().size() >= max_quotients) {
                res.cf = detail::from_terms(tr.terms(), tr.terms().size());
                res.truncated = done = true;
            }
        };
        Direction global{Ideal(Rational(beta)), Ideal(alpha)};
        std::optional<FareyEdge> prev;
        Mobius g;
        std::size_t entry = first_side;
        bool degenerate = false;

        while (!done) {
            ++res.tiles;
            Mobius gi = g.inverse();
            Ideal a1 = apply(gi, Ideal(alpha)), b1 = apply(gi, Ideal(Rational(beta)));
            Geodesic path(b1, a1);
            Direction dir{b1, a1};

            auto entry_pt = intersection(path, poly.sides()[entry].line);
            if (!entry_pt) throw std::logic_error("tile_walk: lost the entry side");
            std::optional<std::pair<std::size_t, HPoint>> exit;
            for (std::size_t k = 0; k < poly.sides().size(); ++k) {
                if (k == entry) continue;
                auto p = intersection(path, poly.sides()[k].line);
                if (!p || !poly.contains(*p)) continue;
                if (*p == *entry_pt || (exit && exit->second == *p)) degenerate = true;
                if (!exit || dir.order(*p, exit->second) > 0) exit = {k, *p};
            }
            if (degenerate) break;

            std::vector<std::pair<HPoint, FareyEdge>> hits;
            for (const auto& e : candidates) {
                auto p = intersection(path, edge_geodesic(e));
                if (p && poly.contains(*p)) hits.emplace_back(*p, e);
            }
            std::sort(hits.begin(), hits.end(), [&](const auto& x, const auto& y) { return dir.order(x.first, y.first) < 0; });
            for (const auto& [p, e] : hits) {
                FareyEdge ge(g(e.a), g(e.b), tile.scale);
                if (prev && *prev == ge) continue;
                ++res.crossings;
                if (prev) {
                    const Rational& v = ge.has_vertex(prev->a) ? prev->a : prev->b;
                    if (!ge.has_vertex(v)) throw std::logic_error("tile_walk: consecutive edges share no vertex");
                    feed(global.left(Ideal(v)) ? Letter::L : Letter::R);
                    if (done) break;
                }
                prev = ge;
            }
            if (done) break;
            if (!exit) {
                // the endpoint is a cusp of this tile: the last triangle closes the current fan
                ++run;
                tr.push(run);
                res.cf = detail::from_terms(tr.terms(), tr.terms().size());
                break;
            }
            auto [h, next_entry] = poly.transition(exit->first);
            g = g * h;
            entry = next_entry;
        }
        if (!degenerate) return res;
    }
}

inline ContinuedFraction tile_walk_multiply(const ContinuedFraction& cf, const integer& n, std::size_t max_quotients = 10000) {
    return tile_walk(cf, decorated_tile(n, n), max_quotients).cf;
}

}  // namespace nbar

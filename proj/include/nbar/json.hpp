#pragma once

// JSON views of library values. Big integers are emitted as numbers when they fit
// in 64 bits and as decimal strings otherwise.

#include "gamma0.hpp"
#include "theorems.hpp"

#include <nlohmann/json.hpp>

namespace nbar::io {

using nlohmann::json;

inline json number(const integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

inline json from(const Rational& r) { return r.str(); }
inline json from(const ContinuedFraction& cf) { return cf.str(); }

inline json from(const Mobius& m) { return {{number(m.a), number(m.b)}, {number(m.c), number(m.d)}}; }

inline json from(const FareyEdge& e) { return {{"a", e.a.str()}, {"b", e.b.str()}, {"scale", number(e.scale)}}; }

inline json from(const CuttingWord& w) {
    json a = json::array();
    for (const auto& e : w.exponents) a.push_back(number(e));
    return a;
}

inline json from(const FareySymbol& s) {
    json v = json::array(), l = json::array();
    for (const auto& x : s.vertices) v.push_back(x.str());
    for (const auto& lab : s.labels) {
        if (lab.kind == IntervalKind::Free) l.push_back({{"free", lab.pair}});
        else l.push_back(lab.kind == IntervalKind::Even ? "even" : "odd");
    }
    return {{"n", number(s.n)}, {"vertices", v}, {"labels", l}};
}

inline json from(const OrbifoldInvariants& i) {
    return {{"index", number(i.index)}, {"cusps", number(i.cusps)}, {"e2", number(i.e2)}, {"e3", number(i.e3)},
            {"genus", number(i.genus)}};
}

inline json from(const DecoratedTile& t) {
    json edges = json::array(), boundary = json::array(), faces = json::array(), orbits = json::array();
    for (const auto& e : t.edges) edges.push_back(from(e));
    for (const auto& e : t.boundary_edges) boundary.push_back(from(e));
    for (const auto& f : t.faces) {
        json vs = json::array();
        for (const auto& v : f.vertices) vs.push_back(v.str());
        faces.push_back({{"vertices", vs}, {"type", to_string(f.type)}, {"orbit", f.orbit}});
    }
    for (auto o : t.orbit_types) orbits.push_back(to_string(o));
    return {{"n", number(t.n)},         {"scale", number(t.scale)}, {"symbol", from(t.polygon.symbol())},
            {"edges", edges},           {"boundary_edges", boundary}, {"faces", faces},
            {"orbit_types", orbits},    {"orbit_area", number(t.orbit_area())}};
}

inline json from(const Pro2Witness& w) {
    json j = {{"k", w.k},
              {"q_k", number(w.q_k)},
              {"a_k", number(w.a_k)},
              {"B", number(w.B_observed)},
              {"promoted", w.promoted.str()},
              {"bound_n", w.bound_n},
              {"bound_n_a_k", w.bound_n_ak},
              {"bound_n_a_k1", w.bound_n_anext},
              {"promoted_in_trace", w.promoted_in_trace},
              {"promoted_in_oracle", w.promoted_in_oracle}};
    j["a_k1"] = w.a_next ? number(*w.a_next) : json(nullptr);
    return j;
}

inline json from(const EvpDecomposition& d) {
    json j = {{"status", to_string(d.status)}, {"k", d.k}, {"a", number(d.a)}, {"alpha", d.alpha.str()},
              {"m_checked", d.m_checked},      {"m_claim", d.m_claim}, {"classify_agrees", d.classify_agrees},
              {"tail_form", d.purely_periodic_tail}};
    j["alpha_cf"] = d.alpha_cf ? json(d.alpha_cf->str()) : json(nullptr);
    return j;
}

inline json from(const GrowthReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps) steps.push_back({{"i", s.i}, {"bound", number(s.bound)}, {"B", number(s.B)}, {"holds", s.holds()}});
    return {{"decomposition", from(r.decomposition)}, {"k", r.k}, {"a0", number(r.a0)}, {"steps", steps}};
}

}  // namespace nbar::io

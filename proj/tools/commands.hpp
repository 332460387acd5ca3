#pragma once

// Command implementations behind the nbar executable. Each returns the process
// exit code and writes its report to `out`, so tests can drive them directly.

#include <nbar/corpus.hpp>
#include <nbar/json.hpp>
#include <nbar/svg.hpp>

#include <fstream>
#include <ostream>

namespace nbar::cli {

using nlohmann::json;
namespace js = nbar::io;

enum class Format { Text, Json, Svg };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "svg") return Format::Svg;
    throw std::invalid_argument("unknown format: " + s);
}

struct Config {
    std::size_t horizon = 500;
    std::size_t corpus_size = 200;
    std::size_t k_max = 12;
    std::size_t i_max = 6;
    std::uint64_t seed = 20240601;
    Format format = Format::Text;

    // keys: horizon, corpus-size, k-max, i-max, seed, format
    static Config from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot read config " + path);
        json j = json::parse(in);
        Config c;
        c.horizon = j.value("horizon", c.horizon);
        c.corpus_size = j.value("corpus-size", c.corpus_size);
        c.k_max = j.value("k-max", c.k_max);
        c.i_max = j.value("i-max", c.i_max);
        c.seed = j.value("seed", c.seed);
        if (j.contains("format")) c.format = parse_format(j["format"].get<std::string>());
        c.validate();
        return c;
    }
    void validate() const {
        if (!horizon || !corpus_size || !k_max) throw std::invalid_argument("config bounds must be at least 1");
    }
};

inline constexpr const char* schema_version = "nbar/1";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void need(Format f, std::initializer_list<Format> ok, const char* what) {
    for (auto x : ok)
        if (x == f) return;
    throw UsageError(std::string(what) + ": output format not supported");
}

// accepts CF text "[...]", a surd "(p+sqrt(d))/q", or a rational "p/q"
inline QuadraticSurd parse_value(const std::string& s) {
    if (!s.empty() && s.front() == '[') return cf_to_surd(ContinuedFraction::parse(s));
    return QuadraticSurd::parse(s);
}

// --- multiply / oracle / trace ---

enum class Engine { Trace, TileWalk, Oracle };

inline Engine parse_engine(const std::string& s) {
    if (s == "trace") return Engine::Trace;
    if (s == "tile-walk") return Engine::TileWalk;
    if (s == "oracle") return Engine::Oracle;
    throw UsageError("unknown engine: " + s);
}

inline int cmd_multiply(const std::string& cf_text, const integer& n, Engine engine, bool check, Format fmt, std::ostream& out) {
    need(fmt, {Format::Text, Format::Json}, "multiply");
    if (n < 1) throw UsageError("multiply: n must be at least 1");
    ContinuedFraction cf = ContinuedFraction::parse(cf_text);
    ContinuedFraction result;
    switch (engine) {
        case Engine::Trace: result = multiply_nbar(cf, n); break;
        case Engine::TileWalk: result = tile_walk_multiply(cf, n); break;
        case Engine::Oracle: result = multiply_oracle(cf, Rational(n)); break;
    }
    std::optional<ContinuedFraction> reference;
    if (check && engine != Engine::Oracle) reference = multiply_oracle(cf, Rational(n));
    bool agree = !reference || *reference == result;
    if (fmt == Format::Json) {
        json j = {{"schema", schema_version}, {"command", "multiply"}, {"input", cf.str()}, {"n", js::number(n)},
                  {"engine", engine == Engine::Trace ? "trace" : engine == Engine::TileWalk ? "tile-walk" : "oracle"},
                  {"result", result.str()}, {"checked", reference.has_value()}, {"agree", agree}};
        if (!agree) j["oracle"] = reference->str();
        out << j.dump() << "\n";
    } else if (agree) {
        out << result.str() << "\n";
    } else {
        out << "engine disagreement: " << result.str() << " vs oracle " << reference->str() << "\n";
    }
    return agree ? 0 : 3;
}

inline int cmd_oracle(const std::string& cf_text, const std::string& q_text, Format fmt, std::ostream& out) {
    need(fmt, {Format::Text, Format::Json}, "oracle");
    ContinuedFraction cf = ContinuedFraction::parse(cf_text);
    Rational q = Rational::parse(q_text);
    if (q.is_infinite() || q <= Rational(0)) throw UsageError("oracle: multiplier must be a positive rational");
    ContinuedFraction r = multiply_oracle(cf, q);
    if (fmt == Format::Json)
        out << json{{"schema", schema_version}, {"command", "oracle"}, {"input", cf.str()}, {"q", q.str()}, {"result", r.str()}}.dump()
            << "\n";
    else
        out << r.str() << "\n";
    return 0;
}

inline int cmd_trace(const std::string& value, const integer& d, std::size_t max_quotients, Format fmt, std::ostream& out) {
    need(fmt, {Format::Text, Format::Json}, "trace");
    QuadraticSurd x = parse_value(value);
    TraceResult r = trace_detailed(x, d, max_quotients);
    std::size_t shown = r.periodic ? 12 : std::min<std::size_t>(r.fans.size() + 1, 32);
    auto vs = convergent_vertices(x, d, shown);
    if (fmt == Format::Json) {
        json fans = json::array(), verts = json::array();
        for (const auto& f : r.fans)
            fans.push_back({{"letter", std::string(1, to_char(f.letter))}, {"length", js::number(f.length)},
                            {"pivot", f.pivot.str()}, {"entry", js::from(f.entry)}, {"exit", js::from(f.exit)}});
        for (const auto& v : vs) verts.push_back(v.str());
        json j = {{"schema", schema_version}, {"command", "trace"}, {"input", x.str()}, {"scale", js::number(d)},
                  {"word", js::from(r.word)}, {"cf", r.cf.str()}, {"periodic", r.periodic}, {"truncated", r.truncated},
                  {"convergent_vertices", verts}, {"fans", fans}};
        j["terminal"] = r.terminal ? json(r.terminal->str()) : json(nullptr);
        out << j.dump() << "\n";
        return 0;
    }
    out << "word: " << r.word.str() << (r.periodic ? " ..." : "") << "\n";
    out << "cf: " << r.cf.str() << (r.truncated ? " (truncated)" : "") << "\n";
    out << "vertices:";
    for (const auto& v : vs) out << ' ' << v.str();
    out << "\n";
    return 0;
}

// --- gamma0 ---

inline std::string invariants_line(const OrbifoldInvariants& i) {
    return "d=" + i.index.str() + " t=" + i.cusps.str() + " e2=" + i.e2.str() + " e3=" + i.e3.str() + " g=" + i.genus.str();
}

inline int cmd_gamma0(const integer& n, const std::string& what, const integer& scale, Format fmt, std::ostream& out) {
    if (n < 2) throw UsageError("gamma0: level must be at least 2");
    FareySymbol sym = build_farey_symbol(n);
    if (what == "symbol") {
        if (fmt == Format::Svg) out << svg::render(sym);
        else if (fmt == Format::Json) out << json{{"schema", schema_version}, {"symbol", js::from(sym)}}.dump() << "\n";
        else out << sym.str() << "\n";
        return 0;
    }
    if (what == "matrices") {
        need(fmt, {Format::Text, Format::Json}, "gamma0 matrices");
        json arr = json::array();
        for (std::size_t i = 0; i < sym.size(); ++i) {
            Mobius m = pairing_matrix(sym, i);
            if (fmt == Format::Json) {
                arr.push_back({{"interval", i}, {"from", sym.vertices[i].str()}, {"to", sym.vertices[i + 1].str()}, {"matrix", js::from(m)}});
            } else {
                out << "(" << sym.vertices[i].str() << ", " << sym.vertices[i + 1].str() << ") [[" << m.a << "," << m.b
                    << "],[" << m.c << "," << m.d << "]]\n";
            }
        }
        if (fmt == Format::Json) out << json{{"schema", schema_version}, {"n", js::number(n)}, {"matrices", arr}}.dump() << "\n";
        return 0;
    }
    if (what == "invariants") {
        need(fmt, {Format::Text, Format::Json}, "gamma0 invariants");
        auto inv = invariants(sym);
        if (fmt == Format::Json)
            out << json{{"schema", schema_version}, {"n", js::number(n)}, {"invariants", js::from(inv)}}.dump() << "\n";
        else
            out << invariants_line(inv) << "\n";
        return 0;
    }
    if (what == "tile") {
        if (scale < 1 || n % scale != 0) throw UsageError("gamma0 tile: scale " + scale.str() + " does not divide " + n.str());
        DecoratedTile t = decorated_tile(sym, scale);
        if (fmt == Format::Svg) {
            out << svg::render(t);
        } else if (fmt == Format::Json) {
            out << json{{"schema", schema_version}, {"tile", js::from(t)}}.dump() << "\n";
        } else {
            out << "tile n=" << n << " scale=" << scale << ": " << t.edges.size() << " interior edges, "
                << t.boundary_edges.size() << " boundary edges, " << t.faces.size() << " faces\n";
            for (const auto& e : t.edges) out << "edge " << e.a.str() << " " << e.b.str() << "\n";
            for (const auto& f : t.faces)
                out << "face " << f.vertices[0].str() << " " << f.vertices[1].str() << " " << f.vertices[2].str() << " "
                    << to_string(f.type) << " orbit " << f.orbit << "\n";
            out << "orbit area " << t.orbit_area() << "\n";
        }
        return 0;
    }
    throw UsageError("gamma0: unknown subcommand " + what);
}

// --- verify ---

struct VerifyOptions {
    Config config;
    std::optional<integer> n;
    std::optional<std::string> cf;
};

namespace detail {

inline std::vector<integer> levels(const VerifyOptions& o, int lo, int hi) {
    if (o.n) return {*o.n};
    std::vector<integer> v;
    for (int n = lo; n <= hi; ++n) v.emplace_back(n);
    return v;
}

inline std::vector<integer> levels(const VerifyOptions& o, std::initializer_list<int> list) {
    if (o.n) return {*o.n};
    return {list.begin(), list.end()};
}

inline std::vector<ContinuedFraction> inputs(const VerifyOptions& o, bool strictly_periodic = false) {
    if (o.cf) return {ContinuedFraction::parse(*o.cf)};
    return strictly_periodic ? random_sp_corpus(o.config.corpus_size, o.config.seed)
                             : random_corpus(o.config.corpus_size, o.config.seed);
}

struct Tally {
    std::map<std::string, std::size_t> counts;
    bool violated = false;
    void add(const std::string& status) { ++counts[status]; }
};

inline void emit(std::ostream& out, const std::string& claim, const ContinuedFraction& cf, const integer& n,
                 const std::string& status, json witnesses, Tally& t) {
    t.add(status);
    out << json{{"claim", claim}, {"input", cf.str()}, {"n", js::number(n)}, {"status", status}, {"witnesses", std::move(witnesses)}}
               .dump()
        << "\n";
}

}  // namespace detail

// JSON lines, one per (input, n), then a summary line; exit 1 iff a proved check is violated
inline int cmd_verify(const std::string& claim, const VerifyOptions& o, std::ostream& out) {
    using namespace detail;
    const Config& c = o.config;
    Tally t;
    if (o.n && *o.n < (claim == "closure" || claim == "orbi-equivalence" ? 1 : 2)) throw UsageError("verify: n too small");

    if (claim == "pro2") {
        std::size_t literal_fail = 0;
        for (const auto& cf : inputs(o))
            for (const auto& n : levels(o, 2, 10)) {
                auto ws = verify_pro2(cf, n, c.horizon);
                json arr = json::array();
                bool ok = true;
                for (const auto& w : ws) {
                    arr.push_back(js::from(w));
                    ok &= w.proposition_holds() && (!w.a_next || w.bound_n_anext);
                    literal_fail += !w.bound_n_ak;
                }
                t.violated |= !ok;
                emit(out, claim, cf, n, ws.empty() ? "vacuous" : ok ? "pass" : "fail", std::move(arr), t);
            }
        out << json{{"claim", claim}, {"summary", t.counts}, {"literal_corollary_failures", literal_fail}}.dump() << "\n";
        return t.violated;
    }
    if (claim == "conden" || claim == "connum") {
        auto side = claim == "conden" ? ConvergentSide::Denominators : ConvergentSide::Numerators;
        for (const auto& cf : inputs(o, true))
            for (const auto& n : levels(o, 2, 10)) {
                auto hits = scan_divisible_convergents(cf, n, c.horizon, side);
                Periodicity p = classify(cf);
                QuadraticSurd x = cf_to_surd(cf);
                bool above_one = x > QuadraticSurd(Rational(1));
                bool in_scope = p == Periodicity::SP || (p == Periodicity::ESP && (side == ConvergentSide::Denominators) == above_one);
                std::string status;
                if (in_scope) {
                    status = hits.size() >= 3 ? "pass" : "fail";
                    t.violated |= hits.size() < 3;
                } else {
                    status = hits.empty() ? "expected-negative" : "out-of-scope";
                }
                json arr = json::array();
                for (auto k : hits) arr.push_back(k);
                emit(out, claim, cf, n, status, std::move(arr), t);
            }
        out << json{{"claim", claim}, {"summary", t.counts}}.dump() << "\n";
        return t.violated;
    }
    if (claim == "evp" || claim == "growth") {
        for (const auto& cf : inputs(o)) {
            if (classify(cf) != Periodicity::EVP) continue;
            for (const auto& n : levels(o, 2, 10)) {
                if (claim == "evp") {
                    auto d = find_evp_decomposition(cf, n, c.k_max);
                    std::string status = to_string(d.status);
                    if (d.status == EvpStatus::Found && !d.ok()) status = "fail";
                    t.violated |= !d.ok();
                    emit(out, claim, cf, n, status, json::array({js::from(d)}), t);
                } else {
                    auto r = verify_exponential_growth(cf, n, c.i_max, c.k_max);
                    std::string status = !r.decomposition.ok() ? std::string("no-decomposition:") + to_string(r.decomposition.status)
                                         : r.ok()               ? "pass"
                                                                : "fail";
                    t.violated |= r.decomposition.ok() && !r.ok();
                    emit(out, claim, cf, n, status, json::array({js::from(r)}), t);
                }
            }
        }
        out << json{{"claim", claim}, {"summary", t.counts}}.dump() << "\n";
        return t.violated;
    }
    if (claim == "closure") {
        for (const auto& cf : inputs(o)) {
            if (!is_esp(classify(cf))) continue;
            for (const auto& n : levels(o, 1, 12)) {
                auto up = multiply_nbar(cf, n);
                auto down = multiply_oracle(cf, Rational(1, n));
                bool ok = is_esp(classify(up)) && is_esp(classify(down));
                t.violated |= !ok;
                emit(out, claim, cf, n, ok ? "pass" : "fail", json{{"times", up.str()}, {"divided", down.str()}}, t);
            }
        }
        out << json{{"claim", claim}, {"summary", t.counts}}.dump() << "\n";
        return t.violated;
    }
    if (claim == "orbi-equivalence") {
        for (const auto& cf : inputs(o))
            for (const auto& n : levels(o, {2, 3, 5, 7, 11})) {
                auto walk = tile_walk_multiply(cf, n);
                auto tr = multiply_nbar(cf, n);
                bool ok = walk == tr;
                t.violated |= !ok;
                emit(out, claim, cf, n, ok ? "pass" : "fail", json{{"tile_walk", walk.str()}, {"trace", tr.str()}}, t);
            }
        out << json{{"claim", claim}, {"summary", t.counts}}.dump() << "\n";
        return t.violated;
    }
    throw UsageError("verify: unknown claim " + claim);
}

}  // namespace nbar::cli

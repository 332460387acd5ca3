#pragma once

// SVG pictures of special polygons and decorated tiles in the upper half-plane.
// Geodesics are semicircles on the real axis; the polygon doubles as a clip path
// for the decoration.

#include "gamma0.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace nbar::svg {

struct Style {
    double width = 800, pad = 0.08, top = 0.75;  // top: visible height over the vertex span
};

namespace detail {

inline double to_double(const Rational& r) { return static_cast<double>(r.num()) / static_cast<double>(r.den()); }
inline double to_double(const QuadraticSurd& s) {
    auto [P, D, Q] = s.canonical_pqd();
    return (static_cast<double>(P) + std::sqrt(static_cast<double>(D))) / static_cast<double>(Q);
}

// same scale on both axes so geodesics stay semicircles
struct Frame {
    double x0, x1, width, top;
    double unit() const { return width / (x1 - x0); }
    double height() const { return top * unit() + 40; }
    double sx(double x) const { return (x - x0) * unit(); }
    double sy(double y) const { return height() - 20 - y * unit(); }
    double r(double len) const { return len * unit(); }
};

inline std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
}

// stroke styles cycling through the published convention
inline std::string stroke(std::size_t k) {
    static const char* dash[] = {"", "6,4", "16,6"};
    static const char* colour[] = {"#1f4e99", "#b3401b", "#2f7d32", "#7b3fa0", "#a07b00", "#006d77"};
    std::string s = "stroke=\"" + std::string(colour[(k / 3) % 6]) + "\" stroke-width=\"" + (k % 3 == 0 ? "3.5" : "2") + "\"";
    if (k % 3) s += " stroke-dasharray=\"" + std::string(dash[k % 3]) + "\"";
    return s;
}

// rightward along an upper semicircle is clockwise on screen
inline std::string arc_to(const Frame& f, double radius, double x, double y) {
    return " A " + fmt(f.r(radius)) + " " + fmt(f.r(radius)) + " 0 0 1 " + fmt(f.sx(x)) + " " + fmt(f.sy(y));
}

inline std::string geodesic_path(const Frame& f, const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) {
        double x = to_double(a.is_infinite() ? b : a);
        return "M " + fmt(f.sx(x)) + " " + fmt(f.sy(0)) + " L " + fmt(f.sx(x)) + " " + fmt(f.sy(f.top * 1.2));
    }
    double u = to_double(a), v = to_double(b);
    if (u > v) std::swap(u, v);
    return "M " + fmt(f.sx(u)) + " " + fmt(f.sy(0)) + arc_to(f, (v - u) / 2, v, 0);
}

struct Segment {
    std::string d;
    std::size_t side;
};

// each side as a drawable piece; odd parts stop at the interval's center
inline std::vector<Segment> side_segments(const SpecialPolygon& P, const Frame& f) {
    std::vector<Segment> out;
    const auto& sides = P.sides();
    for (std::size_t k = 0; k < sides.size(); ++k) {
        const auto& s = sides[k];
        if (s.part == 0) {
            Rational a = P.symbol().vertices[s.interval], b = P.symbol().vertices[s.interval + 1];
            out.push_back({geodesic_path(f, a, b), k});
            continue;
        }
        const HPoint& c = P.centers().at(s.interval);
        double cx = to_double(c.x), cy = std::sqrt(to_double(c.y2));
        double u = to_double(s.line.u.value()), v = to_double(s.line.v.value());
        double rad = (v - u) / 2;
        double xi = to_double(P.symbol().vertices[s.interval + (s.part == 1 ? 0 : 1)]);
        if (s.part == 1)
            out.push_back({"M " + fmt(f.sx(xi)) + " " + fmt(f.sy(0)) + arc_to(f, rad, cx, cy), k});
        else
            out.push_back({"M " + fmt(f.sx(cx)) + " " + fmt(f.sy(cy)) + arc_to(f, rad, xi, 0), k});
    }
    return out;
}

inline std::string boundary_path(const SpecialPolygon& P, const Frame& f) {
    const auto& x = P.symbol().vertices;
    std::size_t N = P.symbol().size();
    std::string d = "M " + fmt(f.sx(0)) + " " + fmt(f.sy(f.top * 1.2)) + " L " + fmt(f.sx(0)) + " " + fmt(f.sy(0));
    for (std::size_t i = 1; i + 1 < N; ++i) {
        double u = to_double(x[i]), v = to_double(x[i + 1]);
        if (P.symbol().labels[i].kind != IntervalKind::Odd) {
            d += arc_to(f, (v - u) / 2, v, 0);
            continue;
        }
        const HPoint& c = P.centers().at(i);
        const auto& s1 = P.sides()[P.side_index(i, 1)].line;
        const auto& s2 = P.sides()[P.side_index(i, 2)].line;
        d += arc_to(f, (to_double(s1.v.value()) - to_double(s1.u.value())) / 2, to_double(c.x), std::sqrt(to_double(c.y2)));
        d += arc_to(f, (to_double(s2.v.value()) - to_double(s2.u.value())) / 2, v, 0);
    }
    return d + " L " + fmt(f.sx(1)) + " " + fmt(f.sy(f.top * 1.2)) + " Z";
}

// pairing classes: each free pair, each even side, each odd interval
inline std::vector<std::pair<std::size_t, std::string>> pairing_classes(const FareySymbol& s, std::vector<std::size_t>& cls) {
    std::vector<std::pair<std::size_t, std::string>> legend;
    cls.assign(s.size(), 0);
    std::map<int, std::size_t> free_class;
    auto interval = [&](std::size_t i) { return "(" + s.vertices[i].str() + ", " + s.vertices[i + 1].str() + ")"; };
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& l = s.labels[i];
        if (l.kind == IntervalKind::Free) {
            auto [it, fresh] = free_class.emplace(l.pair, legend.size());
            cls[i] = it->second;
            if (fresh) legend.push_back({i, "free pair " + std::to_string(l.pair) + ": " + interval(i) + " ~ " + interval(l.partner)});
            continue;
        }
        cls[i] = legend.size();
        legend.push_back({i, std::string(l.kind == IntervalKind::Even ? "even " : "odd ") + interval(i)});
    }
    return legend;
}

}  // namespace detail

inline std::string render(const SpecialPolygon& P, const std::vector<FareyEdge>& decoration, const std::string& title,
                          Style st = {}) {
    using namespace detail;
    const auto& sym = P.symbol();
    // vertex span of the finite part; for these polygons always [0, 1]
    double lo = 0, hi = 1;
    for (const auto& v : sym.vertices)
        if (!v.is_infinite()) lo = std::min(lo, to_double(v)), hi = std::max(hi, to_double(v));
    double span = hi - lo;
    Frame f{lo - st.pad * span, hi + st.pad * span, st.width, st.top * span};

    std::vector<std::size_t> cls;
    auto legend = pairing_classes(sym, cls);
    double legend_h = 18.0 * static_cast<double>(legend.size()) + 30;
    double H = std::max(f.height(), legend_h + 40), W = st.width + 320;

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W) << "\" height=\"" << fmt(H) << "\" viewBox=\"0 0 "
      << fmt(W) << " " << fmt(H) << "\">\n";
    o << "<title>" << title << "</title>\n";
    o << "<defs><clipPath id=\"tile\"><path d=\"" << boundary_path(P, f) << "\"/></clipPath></defs>\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<path d=\"" << boundary_path(P, f) << "\" fill=\"#f3f1ea\" stroke=\"none\"/>\n";
    o << "<line x1=\"0\" y1=\"" << fmt(f.sy(0)) << "\" x2=\"" << fmt(st.width) << "\" y2=\"" << fmt(f.sy(0))
      << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";

    o << "<g clip-path=\"url(#tile)\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\">\n";
    for (const auto& e : decoration) o << "  <path d=\"" << geodesic_path(f, e.a, e.b) << "\"/>\n";
    o << "</g>\n";

    o << "<g fill=\"none\">\n";
    for (const auto& seg : side_segments(P, f))
        o << "  <path d=\"" << seg.d << "\" " << stroke(cls[P.sides()[seg.side].interval]) << "/>\n";
    o << "</g>\n";
    for (const auto& [i, c] : P.centers())
        o << "<rect x=\"" << fmt(f.sx(to_double(c.x)) - 4) << "\" y=\"" << fmt(f.sy(std::sqrt(to_double(c.y2))) - 4)
          << "\" width=\"8\" height=\"8\" fill=\"black\"/>\n";

    o << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (const auto& v : sym.vertices)
        if (!v.is_infinite())
            o << "  <text x=\"" << fmt(f.sx(to_double(v))) << "\" y=\"" << fmt(f.sy(0) + 15) << "\" text-anchor=\"middle\">"
              << (v.is_integer() ? v.num().str() : v.str()) << "</text>\n";
    double lx = st.width + 20, ly = 30;
    o << "  <text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly - 10) << "\" font-weight=\"bold\">" << title << "</text>\n";
    for (std::size_t k = 0; k < legend.size(); ++k) {
        double y = ly + 18.0 * static_cast<double>(k) + 10;
        o << "  <line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(y - 4) << "\" x2=\"" << fmt(lx + 40) << "\" y2=\"" << fmt(y - 4)
          << "\" " << stroke(k) << "/>\n";
        o << "  <text x=\"" << fmt(lx + 48) << "\" y=\"" << fmt(y) << "\">" << legend[k].second << "</text>\n";
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

inline std::string render(const FareySymbol& sym) {
    SpecialPolygon P(sym);
    return render(P, {}, "P_" + sym.n.str());
}

inline std::string render(const DecoratedTile& t) {
    std::vector<FareyEdge> all = t.edges;
    all.insert(all.end(), t.boundary_edges.begin(), t.boundary_edges.end());
    return render(t.polygon, all, "T_{" + t.n.str() + "," + t.scale.str() + "}");
}

}  // namespace nbar::svg

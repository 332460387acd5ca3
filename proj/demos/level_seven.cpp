// Farey symbol, generators and decorated tile for Gamma0(N); writes the tile as SVG.
#include <nbar/svg.hpp>

#include <fstream>
#include <iostream>

using namespace nbar;

int main(int argc, char** argv) {
    long long N = argc > 1 ? std::stoll(argv[1]) : 7;
    auto s = build_farey_symbol(N);
    auto inv = invariants(s);
    std::cout << "symbol " << s.str() << "\n"
              << "index " << inv.index << ", cusps " << inv.cusps << ", e2 " << inv.e2 << ", e3 " << inv.e3 << ", genus "
              << inv.genus << "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto m = pairing_matrix(s, i);
        std::cout << "  side " << i << ": [[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]\n";
    }
    auto tile = decorated_tile(s, N);
    std::cout << tile.edges.size() << " interior edges, " << tile.faces.size() << " faces\n";
    std::string path = "tile_" + std::to_string(N) + ".svg";
    std::ofstream(path) << svg::render(tile);
    std::cout << "wrote " << path << "\n";
}

// Multiply a few periodic continued fractions by small integers, three ways.
#include <nbar/gamma0.hpp>

#include <iostream>

using namespace nbar;

int main() {
    for (const char* text : {"[1;(2)]", "[0;(1)]", "[3;(1,2)]"}) {
        auto cf = ContinuedFraction::parse(text);
        for (int n : {2, 3, 5}) {
            auto fast = multiply_nbar(cf, n);
            auto walk = tile_walk(cf, decorated_tile(n, n)).cf;
            std::cout << n << " * " << cf.str() << " = " << fast.str()
                      << (fast == multiply_oracle(cf, Rational(n)) && fast == walk ? "" : "  (engines disagree)") << "\n";
        }
    }
    // the word the geodesic cuts, before and after scaling
    auto golden = QuadraticSurd::parse("(1+sqrt(5))/2");
    std::cout << "vertices of phi:";
    for (const auto& v : convergent_vertices(golden, 1, 8)) std::cout << " " << v.str();
    std::cout << "\nvertices of phi in F/2:";
    for (const auto& v : convergent_vertices(golden, 2, 8)) std::cout << " " << v.str();
    std::cout << "\n";
}

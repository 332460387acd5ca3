#pragma once

// Exact numbers: big integers, extended rationals (with 1/0), real quadratic
// surds (a + b*sqrt(d))/c, and integer 2x2 Moebius maps acting on both.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

namespace nbar {

using integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline integer gcd(integer a, integer b) {
    return boost::multiprecision::gcd(a, b);
}

inline integer abs(const integer& a) { return a < 0 ? integer(-a) : a; }

inline int sign(const integer& a) { return a.sign(); }

// floor(a/b) for b != 0
inline integer floor_div(const integer& a, const integer& b) {
    integer q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline integer mod(const integer& a, const integer& m) {
    integer r = a % m;
    if (r < 0) r += abs(m);
    return r;
}

inline integer isqrt(const integer& a) {
    if (a < 0) throw std::domain_error("isqrt of negative");
    return boost::multiprecision::sqrt(a);
}

inline bool is_square(const integer& a) {
    if (a < 0) return false;
    integer s = isqrt(a);
    return s * s == a;
}

inline integer parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
    integer v(std::string(s.substr(i)));
    return s[0] == '-' ? integer(-v) : v;
}

inline std::uint64_t padic_valuation(const integer& x, const integer& p) {
    if (p < 2) throw std::invalid_argument("padic_valuation: p < 2");
    if (x < 1) throw std::invalid_argument("padic_valuation: x < 1");
    std::uint64_t k = 0;
    integer y = x;
    while (y % p == 0) {
        y /= p;
        ++k;
    }
    return k;
}

// Square-free decomposition m = f^2 * s. Trial division up to cbrt(m); the
// cofactor left over then has at most two prime factors.
inline std::pair<integer, integer> squarefree_split(integer m) {
    if (m < 0) throw std::domain_error("squarefree_split of negative");
    if (m == 0) return {0, 0};
    integer f = 1, s = 1;
    for (integer p = 2; p * p * p <= m; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int k = 0; k + 1 < e; k += 2) f *= p;
        if (e % 2) s *= p;
    }
    if (m > 1) {
        integer r = isqrt(m);
        if (r * r == m)
            f *= r;
        else
            s *= m;
    }
    return {f, s};
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const integer& n) : num_(n), den_(1) {}
    Rational(integer n, integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Rational infinity() { return Rational(integer(1), integer(0)); }

    const integer& num() const { return num_; }
    const integer& den() const { return den_; }
    bool is_infinite() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }

    integer floor() const {
        finite("floor");
        return floor_div(num_, den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        a.finite("+"), b.finite("+");
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        a.finite("-"), b.finite("-");
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        a.finite("*"), b.finite("*");
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        a.finite("/"), b.finite("/");
        if (b.num_ == 0) throw std::domain_error("division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        finite("negate");
        return Rational(-num_, den_);
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    // infinity compares greater than every finite value
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
        int s = (a.num_ * b.den_ - b.num_ * a.den_).sign();
        return s <=> 0;
    }

    std::string str() const { return num_.str() + "/" + den_.str(); }

    // "p/q", "p" or "inf"
    static Rational parse(std::string_view s) {
        if (s == "inf" || s == "oo" || s == "\xe2\x88\x9e") return infinity();
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(parse_integer(s));
        return Rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
    }

private:
    void normalize() {
        if (num_ == 0 && den_ == 0) throw std::invalid_argument("0/0 is undefined");
        if (den_ == 0) {
            num_ = 1;
            return;
        }
        if (den_ < 0) num_ = -num_, den_ = -den_;
        integer g = gcd(abs(num_), den_);
        if (g > 1) num_ /= g, den_ /= g;
    }
    void finite(const char* op) const {
        if (den_ == 0) throw std::domain_error(std::string("arithmetic on infinity: ") + op);
    }

    integer num_, den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational reduce(const integer& num, const integer& den) { return Rational(num, den); }

// (a + b*sqrt(d)) / c with d square-free, c > 0, gcd(a,b,c) = 1; b = d = 0 for rationals.
class QuadraticSurd {
public:
    QuadraticSurd() : a_(0), b_(0), c_(1), d_(0) {}
    QuadraticSurd(const Rational& r) : a_(r.num()), b_(0), c_(r.den()), d_(0) {
        if (r.is_infinite()) throw std::domain_error("surd from infinity");
    }
    QuadraticSurd(long long v) : QuadraticSurd(Rational(v)) {}
    // (a + b*sqrt(d)) / c; d need not be square-free
    QuadraticSurd(integer a, integer b, integer d, integer c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (c_ == 0) throw std::invalid_argument("surd with zero denominator");
        if (d_ < 0) throw std::domain_error("surd with negative radicand");
        auto [f, s] = squarefree_split(d_);
        b_ *= f;
        d_ = s;
        normalize();
    }
    // (p + sqrt(D)) / q
    static QuadraticSurd pqd(const integer& p, const integer& D, const integer& q) {
        return QuadraticSurd(p, integer(1), D, q);
    }

    const integer& a() const { return a_; }
    const integer& b() const { return b_; }
    const integer& c() const { return c_; }
    const integer& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    Rational to_rational() const {
        if (!is_rational()) throw std::domain_error("surd is irrational");
        return Rational(a_, c_);
    }

    QuadraticSurd conjugate() const { return make(a_, -b_, c_, d_); }

    // sign of x - r
    int compare(const Rational& r) const {
        if (r.is_infinite()) return -1;
        // sign(r.den*a - r.num*c + r.den*b*sqrt(d))
        return sign_of(r.den() * a_ - r.num() * c_, r.den() * b_, d_);
    }
    int sign() const { return sign_of(a_, b_, d_); }

    integer floor() const {
        // candidate from isqrt, then fix up with exact comparisons
        integer bs = isqrt(b_ * b_ * d_);
        if (b_ < 0) bs = -bs;
        integer f = floor_div(a_ + bs, c_);
        while (compare(Rational(f)) < 0) --f;
        while (compare(Rational(f + 1)) >= 0) ++f;
        return f;
    }

    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
        const integer& d = common_radicand(x, y);
        return make(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
    }
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }
    QuadraticSurd operator-() const { return make(-a_, -b_, c_, d_); }
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
        const integer& d = common_radicand(x, y);
        return make(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, d);
    }
    QuadraticSurd reciprocal() const {
        // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
        integer n = a_ * a_ - b_ * b_ * d_;
        if (n == 0) throw std::domain_error("reciprocal of zero");
        return make(c_ * a_, -c_ * b_, n, d_);
    }
    friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) { return x * y.reciprocal(); }

    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
    friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
        return (x - y).sign() <=> 0;
    }

    // (P + sqrt(D)) / Q with Q | D - P^2, the form used by the periodic CF recurrence
    std::tuple<integer, integer, integer> canonical_pqd() const {
        integer P = a_, Q = c_, D = b_ * b_ * d_;
        if (b_ < 0) P = -P, Q = -Q;
        integer k = abs(Q) / gcd(abs(Q), abs(D - P * P));
        return {P * k, D * k * k, Q * k};
    }

    std::string str() const {
        if (is_rational()) return Rational(a_, c_).str();
        integer D = b_ * b_ * d_;
        std::string s = "(" + a_.str() + (b_ > 0 ? "+" : "-") + "sqrt(" + D.str() + "))";
        return s + "/" + c_.str();
    }

    // "p/q", "p", "(p+sqrt(D))/q", "(p-sqrt(D))/q", "sqrt(D)", "(p+sqrt(D))"
    static QuadraticSurd parse(std::string_view s) {
        std::string t;
        for (char ch : s)
            if (ch != ' ') t.push_back(ch);
        auto sq = t.find("sqrt(");
        if (sq == std::string::npos) return QuadraticSurd(Rational::parse(t));
        auto close_rad = t.find(')', sq);
        if (close_rad == std::string::npos) throw std::invalid_argument("bad surd: " + t);
        integer D = parse_integer(t.substr(sq + 5, close_rad - sq - 5));
        std::string head = t.substr(0, sq);
        std::string tail = t.substr(close_rad + 1);
        bool paren = !head.empty() && head[0] == '(';
        if (paren) head = head.substr(1);
        integer sgn = 1, p = 0;
        if (!head.empty()) {
            char op = head.back();
            if (op != '+' && op != '-') throw std::invalid_argument("bad surd: " + t);
            if (op == '-') sgn = -1;
            std::string ps = head.substr(0, head.size() - 1);
            if (!ps.empty()) p = parse_integer(ps);
            else if (op == '+') throw std::invalid_argument("bad surd: " + t);
        }
        integer q = 1;
        if (paren) {
            if (tail.empty() || tail[0] != ')') throw std::invalid_argument("bad surd: " + t);
            tail = tail.substr(1);
        }
        if (!tail.empty()) {
            if (tail[0] != '/') throw std::invalid_argument("bad surd: " + t);
            q = parse_integer(tail.substr(1));
        }
        return QuadraticSurd(p, sgn, D, q);
    }

    std::size_t hash() const {
        std::hash<std::string> h;
        return h(a_.str() + ":" + b_.str() + ":" + c_.str() + ":" + d_.str());
    }

private:
    static QuadraticSurd make(integer a, integer b, integer c, integer d) {
        QuadraticSurd s;
        s.a_ = std::move(a), s.b_ = std::move(b), s.c_ = std::move(c), s.d_ = std::move(d);
        if (s.c_ == 0) throw std::domain_error("surd with zero denominator");
        s.normalize();
        return s;
    }
    static const integer& common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
        if (x.b_ != 0 && y.b_ != 0 && x.d_ != y.d_) throw std::domain_error("surds from different fields");
        return x.b_ != 0 ? x.d_ : y.d_;
    }
    // sign of X + Y*sqrt(d), d square-free (or zero)
    static int sign_of(const integer& X, const integer& Y, const integer& d) {
        int sx = X.sign(), sy = d == 0 ? 0 : Y.sign();
        if (sy == 0) return sx;
        if (sx == 0) return sy;
        if (sx == sy) return sx;
        integer lhs = X * X, rhs = Y * Y * d;
        if (lhs == rhs) return 0;
        return lhs > rhs ? sx : sy;
    }
    void normalize() {
        if (d_ == 1) a_ += b_, b_ = 0;
        if (d_ <= 1 || b_ == 0) b_ = 0, d_ = 0;
        if (c_ < 0) a_ = -a_, b_ = -b_, c_ = -c_;
        integer g = gcd(gcd(abs(a_), abs(b_)), c_);
        if (g > 1) a_ /= g, b_ /= g, c_ /= g;
    }

    integer a_, b_, c_, d_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s) { return os << s.str(); }

inline int surd_compare(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign(); }

// Integer matrix [[a,b],[c,d]] acting by z -> (az+b)/(cz+d), projectively.
struct Mobius {
    integer a = 1, b = 0, c = 0, d = 1;

    integer det() const { return a * d - b * c; }

    friend Mobius operator*(const Mobius& x, const Mobius& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    // adjugate; the projective inverse
    Mobius inverse() const { return {d, -b, -c, a}; }

    Rational operator()(const Rational& z) const {
        if (z.is_infinite()) return Rational(a, c);
        return Rational(a * z.num() + b * z.den(), c * z.num() + d * z.den());
    }
    QuadraticSurd operator()(const QuadraticSurd& z) const {
        QuadraticSurd num = QuadraticSurd(Rational(a)) * z + QuadraticSurd(Rational(b));
        QuadraticSurd den = QuadraticSurd(Rational(c)) * z + QuadraticSurd(Rational(d));
        return num / den;
    }

    bool is_projective_identity() const { return b == 0 && c == 0 && a == d && a != 0; }

    friend bool operator==(const Mobius&, const Mobius&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Mobius& m) {
    return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

}  // namespace nbar

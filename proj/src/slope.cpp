#include "slopecalc/slope.hpp"

#include <charconv>
#include <numeric>

namespace slopecalc {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Slope normalize(long long p, long long q) {
    if (p == 0 && q == 0) throw rule_error("normalize: (0, 0) is not a slope");
    if (q == 0) return Slope::infinity();
    if (q < 0) {
        p = -p;
        q = -q;
    }
    long long g = std::gcd(p < 0 ? -p : p, q);
    return Slope(p / g, q / g);
}

Slope::Slope(long long numerator, long long denominator) : num_(numerator), den_(denominator) {
    if (den_ == 0) {
        if (num_ == 0) throw rule_error("Slope: (0, 0) is not a slope");
        num_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    num_ /= g;
    den_ /= g;
}

std::string Slope::str() const {
    if (is_infinite()) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

long long parse_int(std::string_view text) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw parse_error("bad integer in slope: '" + std::string(text) + "'");
    return value;
}

} // namespace

Slope parse_slope(std::string_view text) {
    if (text.empty()) throw parse_error("empty slope string");
    if (text == "inf") return Slope::infinity();
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Slope(parse_int(text), 1);
    long long p = parse_int(text.substr(0, slash));
    long long q = parse_int(text.substr(slash + 1));
    if (p == 0 && q == 0) throw parse_error("'0/0' is not a slope");
    return normalize(p, q);
}

long long slope_det(const Slope& s, const Slope& t) {
    return s.den() * t.num() - s.num() * t.den();
}

long long intersection_number(const Slope& s, const Slope& t) {
    long long d = slope_det(s, t);
    return d < 0 ? -d : d;
}

bool farey_adjacent(const Slope& s, const Slope& t) {
    if (s == t) throw rule_error("farey_adjacent: slopes are equal");
    return intersection_number(s, t) == 1;
}

bool slope_less(const Slope& a, const Slope& b) {
    if (a.is_infinite() || b.is_infinite())
        throw invariant_error("slope_less: comparison with infinity");
    // denominators are positive in canonical form
    return a.num() * b.den() < b.num() * a.den();
}

bool cw_between(const Slope& x, const Slope& z, const Slope& y) {
    if (x == y) throw rule_error("cw_between: arc endpoints are equal");
    if (z == x || z == y) return false;
    if (x.is_infinite()) return slope_less(z, y);
    if (y.is_infinite()) return slope_less(x, z);
    if (z.is_infinite()) return slope_less(y, x);
    if (slope_less(x, y)) return slope_less(x, z) && slope_less(z, y);
    return slope_less(x, z) || slope_less(z, y);
}

bool in_closed_cw_arc(const Slope& x, const Slope& z, const Slope& y) {
    return z == x || z == y || cw_between(x, z, y);
}

Unimodular::Unimodular(long long a, long long b, long long c, long long d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (a * d - b * c != 1)
        throw invariant_error("Unimodular: determinant must be +1");
}

Slope apply_unimodular(const Unimodular& m, const Slope& s) {
    long long q = s.den();
    long long p = s.num();
    return normalize(m.c() * q + m.d() * p, m.a() * q + m.b() * p);
}

namespace {

// g = gcd(a, b) together with x a + y b = g.
void ext_gcd(long long a, long long b, long long& g, long long& x, long long& y) {
    if (b == 0) {
        if (a >= 0) {
            g = a;
            x = 1;
        } else {
            g = -a;
            x = -1;
        }
        y = 0;
        return;
    }
    long long g1, x1, y1;
    ext_gcd(b, a % b, g1, x1, y1);
    g = g1;
    x = y1;
    y = x1 - (a / b) * y1;
}

} // namespace

Unimodular coords_to_infinity(const Slope& s) {
    long long q = s.den();
    long long p = s.num();
    long long g, u, v;
    ext_gcd(q, p, g, u, v); // u q + v p = 1
    // [[p, -q], [u, v]] has determinant p v + q u = 1 and kills v(s)'s first row.
    return Unimodular(p, -q, u, v);
}

Slope dehn_twist(const Slope& s, const Slope& c, long long k) {
    long long d = slope_det(c, s);
    long long q = s.den() + k * d * c.den();
    long long p = s.num() + k * d * c.num();
    return normalize(p, q);
}

Slope convention_invert(const Slope& s) {
    return normalize(s.den(), s.num());
}

} // namespace slopecalc

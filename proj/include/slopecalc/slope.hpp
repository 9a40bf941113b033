#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "slopecalc/errors.hpp"

namespace slopecalc {

// An extended rational number p/q, i.e. a vertex of the Farey graph.
//
// Conventions used throughout the library:
//   * canonical form: gcd(|num|, den) = 1 and den >= 0; infinity is 1/0.
//   * the vector representative of p/q is v(p/q) = (q, p), stored as
//     (denominator, numerator); infinity has v = (0, 1).
//   * "clockwise" on the circle of slopes means traversal by increasing
//     real value, wrapping +oo -> infinity -> -oo.
class Slope {
  public:
    Slope() : num_(0), den_(1) {}
    Slope(long long numerator, long long denominator);

    static Slope infinity() {
        Slope s;
        s.num_ = 1;
        s.den_ = 0;
        return s;
    }
    static Slope integer(long long n) { return Slope(n, 1); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_infinite() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // Vector representative (denominator, numerator).
    std::array<long long, 2> vec() const { return {den_, num_}; }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

    std::string str() const;

  private:
    long long num_;
    long long den_;
};

// Canonical coprime representative; (+-k, 0) maps to infinity.
// Rejects (0, 0).
Slope normalize(long long p, long long q);

// Parses "p/q", "n" or "inf".
Slope parse_slope(std::string_view text);

// det(v(s), v(t)) for the (denominator, numerator) representatives.
long long slope_det(const Slope& s, const Slope& t);

// Minimal geometric intersection number |det(v(s), v(t))|.
long long intersection_number(const Slope& s, const Slope& t);

// Edge relation of the Farey graph. Equal slopes are rejected.
bool farey_adjacent(const Slope& s, const Slope& t);

// Strict order on finite slopes by rational value. Throws on infinity.
bool slope_less(const Slope& a, const Slope& b);

// True iff z lies strictly inside the clockwise arc from x to y.
// Requires x != y; returns false when z coincides with an endpoint.
bool cw_between(const Slope& x, const Slope& z, const Slope& y);

// Closed-arc membership: endpoints included.
bool in_closed_cw_arc(const Slope& x, const Slope& z, const Slope& y);

// The coordinate-change group of the Farey graph: integer matrices
// [[a, b], [c, d]] with determinant +1, acting on vector representatives
// (q, p) |-> (a q + b p, c q + d p).
class Unimodular {
  public:
    Unimodular() : a_(1), b_(0), c_(0), d_(1) {}
    Unimodular(long long a, long long b, long long c, long long d);

    static Unimodular identity() { return Unimodular(); }

    long long a() const { return a_; }
    long long b() const { return b_; }
    long long c() const { return c_; }
    long long d() const { return d_; }

    Unimodular inverse() const { return Unimodular(d_, -b_, -c_, a_); }

    friend Unimodular operator*(const Unimodular& m, const Unimodular& n) {
        return Unimodular(m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                          m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_);
    }
    friend bool operator==(const Unimodular& m, const Unimodular& n) {
        return m.a_ == n.a_ && m.b_ == n.b_ && m.c_ == n.c_ && m.d_ == n.d_;
    }

  private:
    long long a_, b_, c_, d_;
};

// Projective action on slopes; preserves adjacency, intersection numbers
// and the clockwise cyclic order.
Slope apply_unimodular(const Unimodular& m, const Slope& s);

// Some unimodular matrix sending s to infinity.
Unimodular coords_to_infinity(const Slope& s);

// k-fold Dehn twist along the curve of slope c:
// v(s) |-> v(s) + k * det(v(c), v(s)) * v(c).
// The sign convention makes k = -(n+1) twists along slope 0 send 1 to -1/n.
Slope dehn_twist(const Slope& s, const Slope& c, long long k);

// Reciprocal p/q <-> q/p; exchanges infinity and 0. Converts between the
// topologist slope convention used here and the inverse convention.
Slope convention_invert(const Slope& s);

long long floor_div(long long a, long long b);

} // namespace slopecalc

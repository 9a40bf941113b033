#include "slopecalc/farey_path.hpp"

#include <algorithm>

namespace slopecalc {

namespace {

constexpr int kMaxPathSteps = 10000;

void validate_adjacency_path(const std::vector<Slope>& vs) {
    if (vs.size() < 2) throw rule_error("path needs at least two vertices");
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        if (!farey_adjacent(vs[i], vs[i + 1]))
            throw rule_error("path vertices " + vs[i].str() + " and " + vs[i + 1].str() +
                             " are not Farey-adjacent");
    }
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j]) throw rule_error("path repeats vertex " + vs[i].str());
}

} // namespace

bool cf_block_triple(const Slope& u, const Slope& v, const Slope& w) {
    long long d1 = slope_det(u, v);
    long long d2 = slope_det(v, w);
    long long lq = d1 * u.den() + d2 * w.den();
    long long lp = d1 * u.num() + d2 * w.num();
    return (lq == 2 * v.den() && lp == 2 * v.num()) ||
           (lq == -2 * v.den() && lp == -2 * v.num());
}

std::vector<std::vector<int>> cf_blocks(const std::vector<Slope>& vertices) {
    validate_adjacency_path(vertices);
    int edges = static_cast<int>(vertices.size()) - 1;
    std::vector<std::vector<int>> blocks;
    std::vector<int> current{0};
    for (int e = 1; e < edges; ++e) {
        if (cf_block_triple(vertices[e - 1], vertices[e], vertices[e + 1])) {
            current.push_back(e);
        } else {
            blocks.push_back(std::move(current));
            current = {e};
        }
    }
    blocks.push_back(std::move(current));
    return blocks;
}

namespace {

// Furthest Farey neighbor of cur along the clockwise arc toward target;
// equals target itself when the two are adjacent.
Slope greedy_step(const Slope& cur, const Slope& target) {
    Unimodular m = coords_to_infinity(cur);
    Slope t = apply_unimodular(m, target);
    if (t.is_infinite()) throw invariant_error("greedy_step: target collapsed to infinity");
    if (t.is_integer()) return target;
    long long f = floor_div(t.num(), t.den());
    return apply_unimodular(m.inverse(), Slope::integer(f));
}

} // namespace

FareyPath minimal_cw_path(const Slope& a, const Slope& b) {
    if (a == b) throw rule_error("minimal_cw_path: endpoints are equal");
    FareyPath path;
    path.vertices.push_back(a);
    Slope cur = a;
    int steps = 0;
    while (cur != b) {
        if (++steps > kMaxPathSteps)
            throw rule_error("minimal_cw_path: path longer than the supported limit");
        cur = greedy_step(cur, b);
        path.vertices.push_back(cur);
    }
    path.blocks = cf_blocks(path.vertices);
    return path;
}

std::vector<long long> negative_cf(const Slope& s) {
    if (s.is_infinite()) throw rule_error("negative_cf: slope must be finite");
    if (s.num() >= 0) throw rule_error("negative_cf: slope must be negative");
    std::vector<long long> out;
    Slope cur = s;
    while (true) {
        if (cur.is_integer()) {
            out.push_back(cur.num());
            break;
        }
        long long a = floor_div(cur.num(), cur.den());
        out.push_back(a);
        // s = a - 1/s'  with  s' = -1/(s - a)
        cur = normalize(-cur.den(), cur.num() - a * cur.den());
    }
    return out;
}

namespace {

struct IntegerWindow {
    long long lo = 0;
    long long hi = -1; // empty by default
    bool empty() const { return lo > hi; }
};

// Integers n with |c0 + c1 n| <= bound (c1 != 0 assumed handled by caller).
IntegerWindow bounded_window(long long c0, long long c1, long long bound) {
    // -bound <= c0 + c1 n <= bound
    long long lo_num = -bound - c0;
    long long hi_num = bound - c0;
    IntegerWindow w;
    if (c1 > 0) {
        w.lo = -floor_div(-lo_num, c1); // ceil(lo_num / c1)
        w.hi = floor_div(hi_num, c1);
    } else {
        w.lo = -floor_div(-hi_num, c1);
        w.hi = floor_div(lo_num, c1);
    }
    return w;
}

long long ceil_of(const Slope& s) { return -floor_div(-s.num(), s.den()); }

} // namespace

std::vector<ArcNeighbor> neighbors_in_arc(const Slope& s0, const Slope& x, const Slope& y,
                                          long long denominator_bound) {
    if (x == y) throw rule_error("neighbors_in_arc: arc endpoints are equal");
    if (s0 == x || s0 == y) throw rule_error("neighbors_in_arc: s0 must differ from the endpoints");
    if (denominator_bound < 1) throw rule_error("neighbors_in_arc: bound must be positive");

    Unimodular m = coords_to_infinity(s0);
    Unimodular minv = m.inverse();
    Slope xi = apply_unimodular(m, x);
    Slope yi = apply_unimodular(m, y);

    auto emit = [&](long long n, std::vector<ArcNeighbor>& out) {
        Slope t = apply_unimodular(minv, Slope::integer(n));
        out.push_back({t, t == x || t == y});
    };

    std::vector<ArcNeighbor> out;
    if (slope_less(xi, yi)) {
        // The arc stays clear of s0: the answer is finite and exact.
        long long lo = ceil_of(xi);
        long long hi = floor_div(yi.num(), yi.den());
        if (hi - lo > 2000000) throw rule_error("neighbors_in_arc: arc holds too many neighbors");
        for (long long n = lo; n <= hi; ++n) emit(n, out);
        return out;
    }

    // The arc wraps through s0's accumulation point, so the neighbor set is
    // infinite; keep the neighbors with denominator at most the bound.
    // In s0's coordinates the neighbor n pulls back to minv * (1, n), whose
    // components (v + q n, -u + p n) are linear in n. When s0 is infinity the
    // denominators are constant, so the numerator is bounded instead.
    long long dq = minv.a();
    long long cq = minv.b();
    long long dp = minv.c();
    long long cp = minv.d();
    IntegerWindow w = cq != 0 ? bounded_window(dq, cq, denominator_bound)
                              : bounded_window(dp, cp, denominator_bound);

    long long x_ceil = ceil_of(xi);
    long long y_floor = floor_div(yi.num(), yi.den());
    long long up_lo = std::max(x_ceil, w.lo);
    long long down_hi = std::min(y_floor, w.hi);
    for (long long n = up_lo; n <= w.hi; ++n) emit(n, out);
    for (long long n = w.lo; n <= down_hi; ++n) emit(n, out);

    // Closed-arc semantics: an endpoint adjacent to s0 belongs to the answer
    // even when the bound would drop it.
    if (xi.is_integer() && (out.empty() || !(out.front().slope == x)))
        out.insert(out.begin(), {x, true});
    if (yi.is_integer() && (out.empty() || !(out.back().slope == y)))
        out.push_back({y, true});
    return out;
}

} // namespace slopecalc

#include "slopecalc/splitting.hpp"

#include <numeric>

namespace slopecalc {

void MixedTorusSpec::validate() const {
    if (!farey_adjacent(s_minus1, s0) || !farey_adjacent(s0, s_plus1))
        throw rule_error("mixed torus: consecutive slopes must be Farey-adjacent");
    if (!cw_between(s_minus1, s0, s_plus1))
        throw rule_error("mixed torus: s0 must lie strictly inside the clockwise arc from "
                         "s_minus1 to s_plus1");
    if (sign_minus == sign_plus)
        throw rule_error("mixed torus: the two basic slices must have opposite signs");
}

std::vector<ArcNeighbor> exceptional_slopes(const MixedTorusSpec& t, long long denominator_bound) {
    t.validate();
    return neighbors_in_arc(t.s0, t.s_plus1, t.s_minus1, denominator_bound);
}

H1Order h1_surgery_order(const Slope& surgery_slope) {
    if (surgery_slope.num() == 0) return {true, 0};
    long long n = surgery_slope.num();
    return {false, n < 0 ? -n : n};
}

long long lens_h1_order(const Slope& meridian1, const Slope& meridian2) {
    if (meridian1 == meridian2) throw rule_error("lens_h1_order: meridians must be distinct");
    return intersection_number(meridian1, meridian2);
}

SplitResult e_splitting_result(const Slope& solid_torus_meridian, const Slope& e) {
    SplitResult r;
    r.exceptional_slope = e;
    r.piece_one_h1 = {false, lens_h1_order(solid_torus_meridian, e)};
    r.piece_two_h1 = h1_surgery_order(e);
    r.surgery_side_is_homology_s1xs2 = r.piece_two_h1.infinite;
    return r;
}

CableVerdict large_cable_obstruction(long long p, long long q, long long k) {
    if (p < 2) throw rule_error("large_cable_obstruction: need p >= 2");
    if (q == 0) throw rule_error("large_cable_obstruction: q = 0 cable is trivial");
    if (k < 1) throw rule_error("large_cable_obstruction: need k >= 1");
    if (std::gcd(p, q < 0 ? -q : q) != 1)
        throw rule_error("large_cable_obstruction: p and q must be coprime");

    CableVerdict v;
    Slope s0 = normalize(q, p);
    v.reasons.push_back("tb = pq + " + std::to_string(k) +
                        " places a mixed torus of slope " + s0.str() +
                        " at the middle of a continued fraction block of length " +
                        std::to_string(2 * k));

    if (q != 1 && q != -1) {
        v.reasons.push_back("0 is not Farey-adjacent to " + s0.str() +
                            " (|q| != 1), so no 0-splitting exists; the homology "
                            "dichotomy cannot be satisfied");
        return v;
    }

    // Fan through s0 in the meridian-0 direction: vertices v(s0) + j*(-q, 0).
    // This is the continued fraction block of cabling-torus slopes 1/m.
    Slope s1 = normalize(s0.num(), s0.den() - q);
    Slope sm1 = normalize(s0.num(), s0.den() + q);
    MixedTorusSpec t{sm1, s0, s1, SliceSign::plus, SliceSign::minus};

    auto et = exceptional_slopes(t, 64);
    bool zero_found = false;
    int infinite_count = 0;
    for (const auto& n : et) {
        SplitResult r = e_splitting_result(Slope::infinity(), n.slope);
        if (r.surgery_side_is_homology_s1xs2) {
            ++infinite_count;
            if (r.exceptional_slope == Slope(0, 1)) zero_found = true;
        }
        v.splittings.push_back(r);
    }
    if (!zero_found || infinite_count != 1)
        throw invariant_error("large_cable_obstruction: e = 0 dichotomy failed");
    v.reasons.push_back("round-handle balance chi(X) = chi(X1) + chi(X2): one piece is a "
                        "homology ball, the other a homology S1 x D3; the lens-space side "
                        "is never the latter, so e-surgery must be a homology S1 x S2 and e = 0");

    if (q == 1) {
        v.reasons.push_back("slope 1/" + std::to_string(p) +
                            " is positive: the 0-splitting contains a convex torus of "
                            "meridional dividing slope, giving an overtwisted disk in a "
                            "fillable piece; positive cable slopes are excluded");
        return v;
    }

    v.reasons.push_back("contact (+1)-surgery on the underlying Legendrian bounds, so the "
                        "knot must be Lagrangian slice");
    v.requires_lagrangian_slice = true;

    if (k >= p) {
        v.reasons.push_back("tb = -n + k with k >= n is out of range: k must be less than n");
        return v;
    }

    v.consistent = true;
    v.required_cable = {p, -1};
    v.width_lower_bound = normalize(-1, p + k);
    v.reasons.push_back("the mixed torus at the block center certifies w(K) >= -1/" +
                        std::to_string(p + k));
    return v;
}

} // namespace slopecalc

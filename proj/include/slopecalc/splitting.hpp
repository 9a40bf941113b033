#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopecalc/farey_path.hpp"
#include "slopecalc/slope.hpp"

namespace slopecalc {

enum class SliceSign { plus, minus };

inline char slice_sign_char(SliceSign s) { return s == SliceSign::plus ? '+' : '-'; }

// A mixed torus: T^2 x {0} sandwiched between two basic slices whose signs
// differ. s_minus1, s0, s_plus1 are the dividing slopes of T^2 x {-1, 0, 1}.
struct MixedTorusSpec {
    Slope s_minus1;
    Slope s0;
    Slope s_plus1;
    SliceSign sign_minus; // sign of T^2 x [-1, 0]
    SliceSign sign_plus;  // sign of T^2 x [0, 1]

    void validate() const;
};

// Order of the first homology of a closed piece of an e-splitting.
struct H1Order {
    bool infinite = false;
    long long order = 0; // meaningful when finite

    std::string str() const { return infinite ? "infinite" : std::to_string(order); }
    friend bool operator==(const H1Order& a, const H1Order& b) {
        return a.infinite == b.infinite && (a.infinite || a.order == b.order);
    }
};

// Slope and homology ledger of one e-splitting: the solid-torus side closes
// to a lens space, the knot-exterior side closes to e-surgery on the knot.
struct SplitResult {
    Slope exceptional_slope;
    H1Order piece_one_h1; // lens-space side
    H1Order piece_two_h1; // surgery side
    bool surgery_side_is_homology_s1xs2 = false;
};

// The exceptional slope set E_T: Farey neighbors of s0 in the closed
// clockwise arc [s_plus1, s_minus1], the arc avoiding s0.
std::vector<ArcNeighbor> exceptional_slopes(const MixedTorusSpec& t, long long denominator_bound);

// First homology of p/q surgery on a knot in the 3-sphere: order |p|,
// infinite for 0-surgery.
H1Order h1_surgery_order(const Slope& surgery_slope);

// Order of the first homology of the lens space obtained by gluing two
// solid tori with the given meridians; 1 signals the 3-sphere.
long long lens_h1_order(const Slope& meridian1, const Slope& meridian2);

// Both closed pieces of the e-splitting of the 3-sphere along a torus whose
// solid-torus side has the given meridian.
SplitResult e_splitting_result(const Slope& solid_torus_meridian, const Slope& e);

// Verdict of the obstruction pipeline for a hypothetical Legendrian
// (p,q)-cable with tb = pq + k.
struct CableVerdict {
    bool consistent = false;
    std::optional<std::pair<long long, long long>> required_cable;
    std::optional<Slope> width_lower_bound;
    bool requires_lagrangian_slice = false;
    std::vector<std::string> reasons;
    std::vector<SplitResult> splittings;
};

// Runs the splitting pipeline for a hypothetical Legendrian (p,q)-cable with
// tb = pq + k: builds the mixed torus at q/p inside a length-2k continued
// fraction block, computes the exceptional slopes, applies the homology
// dichotomy forcing e = 0, and rules out positive cable slopes. Consistent
// exactly for cables (n, -1) with k < n.
CableVerdict large_cable_obstruction(long long p, long long q, long long k);

} // namespace slopecalc

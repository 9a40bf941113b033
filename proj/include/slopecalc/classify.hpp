#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slopecalc/farey_path.hpp"
#include "slopecalc/slope.hpp"
#include "slopecalc/splitting.hpp"

namespace slopecalc {

enum class MeridianSide { lower, upper };

// A solid torus with convex boundary: meridian, boundary dividing slope,
// and the boundary orientation convention. Classification requires two
// dividing curves; larger even counts are carried as bookkeeping only.
struct SolidTorusSpec {
    Slope meridian;
    Slope boundary_slope;
    MeridianSide orientation = MeridianSide::lower;
    long long dividing_curves = 2;

    void validate() const;
};

// An isotopy class of tight contact structures on a solid torus or
// thickened torus, encoded as a partially decorated minimal path up to
// shuffling in continued fraction blocks. The canonical form records the
// number of + signs in each block; equality of canonical forms is equality
// of classes.
struct TorusClass {
    FareyPath path;
    // Per-edge decoration: '+', '-' or 'o' for the undecorated edge.
    std::string signs;
    std::vector<long long> plus_counts;          // canonical form, one entry per block
    std::vector<long long> signed_edges_per_block;

    bool universally_tight() const;
};

// All classes on a solid torus, one canonical representative each, in
// lexicographic order of the canonical form.
std::vector<TorusClass> enumerate_classes(const SolidTorusSpec& spec);

// Number of classes by the closed-form product over blocks of
// (signed edges in block + 1); equals enumerate_classes(spec).size().
long long count_classes(const SolidTorusSpec& spec);

// Minimally twisting tight structures on a thickened torus with dividing
// slopes back and front: the same machinery with every edge decorated.
std::vector<TorusClass> enumerate_thickened_classes(const Slope& back, const Slope& front);

// A basic slice: a tight thickened torus with Farey-adjacent boundary
// dividing slopes and a sign.
struct BasicSlice {
    Slope back_slope;
    Slope front_slope;
    SliceSign sign = SliceSign::plus;

    void validate() const;
};

// Relative Euler class vector in the (denominator, numerator) basis:
// sign * (F - B) where B = v(back) and F = +-v(front) is chosen so that
// det(B, F) = +1.
struct EulerClass {
    std::array<long long, 2> vector{0, 0};

    friend EulerClass operator+(const EulerClass& a, const EulerClass& b) {
        return {{a.vector[0] + b.vector[0], a.vector[1] + b.vector[1]}};
    }
    friend bool operator==(const EulerClass& a, const EulerClass& b) {
        return a.vector == b.vector;
    }
};

EulerClass relative_euler_class(const BasicSlice& b);

// Pairing of a relative Euler class with the annulus over the given core
// slope: det(v(core), e).
long long euler_pairing(const EulerClass& e, const Slope& annulus_core);

// Result of stacking two basic slices: a mixed torus when the signs differ.
struct SliceStack {
    BasicSlice back;
    BasicSlice front;
    bool mixed = false;
    std::optional<MixedTorusSpec> mixed_spec;
};

SliceStack stack_slices(const Slope& s_back, const Slope& s_mid, const Slope& s_front,
                        SliceSign sign1, SliceSign sign2);

// Upper bound on the contact twisting of Legendrian knots in the relevant
// knot class of a thickened torus with the given Giroux torsion.
long long max_twisting_from_torsion(long long torsion);

} // namespace slopecalc

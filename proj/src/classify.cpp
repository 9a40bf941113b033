#include "slopecalc/classify.hpp"

#include <algorithm>

namespace slopecalc {

void SolidTorusSpec::validate() const {
    if (meridian == boundary_slope)
        throw rule_error("solid torus: meridian equals the boundary slope");
    if (dividing_curves < 2 || dividing_curves % 2 != 0)
        throw rule_error("solid torus: dividing curve count must be a positive even number");
}

bool TorusClass::universally_tight() const {
    bool all_zero = true;
    bool all_full = true;
    for (size_t b = 0; b < plus_counts.size(); ++b) {
        if (plus_counts[b] != 0) all_zero = false;
        if (plus_counts[b] != signed_edges_per_block[b]) all_full = false;
    }
    return all_zero || all_full;
}

namespace {

struct DecoratedPath {
    FareyPath path;
    int unsigned_edge; // -1 when every edge is decorated
    std::vector<long long> signed_per_block;
};

DecoratedPath build_decorated(const Slope& from, const Slope& to, int unsigned_edge_kind) {
    DecoratedPath d;
    d.path = minimal_cw_path(from, to);
    int edges = d.path.edge_count();
    d.unsigned_edge = unsigned_edge_kind == 0 ? 0 : (unsigned_edge_kind == 1 ? edges - 1 : -1);
    d.signed_per_block.reserve(d.path.blocks.size());
    for (const auto& block : d.path.blocks) {
        long long n = static_cast<long long>(block.size());
        for (int e : block)
            if (e == d.unsigned_edge) --n;
        d.signed_per_block.push_back(n);
    }
    return d;
}

std::vector<TorusClass> enumerate_decorated(const DecoratedPath& d) {
    size_t nblocks = d.path.blocks.size();
    std::vector<long long> counts(nblocks, 0);
    std::vector<TorusClass> out;
    while (true) {
        TorusClass c;
        c.path = d.path;
        c.plus_counts = counts;
        c.signed_edges_per_block = d.signed_per_block;
        c.signs.assign(static_cast<size_t>(d.path.edge_count()), '-');
        if (d.unsigned_edge >= 0) c.signs[static_cast<size_t>(d.unsigned_edge)] = 'o';
        for (size_t b = 0; b < nblocks; ++b) {
            long long remaining = counts[b];
            for (int e : d.path.blocks[b]) {
                if (e == d.unsigned_edge) continue;
                if (remaining > 0) {
                    c.signs[static_cast<size_t>(e)] = '+';
                    --remaining;
                }
            }
        }
        out.push_back(std::move(c));

        // next canonical form, lexicographic
        size_t b = nblocks;
        while (b > 0) {
            --b;
            if (counts[b] < d.signed_per_block[b]) {
                ++counts[b];
                std::fill(counts.begin() + static_cast<long>(b) + 1, counts.end(), 0);
                break;
            }
            if (b == 0) return out;
        }
        if (nblocks == 0) return out;
    }
}

long long checked_class_product(const std::vector<long long>& signed_per_block) {
    long long product = 1;
    for (long long n : signed_per_block) {
        if (product > (1LL << 62) / (n + 1))
            throw rule_error("class count exceeds the supported range");
        product *= n + 1;
    }
    return product;
}

constexpr long long kMaxEnumeratedClasses = 1 << 20;

} // namespace

std::vector<TorusClass> enumerate_classes(const SolidTorusSpec& spec) {
    spec.validate();
    if (spec.dividing_curves != 2)
        throw rule_error("classification is implemented for two dividing curves");
    DecoratedPath d = spec.orientation == MeridianSide::lower
                          ? build_decorated(spec.meridian, spec.boundary_slope, 0)
                          : build_decorated(spec.boundary_slope, spec.meridian, 1);
    if (checked_class_product(d.signed_per_block) > kMaxEnumeratedClasses)
        throw rule_error("too many classes to enumerate; use the count instead");
    return enumerate_decorated(d);
}

long long count_classes(const SolidTorusSpec& spec) {
    spec.validate();
    if (spec.dividing_curves != 2)
        throw rule_error("classification is implemented for two dividing curves");
    DecoratedPath d = spec.orientation == MeridianSide::lower
                          ? build_decorated(spec.meridian, spec.boundary_slope, 0)
                          : build_decorated(spec.boundary_slope, spec.meridian, 1);
    return checked_class_product(d.signed_per_block);
}

std::vector<TorusClass> enumerate_thickened_classes(const Slope& back, const Slope& front) {
    if (back == front) throw rule_error("thickened torus: boundary slopes are equal");
    DecoratedPath d = build_decorated(back, front, -1);
    if (checked_class_product(d.signed_per_block) > kMaxEnumeratedClasses)
        throw rule_error("too many classes to enumerate; use the count instead");
    return enumerate_decorated(d);
}

void BasicSlice::validate() const {
    if (!farey_adjacent(back_slope, front_slope))
        throw rule_error("basic slice: boundary slopes must be Farey-adjacent");
}

EulerClass relative_euler_class(const BasicSlice& b) {
    b.validate();
    long long d = slope_det(b.back_slope, b.front_slope);
    long long fq = d * b.front_slope.den();
    long long fp = d * b.front_slope.num();
    long long sgn = b.sign == SliceSign::plus ? 1 : -1;
    return {{sgn * (fq - b.back_slope.den()), sgn * (fp - b.back_slope.num())}};
}

long long euler_pairing(const EulerClass& e, const Slope& annulus_core) {
    return annulus_core.den() * e.vector[1] - annulus_core.num() * e.vector[0];
}

SliceStack stack_slices(const Slope& s_back, const Slope& s_mid, const Slope& s_front,
                        SliceSign sign1, SliceSign sign2) {
    if (!farey_adjacent(s_back, s_mid) || !farey_adjacent(s_mid, s_front))
        throw rule_error("stack_slices: consecutive slopes must be Farey-adjacent");
    if (!cw_between(s_back, s_mid, s_front))
        throw rule_error("stack_slices: middle slope must lie strictly inside the clockwise "
                         "arc from back to front");
    SliceStack s;
    s.back = {s_back, s_mid, sign1};
    s.front = {s_mid, s_front, sign2};
    s.mixed = sign1 != sign2;
    if (s.mixed) s.mixed_spec = MixedTorusSpec{s_back, s_mid, s_front, sign1, sign2};
    return s;
}

long long max_twisting_from_torsion(long long torsion) {
    if (torsion < 0) throw rule_error("max_twisting_from_torsion: torsion must be nonnegative");
    return -(torsion + 1);
}

} // namespace slopecalc

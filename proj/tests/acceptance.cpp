// Acceptance suite: desk-scale exact checks and property sweeps, one
// pass/fail line per criterion. Usage: acceptance <cli-binary> <seed-db>.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "slopecalc/classify.hpp"
#include "slopecalc/farey_path.hpp"
#include "slopecalc/json_io.hpp"
#include "slopecalc/knots.hpp"
#include "slopecalc/splitting.hpp"

using namespace slopecalc;

namespace {

std::string g_cli_path;
std::string g_seed_path;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

bool expect(bool ok, const std::string& what) {
    if (!ok) note("mismatch: " + what);
    return ok;
}

std::vector<Slope> slopes_up_to(long long bound) {
    std::vector<Slope> out{Slope::infinity()};
    for (long long q = 1; q <= bound; ++q)
        for (long long p = -bound; p <= bound; ++p)
            if (std::gcd(p < 0 ? -p : p, q) == 1) out.push_back(Slope(p, q));
    return out;
}

Slope negate(const Slope& s) {
    return s.is_infinite() ? s : Slope(-s.num(), s.den());
}

// --------------------------------------------------------------------------
// 1. three-way agreement of the classification counts
bool criterion_counts() {
    bool ok = true;
    auto t0 = std::chrono::steady_clock::now();
    auto check_slope = [&](long long p, long long q) {
        SolidTorusSpec spec{Slope::infinity(), Slope(-p, q), MeridianSide::lower, 2};
        long long closed = count_classes(spec);
        long long brute = static_cast<long long>(enumerate_classes(spec).size());
        // brute force over raw sign vectors, quotiented by per-block counts
        FareyPath path = minimal_cw_path(Slope::infinity(), Slope(-p, q));
        std::set<std::vector<long long>> canonical;
        int edges = path.edge_count();
        for (long long bits = 0; bits < (1LL << edges); ++bits) {
            if (bits & 1) continue; // the first edge carries no sign
            std::vector<long long> counts;
            for (const auto& block : path.blocks) {
                long long plus = 0;
                for (int e : block)
                    if (e != 0 && (bits & (1LL << e))) ++plus;
                counts.push_back(plus);
            }
            canonical.insert(counts);
        }
        long long raw = static_cast<long long>(canonical.size());
        long long classical = oracles::classical_class_count(-p, q);
        ok &= expect(closed == brute && brute == raw && raw == classical,
                     "slope -" + std::to_string(p) + "/" + std::to_string(q) + ": closed " +
                         std::to_string(closed) + ", enum " + std::to_string(brute) + ", raw " +
                         std::to_string(raw) + ", classical " + std::to_string(classical));
    };
    for (long long p = 2; p <= 12; ++p)
        for (long long q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) check_slope(p, q);
    for (long long n = 1; n <= 12; ++n) check_slope(n, 1);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok &= expect(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
    return ok;
}

// --------------------------------------------------------------------------
// 2. geodesic property of the greedy clockwise path.
//
// The literal all-pairs statement against the unrestricted Farey graph is
// false: clockwise paths may not leave the clockwise arc, and the graph
// geodesic sometimes does (the path from infinity to -5/4 has four edges
// while the graph distance through -1 is two; -1 lies outside the arc).
// The criterion is therefore checked against BFS distances in the
// subgraph induced on the closed clockwise arc, which is the property the
// greedy construction actually claims; the counterexample itself is
// asserted below so the deviation stays visible.
bool criterion_geodesic() {
    bool ok = true;
    auto t0 = std::chrono::steady_clock::now();

    auto all20 = slopes_up_to(20);
    // structural checks on every ordered pair
    for (const auto& a : all20)
        for (const auto& b : all20) {
            if (a == b) continue;
            FareyPath p = minimal_cw_path(a, b);
            bool good = p.vertices.front() == a && p.vertices.back() == b;
            for (size_t i = 0; i + 1 < p.vertices.size() && good; ++i)
                good = farey_adjacent(p.vertices[i], p.vertices[i + 1]);
            for (size_t i = 1; i + 1 < p.vertices.size() && good; ++i)
                good = cw_between(a, p.vertices[i], b);
            // vertices appear in clockwise order
            for (size_t i = 1; i + 2 < p.vertices.size() && good; ++i)
                good = cw_between(p.vertices[i], p.vertices[i + 1], b) || p.vertices[i + 1] == b;
            if (!good) {
                ok = expect(false, "structural failure for " + a.str() + " -> " + b.str());
                break;
            }
        }

    // arc-restricted BFS oracle: exhaustive on |p|, q <= 10, strided sample
    // on |p|, q <= 20; the negation automorphism reverses the circle, so
    // one BFS validates a pair and its mirror.
    oracles::FareyBfs bfs(200);
    auto check_pair = [&](const Slope& a, const Slope& b) {
        int greedy = minimal_cw_path(a, b).edge_count();
        int mirror = minimal_cw_path(negate(b), negate(a)).edge_count();
        int oracle = bfs.arc_distance(a, b);
        ok &= expect(greedy == oracle && mirror == oracle,
                     "arc distance " + a.str() + " -> " + b.str() + ": greedy " +
                         std::to_string(greedy) + ", mirror " + std::to_string(mirror) +
                         ", oracle " + std::to_string(oracle));
    };
    auto all10 = slopes_up_to(10);
    for (size_t i = 0; i < all10.size(); ++i)
        for (size_t j = 0; j < all10.size(); ++j)
            if (i != j) check_pair(all10[i], all10[j]);
    for (size_t i = 0; i < all20.size(); i += 3)
        for (size_t j = 1; j < all20.size(); j += 3)
            if (all20[i] != all20[j]) check_pair(all20[i], all20[j]);

    // the documented counterexample to the unrestricted reading
    oracles::FareyBfs small(100);
    ok &= expect(minimal_cw_path(Slope::infinity(), Slope(-5, 4)).edge_count() == 4 &&
                     small.arc_distance(Slope::infinity(), Slope(-5, 4)) == 4 &&
                     small.graph_distance(Slope::infinity(), Slope(-5, 4)) == 2,
                 "counterexample infinity -> -5/4 (arc distance 4, graph distance 2)");

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok &= expect(secs < 60.0, "runtime " + std::to_string(secs) + "s exceeds 60s");
    return ok;
}

// --------------------------------------------------------------------------
// 3. basic slices: two classes, both universally tight
bool criterion_basic_slices() {
    bool ok = true;
    oracles::Rng rng(2024);
    int checked = 0;
    while (checked < 50) {
        Unimodular m = rng.unimodular();
        Slope back = apply_unimodular(m, Slope(0, 1));
        Slope front = apply_unimodular(m, Slope::infinity());
        if (back == front) continue;
        ++checked;
        auto classes = enumerate_thickened_classes(back, front);
        ok &= expect(classes.size() == 2, "class count for slice " + back.str() + " -> " +
                                              front.str());
        for (const auto& c : classes)
            ok &= expect(c.universally_tight(), "universal tightness of a basic slice");
    }
    return ok;
}

// --------------------------------------------------------------------------
// 4. relative Euler class pairing forces opposite signs
bool criterion_euler_forcing() {
    bool ok = true;
    for (long long n = 1; n <= 10; ++n) {
        for (SliceSign s1 : {SliceSign::plus, SliceSign::minus})
            for (SliceSign s2 : {SliceSign::plus, SliceSign::minus}) {
                BasicSlice lower_slice{Slope(-1, n), Slope(0, 1), s1};
                BasicSlice upper_slice{Slope(0, 1), Slope(1, 1), s2};
                long long pairing = euler_pairing(
                    relative_euler_class(lower_slice) + relative_euler_class(upper_slice),
                    Slope(0, 1));
                if (s1 != s2)
                    ok &= expect(pairing == 0, "mixed signs must pair to 0 at n = " +
                                                   std::to_string(n));
                else
                    ok &= expect(pairing == (s1 == SliceSign::plus ? 2 : -2),
                                 "same signs must pair to +-2 at n = " + std::to_string(n));
            }
    }
    return ok;
}

// --------------------------------------------------------------------------
// 5. surgery slope interval lemma
bool criterion_interval_lemma() {
    bool ok = true;
    auto t0 = std::chrono::steady_clock::now();
    for (long long w = 2; w <= 30; ++w)
        for (long long n = -10; n <= 10; ++n)
            for (long long r = 1; r < w; ++r) {
                long long m = n * w + r;
                if (std::gcd(w, m < 0 ? -m : m) != 1) continue;
                Slope s = divide_surgery_slope(w, m);
                bool inside = slope_less(Slope::integer(n), s) &&
                              slope_less(s, Slope::integer(n + 1));
                bool equals = s == normalize(n * w * w + r * w - 1, w * w);
                ok &= expect(inside && equals, "interval lemma at w=" + std::to_string(w) +
                                                   " m=" + std::to_string(m));
            }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok &= expect(secs < 1.0, "runtime " + std::to_string(secs) + "s exceeds 1s");
    return ok;
}

// --------------------------------------------------------------------------
// 6. the large-cable pipeline verdict table
bool criterion_llc_pipeline() {
    bool ok = true;
    for (long long p = 2; p <= 10; ++p)
        for (long long q = -10; q <= 10; ++q) {
            if (q == 0 || std::gcd(p, q < 0 ? -q : q) != 1) continue;
            for (long long k = 1; k <= 10; ++k) {
                CableVerdict v = large_cable_obstruction(p, q, k);
                bool should = (q == -1 && k < p);
                ok &= expect(v.consistent == should,
                             "verdict at (" + std::to_string(p) + "," + std::to_string(q) +
                                 "," + std::to_string(k) + ")");
                if (!should) continue;
                ok &= expect(v.width_lower_bound && *v.width_lower_bound == Slope(-1, p + k),
                             "width bound at p=" + std::to_string(p) + " k=" + std::to_string(k));
                ok &= expect(v.requires_lagrangian_slice, "Lagrangian slice requirement");
                ok &= expect(v.required_cable && v.required_cable->first == p &&
                                 v.required_cable->second == -1,
                             "required cable form");
                int infinite = 0;
                bool zero = false;
                for (const auto& s : v.splittings)
                    if (s.piece_two_h1.infinite) {
                        ++infinite;
                        zero = s.exceptional_slope == Slope(0, 1);
                    }
                ok &= expect(infinite == 1 && zero,
                             "unique infinite-homology exceptional slope 0");
            }
        }
    return ok;
}

// --------------------------------------------------------------------------
// 7. cut-slope arithmetic and dividing-curve counts
bool criterion_prop52() {
    bool ok = true;
    for (long long g = 1; g <= 8; ++g) {
        long long fiber = 2 * g - 1;
        for (long long k = 1; k <= 40; ++k) {
            long long l = std::gcd(k, fiber);
            long long a = k / l;
            long long b = fiber / l;
            Slope prev = prop52_cut_slope(1, a, b, g);
            for (long long lp = 2; lp <= l; ++lp) {
                Slope cur = prop52_cut_slope(lp, a, b, g);
                ok &= expect(slope_less(cur, prev), "monotonicity at g=" + std::to_string(g) +
                                                        " k=" + std::to_string(k));
                prev = cur;
            }
            ok &= expect(prop52_cut_slope(l, a, b, g) == Slope(-k, 1),
                         "terminal value -k at g=" + std::to_string(g) +
                             " k=" + std::to_string(k));
        }
        KnotRecord binding;
        binding.name = "binding";
        binding.genus = g;
        binding.is_fibered = true;
        binding.monodromy = Monodromy::trivial;
        auto fam = nonthickenable_slopes(binding, 40);
        for (long long n = 1; n <= 40; ++n) {
            long long curves = fam[static_cast<size_t>(n - 1)].dividing_curves;
            ok &= expect(curves == 2 * std::gcd(fiber, n) && curves % 2 == 0,
                         "dividing curves at g=" + std::to_string(g) + " n=" + std::to_string(n));
            if (std::gcd(fiber, n) == 1)
                ok &= expect(curves == 2, "coprime case must give two curves");
        }
    }
    return ok;
}

// --------------------------------------------------------------------------
// 8. width oracle golden outputs
bool criterion_width_goldens() {
    bool ok = true;
    KnotDb db = load_knot_db(g_seed_path);
    auto golden = [&](const std::string& name, const std::string& expected) {
        std::string got = width_certificate_to_json(width_oracle(find_knot(db, name))).dump();
        ok &= expect(got == expected, name + ": got " + got);
    };
    golden("rh_trefoil", R"({"kind":"exact","value":"1","rule":"Theorem lspace"})");
    golden("figure_eight", R"({"kind":"exact","value":"-3","rule":"uniform thickness"})");
    golden("unknot",
           R"({"kind":"conjectural","value":"0","rule":"width conjecture",)"
           R"("assumptions":["conjectural: w(unknot) = tb_max + 1"]})");
    golden("synthetic_lagrangian_slice",
           R"({"kind":"interval","lo":"-1","hi":"0","rule":"width interval"})");
    return ok;
}

// --------------------------------------------------------------------------
// 9. boundary behavior of the virtually-overtwisted rule
bool criterion_vot_boundary() {
    bool ok = true;
    KnotDb db = load_knot_db(g_seed_path);
    KnotRecord slice = find_knot(db, "synthetic_lagrangian_slice");
    KnotRecord tref = find_knot(db, "rh_trefoil");

    ok &= expect(!vot_possible(slice, Slope(-1, 2)).possible, "slope -1/2 must be rejected");
    ok &= expect(!vot_possible(slice, Slope(0, 1)).possible, "slope 0 must be rejected");
    for (long long den = 3; den <= 40; ++den)
        for (long long num = -den + 1; num < 0; ++num) {
            if (std::gcd(-num, den) != 1) continue;
            Slope s(num, den);
            bool inside = slope_less(normalize(-1, 2), s) && slope_less(s, Slope(0, 1));
            ok &= expect(vot_possible(slice, s).possible == inside,
                         "slice rule at slope " + s.str());
            ok &= expect(!vot_possible(tref, s).possible,
                         "non-slice record must always be rejected");
        }
    for (long long n = -10; n <= 10; ++n)
        ok &= expect(!vot_possible(slice, Slope(n, 1)).possible,
                     "integer slope " + std::to_string(n) + " must be rejected");
    return ok;
}

// --------------------------------------------------------------------------
// 10. Bennequin feasible set at genus 1
bool criterion_bennequin() {
    bool ok = true;
    for (long long tb = -5; tb <= 3; ++tb)
        for (long long rot = -4; rot <= 4; ++rot) {
            bool expected = (tb + (rot < 0 ? -rot : rot) <= 1) && ((tb + rot) % 2 != 0);
            ok &= expect(bennequin_feasible(tb, rot, 1) == expected,
                         "feasibility at tb=" + std::to_string(tb) +
                             " rot=" + std::to_string(rot));
        }
    ok &= expect(bennequin_feasible(1, 0, 1), "(1, 0) must be feasible");
    ok &= expect(bennequin_feasible(0, 1, 1) && bennequin_feasible(0, -1, 1),
                 "(0, +-1) must be feasible");
    ok &= expect(!bennequin_feasible(0, 0, 1), "(0, 0) must be infeasible");
    return ok;
}

// --------------------------------------------------------------------------
// 11. CLI snapshots
std::string run_cli(const std::string& args, int& exit_code) {
    std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

bool criterion_cli_snapshots() {
    bool ok = true;
    auto snapshot = [&](const std::string& args, const std::string& expected) {
        int code = 0;
        std::string got = run_cli(args, code);
        ok &= expect(code == 0 && got == expected, "cli '" + args + "': exit " +
                                                       std::to_string(code) + ", got " + got);
    };
    snapshot("farey path --from inf --to -8/5 --json",
             "{\"vertices\":[\"inf\",\"-2\",\"-5/3\",\"-8/5\"],\"blocks\":[[0],[1,2]]}\n");
    snapshot("classify count --meridian inf --slope -8/5", "3\n");
    snapshot("knot width --db " + g_seed_path + " --name rh_trefoil --json",
             "{\"kind\":\"exact\",\"value\":\"1\",\"rule\":\"Theorem lspace\"}\n");
    // byte-identical on repeated invocation
    int c1 = 0, c2 = 0;
    std::string a = run_cli("split large-cable --p 3 --q -1 --k 2 --json", c1);
    std::string b = run_cli("split large-cable --p 3 --q -1 --k 2 --json", c2);
    ok &= expect(c1 == 0 && c2 == 0 && a == b && !a.empty(), "deterministic verdict output");
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <cli-binary> <seed-db>\n");
        return 2;
    }
    g_cli_path = argv[1];
    g_seed_path = argv[2];

    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1. classification counts: brute force == closed form == classical", criterion_counts},
        {"2. greedy clockwise paths are geodesics within the clockwise arc", criterion_geodesic},
        {"3. basic slices: exactly two classes, both universally tight", criterion_basic_slices},
        {"4. relative Euler class pairing vanishes iff the signs differ", criterion_euler_forcing},
        {"5. surgery slope interval lemma, exact rational arithmetic", criterion_interval_lemma},
        {"6. large-cable pipeline: consistent verdicts are (n,-1) with k < n",
         criterion_llc_pipeline},
        {"7. cut-slope monotonicity and dividing-curve counts", criterion_prop52},
        {"8. width oracle golden outputs on the seed database", criterion_width_goldens},
        {"9. virtually-overtwisted rule boundary behavior", criterion_vot_boundary},
        {"10. Bennequin feasible set at genus one", criterion_bennequin},
        {"11. CLI snapshots are byte-identical", criterion_cli_snapshots},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        g_notes.clear();
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.name, secs);
        for (size_t i = 0; i < g_notes.size() && i < 5; ++i)
            std::printf("       %s\n", g_notes[i].c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

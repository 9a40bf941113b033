#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "slopecalc/slope.hpp"

namespace slopecalc {

enum class Monodromy { trivial, reducible, irreducible, unknown };

std::string monodromy_str(Monodromy m);
Monodromy parse_monodromy(const std::string& text);

// Certificate that a knot admits a Legendrian large (n,-1)-cable with
// tb = -n + k.
struct LargeCableWitness {
    long long n = 0;
    long long k = 0;
};

// Invariant flags for a knot type. These are input data with provenance,
// not computed quantities; genus 0 is reserved for the unknot.
struct KnotRecord {
    std::string name;
    long long genus = 0;
    std::optional<long long> tb_max;
    std::optional<bool> is_lspace_knot;
    std::optional<bool> is_lagrangian_slice;
    std::optional<bool> is_fibered;
    std::optional<bool> is_uniformly_thick;
    std::optional<bool> supports_ambient_structure;
    std::optional<bool> ambient_structure_tight;
    std::optional<bool> amphichiral_or_s3;
    Monodromy monodromy = Monodromy::unknown;
    std::optional<LargeCableWitness> large_cable_witness;
    std::string provenance;
    nlohmann::ordered_json extras = nlohmann::ordered_json::object();

    void validate() const;
};

struct KnotDb {
    long long schema_version = 1;
    std::vector<KnotRecord> knots;
};

KnotDb load_knot_db(const std::string& path);
KnotDb knot_db_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json knot_db_to_json(const KnotDb& db);

// Looks a record up by name. Names of the form "torus_p_q" are synthesized
// from the positive torus knot template when absent from the file.
KnotRecord find_knot(const KnotDb& db, const std::string& name);

// Record for the positive (p,q) torus knot: genus (p-1)(q-1)/2 and
// tb_max = pq - p - q = 2g - 1.
KnotRecord torus_knot_record(long long p, long long q);

// The oracle's conclusion about a width, with the rule that justifies it.
struct WidthCertificate {
    enum class Kind { exact, interval, lower_bound, conjectural };
    Kind kind = Kind::interval;
    std::optional<Slope> value;
    std::optional<Slope> lo;
    std::optional<Slope> hi;
    std::string rule;
    std::vector<std::string> assumptions;
};

std::string width_kind_str(WidthCertificate::Kind k);

// Width of a knot type from its record, by rule priority: the L-space rule,
// the uniform-thickness rule, an attached large-cable witness, then the
// unconditional interval [tb_max, tb_max + 1]. The unknot answer is the
// conjectured tb_max + 1 and is flagged conjectural.
WidthCertificate width_oracle(const KnotRecord& k);

// Width of the (p,q)-cable. Exact (= pq) when q/p is provably below the
// width of the companion and the companion is not Lagrangian slice, or is
// Lagrangian slice with q/p <= min(w, -1/2); exact (= 2g(K_{p,q}) - 1) for
// L-space companions with q/p >= 2g - 1.
WidthCertificate cable_width(const KnotRecord& k, long long p, long long q);

// Thurston-Bennequin invariant of a Legendrian divide on a torus of
// dividing slope m/w: w longitudes, m meridians, tb = w * m.
long long divide_tb(long long w_longitudes, long long m_meridians);

// Smooth surgery coefficient realized by Legendrian surgery on such a
// divide: (w m - 1) / w^2. Lies in the same integer gap (n, n+1) as m/w.
Slope divide_surgery_slope(long long w_longitudes, long long m_meridians);

// r-surgery on a genus-g knot yields an L-space when r >= 2g - 1.
bool lspace_surgery_check(const Slope& r, long long genus);

enum class Definiteness { positive, negative, degenerate };

// Sign of the intersection form of the one-handle trace of tb-framed
// surgery: the sign of tb - 1.
Definiteness handle_definiteness(long long tb);

struct VotVerdict {
    bool possible = false;
    std::string reason;
};

// Whether a solid torus in this knot type with dividing slope s can carry
// a virtually overtwisted structure: only for Lagrangian slice knot types
// with s strictly inside (-1/2, 0).
VotVerdict vot_possible(const KnotRecord& k, const Slope& s);

// Bennequin feasibility for the classical invariants of a Legendrian knot:
// tb + |rot| <= 2 genus - 1 together with the parity rule tb + rot odd.
bool bennequin_feasible(long long tb, long long rot, long long genus);

struct NonthickenableEntry {
    Slope slope;
    long long dividing_curves = 2;
};

// Slopes of the non-thickenable tori in the knot type, with dividing curve
// counts: 1/n with 2 curves for genus-1 fibered knots; (2g-1)/n with
// 2 gcd(2g-1, n) curves for trivial-monodromy bindings.
std::vector<NonthickenableEntry> nonthickenable_slopes(const KnotRecord& k, long long n_max);

// Dividing slope -l'a / (2g - l'b) of the cut-open solid torus in the
// trivial-monodromy setting, where a/b = k/(2g-1) in lowest terms and
// k = l a. Strictly decreasing in l', equal to -k at l' = l.
Slope prop52_cut_slope(long long l_prime, long long a, long long b, long long genus);

struct TbBound {
    enum class Kind { exact, at_least, at_most };
    Kind kind = Kind::at_least;
    long long value = 0;
    std::string rule;
};

// Sharpest tb_max bound for a fibered knot from its supporting data:
// supporting bindings have tb_max >= 0; genus-1 bindings of tight
// structures have tb_max = 1; in a tight non-supported structure
// tb_max <= 0, and <= -1 with the amphichiral-or-S3 flag.
TbBound fibered_tb_bound(const KnotRecord& k);

} // namespace slopecalc

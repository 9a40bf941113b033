#include "slopecalc/knots.hpp"

#include <fstream>
#include <numeric>

namespace slopecalc {

using nlohmann::ordered_json;

std::string monodromy_str(Monodromy m) {
    switch (m) {
        case Monodromy::trivial: return "trivial";
        case Monodromy::reducible: return "reducible";
        case Monodromy::irreducible: return "irreducible";
        default: return "unknown";
    }
}

Monodromy parse_monodromy(const std::string& text) {
    if (text == "trivial") return Monodromy::trivial;
    if (text == "reducible") return Monodromy::reducible;
    if (text == "irreducible") return Monodromy::irreducible;
    if (text == "unknown") return Monodromy::unknown;
    throw parse_error("bad monodromy value: '" + text + "'");
}

void KnotRecord::validate() const {
    if (name.empty()) throw parse_error("knot record without a name");
    if (genus < 0) throw parse_error("knot record '" + name + "': negative genus");
    if (genus == 0 && name != "unknot")
        throw parse_error("knot record '" + name + "': genus 0 is reserved for the unknot");
    if (is_lagrangian_slice.value_or(false) && tb_max && *tb_max != -1)
        throw parse_error("knot record '" + name +
                          "': Lagrangian slice forces tb_max = -1");
    if (large_cable_witness) {
        const auto& w = *large_cable_witness;
        if (w.n < 2 || w.k < 1 || w.k >= w.n)
            throw parse_error("knot record '" + name +
                              "': large cable witness needs n >= 2 and 1 <= k < n");
    }
}

namespace {

std::optional<bool> opt_bool(const ordered_json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_boolean()) throw parse_error(std::string("field '") + key + "' must be boolean");
    return it->get<bool>();
}

const char* const kKnownKeys[] = {"name",
                                  "genus",
                                  "tb_max",
                                  "is_lspace_knot",
                                  "is_lagrangian_slice",
                                  "is_fibered",
                                  "is_uniformly_thick",
                                  "supports_ambient_structure",
                                  "ambient_structure_tight",
                                  "amphichiral_or_s3",
                                  "monodromy",
                                  "large_cable_witness",
                                  "provenance"};

bool is_known_key(const std::string& key) {
    for (const char* k : kKnownKeys)
        if (key == k) return true;
    return false;
}

KnotRecord record_from_json(const ordered_json& j) {
    if (!j.is_object()) throw parse_error("knot record must be a JSON object");
    KnotRecord r;
    r.name = j.value("name", std::string());
    r.genus = j.value("genus", -1LL);
    if (j.contains("tb_max") && !j["tb_max"].is_null()) r.tb_max = j["tb_max"].get<long long>();
    r.is_lspace_knot = opt_bool(j, "is_lspace_knot");
    r.is_lagrangian_slice = opt_bool(j, "is_lagrangian_slice");
    r.is_fibered = opt_bool(j, "is_fibered");
    r.is_uniformly_thick = opt_bool(j, "is_uniformly_thick");
    r.supports_ambient_structure = opt_bool(j, "supports_ambient_structure");
    r.ambient_structure_tight = opt_bool(j, "ambient_structure_tight");
    r.amphichiral_or_s3 = opt_bool(j, "amphichiral_or_s3");
    r.monodromy = parse_monodromy(j.value("monodromy", std::string("unknown")));
    if (j.contains("large_cable_witness") && !j["large_cable_witness"].is_null()) {
        const auto& w = j["large_cable_witness"];
        r.large_cable_witness = LargeCableWitness{w.value("n", 0LL), w.value("k", 0LL)};
    }
    r.provenance = j.value("provenance", std::string());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!is_known_key(it.key())) r.extras[it.key()] = it.value();
    r.validate();
    return r;
}

ordered_json record_to_json(const KnotRecord& r) {
    ordered_json j;
    j["name"] = r.name;
    j["genus"] = r.genus;
    if (r.tb_max) j["tb_max"] = *r.tb_max;
    auto put = [&](const char* key, const std::optional<bool>& v) {
        if (v) j[key] = *v;
    };
    put("is_lspace_knot", r.is_lspace_knot);
    put("is_lagrangian_slice", r.is_lagrangian_slice);
    put("is_fibered", r.is_fibered);
    put("is_uniformly_thick", r.is_uniformly_thick);
    put("supports_ambient_structure", r.supports_ambient_structure);
    put("ambient_structure_tight", r.ambient_structure_tight);
    put("amphichiral_or_s3", r.amphichiral_or_s3);
    if (r.monodromy != Monodromy::unknown) j["monodromy"] = monodromy_str(r.monodromy);
    if (r.large_cable_witness)
        j["large_cable_witness"] = {{"n", r.large_cable_witness->n},
                                    {"k", r.large_cable_witness->k}};
    if (!r.provenance.empty()) j["provenance"] = r.provenance;
    for (auto it = r.extras.begin(); it != r.extras.end(); ++it) j[it.key()] = it.value();
    return j;
}

} // namespace

KnotDb knot_db_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("schema_version"))
        throw parse_error("knot database: required field 'schema_version' is missing");
    KnotDb db;
    db.schema_version = j["schema_version"].get<long long>();
    if (db.schema_version != 1)
        throw parse_error("knot database: unsupported schema version " +
                          std::to_string(db.schema_version));
    if (!j.contains("knots") || !j["knots"].is_array())
        throw parse_error("knot database: required array 'knots' is missing");
    for (const auto& rec : j["knots"]) db.knots.push_back(record_from_json(rec));
    return db;
}

KnotDb load_knot_db(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open knot database '" + path + "'");
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("bad JSON in knot database '" + path + "': " + e.what());
    }
    return knot_db_from_json(j);
}

nlohmann::ordered_json knot_db_to_json(const KnotDb& db) {
    ordered_json j;
    j["schema_version"] = db.schema_version;
    j["knots"] = ordered_json::array();
    for (const auto& r : db.knots) j["knots"].push_back(record_to_json(r));
    return j;
}

KnotRecord torus_knot_record(long long p, long long q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw rule_error("torus_knot_record: need coprime p, q >= 2");
    KnotRecord r;
    r.name = "torus_" + std::to_string(p) + "_" + std::to_string(q);
    r.genus = (p - 1) * (q - 1) / 2;
    r.tb_max = p * q - p - q;
    r.is_lspace_knot = true;
    r.is_fibered = true;
    r.is_uniformly_thick = false;
    r.supports_ambient_structure = true;
    r.ambient_structure_tight = true;
    r.amphichiral_or_s3 = true;
    r.monodromy = Monodromy::irreducible;
    r.provenance = "generated from the positive torus knot template";
    return r;
}

KnotRecord find_knot(const KnotDb& db, const std::string& name) {
    for (const auto& r : db.knots)
        if (r.name == name) return r;
    // torus_p_q names synthesize from the template
    if (name.rfind("torus_", 0) == 0) {
        auto rest = name.substr(6);
        auto sep = rest.find('_');
        if (sep != std::string::npos) {
            try {
                long long p = std::stoll(rest.substr(0, sep));
                long long q = std::stoll(rest.substr(sep + 1));
                return torus_knot_record(p, q);
            } catch (const std::invalid_argument&) {
            } catch (const std::out_of_range&) {
            }
        }
    }
    throw rule_error("no knot named '" + name + "' in the database");
}

std::string width_kind_str(WidthCertificate::Kind k) {
    switch (k) {
        case WidthCertificate::Kind::exact: return "exact";
        case WidthCertificate::Kind::interval: return "interval";
        case WidthCertificate::Kind::lower_bound: return "lower_bound";
        default: return "conjectural";
    }
}

WidthCertificate width_oracle(const KnotRecord& k) {
    k.validate();
    WidthCertificate c;
    if (k.genus == 0) {
        if (!k.tb_max) throw rule_error("width oracle: unknot record without tb_max");
        c.kind = WidthCertificate::Kind::conjectural;
        c.value = Slope::integer(*k.tb_max + 1);
        c.rule = "width conjecture";
        c.assumptions.push_back("conjectural: w(unknot) = tb_max + 1");
        return c;
    }
    if (k.is_lspace_knot.value_or(false) && k.tb_max && *k.tb_max == 2 * k.genus - 1) {
        c.kind = WidthCertificate::Kind::exact;
        c.value = Slope::integer(*k.tb_max);
        c.rule = "Theorem lspace";
        return c;
    }
    if (k.is_uniformly_thick.value_or(false) && k.tb_max) {
        c.kind = WidthCertificate::Kind::exact;
        c.value = Slope::integer(*k.tb_max);
        c.rule = "uniform thickness";
        return c;
    }
    if (k.large_cable_witness) {
        const auto& w = *k.large_cable_witness;
        c.kind = WidthCertificate::Kind::lower_bound;
        c.lo = normalize(-1, w.n + w.k);
        c.rule = "Theorem llc";
        c.assumptions.push_back("Legendrian large (" + std::to_string(w.n) +
                                ",-1)-cable with tb = -n + " + std::to_string(w.k));
        return c;
    }
    if (k.tb_max) {
        c.kind = WidthCertificate::Kind::interval;
        c.lo = Slope::integer(*k.tb_max);
        c.hi = Slope::integer(*k.tb_max + 1);
        c.rule = "width interval";
        return c;
    }
    throw rule_error("width oracle: insufficient data for '" + k.name + "'");
}

WidthCertificate cable_width(const KnotRecord& k, long long p, long long q) {
    if (p < 2) throw rule_error("cable_width: p <= 1 cables are trivial");
    if (q == 0) throw rule_error("cable_width: q = 0 cables are trivial");
    if (std::gcd(p, q < 0 ? -q : q) != 1)
        throw rule_error("cable_width: p and q must be coprime");
    k.validate();
    if (k.genus == 0 && (q == 1 || q == -1))
        throw rule_error("cable_width: a (p,+-1)-cable of the unknot is the unknot");

    Slope cable_slope = normalize(q, p);
    WidthCertificate c;

    if (k.is_lspace_knot.value_or(false) && k.tb_max && *k.tb_max == 2 * k.genus - 1) {
        if (slope_less(cable_slope, Slope::integer(2 * k.genus - 1))) {
            c.kind = WidthCertificate::Kind::exact;
            c.value = Slope::integer(p * q);
            c.rule = "Theorem cableswetbb";
        } else {
            long long cable_genus = p * k.genus + (p - 1) * (q - 1) / 2;
            c.kind = WidthCertificate::Kind::exact;
            c.value = Slope::integer(2 * cable_genus - 1);
            c.rule = "L-space cable corollary";
        }
        return c;
    }

    WidthCertificate base = width_oracle(k); // throws when the base width is unresolved

    if (!k.is_lagrangian_slice.value_or(false)) {
        bool below = false;
        if (base.kind == WidthCertificate::Kind::exact && slope_less(cable_slope, *base.value))
            below = true;
        else if (k.tb_max && slope_less(cable_slope, Slope::integer(*k.tb_max)))
            below = true; // w(K) >= tb_max unconditionally
        if (below) {
            c.kind = WidthCertificate::Kind::exact;
            c.value = Slope::integer(p * q);
            c.rule = "Theorem cableswetbb";
            return c;
        }
        c.kind = WidthCertificate::Kind::interval;
        c.rule = "width interval (cable)";
        c.assumptions.push_back("cable slope is not known to lie below the companion width");
        return c;
    }

    // Lagrangian slice companion: tb_max = -1, w(K) in [-1, 0].
    Slope minus_half = normalize(-1, 2);
    bool ok = !slope_less(Slope::integer(-1), cable_slope); // q/p <= -1 <= min(w, -1/2)
    if (!ok && base.kind == WidthCertificate::Kind::exact) {
        const Slope& w = *base.value;
        Slope bound = slope_less(w, minus_half) ? w : minus_half;
        ok = !slope_less(bound, cable_slope);
    }
    if (ok) {
        c.kind = WidthCertificate::Kind::exact;
        c.value = Slope::integer(p * q);
        c.rule = "Theorem cableswetbb";
        return c;
    }
    c.kind = WidthCertificate::Kind::interval;
    c.rule = "width interval (cable)";
    c.assumptions.push_back("Lagrangian slice exclusion");
    return c;
}

long long divide_tb(long long w_longitudes, long long m_meridians) {
    if (w_longitudes < 1) throw rule_error("divide_tb: longitude count must be positive");
    long long m = m_meridians < 0 ? -m_meridians : m_meridians;
    if (std::gcd(w_longitudes, m) != 1)
        throw rule_error("divide_tb: longitude and meridian counts must be coprime");
    return w_longitudes * m_meridians;
}

Slope divide_surgery_slope(long long w_longitudes, long long m_meridians) {
    if (w_longitudes < 1) throw rule_error("divide_surgery_slope: longitude count must be positive");
    long long m = m_meridians < 0 ? -m_meridians : m_meridians;
    if (std::gcd(w_longitudes, m) != 1)
        throw rule_error("divide_surgery_slope: longitude and meridian counts must be coprime");
    return normalize(w_longitudes * m_meridians - 1, w_longitudes * w_longitudes);
}

bool lspace_surgery_check(const Slope& r, long long genus) {
    if (r.is_infinite()) throw rule_error("lspace_surgery_check: slope must be finite");
    if (genus < 0) throw rule_error("lspace_surgery_check: genus must be nonnegative");
    return !slope_less(r, Slope::integer(2 * genus - 1));
}

Definiteness handle_definiteness(long long tb) {
    if (tb > 1) return Definiteness::positive;
    if (tb < 1) return Definiteness::negative;
    return Definiteness::degenerate;
}

VotVerdict vot_possible(const KnotRecord& k, const Slope& s) {
    if (s.is_infinite()) throw rule_error("vot_possible: slope must differ from the meridian");
    k.validate();
    if (k.is_lagrangian_slice.value_or(false) && !s.is_integer() &&
        slope_less(normalize(-1, 2), s) && slope_less(s, Slope::integer(0)))
        return {true, "Lagrangian slice knot type with dividing slope in (-1/2, 0)"};
    return {false, "universally tight forced"};
}

bool bennequin_feasible(long long tb, long long rot, long long genus) {
    if (genus < 1) throw rule_error("bennequin_feasible: genus must be positive");
    long long r = rot < 0 ? -rot : rot;
    return tb + r <= 2 * genus - 1 && (tb + rot) % 2 != 0;
}

std::vector<NonthickenableEntry> nonthickenable_slopes(const KnotRecord& k, long long n_max) {
    k.validate();
    if (n_max < 1) throw rule_error("nonthickenable_slopes: n_max must be positive");
    std::vector<NonthickenableEntry> out;
    if (k.is_fibered.value_or(false) && k.genus == 1) {
        for (long long n = 1; n <= n_max; ++n) out.push_back({normalize(1, n), 2});
        return out;
    }
    if (k.monodromy == Monodromy::trivial && k.genus >= 1) {
        long long f = 2 * k.genus - 1;
        for (long long n = 1; n <= n_max; ++n)
            out.push_back({normalize(f, n), 2 * std::gcd(f, n)});
        return out;
    }
    throw rule_error("nonthickenable_slopes: no rule applies to '" + k.name + "'");
}

Slope prop52_cut_slope(long long l_prime, long long a, long long b, long long genus) {
    if (genus < 1 || a < 1 || b < 1) throw rule_error("prop52_cut_slope: parameters must be positive");
    if (std::gcd(a, b) != 1) throw rule_error("prop52_cut_slope: a/b must be in lowest terms");
    long long fiber = 2 * genus - 1;
    if (fiber % b != 0) throw rule_error("prop52_cut_slope: b must divide 2g - 1");
    long long l = fiber / b;
    if (l_prime < 1 || l_prime > l) throw rule_error("prop52_cut_slope: need 1 <= l' <= l");
    return normalize(-(l_prime * a), 2 * genus - l_prime * b);
}

TbBound fibered_tb_bound(const KnotRecord& k) {
    k.validate();
    if (!k.is_fibered.value_or(false))
        throw rule_error("fibered_tb_bound: no rule applies (not known to be fibered)");
    if (!k.supports_ambient_structure)
        throw rule_error("fibered_tb_bound: no rule applies (supporting status unknown)");
    if (*k.supports_ambient_structure) {
        if (k.genus < 1)
            throw rule_error("fibered_tb_bound: no rule applies to the trivial binding");
        if (k.genus == 1 && k.ambient_structure_tight.value_or(false))
            return {TbBound::Kind::exact, 1, "genus-1 binding"};
        return {TbBound::Kind::at_least, 0, "Theorem lowerbound"};
    }
    if (k.genus == 1 && k.ambient_structure_tight.value_or(false)) {
        if (k.amphichiral_or_s3.value_or(false))
            return {TbBound::Kind::at_most, -1, "non-supported tight bound"};
        return {TbBound::Kind::at_most, 0, "non-supported tight bound"};
    }
    throw rule_error("fibered_tb_bound: no rule applies to '" + k.name + "'");
}

} // namespace slopecalc

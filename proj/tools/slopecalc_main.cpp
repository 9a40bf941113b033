#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slopecalc/classify.hpp"
#include "slopecalc/farey_path.hpp"
#include "slopecalc/json_io.hpp"
#include "slopecalc/knots.hpp"
#include "slopecalc/slope.hpp"
#include "slopecalc/splitting.hpp"

namespace {

using namespace slopecalc;
using nlohmann::ordered_json;

void print_json(const ordered_json& j) { std::cout << j.dump() << "\n"; }

std::vector<Slope> parse_slope_list(const std::string& text) {
    std::vector<Slope> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_slope(item));
    return out;
}

std::string blocks_str(const std::vector<std::vector<int>>& blocks) {
    std::string s;
    for (const auto& b : blocks) {
        s += "[";
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(b[i]);
        }
        s += "] ";
    }
    if (!s.empty()) s.pop_back();
    return s;
}

struct FareyPathCmd {
    std::string from, to;
    bool json = false;
    void run() const {
        FareyPath p = minimal_cw_path(parse_slope(from), parse_slope(to));
        if (json) {
            print_json(path_to_json(p));
            return;
        }
        std::cout << "vertices:";
        for (const auto& v : p.vertices) std::cout << " " << v.str();
        std::cout << "\nblocks: " << blocks_str(p.blocks) << "\n";
    }
};

struct FareyBlocksCmd {
    std::string path;
    bool json = false;
    void run() const {
        auto vs = parse_slope_list(path);
        auto blocks = cf_blocks(vs);
        if (json) {
            FareyPath p{vs, blocks};
            print_json(path_to_json(p));
            return;
        }
        std::cout << "blocks: " << blocks_str(blocks) << "\n";
    }
};

struct ClassifyCmd {
    std::string meridian, slope;
    bool upper = false;
    bool json = false;
    bool enumerate = false;
    void run() const {
        SolidTorusSpec spec{parse_slope(meridian), parse_slope(slope),
                            upper ? MeridianSide::upper : MeridianSide::lower, 2};
        if (!enumerate) {
            long long n = count_classes(spec);
            if (json) {
                ordered_json j;
                j["count"] = n;
                print_json(j);
            } else {
                std::cout << n << "\n";
            }
            return;
        }
        auto classes = enumerate_classes(spec);
        if (json) {
            ordered_json j;
            j["count"] = static_cast<long long>(classes.size());
            j["classes"] = ordered_json::array();
            for (const auto& c : classes) j["classes"].push_back(torus_class_to_json(c));
            print_json(j);
            return;
        }
        for (const auto& c : classes) {
            std::cout << "signs " << c.signs << "  plus_counts";
            for (long long n : c.plus_counts) std::cout << " " << n;
            std::cout << (c.universally_tight() ? "  universally tight" : "") << "\n";
        }
    }
};

struct SplitExceptionalCmd {
    std::string s1, s0, sm1, meridian = "inf";
    long long max_den = 1000;
    bool json = false;
    void run() const {
        MixedTorusSpec t{parse_slope(sm1), parse_slope(s0), parse_slope(s1), SliceSign::plus,
                         SliceSign::minus};
        auto et = exceptional_slopes(t, max_den);
        Slope m = parse_slope(meridian);
        if (json) {
            ordered_json j;
            j["s0"] = t.s0.str();
            j["exceptional"] = ordered_json::array();
            for (const auto& n : et) {
                SplitResult r = e_splitting_result(m, n.slope);
                ordered_json e = split_result_to_json(r);
                e["is_endpoint"] = n.is_endpoint;
                j["exceptional"].push_back(std::move(e));
            }
            print_json(j);
            return;
        }
        for (const auto& n : et) {
            SplitResult r = e_splitting_result(m, n.slope);
            std::cout << n.slope.str() << (n.is_endpoint ? " (endpoint)" : "")
                      << "  lens h1 " << r.piece_one_h1.str() << "  surgery h1 "
                      << r.piece_two_h1.str() << "\n";
        }
    }
};

struct SplitLargeCableCmd {
    long long p = 0, q = 0, k = 0;
    bool json = false;
    void run() const {
        CableVerdict v = large_cable_obstruction(p, q, k);
        if (json) {
            print_json(cable_verdict_to_json(v));
            return;
        }
        std::cout << (v.consistent ? "consistent" : "not consistent") << "\n";
        if (v.width_lower_bound)
            std::cout << "width lower bound: " << v.width_lower_bound->str() << "\n";
        if (v.requires_lagrangian_slice) std::cout << "requires Lagrangian slice\n";
        for (const auto& r : v.reasons) std::cout << "- " << r << "\n";
    }
};

struct KnotCmd {
    std::string db, name, slope;
    long long p = 0, q = 0, max_n = 20;
    long long tb = 0, rot = 0, genus = 0;
    bool json = false;

    KnotRecord record() const { return find_knot(load_knot_db(db), name); }

    void width() const {
        WidthCertificate c = width_oracle(record());
        if (json) {
            print_json(width_certificate_to_json(c));
            return;
        }
        std::cout << "width(" << name << "): " << width_kind_str(c.kind);
        if (c.value) std::cout << " " << c.value->str();
        if (c.lo) std::cout << " lo " << c.lo->str();
        if (c.hi) std::cout << " hi " << c.hi->str();
        std::cout << " by " << c.rule << "\n";
    }

    void cable() const {
        WidthCertificate c = cable_width(record(), p, q);
        if (json) {
            print_json(width_certificate_to_json(c));
            return;
        }
        std::cout << "width(" << name << "_(" << p << "," << q
                  << ")): " << width_kind_str(c.kind);
        if (c.value) std::cout << " " << c.value->str();
        std::cout << " by " << c.rule << "\n";
    }

    void vot() const {
        VotVerdict v = vot_possible(record(), parse_slope(slope));
        if (json) {
            ordered_json j;
            j["possible"] = v.possible;
            j["reason"] = v.reason;
            print_json(j);
            return;
        }
        std::cout << (v.possible ? "possible" : "impossible") << ": " << v.reason << "\n";
    }

    void nonthickenable() const {
        auto entries = nonthickenable_slopes(record(), max_n);
        if (json) {
            ordered_json j;
            j["entries"] = ordered_json::array();
            for (const auto& e : entries) {
                ordered_json item;
                item["slope"] = e.slope.str();
                item["dividing_curves"] = e.dividing_curves;
                j["entries"].push_back(std::move(item));
            }
            print_json(j);
            return;
        }
        for (const auto& e : entries)
            std::cout << e.slope.str() << "  " << e.dividing_curves << " dividing curves\n";
    }

    void bennequin() const {
        bool ok = bennequin_feasible(tb, rot, genus);
        if (json) {
            ordered_json j;
            j["feasible"] = ok;
            print_json(j);
            return;
        }
        std::cout << (ok ? "feasible" : "infeasible") << "\n";
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Farey-graph slope calculus for solid tori in contact manifolds"};
    app.require_subcommand(1);

    auto* farey = app.add_subcommand("farey", "Farey graph paths and blocks");
    farey->require_subcommand(1);
    FareyPathCmd path_cmd;
    auto* fp = farey->add_subcommand("path", "minimal clockwise path between two slopes");
    fp->add_option("--from", path_cmd.from, "start slope")->required();
    fp->add_option("--to", path_cmd.to, "end slope")->required();
    fp->add_flag("--json", path_cmd.json, "JSON output");
    fp->callback([&] { path_cmd.run(); });

    FareyBlocksCmd blocks_cmd;
    auto* fb = farey->add_subcommand("blocks", "continued fraction blocks of a path");
    fb->add_option("--path", blocks_cmd.path, "comma-separated path vertices")->required();
    fb->add_flag("--json", blocks_cmd.json, "JSON output");
    fb->callback([&] { blocks_cmd.run(); });

    auto* classify = app.add_subcommand("classify", "tight contact structures on solid tori");
    classify->require_subcommand(1);
    ClassifyCmd count_cmd;
    auto* cc = classify->add_subcommand("count", "number of classes");
    cc->add_option("--meridian", count_cmd.meridian, "meridian slope")->required();
    cc->add_option("--slope", count_cmd.slope, "boundary dividing slope")->required();
    cc->add_flag("--upper", count_cmd.upper, "upper meridian convention");
    cc->add_flag("--json", count_cmd.json, "JSON output");
    cc->callback([&] { count_cmd.run(); });

    ClassifyCmd enum_cmd;
    enum_cmd.enumerate = true;
    auto* ce = classify->add_subcommand("enum", "one canonical representative per class");
    ce->add_option("--meridian", enum_cmd.meridian, "meridian slope")->required();
    ce->add_option("--slope", enum_cmd.slope, "boundary dividing slope")->required();
    ce->add_flag("--upper", enum_cmd.upper, "upper meridian convention");
    ce->add_flag("--json", enum_cmd.json, "JSON output");
    ce->callback([&] { enum_cmd.run(); });

    auto* split = app.add_subcommand("split", "mixed tori and e-splittings");
    split->require_subcommand(1);
    SplitExceptionalCmd exc_cmd;
    auto* se = split->add_subcommand("exceptional", "exceptional slope set of a mixed torus");
    se->add_option("--s1", exc_cmd.s1, "dividing slope of T^2 x {1}")->required();
    se->add_option("--s0", exc_cmd.s0, "dividing slope of the mixed torus")->required();
    se->add_option("--sm1", exc_cmd.sm1, "dividing slope of T^2 x {-1}")->required();
    se->add_option("--meridian", exc_cmd.meridian, "solid torus meridian for the lens side");
    se->add_option("--max-den", exc_cmd.max_den, "denominator guard for infinite sets");
    se->add_flag("--json", exc_cmd.json, "JSON output");
    se->callback([&] { exc_cmd.run(); });

    SplitLargeCableCmd lc_cmd;
    auto* sl = split->add_subcommand("large-cable", "Legendrian large cable obstruction");
    sl->add_option("--p", lc_cmd.p, "longitudinal winding")->required();
    sl->add_option("--q", lc_cmd.q, "meridional winding")->required();
    sl->add_option("--k", lc_cmd.k, "tb excess over pq")->required();
    sl->add_flag("--json", lc_cmd.json, "JSON output");
    sl->callback([&] { lc_cmd.run(); });

    auto* knot = app.add_subcommand("knot", "knot-type oracle backed by a record database");
    knot->require_subcommand(1);
    KnotCmd k_width, k_cable, k_vot, k_nt, k_ben;

    auto* kw = knot->add_subcommand("width", "width certificate for a knot type");
    kw->add_option("--db", k_width.db, "knot database path")->required();
    kw->add_option("--name", k_width.name, "knot name")->required();
    kw->add_flag("--json", k_width.json, "JSON output");
    kw->callback([&] { k_width.width(); });

    auto* kc = knot->add_subcommand("cable", "width certificate for a (p,q)-cable");
    kc->add_option("--db", k_cable.db, "knot database path")->required();
    kc->add_option("--name", k_cable.name, "knot name")->required();
    kc->add_option("--p", k_cable.p, "longitudinal winding")->required();
    kc->add_option("--q", k_cable.q, "meridional winding")->required();
    kc->add_flag("--json", k_cable.json, "JSON output");
    kc->callback([&] { k_cable.cable(); });

    auto* kv = knot->add_subcommand("vot", "virtually overtwisted solid torus admissibility");
    kv->add_option("--db", k_vot.db, "knot database path")->required();
    kv->add_option("--name", k_vot.name, "knot name")->required();
    kv->add_option("--slope", k_vot.slope, "boundary dividing slope")->required();
    kv->add_flag("--json", k_vot.json, "JSON output");
    kv->callback([&] { k_vot.vot(); });

    auto* kn = knot->add_subcommand("nonthickenable", "non-thickenable torus slope family");
    kn->add_option("--db", k_nt.db, "knot database path")->required();
    kn->add_option("--name", k_nt.name, "knot name")->required();
    kn->add_option("--max-n", k_nt.max_n, "largest n in the family");
    kn->add_flag("--json", k_nt.json, "JSON output");
    kn->callback([&] { k_nt.nonthickenable(); });

    auto* kb = knot->add_subcommand("bennequin", "Bennequin feasibility of (tb, rot) at a genus");
    kb->add_option("--tb", k_ben.tb, "Thurston-Bennequin invariant")->required();
    kb->add_option("--rot", k_ben.rot, "rotation number")->required();
    kb->add_option("--genus", k_ben.genus, "Seifert genus")->required();
    kb->add_flag("--json", k_ben.json, "JSON output");
    kb->callback([&] { k_ben.bennequin(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const slopecalc::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const slopecalc::rule_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const slopecalc::invariant_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

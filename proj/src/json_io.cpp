#include "slopecalc/json_io.hpp"

namespace slopecalc {

using nlohmann::ordered_json;

ordered_json slopes_to_json(const std::vector<Slope>& slopes) {
    ordered_json a = ordered_json::array();
    for (const auto& s : slopes) a.push_back(s.str());
    return a;
}

ordered_json path_to_json(const FareyPath& path) {
    ordered_json j;
    j["vertices"] = slopes_to_json(path.vertices);
    j["blocks"] = path.blocks;
    return j;
}

ordered_json torus_class_to_json(const TorusClass& c) {
    ordered_json j;
    j["path"] = slopes_to_json(c.path.vertices);
    j["blocks"] = c.path.blocks;
    j["plus_counts"] = c.plus_counts;
    j["universally_tight"] = c.universally_tight();
    return j;
}

ordered_json arc_neighbors_to_json(const std::vector<ArcNeighbor>& ns) {
    ordered_json a = ordered_json::array();
    for (const auto& n : ns) {
        ordered_json e;
        e["slope"] = n.slope.str();
        e["is_endpoint"] = n.is_endpoint;
        a.push_back(std::move(e));
    }
    return a;
}

ordered_json split_result_to_json(const SplitResult& r) {
    ordered_json j;
    j["exceptional_slope"] = r.exceptional_slope.str();
    j["lens_side_h1"] = r.piece_one_h1.infinite ? ordered_json("infinite")
                                                : ordered_json(r.piece_one_h1.order);
    j["surgery_side_h1"] = r.piece_two_h1.infinite ? ordered_json("infinite")
                                                   : ordered_json(r.piece_two_h1.order);
    j["surgery_side_is_homology_s1xs2"] = r.surgery_side_is_homology_s1xs2;
    return j;
}

ordered_json cable_verdict_to_json(const CableVerdict& v) {
    ordered_json j;
    j["consistent"] = v.consistent;
    if (v.required_cable)
        j["required_cable"] = {v.required_cable->first, v.required_cable->second};
    if (v.width_lower_bound) j["width_lower_bound"] = v.width_lower_bound->str();
    j["requires_lagrangian_slice"] = v.requires_lagrangian_slice;
    j["reasons"] = v.reasons;
    return j;
}

ordered_json width_certificate_to_json(const WidthCertificate& c) {
    ordered_json j;
    j["kind"] = width_kind_str(c.kind);
    if (c.value) j["value"] = c.value->str();
    if (c.lo) j["lo"] = c.lo->str();
    if (c.hi) j["hi"] = c.hi->str();
    j["rule"] = c.rule;
    if (!c.assumptions.empty()) j["assumptions"] = c.assumptions;
    return j;
}

} // namespace slopecalc

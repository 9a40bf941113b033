#pragma once

#include "json.hpp"
#include "slopecalc/classify.hpp"
#include "slopecalc/farey_path.hpp"
#include "slopecalc/knots.hpp"
#include "slopecalc/splitting.hpp"

namespace slopecalc {

nlohmann::ordered_json slopes_to_json(const std::vector<Slope>& slopes);
nlohmann::ordered_json path_to_json(const FareyPath& path);
nlohmann::ordered_json torus_class_to_json(const TorusClass& c);
nlohmann::ordered_json arc_neighbors_to_json(const std::vector<ArcNeighbor>& ns);
nlohmann::ordered_json split_result_to_json(const SplitResult& r);
nlohmann::ordered_json cable_verdict_to_json(const CableVerdict& v);
nlohmann::ordered_json width_certificate_to_json(const WidthCertificate& c);

} // namespace slopecalc

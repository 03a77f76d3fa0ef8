#pragma once

#include <string>

#include <json.hpp>

#include "arcshare/baer.hpp"

namespace arcshare {

using nlohmann::json;

json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const json& j);

json matrix_to_json(const FMatrix& m);
FMatrix matrix_from_json(const json& j);

json point_to_json(const ProjectivePoint& p);
ProjectivePoint point_from_json(const json& j, const FieldPtr& f);

json point_set_to_json(const std::vector<ProjectivePoint>& pts, const FieldPtr& f, int dim);
std::vector<ProjectivePoint> point_set_from_json(const json& j, FieldPtr* field_out = nullptr);

json access_to_json(const AccessStructure& g);
// Accepts either {n, basis:[[...]]} or a model descriptor such as
// {model:"threshold", t, n}, {model:"parallel", groups, t},
// {model:"hierarchical", upper, lower, t}.
AccessStructure access_from_json(const json& j);

json report_to_json(const VerificationReport& r);

json scheme_to_json(const Scheme& s);
// Rebuilds the scheme and re-runs the verification mode recorded in the
// file, so a loaded scheme always carries a fresh report.
Scheme scheme_from_json(const json& j);

json share_to_json(const Share& s, const FieldPtr& f);
Share share_from_json(const json& j, const FieldPtr& expected);

json array_to_json(const RepresentativeArray& m);
RepresentativeArray array_from_json(const json& j);
std::string array_to_csv(const RepresentativeArray& m);
RepresentativeArray array_from_csv(const std::string& text, const FieldPtr& field);

json parc_to_json(const PencilArc& parc, const FieldPtr& f);
PencilArc parc_from_json(const json& j);

json harc_to_json(const HierarchicalArc& harc, const FieldPtr& f);
HierarchicalArc harc_from_json(const json& j);

json ambiguity_to_json(const AmbiguitySet& a);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);
void save_text_file(const std::string& path, const std::string& text);
std::string load_text_file(const std::string& path);

} // namespace arcshare

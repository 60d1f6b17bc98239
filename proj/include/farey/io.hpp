#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "farey/decoration.hpp"
#include "farey/develop.hpp"
#include "farey/example_shear.hpp"
#include "farey/mobius.hpp"
#include "farey/shear.hpp"
#include "farey/triangulation.hpp"

namespace farey {

using Json = nlohmann::json;

// Input failed validation against a module schema.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json window_to_json(const Window& w);
Window window_from_json(const Json& j);

Json mobius_to_json(const Mobius& m);
Mobius mobius_from_json(const Json& j);

Json horocycle_to_json(const Horocycle& h);
Horocycle horocycle_from_json(const Json& j);

Json shear_to_json(const ShearFunction& s);
ShearFunction shear_from_json(const Json& j);

Json vertex_map_to_json(const VertexMap& m);
VertexMap vertex_map_from_json(const Json& j);

Json decoration_to_json(const Decoration& d);
Decoration decoration_from_json(const Json& j);

Json lambdas_to_json(const LambdaAssignment& l);
LambdaAssignment lambdas_from_json(const Json& j);

Json triangulation_to_json(const WindowTriangulation& t);
// file loading for "image_of": "<path>" goes through the loader callback
WindowTriangulation triangulation_from_json(const Json& j);

Json flip_sequence_to_json(const std::vector<FlipSet>& seq);
std::vector<FlipSet> flip_sequence_from_json(const Json& j);

Json qs_report_to_json(const QsCertificateReport& r);
Json ps_report_to_json(const PsCertificateReport& r);
Json cross_report_to_json(const CrossReport& r);
Json transitivity_report_to_json(const TransitivityReport& r);
Json pinch_report_to_json(const PinchReport& r);
Json qs_scan_report_to_json(const QsScanReport& r);
Json falsifier_report_to_json(const FalsifierReport& r);

Json load_json_file(const std::string& path);

}  // namespace farey

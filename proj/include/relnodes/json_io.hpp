#pragma once

#include "relnodes/assembly.hpp"
#include "relnodes/extended_template.hpp"
#include "relnodes/floor_diagram.hpp"
#include "relnodes/multipoly.hpp"
#include "relnodes/template_graph.hpp"

#include <json.hpp>

namespace relnodes {

using Json = nlohmann::ordered_json;

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json diagram_to_json(const FloorDiagram& d);
FloorDiagram diagram_from_json(const Json& j);

Json template_to_json(const Template& t);
Json ext_template_to_json(const ExtendedTemplate& t);

Json node_polynomial_to_json(const NodePolynomial& np);
NodePolynomial node_polynomial_from_json(const Json& j);

}  // namespace relnodes

#pragma once

#include <json.hpp>

#include "galcoh/orbits.hpp"

namespace galcoh {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j, int rows, int cols);

Json descriptor_to_json(const QuasiConnectedDescriptor& desc);
QuasiConnectedDescriptor descriptor_from_json(const Json& j);

Json report_to_json(const H1Report& rep);

}  // namespace galcoh

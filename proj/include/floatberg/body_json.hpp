// Body JSON schema:
//   {"type":"box","lo":[...],"hi":[...]}
//   {"type":"simplex","vertices":[[...],...]}
//   {"type":"polytope","vertices":[[...],...]}   (n=2)
//   {"type":"ellipsoid","center":[...],"shape":[[...],...]}
// Dimensions are inferred from array lengths.
#pragma once

#include <string>

#include "floatberg/body.hpp"

namespace floatberg {

Body body_from_json(const std::string& text);
Body body_from_file(const std::string& path);
std::string body_to_json(const Body& body);

}  // namespace floatberg

#include "floatberg/body_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "floatberg/errors.hpp"

namespace floatberg {

namespace {

using nlohmann::json;

Vec parse_vec(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || j.size() > kMaxDim)
    throw InvalidBody("field '" + field + "' must be an array of 1..3 numbers");
  Vec v(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InvalidBody("field '" + field + "' must be numeric");
    v[static_cast<int>(i)] = j[i].get<double>();
  }
  return v;
}

std::vector<Vec> parse_points(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw InvalidBody("field '" + field + "' must be an array of points");
  std::vector<Vec> out;
  for (const auto& row : j) out.push_back(parse_vec(row, field));
  for (const Vec& p : out)
    if (p.n != out[0].n) throw InvalidBody("field '" + field + "' has mixed dimensions");
  return out;
}

}  // namespace

Body body_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw InvalidBody(std::string("body JSON parse error: ") + e.what());
  }
  if (!j.contains("type") || !j["type"].is_string())
    throw InvalidBody("field 'type' missing or not a string");
  std::string type = j["type"].get<std::string>();
  if (type == "box") {
    if (!j.contains("lo")) throw InvalidBody("field 'lo' missing");
    if (!j.contains("hi")) throw InvalidBody("field 'hi' missing");
    return Body::box(parse_vec(j["lo"], "lo"), parse_vec(j["hi"], "hi"));
  }
  if (type == "simplex") {
    if (!j.contains("vertices")) throw InvalidBody("field 'vertices' missing");
    return Body::simplex(parse_points(j["vertices"], "vertices"));
  }
  if (type == "polytope") {
    if (!j.contains("vertices")) throw InvalidBody("field 'vertices' missing");
    std::vector<Vec> pts = parse_points(j["vertices"], "vertices");
    if (pts[0].n != 2)
      throw InvalidBody("polytope JSON input is 2D only; use box/simplex for n=3");
    return Body::polygon(pts);
  }
  if (type == "ellipsoid") {
    if (!j.contains("center")) throw InvalidBody("field 'center' missing");
    if (!j.contains("shape")) throw InvalidBody("field 'shape' missing");
    Vec c = parse_vec(j["center"], "center");
    std::vector<Vec> rows = parse_points(j["shape"], "shape");
    if (static_cast<int>(rows.size()) != c.n || rows[0].n != c.n)
      throw InvalidBody("field 'shape' must be an n x n matrix");
    Mat a(c.n);
    for (int i = 0; i < c.n; ++i)
      for (int k = 0; k < c.n; ++k) a(i, k) = rows[i][k];
    return Body::ellipsoid(c, a);
  }
  throw InvalidBody("field 'type' must be box|simplex|polytope|ellipsoid");
}

Body body_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidBody("cannot open body file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return body_from_json(ss.str());
}

std::string body_to_json(const Body& body) {
  json j;
  auto vec_json = [&](const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.n; ++i) a.push_back(v[i]);
    return a;
  };
  switch (body.kind) {
    case BodyKind::box:
      j["type"] = "box";
      j["lo"] = vec_json(body.lo);
      j["hi"] = vec_json(body.hi);
      break;
    case BodyKind::simplex:
    case BodyKind::polytope: {
      j["type"] = body.kind == BodyKind::simplex ? "simplex" : "polytope";
      json pts = json::array();
      for (const Vec& v : body.vertices) pts.push_back(vec_json(v));
      j["vertices"] = pts;
      break;
    }
    case BodyKind::ellipsoid: {
      j["type"] = "ellipsoid";
      j["center"] = vec_json(body.center);
      json rows = json::array();
      for (int i = 0; i < body.n; ++i) {
        json row = json::array();
        for (int k = 0; k < body.n; ++k) row.push_back(body.shape(i, k));
        rows.push_back(row);
      }
      j["shape"] = rows;
      break;
    }
  }
  return j.dump();
}

}  // namespace floatberg

#include "wbembed/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace wbembed::io {

namespace {

Point parse_point(const json& j) {
  if (!j.is_array()) throw Error("expected a coordinate array");
  Point p;
  for (const auto& c : j) {
    if (!c.is_number()) throw Error("coordinates must be numbers");
    p.push_back(c.get<double>());
  }
  return p;
}

std::vector<Point> parse_points(const json& j) {
  if (!j.is_array()) throw Error("expected an array of points");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(parse_point(p));
  return out;
}

ShortcutPoint parse_endpoint(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "boundary") throw Error("endpoint string must be \"boundary\"");
    return ShortcutPoint::boundary();
  }
  return ShortcutPoint::at(parse_point(j));
}

json endpoint_to_json(const ShortcutPoint& p) {
  if (p.is_boundary()) return "boundary";
  return p.coords();
}

}  // namespace

Domain parse_domain(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw Error("domain descriptor needs a \"type\"");
  const auto type = j.at("type").get<std::string>();
  if (type == "open_box") return Domain::open_box(parse_point(j.at("low")), parse_point(j.at("high")));
  if (type == "upper_diagonal") return Domain::upper_diagonal();
  if (type == "punctured") return Domain::punctured(parse_points(j.at("points")));
  if (type == "complement_box") {
    return Domain::complement_box(parse_point(j.at("low")), parse_point(j.at("high")));
  }
  throw Error("unknown domain type: " + type);
}

json domain_to_json(const Domain& d) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, OpenBox>) {
          return {{"type", "open_box"}, {"low", v.low}, {"high", v.high}};
        } else if constexpr (std::is_same_v<T, UpperDiagonalHalfPlane>) {
          return {{"type", "upper_diagonal"}};
        } else if constexpr (std::is_same_v<T, PuncturedSpace>) {
          return {{"type", "punctured"}, {"points", v.removed}};
        } else {
          return {{"type", "complement_box"}, {"low", v.low}, {"high", v.high}};
        }
      },
      d.variant());
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

Domain parse_domain_argument(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\n");
  try {
    if (first != std::string::npos && text_or_path[first] == '{') {
      return parse_domain(json::parse(text_or_path));
    }
    return parse_domain(read_json_file(text_or_path));
  } catch (const json::exception& e) {
    throw Error(std::string("domain descriptor: ") + e.what());
  }
}

UnorderedTuple parse_tuple(const json& j, std::shared_ptr<const Domain> domain) {
  try {
    std::vector<Point> pts;
    if (j.contains("points")) pts = parse_points(j.at("points"));
    std::size_t boundary = 0;
    if (j.contains("boundary_count")) {
      const auto b = j.at("boundary_count").get<long long>();
      if (b < 0) throw Error("boundary_count must be non-negative");
      boundary = static_cast<std::size_t>(b);
    }
    return UnorderedTuple::from_coords(std::move(domain), pts, boundary);
  } catch (const json::exception& e) {
    throw Error(std::string("tuple: ") + e.what());
  }
}

UnorderedTuple parse_tuple(const json& j) {
  if (!j.is_object() || !j.contains("domain")) throw Error("tuple file needs a \"domain\"");
  return parse_tuple(j, std::make_shared<const Domain>(parse_domain(j.at("domain"))));
}

json tuple_to_json(const UnorderedTuple& t) {
  return {{"domain", domain_to_json(t.domain())},
          {"points", t.interior_coords()},
          {"boundary_count", t.boundary_count()}};
}

DiscreteCoupling parse_coupling(const json& j) {
  if (!j.is_array()) throw Error("coupling must be a JSON array");
  DiscreteCoupling out;
  try {
    for (const auto& e : j) {
      out.push_back({parse_endpoint(e.at("src")), parse_endpoint(e.at("dst")),
                     e.at("mass").get<double>()});
    }
  } catch (const json::exception& e) {
    throw Error(std::string("coupling: ") + e.what());
  }
  return out;
}

json coupling_to_json(const DiscreteCoupling& c) {
  json out = json::array();
  for (const auto& e : c) {
    out.push_back({{"src", endpoint_to_json(e.source)},
                   {"dst", endpoint_to_json(e.target)},
                   {"mass", e.mass}});
  }
  return out;
}

json embedding_to_json(const SparseEmbeddingVector& v) {
  json entries = json::object();
  for (const auto& [cube, values] : v.entries) entries[cube.key()] = values;
  return {{"M", v.tuple_size}, {"h", v.directions}, {"entries", entries}};
}

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace wbembed::io

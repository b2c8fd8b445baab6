#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "wbembed/embedding.hpp"
#include "wbembed/transport.hpp"

namespace wbembed::io {

using nlohmann::json;

/// {"type":"open_box","low":[..],"high":[..]}, {"type":"upper_diagonal"},
/// {"type":"punctured","points":[[..],..]}, {"type":"complement_box",...}.
Domain parse_domain(const json& j);
json domain_to_json(const Domain& d);

/// Accepts inline JSON text or a path to a JSON file.
Domain parse_domain_argument(const std::string& text_or_path);

json read_json_file(const std::string& path);

/// {"domain": <descriptor>, "points": [[..],..], "boundary_count": int}
UnorderedTuple parse_tuple(const json& j);
UnorderedTuple parse_tuple(const json& j, std::shared_ptr<const Domain> domain);
json tuple_to_json(const UnorderedTuple& t);

/// [{"src": [..] | "boundary", "dst": [..] | "boundary", "mass": real}, ..]
DiscreteCoupling parse_coupling(const json& j);
json coupling_to_json(const DiscreteCoupling& c);

/// {"M": int, "h": int, "entries": {"k,c0,c1": [reals], ..}} with keys in
/// sorted order.
json embedding_to_json(const SparseEmbeddingVector& v);

/// Shortest round-trip representation with 17 significant digits.
std::string format_double(double x, int digits = 17);

}  // namespace wbembed::io

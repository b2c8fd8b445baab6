#include "wbembed/barcode.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace wbembed {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stod(t, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == t.size() && std::isfinite(out);
}

}  // namespace

BarcodeDiagram parse_barcode(std::istream& in, const std::string& name) {
  BarcodeDiagram d{name, {}};
  std::vector<std::string> problems;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    double birth = 0.0;
    double death = 0.0;
    if (comma == std::string::npos || !parse_number(line.substr(0, comma), birth) ||
        !parse_number(line.substr(comma + 1), death)) {
      problems.push_back("line " + std::to_string(lineno) + ": expected birth,death");
      continue;
    }
    if (!(death > birth)) {
      problems.push_back("line " + std::to_string(lineno) + ": death must exceed birth");
      continue;
    }
    d.pairs.push_back({birth, death});
  }
  if (!problems.empty()) {
    std::string msg = name + ":";
    for (const auto& p : problems) msg += "\n  " + p;
    throw Error(msg);
  }
  return d;
}

BarcodeDiagram read_barcode_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_barcode(in, path);
}

std::shared_ptr<const Domain> barcode_domain() {
  static const auto domain = std::make_shared<const Domain>(Domain::upper_diagonal());
  return domain;
}

UnorderedTuple barcode_tuple(const BarcodeDiagram& diagram,
                             const std::shared_ptr<const Domain>& domain) {
  return UnorderedTuple::from_coords(domain, diagram.pairs);
}

}  // namespace wbembed

namespace wbembed {

std::vector<std::vector<double>> barcode_distance_matrix(
    const std::vector<BarcodeDiagram>& diagrams, double exponent) {
  std::vector<UnorderedTuple> tuples;
  tuples.reserve(diagrams.size());
  for (const auto& d : diagrams) tuples.push_back(barcode_tuple(d));
  std::vector<std::vector<double>> out(diagrams.size(), std::vector<double>(diagrams.size(), 0.0));
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (std::size_t j = i + 1; j < tuples.size(); ++j) {
      out[i][j] = out[j][i] = wb_tuples(tuples[i], tuples[j], exponent);
    }
  }
  return out;
}

}  // namespace wbembed

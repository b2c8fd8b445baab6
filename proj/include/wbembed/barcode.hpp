#pragma once

#include <istream>
#include <memory>
#include <string>
#include <vector>

#include "wbembed/transport.hpp"

namespace wbembed {

/// (birth, death) pairs with death > birth.
struct BarcodeDiagram {
  std::string name;
  std::vector<Point> pairs;
};

/// CSV lines "birth,death"; '#' starts a comment; blank lines ignored.
/// Rows with death <= birth or unparsable rows raise Error naming every
/// offending line number.
BarcodeDiagram parse_barcode(std::istream& in, const std::string& name);
BarcodeDiagram read_barcode_file(const std::string& path);

/// The shared upper-diagonal half-plane domain.
std::shared_ptr<const Domain> barcode_domain();

UnorderedTuple barcode_tuple(const BarcodeDiagram& diagram,
                             const std::shared_ptr<const Domain>& domain = barcode_domain());

}  // namespace wbembed

namespace wbembed {

/// Pairwise partial-transport distances between diagrams, the diagonal
/// playing the role of the boundary.
std::vector<std::vector<double>> barcode_distance_matrix(
    const std::vector<BarcodeDiagram>& diagrams, double exponent = 2.0);

}  // namespace wbembed

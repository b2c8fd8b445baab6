#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wbembed/domain.hpp"
#include "wbembed/experiment.hpp"

namespace wbembed::cli {

enum ExitCode : int { kSuccess = 0, kViolation = 1, kUsage = 2 };

/// Prints Wb_exponent between two tuple files to 12 significant digits.
/// A descriptor given in `domain` overrides the ones in the files.
int cmd_distance(const std::string& file_a, const std::string& file_b, double exponent,
                 const std::optional<std::string>& domain, std::ostream& out);

/// Writes zeta of the tuple in `file` as JSON; tuples may hold at most m points.
int cmd_embed(const std::string& file, std::size_t m, int density,
              const std::optional<std::string>& domain, std::ostream& out);

/// CSV report (config echoed as `#` lines) to `report`, summary to `out`.
/// Nonzero on any sandwich, certificate, or zeta violation.
int cmd_distortion_experiment(const ExperimentConfig& config, std::ostream& report,
                              std::ostream& out);

/// Tuple-format JSON holding the witness points plus "epsilon".
int cmd_nondoubling_witness(const Domain& domain, std::size_t count, double epsilon,
                            std::ostream& out);

struct BarcodeOptions {
  double exponent = 2.0;
  bool embed = false;
  int density = 1;
  std::optional<std::size_t> m;  ///< defaults to the largest diagram size
};

/// Distance matrix as CSV; with `embed`, a JSON line per diagram with its
/// zeta vector and a ratio line per pair.
int cmd_barcode(const std::vector<std::string>& files, const BarcodeOptions& options,
                std::ostream& out);

/// Runs every invariant suite; `c0_scale` corrupts c0 for mutation testing.
int cmd_verify(std::uint64_t seed, double c0_scale, std::ostream& out);

/// JSON lines {k, corner, neighbors} for the selected cubes meeting `region`
/// with generation >= min_generation.
int cmd_whitney(const Domain& domain, const Box& region, int min_generation, std::ostream& out);

}  // namespace wbembed::cli

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wbembed/certificate.hpp"
#include "wbembed/embedding.hpp"

namespace wbembed {

struct ExperimentConfig {
  std::shared_ptr<const Domain> domain;
  std::size_t m = 3;           ///< tuples have at most m points
  double exponent = 2.0;       ///< echoed; the sandwich is a W2 statement
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  int direction_density = 1;
  std::string output_path;
};

/// Everything measured for one sampled pair.
struct PairEvaluation {
  std::size_t index = 0;
  std::size_t size_p = 0;  ///< interior points of p
  std::size_t size_q = 0;
  std::size_t padded_size = 0;  ///< M = 2m
  double wb2 = 0.0;             ///< partial-transport distance
  double w2_padded = 0.0;       ///< W2 over the shortcut metric after padding
  double t_squared = 0.0;       ///< squared l2-sum distance of the localizations
  double zeta_distance = 0.0;
  double lower_bound = 0.0;     ///< w2_padded^2 / (c2 M^3)
  double upper_bound = 0.0;     ///< c0 w2_padded^2
  bool lower_ok = false;
  bool upper_ok = false;
  bool zeta_ok = false;         ///< zeta_distance <= sqrt(c0) wb2
  bool certificate_ok = false;
  std::string certificate_error;
  double certificate_bound = 0.0;  ///< lower bound reproduced by the certificate
};

struct ExperimentSummary {
  std::size_t pairs = 0;
  std::size_t sandwich_violations = 0;
  std::size_t certificate_failures = 0;
  std::size_t zeta_violations = 0;
  double min_zeta_ratio = 0.0;  ///< over pairs with wb2 > 0
  double max_zeta_ratio = 0.0;
  double empirical_distortion = 0.0;
  double distortion_shape = 0.0;  ///< m^(n + 5/2)
};

/// Samples `samples` pairs of tuples of at most m points (boundary slots
/// with probability 0.2) and evaluates the full pipeline on each.
std::vector<PairEvaluation> run_embedding_experiment(const ExperimentConfig& config,
                                                     const Constants& constants);

ExperimentSummary summarize(const ExperimentConfig& config,
                            const std::vector<PairEvaluation>& rows);

}  // namespace wbembed

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wbembed/embedding.hpp"
#include "wbembed/experiment.hpp"

namespace wbembed::suites {

struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string detail;  ///< first failure, or a short summary

  [[nodiscard]] bool passed() const { return failures == 0 && checks > 0; }
  void check(bool ok, const std::string& what);
};

struct NamedDomain {
  std::string name;
  std::shared_ptr<const Domain> domain;
};

/// Fixed descriptors exercised by the suites, n in {1, 2}.
std::vector<NamedDomain> standard_domains();
/// Subset used for the Whitney checks.
std::vector<NamedDomain> whitney_domains();

/// Shortcut metric axioms, nearest complement points, box distances.
SuiteResult metric_suite(std::uint64_t seed, std::size_t triples = 10000);
/// wb_tuples against the exhaustive oracle and against padded W2.
SuiteResult isometry_suite(std::uint64_t seed, std::size_t pairs = 200);
/// Cost inequalities of both coupling transforms.
SuiteResult coupling_suite(std::uint64_t seed, std::size_t couplings = 1000);
/// Whitney properties on cubes touching sampled points; pair estimates.
SuiteResult whitney_suite(std::uint64_t seed, std::size_t points = 10000,
                          std::size_t pairs = 10000);
/// Properties (1)-(6) of the localization maps.
SuiteResult local_map_suite(std::uint64_t seed, std::size_t samples = 10000);
/// 1-Lipschitz bound and xi(0) = 0 for the sorted-projection map.
SuiteResult xi_suite(std::uint64_t seed, std::size_t pairs = 1000);

/// The three experiment-derived criteria: sandwich, certificate, zeta bound.
SuiteResult sandwich_suite(const std::vector<PairEvaluation>& rows);
SuiteResult certificate_suite(const std::vector<PairEvaluation>& rows);
SuiteResult zeta_suite(const ExperimentConfig& config, const std::vector<PairEvaluation>& rows);

/// Pairwise shortcut distances of the non-doubling construction.
SuiteResult witness_suite(std::size_t count = 20, double epsilon = 0.01);
/// Barcode distances against the oracle on small diagrams.
SuiteResult barcode_suite(std::uint64_t seed, std::size_t pairs = 200);

/// Default configuration of the embedding experiment used by verification:
/// the open unit square, m = 3, 500 pairs.
ExperimentConfig default_experiment(std::uint64_t seed);

/// Runs every suite. `constants` is normally Constants::for_dimension(2).
std::vector<SuiteResult> run_all(std::uint64_t seed, const Constants& constants);

}  // namespace wbembed::suites

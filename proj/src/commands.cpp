#include "wbembed/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "wbembed/barcode.hpp"
#include "wbembed/error.hpp"
#include "wbembed/io.hpp"
#include "wbembed/suites.hpp"
#include "wbembed/witness.hpp"

namespace wbembed::cli {

namespace {

using io::format_double;
using io::json;

UnorderedTuple load_tuple(const std::string& file, const std::shared_ptr<const Domain>& domain) {
  const json j = io::read_json_file(file);
  return domain ? io::parse_tuple(j, domain) : io::parse_tuple(j);
}

std::shared_ptr<const Domain> optional_domain(const std::optional<std::string>& text) {
  if (!text) return nullptr;
  return std::make_shared<const Domain>(io::parse_domain_argument(*text));
}

}  // namespace

int cmd_distance(const std::string& file_a, const std::string& file_b, double exponent,
                 const std::optional<std::string>& domain, std::ostream& out) {
  const auto dom = optional_domain(domain);
  const auto a = load_tuple(file_a, dom);
  const auto b = load_tuple(file_b, dom);
  if (!(a.domain() == b.domain())) throw Error("distance: tuple files use different domains");
  out << format_double(wb_tuples(a, b, exponent), 12) << '\n';
  return kSuccess;
}

int cmd_embed(const std::string& file, std::size_t m, int density,
              const std::optional<std::string>& domain, std::ostream& out) {
  const auto p = load_tuple(file, optional_domain(domain));
  if (p.interior_count() > m) {
    throw Error("embed: tuple has " + std::to_string(p.interior_count()) + " points, more than m");
  }
  WhitneyDecomposition w(p.domain_ptr());
  const auto family = DirectionFamily::standard(p.domain().dimension() + 1, density);
  out << io::embedding_to_json(zeta(w, family, p, m)).dump() << '\n';
  return kSuccess;
}

int cmd_distortion_experiment(const ExperimentConfig& config, std::ostream& report,
                              std::ostream& out) {
  const auto constants = Constants::for_dimension(config.domain->dimension());
  const auto rows = run_embedding_experiment(config, constants);
  const auto summary = summarize(config, rows);

  report << "# domain " << io::domain_to_json(*config.domain).dump() << '\n'
         << "# m " << config.m << '\n'
         << "# exponent " << format_double(config.exponent) << '\n'
         << "# samples " << config.samples << '\n'
         << "# seed " << config.seed << '\n'
         << "# directions " << config.direction_density << '\n'
         << "# c0 " << format_double(constants.c0) << '\n'
         << "# c2 " << format_double(constants.c2) << '\n'
         << "index,size_p,size_q,M,wb2,w2_padded,t_squared,lower_bound,upper_bound,"
            "lower_ratio,upper_ratio,zeta_distance,zeta_ratio,certificate_ok\n";
  for (const auto& r : rows) {
    const double w2sq = r.w2_padded * r.w2_padded;
    const double lower_ratio = r.t_squared > 0.0 ? r.lower_bound / r.t_squared : 0.0;
    const double upper_ratio = w2sq > 0.0 ? r.t_squared / w2sq : 0.0;
    const double zeta_ratio = r.wb2 > 0.0 ? r.zeta_distance / r.wb2 : 0.0;
    report << r.index << ',' << r.size_p << ',' << r.size_q << ',' << r.padded_size << ','
           << format_double(r.wb2) << ',' << format_double(r.w2_padded) << ','
           << format_double(r.t_squared) << ',' << format_double(r.lower_bound) << ','
           << format_double(r.upper_bound) << ',' << format_double(lower_ratio) << ','
           << format_double(upper_ratio) << ',' << format_double(r.zeta_distance) << ','
           << format_double(zeta_ratio) << ',' << (r.certificate_ok ? 1 : 0) << '\n';
  }

  out << "pairs " << summary.pairs << '\n'
      << "sandwich_violations " << summary.sandwich_violations << '\n'
      << "certificate_failures " << summary.certificate_failures << '\n'
      << "zeta_violations " << summary.zeta_violations << '\n'
      << "zeta_ratio_min " << format_double(summary.min_zeta_ratio) << '\n'
      << "zeta_ratio_max " << format_double(summary.max_zeta_ratio) << '\n'
      << "empirical_distortion " << format_double(summary.empirical_distortion) << '\n'
      << "m_pow_n_plus_5_2 " << format_double(summary.distortion_shape) << '\n';

  int status = kSuccess;
  for (const auto& r : rows) {
    if (r.lower_ok && r.upper_ok && r.certificate_ok && r.zeta_ok) continue;
    status = kViolation;
    out << "violation pair " << r.index << ": t_squared " << format_double(r.t_squared)
        << " bounds [" << format_double(r.lower_bound) << ", " << format_double(r.upper_bound)
        << "] zeta " << format_double(r.zeta_distance) << " wb2 " << format_double(r.wb2);
    if (!r.certificate_error.empty()) out << " certificate: " << r.certificate_error;
    out << '\n';
  }
  return status;
}

int cmd_nondoubling_witness(const Domain& domain, std::size_t count, double epsilon,
                            std::ostream& out) {
  const auto wit = nondoubling_witness(domain, count, epsilon);
  json j{{"domain", io::domain_to_json(domain)},
         {"points", wit.points},
         {"boundary_count", 0},
         {"epsilon", epsilon},
         {"max_pair_error", wit.max_pair_error},
         {"max_boundary_error", wit.max_boundary_error}};
  out << j.dump(2) << '\n';
  return wit.max_pair_error <= 1e-9 ? kSuccess : kViolation;
}

int cmd_barcode(const std::vector<std::string>& files, const BarcodeOptions& options,
                std::ostream& out) {
  if (files.empty()) throw Error("barcode: no input files");
  std::vector<BarcodeDiagram> diagrams;
  for (const auto& f : files) diagrams.push_back(read_barcode_file(f));
  const auto matrix = barcode_distance_matrix(diagrams, options.exponent);

  out << "diagram";
  for (const auto& d : diagrams) out << ',' << d.name;
  out << '\n';
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    out << diagrams[i].name;
    for (double v : matrix[i]) out << ',' << format_double(v, 12);
    out << '\n';
  }
  if (!options.embed) return kSuccess;

  std::size_t m = 1;
  for (const auto& d : diagrams) m = std::max(m, d.pairs.size());
  if (options.m) {
    if (*options.m < m) throw Error("barcode: --m is smaller than the largest diagram");
    m = *options.m;
  }
  WhitneyDecomposition w(barcode_domain());
  const auto family = DirectionFamily::standard(3, options.density);
  std::vector<SparseEmbeddingVector> vectors;
  for (const auto& d : diagrams) {
    vectors.push_back(zeta(w, family, barcode_tuple(d), m));
    out << json{{"diagram", d.name}, {"zeta", io::embedding_to_json(vectors.back())}}.dump() << '\n';
  }
  out << "pair,wb,zeta,ratio\n";
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    for (std::size_t j = i + 1; j < diagrams.size(); ++j) {
      const double z = embedding_distance(vectors[i], vectors[j]);
      const double ratio = matrix[i][j] > 0.0 ? z / matrix[i][j] : 0.0;
      out << diagrams[i].name << '|' << diagrams[j].name << ',' << format_double(matrix[i][j], 12)
          << ',' << format_double(z, 12) << ',' << format_double(ratio, 12) << '\n';
    }
  }
  return kSuccess;
}

int cmd_verify(std::uint64_t seed, double c0_scale, std::ostream& out) {
  auto constants = Constants::for_dimension(2);
  constants.c0 *= c0_scale;

  suites::SuiteResult table{"constants"};
  table.check(constants.c0 == 2.0 * 81.0 * 144.0 * 3.0, "c0 differs from 2*81*144*3");
  table.check(std::abs(constants.c2 - 921600.0) <= 1e-12 * 921600.0, "c2 differs from 100*n*(48 sqrt n)^2");

  auto results = suites::run_all(seed, constants);
  results.insert(results.begin(), table);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed();
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, "
        << r.failures << " failures)";
    if (!r.detail.empty()) out << ": " << r.detail;
    out << '\n';
  }
  return ok ? kSuccess : kViolation;
}

int cmd_whitney(const Domain& domain, const Box& region, int min_generation, std::ostream& out) {
  WhitneyDecomposition w(std::make_shared<const Domain>(domain));
  for (const auto& q : w.cubes_in_box(region, min_generation)) {
    json neighbors = json::array();
    for (const auto& r : w.neighbors(q)) {
      if (r != q) neighbors.push_back(r.key());
    }
    out << json{{"k", q.generation}, {"corner", q.corner}, {"neighbors", neighbors}}.dump() << '\n';
  }
  return kSuccess;
}

}  // namespace wbembed::cli

#include "wbembed/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wbembed/sampling.hpp"

namespace wbembed {

namespace {

bool leq(double a, double b) { return a <= b + 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

std::vector<PairEvaluation> run_embedding_experiment(const ExperimentConfig& config,
                                                     const Constants& constants) {
  if (!config.domain) throw Error("experiment: missing domain");
  if (config.m == 0) throw Error("experiment: m must be positive");
  WhitneyDecomposition w(config.domain);
  const auto family = DirectionFamily::standard(config.domain->dimension() + 1,
                                                config.direction_density);
  Sampler sampler(config.seed);
  const std::size_t big_m = 2 * config.m;
  const double cube = static_cast<double>(big_m * big_m * big_m);

  std::vector<PairEvaluation> rows;
  rows.reserve(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i) {
    const auto p = sampler.tuple_up_to(config.domain, config.m);
    const auto q = sampler.tuple_up_to(config.domain, config.m);
    const auto pp = iota_pad(p, config.m);
    const auto qq = iota_pad(q, config.m);

    PairEvaluation r;
    r.index = i;
    r.size_p = p.interior_count();
    r.size_q = q.interior_count();
    r.padded_size = big_m;
    r.wb2 = wb_tuples(p, q, 2.0);
    r.w2_padded = w2_tuples(pp, qq, 2.0);
    r.t_squared = t_distance_squared(phi_star(w, pp), phi_star(w, qq));
    const double w2sq = r.w2_padded * r.w2_padded;
    r.lower_bound = w2sq / (constants.c2 * cube);
    r.upper_bound = constants.c0 * w2sq;
    r.lower_ok = leq(r.lower_bound, r.t_squared);
    r.upper_ok = leq(r.t_squared, r.upper_bound);
    r.zeta_distance = embedding_distance(zeta(w, family, p, config.m), zeta(w, family, q, config.m));
    r.zeta_ok = leq(r.zeta_distance, std::sqrt(constants.c0) * r.wb2);
    try {
      const auto cert = lower_bound_certificate(w, pp, qq, constants);
      r.certificate_bound = cert.lower_bound;
      r.certificate_ok = leq(cert.lower_bound, cert.sum_all) &&
                         std::abs(cert.sum_all - r.t_squared) <=
                             1e-9 * std::max(1.0, r.t_squared) &&
                         std::abs(cert.lower_bound - r.lower_bound) <=
                             1e-9 * std::max(1e-300, r.lower_bound);
      if (!r.certificate_ok) r.certificate_error = "certificate disagrees with the direct sandwich";
    } catch (const CertificateError& e) {
      r.certificate_error = e.what();
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

ExperimentSummary summarize(const ExperimentConfig& config,
                            const std::vector<PairEvaluation>& rows) {
  ExperimentSummary s;
  s.pairs = rows.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& r : rows) {
    if (!r.lower_ok || !r.upper_ok) ++s.sandwich_violations;
    if (!r.certificate_ok) ++s.certificate_failures;
    if (!r.zeta_ok) ++s.zeta_violations;
    if (r.wb2 > 0.0) {
      const double ratio = r.zeta_distance / r.wb2;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  if (hi > 0.0) {
    s.min_zeta_ratio = lo;
    s.max_zeta_ratio = hi;
    s.empirical_distortion = hi / lo;
  }
  const double n = static_cast<double>(config.domain->dimension());
  s.distortion_shape = std::pow(static_cast<double>(config.m), n + 2.5);
  return s;
}

}  // namespace wbembed

#pragma once

#include <cstddef>
#include <vector>

#include "wbembed/embedding.hpp"

namespace wbembed {

/// Per-cube data of the lower-bound construction.
struct CubeCertificate {
  DyadicCube cube;
  std::vector<std::size_t> sigma;  ///< optimal matching of localized p to q
  double w2_squared = 0.0;         ///< W2^2 of the localized tuples
  int annulus = 0;                 ///< smallest empty annulus index r
  double inflated_radius = 0.0;    ///< r * l(Q) / (24 M): Q-hat = B(Q, radius)
  bool close_match = false;        ///< W2 < c1 l(Q) / M
  std::vector<std::size_t> p_in_inflated;  ///< p indices inside Q-hat
};

/// Witness that sum_Q W2^2(phi*_Q p, phi*_Q q) >= W2(p, q)^2 / (c2 M^3),
/// built by an explicit global matching tau.
struct LowerBoundCertificate {
  std::size_t tuple_size = 0;                ///< M
  std::vector<CubeCertificate> cubes;        ///< union of supports, sorted
  std::vector<std::size_t> ordered_matched;  ///< indices into cubes: C'' by decreasing side
  std::vector<std::size_t> p_in_region;      ///< p^{-1}(E), ascending
  std::vector<std::size_t> tau;              ///< full bijection p-index -> q-index

  double sum_all = 0.0;            ///< sum over all cubes of W2^2
  double sum_close = 0.0;          ///< over C'
  double sum_far = 0.0;            ///< over the rest
  double region_cost = 0.0;        ///< sum_{k in p^{-1}(E)} |p_k - q_tau(k)|^2
  double boundary_cost = 0.0;      ///< sum_{k outside} (d(p_k) + d(q_tau(k)))^2
  double tau_shortcut_cost = 0.0;  ///< sum_k delta(p_k, q_tau(k))^2
  double w2_squared = 0.0;         ///< W2(p, q)^2 over the shortcut metric
  double lower_bound = 0.0;        ///< w2_squared / (c2 M^3)
};

/// Builds and verifies the certificate for two tuples of equal size over
/// the one-point completion. Throws CertificateError if any step that must
/// hold by construction fails (no empty annulus, broken index bijection,
/// violated inequality).
LowerBoundCertificate lower_bound_certificate(const WhitneyDecomposition& w,
                                              const UnorderedTuple& p, const UnorderedTuple& q,
                                              const Constants& constants);

}  // namespace wbembed

#pragma once

#include "ccm/degrees.hpp"

namespace ccm {

/// p^eps_i = rho^{-1} (1 - eps / (i 2^{i+2})) p_i for i <= M, zero beyond.
struct TruncationResult {
  DegreeDistribution p_eps;
  double rho = 1.0;
  Degree M = 0;
  double eps = 0.0;
};

/// Enlarged type sequence whose configuration-model giant has type close to
/// (and below) n p.
struct EmbeddingPlan {
  TypeSequence N;
  DegreeDistribution p_eps;
  DegreeDistribution q_eps;
  double beta_eps = 0.0;
  double gamma = 1.0;
  double rho = 1.0;
  Degree M = 0;
  Count n_target = 0;
  double eps = 0.0;
};

TruncationResult truncate_p(const DegreeDistribution& p, double eps);

/// N_i = floor(q^eps_i * gamma * rho * n); N_1 is decremented when the total
/// degree comes out odd.
EmbeddingPlan build_embedding(const DegreeDistribution& p, double eps, Count n);

/// Same construction without truncation: the giant of the configuration model
/// on N has expected type n p. Finite-support p only.
EmbeddingPlan build_embedding_untruncated(const DegreeDistribution& p, Count n);

/// m <= n elementwise and l_m > (1 - eps) l_n.
bool in_nps(const TypeSequence& m, const TypeSequence& n, double eps);

}  // namespace ccm

#pragma once

#include "ccm/degrees.hpp"

namespace ccm {

inline constexpr double kDefaultBetaTolerance = 1e-12;

/// Root of the extinction equation together with its certificate.
struct BetaSolution {
  double beta = 0.0;
  double residual = 0.0;     ///< |F(p, beta)| at return
  double upper_bound = 1.0;  ///< a-priori bound 1/2 + (1 - 2/mu)/2
};

struct GiantDegrees {
  DegreeDistribution q;
  double gamma = 1.0;  ///< sum_i p_i / (1 - beta^i)
};

struct RateResult {
  double K = 0.0;  ///< nats per vertex
  double beta = 0.0;
  DegreeDistribution q;
  double gamma = 1.0;
  double beta_residual = 0.0;
  double survival_residual = 0.0;
};

/// Reduced extinction equation
///   F(p, b) = sum_{k>=2} (b - b^k) / (1 - b^{k+1}) p*_k - p*_0,
/// where p* is the size-biased law of p minus one. Strictly increasing in b,
/// with F(p, 0) = -p*_0 and F(p, 1-) = 1 - 2/mu_p.
double beta_equation(const DegreeDistribution& p, double beta);
double beta_equation(const SizeBiasedDistribution& p_star, double beta);

/// Bisection on F over (p*_0/2, 1/2 + (1 - 2/mu)/2). If p_1 = 0 the root is 0.
BetaSolution solve_beta(const DegreeDistribution& p, double tol = kDefaultBetaTolerance);

/// q_k = (p_k / (1 - beta^k)) / gamma.
GiantDegrees giant_degree_distribution(const DegreeDistribution& p, double beta);

/// Offspring law of the non-root individuals of the unimodular tree.
SizeBiasedDistribution unimodular_offspring(const DegreeDistribution& q);

/// |sum_k q*_k beta^k - beta|; zero exactly when beta is the extinction
/// probability of the q* branching process.
double survival_residual(const DegreeDistribution& q, double beta);

/// K(p) = (mu/2) log(1 - beta^2) - sum_k p_k log(1 - beta^k).
RateResult rate_K(const DegreeDistribution& p, double tol = kDefaultBetaTolerance);

}  // namespace ccm

#include "ccm/rate.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ccm/errors.hpp"

namespace ccm {

double beta_equation(const SizeBiasedDistribution& p_star, double beta) {
  if (!(beta >= 0.0) || !(beta < 1.0)) {
    throw Error(ErrorCode::DomainError, "beta must lie in [0, 1), got " + std::to_string(beta));
  }
  double value = -p_star[0];
  for (const auto& [k, w] : p_star.weights()) {
    if (k < 2) continue;
    const double bk = std::pow(beta, static_cast<double>(k));
    value += (beta - bk) / (1.0 - bk * beta) * w;
  }
  return value;
}

double beta_equation(const DegreeDistribution& p, double beta) {
  return beta_equation(size_biased(p), beta);
}

BetaSolution solve_beta(const DegreeDistribution& p, double tol) {
  const double mu = p.mean();
  if (!(mu > 2.0)) {
    throw Error(ErrorCode::SubcriticalDistribution,
                "mean degree " + std::to_string(mu) + " must exceed 2");
  }
  const auto p_star = size_biased(p);
  const double a = 1.0 - 2.0 / mu;
  BetaSolution sol;
  sol.upper_bound = 1.0 - a / 2.0;
  if (p_star[0] == 0.0) {
    sol.beta = 0.0;
    sol.residual = 0.0;
    return sol;
  }

  double lo = p_star[0] / 2.0;
  double hi = sol.upper_bound;
  // F(hi) >= 0 analytically; guard against round-off at the boundary
  while (beta_equation(p_star, hi) <= 0.0 && hi < 1.0 - 1e-15) hi = 0.5 * (hi + 1.0);

  double mid = 0.5 * (lo + hi);
  double f_mid = beta_equation(p_star, mid);
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(f_mid) <= tol && hi - lo < 1e-15) break;
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    const double next = 0.5 * (lo + hi);
    if (next == mid) break;
    mid = next;
    f_mid = beta_equation(p_star, mid);
  }
  sol.beta = mid;
  sol.residual = std::abs(f_mid);
  return sol;
}

GiantDegrees giant_degree_distribution(const DegreeDistribution& p, double beta) {
  std::map<Degree, double> raw;
  double gamma = 0.0;
  for (const auto& [k, pk] : p.weights()) {
    const double w = pk / -std::expm1(static_cast<double>(k) * std::log(beta));
    raw.emplace(k, w);
    gamma += w;
  }
  for (auto& [k, w] : raw) w /= gamma;
  return {DegreeDistribution(std::move(raw)), gamma};
}

SizeBiasedDistribution unimodular_offspring(const DegreeDistribution& q) { return size_biased(q); }

double survival_residual(const DegreeDistribution& q, double beta) {
  return std::abs(unimodular_offspring(q).pgf(beta) - beta);
}

RateResult rate_K(const DegreeDistribution& p, double tol) {
  if (p[1] <= 0.0) {
    throw Error(ErrorCode::Degree1Required, "the rate is only positive when p_1 > 0");
  }
  const auto sol = solve_beta(p, tol);
  const double beta = sol.beta;
  double K = 0.5 * p.mean() * std::log1p(-beta * beta);
  for (const auto& [k, pk] : p.weights()) {
    K -= pk * std::log1p(-std::pow(beta, static_cast<double>(k)));
  }
  auto giant = giant_degree_distribution(p, beta);
  RateResult out;
  out.K = K;
  out.beta = beta;
  out.gamma = giant.gamma;
  out.beta_residual = sol.residual;
  out.survival_residual = survival_residual(giant.q, beta);
  out.q = std::move(giant.q);
  return out;
}

}  // namespace ccm

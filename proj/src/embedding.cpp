#include "ccm/embedding.hpp"

#include <cmath>
#include <string>

#include "ccm/errors.hpp"
#include "ccm/rate.hpp"

namespace ccm {

namespace {

TypeSequence enlarged_type(const DegreeDistribution& q, double scale) {
  std::map<Degree, Count> counts;
  Count total = 0;
  for (const auto& [k, qk] : q.weights()) {
    const auto c = static_cast<Count>(std::floor(qk * scale));
    counts[k] = c;
    total += static_cast<Count>(k) * c;
  }
  if (total % 2 != 0) {
    for (auto& [k, c] : counts) {
      if (k % 2 == 1 && c > 0) {
        --c;
        break;
      }
    }
  }
  return TypeSequence(std::move(counts));
}

EmbeddingPlan plan_from(const DegreeDistribution& p_eps, double rho, Degree M, double eps,
                        Count n) {
  const auto sol = solve_beta(p_eps);
  auto giant = giant_degree_distribution(p_eps, sol.beta);
  EmbeddingPlan plan;
  plan.N = enlarged_type(giant.q, giant.gamma * rho * static_cast<double>(n));
  plan.p_eps = p_eps;
  plan.q_eps = std::move(giant.q);
  plan.beta_eps = sol.beta;
  plan.gamma = giant.gamma;
  plan.rho = rho;
  plan.M = M;
  plan.n_target = n;
  plan.eps = eps;
  return plan;
}

}  // namespace

TruncationResult truncate_p(const DegreeDistribution& p, double eps) {
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw Error(ErrorCode::DomainError, "eps must lie in (0, 1)");
  }
  const double mu = p.mean();
  if (!(mu > 2.0)) {
    throw Error(ErrorCode::SubcriticalDistribution,
                "mean degree " + std::to_string(mu) + " must exceed 2");
  }
  if (eps >= (mu - 2.0) / 4.0) {
    throw Error(ErrorCode::EpsilonTooLarge,
                "eps must be below (mu_p - 2)/4 = " + std::to_string((mu - 2.0) / 4.0));
  }

  // smallest M with sum_{k>M} k p_k < eps/2
  double tail = mu;
  Degree M = 0;
  for (const auto& [k, pk] : p.weights()) {
    if (tail < eps / 2.0) break;
    tail -= static_cast<double>(k) * pk;
    M = k;
  }

  std::map<Degree, double> w;
  double rho = 0.0;
  for (const auto& [k, pk] : p.weights()) {
    if (k > M) break;
    const double factor = 1.0 - eps / (static_cast<double>(k) * std::ldexp(1.0, static_cast<int>(k) + 2));
    w.emplace(k, factor * pk);
    rho += factor * pk;
  }
  for (auto& [k, v] : w) v /= rho;

  TruncationResult out{DegreeDistribution(std::move(w)), rho, M, eps};
  if (!(out.p_eps.mean() > 2.0)) {
    throw Error(ErrorCode::EpsilonTooLarge, "truncated distribution is no longer supercritical");
  }
  return out;
}

EmbeddingPlan build_embedding(const DegreeDistribution& p, double eps, Count n) {
  const auto trunc = truncate_p(p, eps);
  return plan_from(trunc.p_eps, trunc.rho, trunc.M, eps, n);
}

EmbeddingPlan build_embedding_untruncated(const DegreeDistribution& p, Count n) {
  return plan_from(p, 1.0, p.max_degree(), 0.0, n);
}

bool in_nps(const TypeSequence& m, const TypeSequence& n, double eps) {
  return m.is_below(n) &&
         static_cast<double>(m.total_degree()) > (1.0 - eps) * static_cast<double>(n.total_degree());
}

}  // namespace ccm

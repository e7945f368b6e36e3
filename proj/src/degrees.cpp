#include "ccm/degrees.hpp"

#include <cmath>
#include <string>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

constexpr double kSumTolerance = 1e-12;

}  // namespace

DegreeDistribution::DegreeDistribution(std::map<Degree, double> weights) {
  double total = 0.0;
  for (const auto& [k, w] : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::InvalidDistribution,
                  "weight for degree " + std::to_string(k) + " is negative or not finite");
    }
    if (w == 0.0) continue;
    if (k == 0) throw Error(ErrorCode::ZeroDegree, "degree distributions may not put mass on 0");
    weights_.emplace(k, w);
    total += w;
    mean_ += static_cast<double>(k) * w;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::InvalidDistribution,
                "weights sum to " + std::to_string(total) + ", expected 1");
  }
}

double DegreeDistribution::operator[](Degree k) const noexcept {
  auto it = weights_.find(k);
  return it == weights_.end() ? 0.0 : it->second;
}

Degree DegreeDistribution::max_degree() const noexcept {
  return weights_.empty() ? 0 : weights_.rbegin()->first;
}

SizeBiasedDistribution::SizeBiasedDistribution(std::map<Degree, double> weights,
                                               double parent_mean)
    : weights_(std::move(weights)), parent_mean_(parent_mean) {}

double SizeBiasedDistribution::operator[](Degree k) const noexcept {
  auto it = weights_.find(k);
  return it == weights_.end() ? 0.0 : it->second;
}

double SizeBiasedDistribution::pgf(double x) const noexcept {
  double s = 0.0;
  for (const auto& [k, w] : weights_) s += w * std::pow(x, static_cast<double>(k));
  return s;
}

TypeSequence::TypeSequence(std::map<Degree, Count> counts) {
  for (const auto& [k, c] : counts) {
    if (c == 0) continue;
    if (k == 0) throw Error(ErrorCode::ZeroDegree, "type sequences may not contain degree 0");
    counts_.emplace(k, c);
    vertices_ += c;
    total_degree_ += static_cast<Count>(k) * c;
  }
  if (total_degree_ % 2 != 0) {
    throw Error(ErrorCode::OddTotalDegree,
                "total degree " + std::to_string(total_degree_) + " is odd");
  }
}

Count TypeSequence::operator[](Degree k) const noexcept {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<Degree> TypeSequence::degrees() const {
  std::vector<Degree> out;
  out.reserve(vertices_);
  for (const auto& [k, c] : counts_) out.insert(out.end(), c, k);
  return out;
}

bool TypeSequence::is_below(const TypeSequence& other) const noexcept {
  for (const auto& [k, c] : counts_) {
    if (c > other[k]) return false;
  }
  return true;
}

TypeSequence difference(const TypeSequence& whole, const TypeSequence& sub) {
  if (!sub.is_below(whole)) {
    throw Error(ErrorCode::InvalidInput, "difference requires sub <= whole elementwise");
  }
  std::map<Degree, Count> out = whole.counts();
  for (const auto& [k, c] : sub.counts()) out[k] -= c;
  return TypeSequence(std::move(out));
}

TypeSequence type_from_degrees(std::span<const Degree> degrees) {
  std::map<Degree, Count> counts;
  Count total = 0;
  for (Degree d : degrees) {
    if (d == 0) throw Error(ErrorCode::ZeroDegree, "degree sequence contains a 0");
    ++counts[d];
    total += d;
  }
  if (total % 2 != 0) {
    throw Error(ErrorCode::OddTotalDegree, "degree sum " + std::to_string(total) + " is odd");
  }
  return TypeSequence(std::move(counts));
}

DegreeDistribution empirical_distribution(const TypeSequence& n) {
  if (n.empty()) throw Error(ErrorCode::EmptySequence, "type sequence has no vertices");
  std::map<Degree, double> w;
  const auto total = static_cast<double>(n.vertices());
  for (const auto& [k, c] : n.counts()) w.emplace(k, static_cast<double>(c) / total);
  return DegreeDistribution(std::move(w));
}

SizeBiasedDistribution size_biased(const DegreeDistribution& p) {
  const double mu = p.mean();
  if (!(mu > 0.0)) throw Error(ErrorCode::InvalidDistribution, "size-biasing needs a positive mean");
  std::map<Degree, double> w;
  for (const auto& [k, pk] : p.weights()) {
    w.emplace(k - 1, static_cast<double>(k) * pk / mu);
  }
  return SizeBiasedDistribution(std::move(w), mu);
}

TypeSequence integerize(const DegreeDistribution& p, Count n) {
  std::map<Degree, Count> counts;
  Count total = 0;
  for (const auto& [k, pk] : p.weights()) {
    const auto c = static_cast<Count>(std::llround(pk * static_cast<double>(n)));
    counts[k] = c;
    total += static_cast<Count>(k) * c;
  }
  if (total % 2 != 0) {
    // some odd degree class is nonempty; prefer degree 1
    for (auto& [k, c] : counts) {
      if (k % 2 == 1 && c > 0) {
        --c;
        break;
      }
    }
  }
  return TypeSequence(std::move(counts));
}

}  // namespace ccm

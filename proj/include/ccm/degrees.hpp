#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace ccm {

using Degree = std::uint32_t;
using Count = std::uint64_t;

/// Probability weights on degrees k >= 1 with finite support.
///
/// Zero weights are dropped on construction, so `weights()` iterates the
/// support only. The weights must sum to one within 1e-12.
class DegreeDistribution {
 public:
  DegreeDistribution() = default;
  explicit DegreeDistribution(std::map<Degree, double> weights);
  DegreeDistribution(std::initializer_list<std::pair<const Degree, double>> weights)
      : DegreeDistribution(std::map<Degree, double>(weights)) {}

  const std::map<Degree, double>& weights() const noexcept { return weights_; }
  double operator[](Degree k) const noexcept;
  double mean() const noexcept { return mean_; }
  Degree max_degree() const noexcept;
  bool empty() const noexcept { return weights_.empty(); }

  friend bool operator==(const DegreeDistribution&, const DegreeDistribution&) = default;

 private:
  std::map<Degree, double> weights_;
  double mean_ = 0.0;
};

/// Offspring law k -> (k+1) w_{k+1} / mean(w), supported on k >= 0.
class SizeBiasedDistribution {
 public:
  SizeBiasedDistribution() = default;
  SizeBiasedDistribution(std::map<Degree, double> weights, double parent_mean);

  const std::map<Degree, double>& weights() const noexcept { return weights_; }
  double operator[](Degree k) const noexcept;
  double parent_mean() const noexcept { return parent_mean_; }

  /// Probability generating function sum_k w_k x^k.
  double pgf(double x) const noexcept;

 private:
  std::map<Degree, double> weights_;
  double parent_mean_ = 0.0;
};

/// Vertex counts per degree class. The total degree is always even.
class TypeSequence {
 public:
  TypeSequence() = default;
  explicit TypeSequence(std::map<Degree, Count> counts);
  TypeSequence(std::initializer_list<std::pair<const Degree, Count>> counts)
      : TypeSequence(std::map<Degree, Count>(counts)) {}

  const std::map<Degree, Count>& counts() const noexcept { return counts_; }
  Count operator[](Degree k) const noexcept;
  Count vertices() const noexcept { return vertices_; }
  Count total_degree() const noexcept { return total_degree_; }
  bool empty() const noexcept { return vertices_ == 0; }

  /// Degrees sorted ascending; vertex i of a configuration has degree `degrees()[i]`.
  std::vector<Degree> degrees() const;

  /// Elementwise m <= n.
  bool is_below(const TypeSequence& other) const noexcept;

  friend bool operator==(const TypeSequence&, const TypeSequence&) = default;
  friend auto operator<=>(const TypeSequence& a, const TypeSequence& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::map<Degree, Count> counts_;
  Count vertices_ = 0;
  Count total_degree_ = 0;
};

/// Elementwise difference; requires `sub.is_below(whole)`.
TypeSequence difference(const TypeSequence& whole, const TypeSequence& sub);

TypeSequence type_from_degrees(std::span<const Degree> degrees);
DegreeDistribution empirical_distribution(const TypeSequence& n);
SizeBiasedDistribution size_biased(const DegreeDistribution& p);

/// Integerised n_k = round(n p_k), then n_1 decremented if the total degree
/// is odd. Used wherever a concrete target type is needed for a given size.
TypeSequence integerize(const DegreeDistribution& p, Count n);

}  // namespace ccm

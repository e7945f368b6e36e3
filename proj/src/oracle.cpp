#include "ccm/oracle.hpp"

#include <map>
#include <string>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

void require_enumerable(const TypeSequence& t, Count limit) {
  if (t.total_degree() > limit) {
    throw Error(ErrorCode::TooLarge, "total degree " + std::to_string(t.total_degree()) +
                                         " exceeds the enumeration limit " + std::to_string(limit));
  }
}

BigInt factorial(unsigned k) {
  BigInt out = 1;
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

BigInt binomial(Count n, Count k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (Count i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw Error(ErrorCode::NonIntegerResult, "simple configuration count is not divisible by the "
                                             "stub symmetry factor");
  }
  return q;
}

struct Classification {
  bool connected = false;
  bool simple = false;
};

/// Scratch state for classifying matchings of one type sequence.
class MatchingClassifier {
 public:
  explicit MatchingClassifier(const TypeSequence& t) : layout_(t), sets_(layout_.vertex_count()) {
    multiplicity_.assign(layout_.vertex_count() * layout_.vertex_count(), 0);
  }

  const StubLayout& layout() const { return layout_; }

  Classification classify(std::span<const StubId> partner) {
    const auto n = layout_.vertex_count();
    sets_.reset(n);
    std::fill(multiplicity_.begin(), multiplicity_.end(), 0);
    Classification out;
    out.simple = true;
    std::size_t merges = 0;
    for (StubId s = 0; s < partner.size(); ++s) {
      if (s > partner[s]) continue;
      const auto u = layout_.owner(s);
      const auto v = layout_.owner(partner[s]);
      if (u == v) out.simple = false;
      if (++multiplicity_[u * n + v] > 1) out.simple = false;
      if (u != v) ++multiplicity_[v * n + u];
      if (sets_.find(u) != sets_.find(v)) {
        sets_.unite(u, v);
        ++merges;
      }
    }
    out.connected = n > 0 && merges + 1 == n;
    return out;
  }

  /// Type sequence of each component of the matching.
  std::vector<TypeSequence> component_types(std::span<const StubId> partner) {
    const auto n = layout_.vertex_count();
    sets_.reset(n);
    for (StubId s = 0; s < partner.size(); ++s) {
      sets_.unite(layout_.owner(s), layout_.owner(partner[s]));
    }
    std::map<std::uint32_t, std::map<Degree, Count>> by_root;
    for (VertexId v = 0; v < n; ++v) ++by_root[sets_.find(v)][layout_.degree(v)];
    std::vector<TypeSequence> out;
    out.reserve(by_root.size());
    for (auto& [root, counts] : by_root) out.emplace_back(std::move(counts));
    return out;
  }

 private:
  StubLayout layout_;
  DisjointSets sets_;
  std::vector<std::uint32_t> multiplicity_;
};

void match_from(std::vector<StubId>& partner, std::vector<bool>& paired, StubId lowest,
                const std::function<void(std::span<const StubId>)>& visit) {
  const auto size = static_cast<StubId>(partner.size());
  while (lowest < size && paired[lowest]) ++lowest;
  if (lowest == size) {
    visit(partner);
    return;
  }
  paired[lowest] = true;
  for (StubId other = lowest + 1; other < size; ++other) {
    if (paired[other]) continue;
    paired[other] = true;
    partner[lowest] = other;
    partner[other] = lowest;
    match_from(partner, paired, lowest + 1, visit);
    paired[other] = false;
  }
  paired[lowest] = false;
}

}  // namespace

BigInt count_configurations(const TypeSequence& t) {
  if (t.total_degree() % 2 != 0) throw Error(ErrorCode::OddTotalDegree, "odd total degree");
  BigInt out = 1;
  for (Count k = t.total_degree(); k > 1; k -= 2) out *= k - 1;
  return out;
}

BigInt type_binomial(const TypeSequence& n, const TypeSequence& m) {
  BigInt out = 1;
  for (const auto& [k, c] : m.counts()) out *= binomial(n[k], c);
  return out;
}

BigInt stub_symmetry(const TypeSequence& t) {
  BigInt out = 1;
  for (const auto& [k, c] : t.counts()) out *= boost::multiprecision::pow(factorial(k), static_cast<unsigned>(c));
  return out;
}

void for_each_matching(const TypeSequence& t,
                       const std::function<void(std::span<const StubId>)>& visit) {
  if (t.total_degree() % 2 != 0) throw Error(ErrorCode::OddTotalDegree, "odd total degree");
  std::vector<StubId> partner(t.total_degree());
  std::vector<bool> paired(t.total_degree(), false);
  match_from(partner, paired, 0, visit);
}

EnumerationReport enumerate_counts(const TypeSequence& t) {
  require_enumerable(t, kEnumerationLimit);
  EnumerationReport report;
  if (t.empty()) {
    report.total = 1;
    report.simple = 1;
    report.graphs = 1;
    return report;
  }
  MatchingClassifier classifier(t);
  std::uint64_t total = 0;
  std::uint64_t connected = 0;
  std::uint64_t simple = 0;
  std::uint64_t simple_connected = 0;
  for_each_matching(t, [&](std::span<const StubId> partner) {
    const auto c = classifier.classify(partner);
    ++total;
    connected += c.connected;
    simple += c.simple;
    simple_connected += c.connected && c.simple;
  });
  report.total = total;
  report.connected = connected;
  report.simple = simple;
  report.simple_connected = simple_connected;
  const auto symmetry = stub_symmetry(t);
  report.graphs = exact_quotient(report.simple, symmetry);
  report.connected_graphs = exact_quotient(report.simple_connected, symmetry);
  return report;
}

BigInt count_graphs(const TypeSequence& t) { return enumerate_counts(t).graphs; }

DecompositionSides decomposition_sides(const TypeSequence& n, const std::set<TypeSequence>& family) {
  require_enumerable(n, kDecompositionLimit);
  for (const auto& m : family) {
    if (!m.is_below(n)) throw Error(ErrorCode::InvalidInput, "family member is not below n");
  }

  std::map<TypeSequence, EnumerationReport> cache;
  auto report_for = [&](const TypeSequence& t) -> const EnumerationReport& {
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, enumerate_counts(t)).first;
    return it->second;
  };

  DecompositionSides sides;
  for (const auto& m : family) {
    const auto rest = difference(n, m);
    const auto choose = type_binomial(n, m);
    sides.configurations_lhs += choose * report_for(m).connected * report_for(rest).total;
    sides.simple_lhs += choose * report_for(m).simple_connected * report_for(rest).simple;
  }

  if (family.empty() || n.empty()) return sides;
  MatchingClassifier classifier(n);
  std::uint64_t rhs = 0;
  std::uint64_t simple_rhs = 0;
  for_each_matching(n, [&](std::span<const StubId> partner) {
    const bool simple = classifier.classify(partner).simple;
    std::uint64_t hits = 0;
    for (const auto& type : classifier.component_types(partner)) hits += family.count(type);
    rhs += hits;
    if (simple) simple_rhs += hits;
  });
  sides.configurations_rhs = rhs;
  sides.simple_rhs = simple_rhs;
  return sides;
}

bool decomposition_check(const TypeSequence& n, const std::set<TypeSequence>& family) {
  return decomposition_sides(n, family).holds();
}

std::vector<TypeSequence> all_type_sequences(Count max_total_degree) {
  std::vector<TypeSequence> out;
  std::map<Degree, Count> parts;
  // partitions of `remaining` into parts no larger than `largest`
  std::function<void(Count, Degree)> partition = [&](Count remaining, Degree largest) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (Degree k = std::min<Count>(largest, remaining); k >= 1; --k) {
      ++parts[k];
      partition(remaining - k, k);
      if (--parts[k] == 0) parts.erase(k);
    }
  };
  for (Count total = 2; total <= max_total_degree; total += 2) {
    partition(total, static_cast<Degree>(total));
  }
  return out;
}

std::vector<TypeSequence> sub_type_sequences(const TypeSequence& n) {
  std::vector<std::pair<Degree, Count>> classes(n.counts().begin(), n.counts().end());
  std::vector<TypeSequence> out;
  std::map<Degree, Count> current;
  std::function<void(std::size_t, Count)> walk = [&](std::size_t i, Count total) {
    if (i == classes.size()) {
      if (total > 0 && total % 2 == 0) out.emplace_back(current);
      return;
    }
    const auto [k, c] = classes[i];
    for (Count m = 0; m <= c; ++m) {
      current[k] = m;
      walk(i + 1, total + static_cast<Count>(k) * m);
    }
    current.erase(k);
  };
  walk(0, 0);
  return out;
}

}  // namespace ccm

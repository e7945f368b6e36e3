#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <set>
#include <span>

#include "ccm/confmodel.hpp"
#include "ccm/degrees.hpp"

namespace ccm {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr Count kEnumerationLimit = 16;     ///< max total degree for enumerate_counts
inline constexpr Count kDecompositionLimit = 14;   ///< max total degree for decomposition_check

struct EnumerationReport {
  BigInt total;
  BigInt connected;
  BigInt simple;
  BigInt simple_connected;
  BigInt graphs;
  BigInt connected_graphs;
};

/// (l - 1)!!, with the empty configuration counted once.
BigInt count_configurations(const TypeSequence& t);

/// prod_k C(n_k, m_k).
BigInt type_binomial(const TypeSequence& n, const TypeSequence& m);

/// prod_k (k!)^{n_k}: configurations per labelled simple graph.
BigInt stub_symmetry(const TypeSequence& t);

/// Visits every perfect matching of the stubs of `t`, always pairing the
/// lowest unpaired stub first. The span is indexed by stub.
void for_each_matching(const TypeSequence& t,
                       const std::function<void(std::span<const StubId>)>& visit);

EnumerationReport enumerate_counts(const TypeSequence& t);

BigInt count_graphs(const TypeSequence& t);

/// Both sides of the component decomposition identities for a family of types.
struct DecompositionSides {
  BigInt configurations_lhs;  ///< sum_m C(n,m) |C^conn_m| |C_{n-m}|
  BigInt configurations_rhs;  ///< sum over configurations of #components with type in family
  BigInt simple_lhs;          ///< same with simple configurations
  BigInt simple_rhs;

  bool holds() const { return configurations_lhs == configurations_rhs && simple_lhs == simple_rhs; }
};

DecompositionSides decomposition_sides(const TypeSequence& n, const std::set<TypeSequence>& family);

bool decomposition_check(const TypeSequence& n, const std::set<TypeSequence>& family);

/// Every type sequence with even total degree 2..max_total_degree.
std::vector<TypeSequence> all_type_sequences(Count max_total_degree);

/// Every nonempty m <= n with even total degree.
std::vector<TypeSequence> sub_type_sequences(const TypeSequence& n);

}  // namespace ccm

#pragma once

#include "json.hpp"

#include "ccm/census.hpp"
#include "ccm/degrees.hpp"
#include "ccm/embedding.hpp"
#include "ccm/oracle.hpp"
#include "ccm/rate.hpp"

namespace ccm {

using Json = nlohmann::json;

/// {"weights": {"1": 0.5, "4": 0.5}}
Json to_json(const DegreeDistribution& p);
Json to_json(const SizeBiasedDistribution& p);
/// {"counts": {"1": 50, "4": 50}}
Json to_json(const TypeSequence& t);
Json to_json(const RateResult& r);
Json to_json(const TruncationResult& t);
Json to_json(const EmbeddingPlan& plan);
/// Exact counts are emitted as JSON integers when they fit in 64 bits, else as decimal strings.
Json to_json(const EnumerationReport& report);
Json to_json(const CensusHistogram& hist);

DegreeDistribution distribution_from_json(const Json& j);
TypeSequence type_from_json(const Json& j);

Json big_to_json(const BigInt& value);

/// Rounds every floating-point value to `digits` significant digits so that
/// the dumped text is stable.
Json round_numbers(const Json& j, int digits = 15);

}  // namespace ccm

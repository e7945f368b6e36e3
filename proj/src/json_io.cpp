#include "ccm/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

Degree parse_degree(const std::string& key) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty() || value > std::numeric_limits<Degree>::max()) {
    throw Error(ErrorCode::InvalidInput, "'" + key + "' is not a degree");
  }
  return static_cast<Degree>(value);
}

const Json& member(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name) || !j.at(name).is_object()) {
    throw Error(ErrorCode::InvalidInput, std::string("expected an object with a \"") + name +
                                             "\" member");
  }
  return j.at(name);
}

}  // namespace

Json to_json(const DegreeDistribution& p) {
  Json w = Json::object();
  for (const auto& [k, v] : p.weights()) w[std::to_string(k)] = v;
  return {{"weights", w}};
}

Json to_json(const SizeBiasedDistribution& p) {
  Json w = Json::object();
  for (const auto& [k, v] : p.weights()) w[std::to_string(k)] = v;
  return {{"weights", w}, {"parent_mean", p.parent_mean()}};
}

Json to_json(const TypeSequence& t) {
  Json c = Json::object();
  for (const auto& [k, v] : t.counts()) c[std::to_string(k)] = v;
  return {{"counts", c}};
}

Json to_json(const RateResult& r) {
  return {{"beta", r.beta},
          {"K", r.K},
          {"gamma", r.gamma},
          {"q", to_json(r.q)},
          {"residuals", {{"beta_equation", r.beta_residual}, {"survival", r.survival_residual}}}};
}

Json to_json(const TruncationResult& t) {
  return {{"p_eps", to_json(t.p_eps)}, {"rho", t.rho}, {"M", t.M}, {"eps", t.eps}};
}

Json to_json(const EmbeddingPlan& plan) {
  return {{"N", to_json(plan.N)},
          {"N_vertices", plan.N.vertices()},
          {"N_total_degree", plan.N.total_degree()},
          {"p_eps", to_json(plan.p_eps)},
          {"q_eps", to_json(plan.q_eps)},
          {"beta_eps", plan.beta_eps},
          {"gamma", plan.gamma},
          {"rho", plan.rho},
          {"M", plan.M},
          {"n_target", plan.n_target},
          {"eps", plan.eps}};
}

Json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return value.str();
}

Json to_json(const EnumerationReport& report) {
  return {{"total", big_to_json(report.total)},
          {"connected", big_to_json(report.connected)},
          {"simple", big_to_json(report.simple)},
          {"simple_connected", big_to_json(report.simple_connected)},
          {"graphs", big_to_json(report.graphs)},
          {"connected_graphs", big_to_json(report.connected_graphs)}};
}

Json to_json(const CensusHistogram& hist) {
  Json counts = Json::object();
  for (const auto& [code, c] : hist.counts) counts[code] = c;
  return {{"radius", hist.radius}, {"total", hist.total}, {"counts", counts}};
}

DegreeDistribution distribution_from_json(const Json& j) {
  std::map<Degree, double> w;
  for (const auto& [key, value] : member(j, "weights").items()) {
    if (!value.is_number()) throw Error(ErrorCode::InvalidInput, "weights must be numbers");
    w[parse_degree(key)] = value.get<double>();
  }
  return DegreeDistribution(std::move(w));
}

TypeSequence type_from_json(const Json& j) {
  std::map<Degree, Count> c;
  for (const auto& [key, value] : member(j, "counts").items()) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
      throw Error(ErrorCode::InvalidInput, "counts must be nonnegative integers");
    }
    c[parse_degree(key)] = value.get<Count>();
  }
  return TypeSequence(std::move(c));
}

Json round_numbers(const Json& j, int digits) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::strtod(buf, nullptr);
  }
  if (j.is_array() || j.is_object()) {
    Json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) *it = round_numbers(*it, digits);
    return out;
  }
  return j;
}

}  // namespace ccm

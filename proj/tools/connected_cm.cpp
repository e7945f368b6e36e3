// connected-cm: command-line front end for the library.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ccm/census.hpp"
#include "ccm/confmodel.hpp"
#include "ccm/embedding.hpp"
#include "ccm/errors.hpp"
#include "ccm/experiments.hpp"
#include "ccm/json_io.hpp"
#include "ccm/oracle.hpp"
#include "ccm/rate.hpp"

using namespace ccm;

namespace {

// Bad invocation or unreadable input: exit status 2.
struct InputError : std::runtime_error {
  std::string code;
  InputError(std::string_view c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

void emit_error(std::string_view code, const std::string& message) {
  std::cerr << Json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
}

void emit(const Json& j, std::ostream& out = std::cout) { out << round_numbers(j).dump(2) << '\n'; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("FileNotFound", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  const bool inline_json = first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
  const std::string text = inline_json ? arg : read_file(arg);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("ParseError", e.what());
  }
}

DegreeDistribution load_p(const std::string& arg) {
  try {
    return distribution_from_json(load_json(arg));
  } catch (const Error& e) {
    throw InputError(to_string(e.code()), e.what());
  }
}

TypeSequence load_type(const std::string& arg) {
  try {
    return type_from_json(load_json(arg));
  } catch (const Error& e) {
    throw InputError(to_string(e.code()), e.what());
  }
}

MultiGraph load_edges(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("FileNotFound", "cannot open '" + path + "'");
  return read_edge_list(in);
}

// Writes to `path`, or stdout when empty.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("FileNotFound", "cannot write '" + path + "'");
  fn(out);
}

Json graph_summary(const MultiGraph& g) {
  const auto view = components(g);
  return {{"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"components", view.count()},
          {"giant_vertices", view.count() ? view.vertex_counts[view.giant] : 0},
          {"simple", is_simple(g)}};
}

std::vector<Count> parse_sizes(const std::string& list) {
  std::vector<Count> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw InputError("InvalidInput", "bad size '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("InvalidInput", "no sizes given");
  return out;
}

struct Options {
  std::string p;
  std::string type;
  std::string edges;
  std::string family;
  std::string out;
  std::string emit;
  std::string spec;
  std::string sizes = "100,200,400,800";
  std::string method = "embedded";
  double tol = kDefaultBetaTolerance;
  double eps = 0.05;
  double min_prob = 1e-4;
  Count n = 0;
  unsigned r = 1;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000;
  std::uint64_t replicates = 100'000;
  unsigned threads = 0;
};

void cmd_rate(const Options& o) { emit(to_json(rate_K(load_p(o.p), o.tol))); }

void cmd_build_nbig(const Options& o) { emit(to_json(build_embedding(load_p(o.p), o.eps, o.n))); }

void cmd_sample_cm(const Options& o) {
  const auto g = project(sample_configuration(load_type(o.type), o.seed));
  if (!o.emit.empty()) with_output(o.emit, [&](std::ostream& out) { write_edge_list(g, out); });
  Json j = graph_summary(g);
  j["seed"] = o.seed;
  emit(j);
}

void cmd_sample_connected(const Options& o) {
  const auto s = sample_uniform_connected(load_type(o.type), o.seed, o.budget);
  if (!o.emit.empty()) with_output(o.emit, [&](std::ostream& out) { write_edge_list(s.graph, out); });
  Json j = graph_summary(s.graph);
  j["seed"] = o.seed;
  j["attempts"] = s.attempts;
  emit(j);
}

void cmd_oracle(const Options& o) { emit(to_json(enumerate_counts(load_type(o.type)))); }

void cmd_census(const Options& o) { emit(to_json(empirical_census(load_edges(o.edges), o.r))); }

void cmd_mu(const Options& o) {
  const auto p = load_p(o.p);
  const double beta = solve_beta(p).beta;
  const auto q = giant_degree_distribution(p, beta).q;
  Json rows = Json::array();
  double total = 0.0;
  for (const auto& t : enumerate_bp_trees(q, beta, o.r, o.min_prob)) {
    rows.push_back({{"code", t.tree.code}, {"mu", t.probability}});
    total += t.probability;
  }
  emit({{"radius", o.r}, {"beta", beta}, {"listed_mass", total}, {"trees", rows}});
}

void cmd_estimate_k(const Options& o) {
  const auto p = load_p(o.p);
  const auto sizes = parse_sizes(o.sizes);
  if (o.method != "embedded" && o.method != "direct") {
    throw InputError("InvalidInput", "method must be 'embedded' or 'direct'");
  }
  std::vector<ConnectivityEstimate> rows;
  for (auto n : sizes) {
    const auto target = integerize(p, n);
    const auto seed = derive_seed(o.seed, n);
    rows.push_back(o.method == "direct" ? direct_connectivity(target, o.replicates, seed, o.threads)
                                        : embedded_connectivity(p, target, o.replicates, seed, o.threads));
  }
  with_output(o.out, [&](std::ostream& out) {
    out << "n,rate,hits,replicates,std_err,method\n";
    char buf[256];
    for (const auto& e : rows) {
      std::snprintf(buf, sizeof buf, "%llu,%.15g,%llu,%llu,%.15g,%s\n",
                    static_cast<unsigned long long>(e.target.vertices()), e.rate,
                    static_cast<unsigned long long>(e.hits), static_cast<unsigned long long>(e.replicates),
                    e.rate_std_error, e.method.c_str());
      out << buf;
    }
  });
}

void cmd_decomp_check(const Options& o) {
  const auto n = load_type(o.type);
  std::set<TypeSequence> family;
  if (o.family.empty()) {
    family.insert(n);
  } else {
    const auto j = load_json(o.family);
    if (!j.is_array()) throw InputError("InvalidInput", "family must be a JSON array of type sequences");
    try {
      for (const auto& m : j) family.insert(type_from_json(m));
    } catch (const Error& e) {
      throw InputError(to_string(e.code()), e.what());
    }
  }
  const auto sides = decomposition_sides(n, family);
  emit({{"configurations_lhs", big_to_json(sides.configurations_lhs)},
        {"configurations_rhs", big_to_json(sides.configurations_rhs)},
        {"simple_lhs", big_to_json(sides.simple_lhs)},
        {"simple_rhs", big_to_json(sides.simple_rhs)},
        {"holds", sides.holds()}});
}

// ExperimentSpec: {"command", "inputs": {flag: path}, "seed", "replicates",
// "output", "tolerances": {flag: value}} turned into a command line.
std::vector<std::string> spec_arguments(const Json& spec) {
  if (!spec.is_object() || !spec.contains("command") || !spec["command"].is_string()) {
    throw InputError("InvalidInput", "experiment spec needs a \"command\" string");
  }
  const std::string command = spec["command"].get<std::string>();
  if (command == "run") throw InputError("InvalidInput", "experiment spec cannot nest 'run'");
  std::vector<std::string> args{command};
  auto flag = [&](const std::string& name, const Json& value) {
    args.push_back("--" + name);
    args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  };
  for (const char* section : {"inputs", "tolerances", "options"}) {
    if (!spec.contains(section)) continue;
    if (!spec[section].is_object()) throw InputError("InvalidInput", std::string(section) + " must be an object");
    for (const auto& [k, v] : spec[section].items()) flag(k, v);
  }
  if (spec.contains("seed")) flag("seed", spec["seed"]);
  if (spec.contains("replicates")) flag("replicates", spec["replicates"]);
  if (spec.contains("output")) flag(command == "sample-cm" || command == "sample-connected" ? "emit" : "out",
                                    spec["output"]);
  return args;
}

int run_cli(std::vector<std::string> argv, int depth = 0);

int dispatch(CLI::App& app, Options& o) {
  try {
    for (auto* sub : app.get_subcommands()) {
      const auto name = sub->get_name();
      if (name == "rate") cmd_rate(o);
      else if (name == "build-nbig") cmd_build_nbig(o);
      else if (name == "sample-cm") cmd_sample_cm(o);
      else if (name == "sample-connected") cmd_sample_connected(o);
      else if (name == "oracle") cmd_oracle(o);
      else if (name == "census") cmd_census(o);
      else if (name == "mu") cmd_mu(o);
      else if (name == "estimate-K") cmd_estimate_k(o);
      else if (name == "decomp-check") cmd_decomp_check(o);
      else if (name == "run") {
        auto args = spec_arguments(load_json(o.spec));
        if (o.threads) {
          args.push_back("--threads");
          args.push_back(std::to_string(o.threads));
        }
        return run_cli(args, 1);
      }
    }
  } catch (const InputError& e) {
    emit_error(e.code, e.what());
    return 2;
  } catch (const Error& e) {
    emit_error(to_string(e.code()), e.what());
    return 1;
  }
  return 0;
}

int run_cli(std::vector<std::string> argv, int depth) {
  CLI::App app{"Connected configuration-model graphs with a given degree distribution"};
  app.require_subcommand(1);
  Options o;
  o.threads = default_thread_count();

  auto add_threads = [&](CLI::App* s) {
    s->add_option("--threads", o.threads, "worker threads (default: CCM_THREADS or all cores)");
  };
  auto* rate = app.add_subcommand("rate", "extinction probability beta and rate K(p)");
  rate->add_option("--p", o.p, "degree distribution (JSON or path)")->required();
  rate->add_option("--tol", o.tol, "bisection tolerance on F");

  auto* nbig = app.add_subcommand("build-nbig", "enlarged type sequence for (p, eps, n)");
  nbig->add_option("--p", o.p, "degree distribution")->required();
  nbig->add_option("--eps", o.eps, "truncation parameter");
  nbig->add_option("--n", o.n, "target size")->required();

  auto* scm = app.add_subcommand("sample-cm", "one configuration-model multigraph");
  scm->add_option("--type", o.type, "type sequence (JSON or path)")->required();
  scm->add_option("--seed", o.seed);
  scm->add_option("--emit", o.emit, "edge-list output file");

  auto* sc = app.add_subcommand("sample-connected", "uniform connected simple graph by rejection");
  sc->add_option("--type", o.type)->required();
  sc->add_option("--seed", o.seed);
  sc->add_option("--budget", o.budget, "maximum attempts");
  sc->add_option("--emit", o.emit, "edge-list output file");

  auto* oracle = app.add_subcommand("oracle", "exact enumeration for a small type sequence");
  oracle->add_option("--type", o.type)->required();

  auto* census = app.add_subcommand("census", "radius-r neighbourhood histogram of an edge list");
  census->add_option("--edges", o.edges, "1-indexed edge list")->required();
  census->add_option("--r", o.r)->check(CLI::PositiveNumber);

  auto* mu = app.add_subcommand("mu", "limiting neighbourhood probabilities");
  mu->add_option("--p", o.p)->required();
  mu->add_option("--r", o.r)->check(CLI::PositiveNumber);
  mu->add_option("--min-prob", o.min_prob);

  auto* est = app.add_subcommand("estimate-K", "Monte Carlo connectivity rate, CSV output");
  est->add_option("--p", o.p)->required();
  est->add_option("--n", o.sizes, "comma-separated sizes");
  est->add_option("--replicates", o.replicates);
  est->add_option("--seed", o.seed);
  est->add_option("--method", o.method, "embedded or direct");
  est->add_option("--out", o.out, "CSV file (default stdout)");
  add_threads(est);

  auto* dc = app.add_subcommand("decomp-check", "exact component decomposition identities");
  dc->add_option("--type", o.type)->required();
  dc->add_option("--family", o.family, "JSON array of type sequences (default: the type itself)");

  if (depth == 0) {
    auto* run = app.add_subcommand("run", "run an experiment spec");
    run->add_option("--spec", o.spec, "ExperimentSpec JSON or path")->required();
    add_threads(run);
  }

  try {
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("UsageError", e.what());
    return 2;
  }
  return dispatch(app, o);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run_cli(args);
  } catch (const std::exception& e) {
    emit_error("InternalError", e.what());
    return 1;
  }
}

// Command-line front end: graph | kirchhoff | theory | experiment | sync.
// Exit codes: 0 success, 1 validation error, 2 runtime/I-O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "kirchhoff/er_model.hpp"
#include "kirchhoff/experiment.hpp"
#include "kirchhoff/graph.hpp"
#include "kirchhoff/rng.hpp"
#include "kirchhoff/spectral.hpp"
#include "kirchhoff/sync.hpp"
#include "kirchhoff/theory.hpp"
#include "kirchhoff/version.hpp"

using nlohmann::json;

namespace {

std::string fmt(double v, const char* spec) {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string fmt6(double v) { return fmt(v, "%.6g"); }
std::string fmt12(double v) { return fmt(v, "%.12g"); }

// Machine outputs represent the infinite Kirchhoff index as the string
// "inf"; JSON has no literal for it.
json json_number_or_inf(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

struct ErFlags {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// --er takes the three raw tokens "n p seed".
ErFlags parse_er(const std::vector<std::string>& tokens) {
  ErFlags er;
  try {
    std::size_t pos = 0;
    er.n = std::stoi(tokens.at(0), &pos);
    if (pos != tokens[0].size()) throw std::invalid_argument("");
    er.p = std::stod(tokens.at(1), &pos);
    if (pos != tokens[1].size()) throw std::invalid_argument("");
    er.seed = std::stoull(tokens.at(2), &pos);
    if (pos != tokens[2].size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("--er expects \"n p seed\" (integer, real, integer)");
  }
  return er;
}

struct GraphSource {
  std::vector<std::string> er_tokens;
  std::string input_path;

  bool from_er() const { return !er_tokens.empty(); }

  void check_exactly_one() const {
    if (from_er() == !input_path.empty())
      throw std::invalid_argument("exactly one of --er or --input is required");
  }

  // Loads the graph; p is known only for ER sources.
  std::pair<kirchhoff::Graph, std::optional<ErFlags>> load() const {
    check_exactly_one();
    if (from_er()) {
      const ErFlags er = parse_er(er_tokens);
      return {kirchhoff::sample_er({er.n, er.p, er.seed}), er};
    }
    return {kirchhoff::read_edge_list_file(input_path), std::nullopt};
  }

  std::string describe() const {
    if (from_er())
      return "source=er n=" + er_tokens[0] + " p=" + er_tokens[1] + " seed=" + er_tokens[2];
    return "source=file input=" + input_path;
  }
};

int run_graph(const GraphSource& source, bool as_json) {
  std::cerr << "resolved config: graph " << source.describe() << " json=" << as_json << "\n";
  const auto [g, er] = source.load();

  const bool connected = kirchhoff::is_connected(g);
  const double wiener = kirchhoff::wiener_index(g);
  std::optional<double> l1_norm;
  std::optional<bool> event_en;
  if (er) {
    const auto l1 = kirchhoff::centered_laplacian(g, er->p);
    l1_norm = kirchhoff::operator_norm(l1.matrix);
    event_en = *l1_norm <= kirchhoff::en_threshold(g.node_count(), er->p);
  }

  if (as_json) {
    json j{{"nodes", g.node_count()},
           {"edges", g.edge_count()},
           {"connected", connected},
           {"wiener_index", json_number_or_inf(wiener)}};
    if (er) {
      j["l1_operator_norm"] = *l1_norm;
      j["event_en"] = *event_en;
      j["seed"] = er->seed;
    }
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "nodes: " << g.node_count() << "\n"
            << "edges: " << g.edge_count() << "\n"
            << "connected: " << (connected ? "true" : "false") << "\n"
            << "wiener_index: " << fmt6(wiener) << "\n";
  if (er) {
    std::cout << "l1_operator_norm: " << fmt6(*l1_norm) << "\n"
              << "event_en: " << (*event_en ? "true" : "false") << "\n";
  }
  return 0;
}

int run_kirchhoff(const GraphSource& source, bool pairs, bool as_json) {
  std::cerr << "resolved config: kirchhoff " << source.describe() << " pairs=" << pairs
            << " json=" << as_json << "\n";
  const auto [g, er] = source.load();

  const double trace = kirchhoff::trace_pinv(kirchhoff::build_laplacian(g));
  const double kf = kirchhoff::kirchhoff_index(g);
  std::optional<double> xn;
  if (er) xn = er->p * trace;

  std::vector<std::tuple<int, int, double>> pair_rows;
  if (pairs) {
    const auto pinv = kirchhoff::pseudo_inverse(kirchhoff::build_laplacian(g));
    for (int i = 0; i < g.node_count(); ++i)
      for (int j = i + 1; j < g.node_count(); ++j)
        pair_rows.emplace_back(i, j, kirchhoff::resistance_distance(pinv, i, j));
  }

  if (as_json) {
    json j{{"trace_pinv", trace}, {"kirchhoff_index", json_number_or_inf(kf)}};
    if (xn) j["xn"] = *xn;
    if (pairs) {
      json rows = json::array();
      for (auto [i, jx, r] : pair_rows) rows.push_back({i, jx, r});
      j["pairs"] = rows;
    }
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "trace_pinv: " << fmt12(trace) << "\n"
            << "kirchhoff_index: " << fmt12(kf) << "\n";
  if (xn) std::cout << "xn: " << fmt12(*xn) << "\n";
  if (pairs) {
    std::cout << "i,j,resistance\n";
    for (auto [i, j, r] : pair_rows)
      std::cout << i << "," << j << "," << fmt12(r) << "\n";
  }
  return 0;
}

int run_theory(int n, double p, double epsilon, std::optional<double> gamma,
               std::optional<double> alpha, bool as_json) {
  std::cerr << "resolved config: theory n=" << n << " p=" << p << " epsilon=" << epsilon;
  if (gamma) std::cerr << " gamma=" << *gamma << " alpha=" << *alpha;
  std::cerr << "\n";

  const auto t = kirchhoff::predict(n, p, epsilon);
  const double kf = kirchhoff::expected_kirchhoff(n, p);
  const double max_trace = kirchhoff::max_trace_pinv_bound(n);
  std::optional<double> vanishing;
  if (gamma) vanishing = kirchhoff::expected_xn_vanishing(n, *gamma, *alpha);

  if (as_json) {
    json j{{"n", n},
           {"p", p},
           {"epsilon", epsilon},
           {"expected_xn", t.mean_xn},
           {"fluctuation_bound", t.band_halfwidth},
           {"band_probability", t.band_probability},
           {"cn", t.cn},
           {"assumption_ratio", t.assumption_ratio},
           {"en_prob_floor", t.en_prob_floor},
           {"expected_kirchhoff", kf},
           {"max_trace_pinv_bound", max_trace}};
    if (vanishing) j["expected_xn_vanishing"] = *vanishing;
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "n: " << n << "\n"
            << "p: " << fmt6(p) << "\n"
            << "epsilon: " << fmt6(epsilon) << "\n"
            << "expected_xn: " << fmt6(t.mean_xn) << "\n"
            << "fluctuation_bound: " << fmt6(t.band_halfwidth) << "\n"
            << "band_probability: " << fmt6(t.band_probability) << "\n"
            << "cn: " << fmt6(t.cn) << "\n"
            << "assumption_ratio: " << fmt6(t.assumption_ratio) << "\n"
            << "en_prob_floor: " << fmt6(t.en_prob_floor) << "\n"
            << "expected_kirchhoff: " << fmt6(kf) << "\n"
            << "max_trace_pinv_bound: " << fmt6(max_trace) << "\n";
  if (vanishing) std::cout << "expected_xn_vanishing: " << fmt6(*vanishing) << "\n";
  return 0;
}

struct ExperimentFlags {
  std::string config_path;
  std::vector<std::string> scenarios;
  std::string n_grid;
  int replicates = -1;
  double epsilon = -1.0;
  std::optional<std::uint64_t> seed;
  std::string output;
  int threads = 0;
  bool full = false;
  bool no_timing = false;
};

int run_experiment_cmd(const ExperimentFlags& flags) {
  kirchhoff::ExperimentConfig config;
  if (!flags.config_path.empty()) config = kirchhoff::parse_config_file(flags.config_path);
  else config = kirchhoff::desk_config();
  if (flags.full) {
    const auto full = kirchhoff::full_config();
    config.scenarios = full.scenarios;
    config.n_grid = full.n_grid;
    config.replicates = full.replicates;
  }

  // Command-line flags win over the config file.
  if (!flags.scenarios.empty()) {
    config.scenarios.clear();
    for (const auto& s : flags.scenarios) config.scenarios.push_back(kirchhoff::parse_scenario(s));
  }
  if (!flags.n_grid.empty()) {
    config.n_grid.clear();
    std::istringstream in(flags.n_grid);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        config.n_grid.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw kirchhoff::ConfigError("--n-grid: bad value \"" + item + "\"");
      }
    }
  }
  if (flags.replicates >= 0) config.replicates = flags.replicates;
  if (flags.epsilon >= 0.0) config.epsilon = flags.epsilon;
  if (flags.seed) config.master_seed = *flags.seed;
  if (!flags.output.empty()) config.output_path = flags.output;
  if (flags.threads > 0) config.threads = flags.threads;
  if (flags.no_timing) config.measure_timing = false;

  kirchhoff::validate(config);

  std::cerr << "resolved config: experiment scenarios=[";
  for (std::size_t i = 0; i < config.scenarios.size(); ++i)
    std::cerr << (i ? "," : "") << config.scenarios[i].label();
  std::cerr << "] n_grid=[";
  for (std::size_t i = 0; i < config.n_grid.size(); ++i)
    std::cerr << (i ? "," : "") << config.n_grid[i];
  std::cerr << "] replicates=" << config.replicates << " epsilon=" << config.epsilon
            << " master_seed=" << config.master_seed << " output=" << config.output_path
            << " threads=" << config.threads << " timing=" << config.measure_timing << "\n";

  const auto paths = kirchhoff::run_experiment_to_files(config);
  std::cout << "records: " << paths.records << "\n"
            << "summary: " << paths.summary << "\n"
            << "manifest: " << paths.manifest << "\n";
  return 0;
}

struct SyncFlags {
  int n = 50;
  double p = 0.5;
  int d = 1;
  double sigma2 = 1.0;
  long trials = 10000;
  std::uint64_t seed = 0;
  std::string input_path;
};

int run_sync(const SyncFlags& flags) {
  std::cerr << "resolved config: sync n=" << flags.n << " p=" << flags.p << " d=" << flags.d
            << " sigma2=" << flags.sigma2 << " trials=" << flags.trials
            << " seed=" << flags.seed
            << (flags.input_path.empty() ? "" : " input=" + flags.input_path) << "\n";

  kirchhoff::Graph g(2);
  json source;
  int resamples = 0;
  if (!flags.input_path.empty()) {
    g = kirchhoff::read_edge_list_file(flags.input_path);
    source = flags.input_path;
  } else {
    if (flags.n >= 2 && flags.p > 0.0 && flags.p < 1.0 &&
        flags.n * flags.p < std::log(static_cast<double>(flags.n)))
      std::cerr << "warning: np < ln n, draws are likely disconnected\n";
    constexpr int kMaxAttempts = 1000;
    for (resamples = 0; resamples < kMaxAttempts; ++resamples) {
      g = kirchhoff::sample_er({flags.n, flags.p, flags.seed + resamples});
      if (kirchhoff::is_connected(g)) break;
    }
    if (resamples == kMaxAttempts)
      throw std::runtime_error("no connected draw in 1000 attempts; increase n*p");
    source = flags.p;
  }

  const auto report =
      kirchhoff::crb_experiment(g, flags.d, flags.sigma2, flags.trials, flags.seed);

  json j{{"n", g.node_count()},
         {"d", flags.d},
         {"p_or_graphfile", source},
         {"sigma2", flags.sigma2},
         {"trials", report.trials},
         {"empirical_mse", report.empirical_mse},
         {"crb", report.crb},
         {"ratio", report.ratio},
         {"seed", flags.seed},
         {"resamples", resamples}};
  std::cout << j.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("kirchhoff ") + kirchhoff::kVersion +
               " - resistance distances, Kirchhoff indices and their "
               "concentration on random graphs"};
  app.require_subcommand(1);

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "Edge count, connectivity, Wiener index");
  GraphSource graph_source;
  bool graph_json = false;
  graph_cmd->add_option("--er", graph_source.er_tokens, "sample G(n,p): n p seed")
      ->expected(3);
  graph_cmd->add_option("--input", graph_source.input_path, "edge-list file");
  graph_cmd->add_flag("--json", graph_json, "machine-readable output");

  // kirchhoff
  auto* kf_cmd = app.add_subcommand("kirchhoff", "trace(pinv L), Kirchhoff index, X_n");
  GraphSource kf_source;
  bool kf_pairs = false, kf_json = false;
  kf_cmd->add_option("--er", kf_source.er_tokens, "sample G(n,p): n p seed")->expected(3);
  kf_cmd->add_option("--input", kf_source.input_path, "edge-list file");
  kf_cmd->add_flag("--pairs", kf_pairs, "emit all pairwise resistance distances as CSV");
  kf_cmd->add_flag("--json", kf_json, "machine-readable output");

  // theory
  auto* theory_cmd = app.add_subcommand("theory", "closed-form predictions for (n, p)");
  int theory_n = 0;
  double theory_p = 0.0, theory_eps = 0.004;
  double theory_gamma = 0.0, theory_alpha = 0.0;
  bool theory_json = false;
  theory_cmd->add_option("n", theory_n, "node count")->required();
  theory_cmd->add_option("p", theory_p, "edge probability")->required();
  theory_cmd->add_option("--epsilon", theory_eps, "band tail parameter (default 0.004)");
  auto* gamma_opt = theory_cmd->add_option("--gamma", theory_gamma, "decay constant");
  auto* alpha_opt = theory_cmd->add_option("--alpha", theory_alpha, "decay exponent");
  gamma_opt->needs(alpha_opt);
  alpha_opt->needs(gamma_opt);
  theory_cmd->add_flag("--json", theory_json, "machine-readable output");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo sweep of X_n, CSV output");
  ExperimentFlags exp_flags;
  exp_cmd->add_option("--config", exp_flags.config_path, "key = value config file");
  exp_cmd->add_option("--scenario", exp_flags.scenarios,
                      "powerlaw:<gamma>:<alpha> or constant:<p> (repeatable)");
  exp_cmd->add_option("--n-grid", exp_flags.n_grid, "comma-separated node counts");
  exp_cmd->add_option("--replicates", exp_flags.replicates, "draws per (scenario, n)");
  exp_cmd->add_option("--epsilon", exp_flags.epsilon, "band tail parameter");
  std::uint64_t exp_seed = 0;
  auto* seed_opt = exp_cmd->add_option("--seed", exp_seed, "master seed (default 0)");
  exp_cmd->add_option("--output", exp_flags.output, "output path prefix");
  exp_cmd->add_option("--threads", exp_flags.threads, "worker threads");
  exp_cmd->add_flag("--full", exp_flags.full, "full 15-point grid, 500 replicates (long)");
  exp_cmd->add_flag("--no-timing", exp_flags.no_timing,
                    "record eigen_ms as 0 for byte-reproducible CSVs");

  // sync
  auto* sync_cmd = app.add_subcommand("sync", "synchronization-of-translations CRB check");
  SyncFlags sync_flags;
  sync_cmd->add_option("--n", sync_flags.n, "node count (default 50)");
  sync_cmd->add_option("--p", sync_flags.p, "edge probability (default 0.5)");
  sync_cmd->add_option("--d", sync_flags.d, "ambient dimension (default 1)");
  sync_cmd->add_option("--sigma2", sync_flags.sigma2, "noise variance per axis (default 1)");
  sync_cmd->add_option("--trials", sync_flags.trials, "Monte Carlo trials (default 10000)");
  sync_cmd->add_option("--seed", sync_flags.seed, "seed (default 0)");
  sync_cmd->add_option("--input", sync_flags.input_path, "edge-list file instead of an ER draw");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*graph_cmd) return run_graph(graph_source, graph_json);
    if (*kf_cmd) return run_kirchhoff(kf_source, kf_pairs, kf_json);
    if (*theory_cmd) {
      std::optional<double> gamma, alpha;
      if (gamma_opt->count()) gamma = theory_gamma;
      if (alpha_opt->count()) alpha = theory_alpha;
      return run_theory(theory_n, theory_p, theory_eps, gamma, alpha, theory_json);
    }
    if (*exp_cmd) {
      if (seed_opt->count()) exp_flags.seed = exp_seed;
      return run_experiment_cmd(exp_flags);
    }
    if (*sync_cmd) return run_sync(sync_flags);
  } catch (const kirchhoff::EdgeListError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const kirchhoff::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const kirchhoff::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

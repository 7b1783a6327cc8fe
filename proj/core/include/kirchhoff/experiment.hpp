#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kirchhoff {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge-density rule for one sweep of the experiment: either a constant p or
/// the power law p = gamma * n^(alpha-1).
struct Scenario {
  enum class Kind { PowerLaw, Constant };

  Kind kind = Kind::Constant;
  double gamma = 1.0;
  double alpha = 0.5;
  double p = 0.5;

  static Scenario power_law(double gamma, double alpha);
  static Scenario constant(double p);

  double edge_probability(int n) const;

  /// Round-trips through parse_scenario: "powerlaw:<gamma>:<alpha>" or
  /// "constant:<p>".
  std::string label() const;
};

Scenario parse_scenario(const std::string& text);

struct ExperimentConfig {
  std::vector<Scenario> scenarios;
  std::vector<int> n_grid;
  int replicates = 100;
  double epsilon = 0.004;
  std::uint64_t master_seed = 0;
  std::string output_path = "experiment";
  int threads = 1;
  /// When false, eigen_ms is recorded as 0 so that record CSVs are
  /// byte-identical across runs (wall-clock readings never are).
  bool measure_timing = true;
};

/// Desk-scale reproduction of the three-density sweep: p = n^(-1/2),
/// p = n^(-1/4), p = 0.5 over n in {100, 200, 400, 800}, 100 replicates.
ExperimentConfig desk_config();

/// The full-size sweep: 15 log-spaced n from 100 to 2000, 500 replicates.
/// Hours of eigensolves; opt-in, not for CI.
ExperimentConfig full_config();

/// 15 log-spaced node counts from 100 to 2000 (round(100 * 20^(k/14))).
std::vector<int> full_n_grid();

/// Throws ConfigError on an invalid configuration, including any scenario
/// whose edge probability leaves (0,1) somewhere on the grid.
void validate(const ExperimentConfig& config);

/// Minimal TOML-style key = value file (one key per line, '#' comments).
/// Keys: scenarios, n_grid, replicates, epsilon, master_seed, output,
/// threads, timing.
ExperimentConfig parse_config_file(const std::string& path);

/// One Monte Carlo sample of X_n with full seed provenance.
struct RealizationRecord {
  int scenario_id = 0;
  int n = 0;
  double p = 0.0;
  int replicate = 0;
  std::uint64_t seed = 0;
  double xn = 0.0;
  bool connected = false;
  bool event_en = false;
  double eigen_ms = 0.0;
};

/// Per-(scenario, n) aggregate; coverage is measured against the theoretical
/// mean, matching how the reference figure is drawn.
struct SummaryRow {
  int scenario_id = 0;
  int n = 0;
  double p = 0.0;
  double mean_xn = 0.0;
  double predicted_mean = 0.0;
  double band_halfwidth = 0.0;
  double coverage = 0.0;
  double connected_frac = 0.0;
  double en_frac = 0.0;
};

struct ExperimentResult {
  std::vector<RealizationRecord> records;
  std::vector<SummaryRow> summary;
};

/// FNV-1a 64 over the little-endian words (master, scenario_id, n,
/// replicate). Hash id: kSeedHashId in version.hpp.
std::uint64_t derive_seed(std::uint64_t master, int scenario_id, int n, int replicate);

/// Runs the full sweep in memory. Records come back sorted by
/// (scenario_id, n, replicate) and are bit-identical for a given config
/// regardless of thread count.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct ExperimentPaths {
  std::string records;
  std::string summary;
  std::string manifest;
};

/// Like run_experiment, but streams each record row to
/// "<output_path>.records.csv" as it completes (rows still in sorted order,
/// flushed individually so partial results survive interruption). The
/// summary is recomputed by re-reading the records file, then written to
/// "<output_path>.summary.csv" along with "<output_path>.manifest.json".
/// The records file is opened before any computation starts.
ExperimentPaths run_experiment_to_files(const ExperimentConfig& config);

void write_records_csv(std::span<const RealizationRecord> records, const std::string& path);
void write_summary_csv(std::span<const SummaryRow> rows, const std::string& path);
std::vector<RealizationRecord> read_records_csv(const std::string& path);

/// Aggregates records into per-(scenario, n) rows in grid order.
std::vector<SummaryRow> summarize(const ExperimentConfig& config,
                                  std::span<const RealizationRecord> records);

/// Writes the run manifest JSON: {config, seed, grid, code_version}.
void write_manifest(const ExperimentConfig& config, const std::string& path);

}  // namespace kirchhoff

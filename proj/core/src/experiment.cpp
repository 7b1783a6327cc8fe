#include "kirchhoff/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "kirchhoff/er_model.hpp"
#include "kirchhoff/rng.hpp"
#include "kirchhoff/theory.hpp"
#include "kirchhoff/version.hpp"

namespace kirchhoff {

namespace {

constexpr const char* kRecordsHeader =
    "scenario_id,n,p,replicate,seed,xn,connected,event_en,eigen_ms";
constexpr const char* kSummaryHeader =
    "scenario_id,n,p,mean_xn,predicted_mean,band_halfwidth,coverage,connected_frac,en_frac";

// 17 significant digits, enough to round-trip any double.
std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Shortest representation that round-trips; used for scenario labels.
std::string fmt_shortest(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

Scenario Scenario::power_law(double gamma, double alpha) {
  Scenario s;
  s.kind = Kind::PowerLaw;
  s.gamma = gamma;
  s.alpha = alpha;
  return s;
}

Scenario Scenario::constant(double p) {
  Scenario s;
  s.kind = Kind::Constant;
  s.p = p;
  return s;
}

double Scenario::edge_probability(int n) const {
  if (kind == Kind::Constant) return p;
  return gamma * std::pow(static_cast<double>(n), alpha - 1.0);
}

std::string Scenario::label() const {
  if (kind == Kind::Constant) return "constant:" + fmt_shortest(p);
  return "powerlaw:" + fmt_shortest(gamma) + ":" + fmt_shortest(alpha);
}

Scenario parse_scenario(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ':')) parts.push_back(item);

  auto as_double = [&](const std::string& s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw ConfigError("scenario \"" + text + "\": bad number \"" + s + "\"");
    return v;
  };

  if (parts.size() == 2 && parts[0] == "constant")
    return Scenario::constant(as_double(parts[1]));
  if (parts.size() == 3 && parts[0] == "powerlaw")
    return Scenario::power_law(as_double(parts[1]), as_double(parts[2]));
  throw ConfigError("scenario \"" + text +
                    "\": expected constant:<p> or powerlaw:<gamma>:<alpha>");
}

std::vector<int> full_n_grid() {
  std::vector<int> grid;
  for (int k = 0; k < 15; ++k)
    grid.push_back(static_cast<int>(std::lround(100.0 * std::pow(20.0, k / 14.0))));
  return grid;
}

ExperimentConfig desk_config() {
  ExperimentConfig c;
  c.scenarios = {Scenario::power_law(1.0, 0.5), Scenario::power_law(1.0, 0.75),
                 Scenario::constant(0.5)};
  c.n_grid = {100, 200, 400, 800};
  c.replicates = 100;
  c.epsilon = 0.004;
  return c;
}

ExperimentConfig full_config() {
  ExperimentConfig c = desk_config();
  c.n_grid = full_n_grid();
  c.replicates = 500;
  return c;
}

void validate(const ExperimentConfig& config) {
  if (config.scenarios.empty()) throw ConfigError("config: at least one scenario required");
  if (config.n_grid.empty()) throw ConfigError("config: n_grid must be nonempty");
  for (std::size_t i = 0; i < config.n_grid.size(); ++i) {
    if (config.n_grid[i] < 2) throw ConfigError("config: every n must be >= 2");
    if (i > 0 && config.n_grid[i] <= config.n_grid[i - 1])
      throw ConfigError("config: n_grid must be strictly increasing");
  }
  if (config.replicates < 1) throw ConfigError("config: replicates must be >= 1");
  if (!(config.epsilon > 0.0 && config.epsilon <= 0.5))
    throw ConfigError("config: epsilon must lie in (0, 0.5]");
  if (config.threads < 1) throw ConfigError("config: threads must be >= 1");
  for (std::size_t s = 0; s < config.scenarios.size(); ++s) {
    for (int n : config.n_grid) {
      const double p = config.scenarios[s].edge_probability(n);
      if (!(p > 0.0 && p < 1.0)) {
        throw ConfigError("config: scenario " + config.scenarios[s].label() +
                          " yields p=" + fmt_shortest(p) + " at n=" + std::to_string(n) +
                          ", outside (0,1)");
      }
    }
  }
}

std::uint64_t derive_seed(std::uint64_t master, int scenario_id, int n, int replicate) {
  return fnv1a64({master, static_cast<std::uint64_t>(scenario_id),
                  static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(replicate)});
}

namespace {

RealizationRecord compute_record(const ExperimentConfig& config, int scenario_id, int n,
                                 int replicate) {
  RealizationRecord rec;
  rec.scenario_id = scenario_id;
  rec.n = n;
  rec.p = config.scenarios[scenario_id].edge_probability(n);
  rec.replicate = replicate;
  rec.seed = derive_seed(config.master_seed, scenario_id, n, replicate);

  const Graph g = sample_er({n, rec.p, rec.seed});
  rec.connected = is_connected(g);

  const auto t0 = std::chrono::steady_clock::now();
  const SpectralSummary spectrum = symmetric_eigenvalues(build_laplacian(g).matrix);
  const auto t1 = std::chrono::steady_clock::now();
  if (config.measure_timing)
    rec.eigen_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  rec.xn = rec.p * trace_pinv_from_spectrum(spectrum);
  rec.event_en =
      l1_operator_norm_from_spectrum(spectrum.eigenvalues, rec.p) <= en_threshold(n, rec.p);
  return rec;
}

struct WorkItem {
  int scenario_id;
  int n;
  int replicate;
};

std::vector<WorkItem> enumerate_items(const ExperimentConfig& config) {
  std::vector<WorkItem> items;
  items.reserve(config.scenarios.size() * config.n_grid.size() * config.replicates);
  for (int s = 0; s < static_cast<int>(config.scenarios.size()); ++s)
    for (int n : config.n_grid)
      for (int r = 0; r < config.replicates; ++r) items.push_back({s, n, r});
  return items;
}

// Runs all items across config.threads workers and hands each finished
// record to sink(index, record). Work distribution is dynamic; determinism
// comes from per-item derived seeds, never from scheduling.
template <typename Sink>
void run_items(const ExperimentConfig& config, const std::vector<WorkItem>& items,
               Sink&& sink) {
  const int threads = std::min<int>(config.threads, static_cast<int>(items.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i)
      sink(i, compute_record(config, items[i].scenario_id, items[i].n, items[i].replicate));
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex sink_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items.size()) return;
        RealizationRecord rec =
            compute_record(config, items[i].scenario_id, items[i].n, items[i].replicate);
        std::lock_guard lock(sink_mutex);
        sink(i, rec);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

void write_record_row(std::ostream& out, const RealizationRecord& r) {
  out << r.scenario_id << ',' << r.n << ',' << fmt_double(r.p) << ',' << r.replicate << ','
      << r.seed << ',' << fmt_double(r.xn) << ',' << (r.connected ? 1 : 0) << ','
      << (r.event_en ? 1 : 0) << ',' << fmt_double(r.eigen_ms) << '\n';
}

// Emits records in item order no matter the completion order, flushing each
// row so an interrupted run keeps everything finished so far.
class OrderedRecordWriter {
 public:
  explicit OrderedRecordWriter(std::ofstream& out) : out_(out) {}

  void put(std::size_t index, const RealizationRecord& rec) {
    pending_.emplace(index, rec);
    while (!pending_.empty() && pending_.begin()->first == next_) {
      write_record_row(out_, pending_.begin()->second);
      out_.flush();
      pending_.erase(pending_.begin());
      ++next_;
    }
  }

 private:
  std::ofstream& out_;
  std::map<std::size_t, RealizationRecord> pending_;
  std::size_t next_ = 0;
};

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate(config);
  const auto items = enumerate_items(config);
  ExperimentResult result;
  result.records.resize(items.size());
  run_items(config, items,
            [&](std::size_t i, const RealizationRecord& rec) { result.records[i] = rec; });
  result.summary = summarize(config, result.records);
  return result;
}

ExperimentPaths run_experiment_to_files(const ExperimentConfig& config) {
  validate(config);
  ExperimentPaths paths;
  paths.records = config.output_path + ".records.csv";
  paths.summary = config.output_path + ".summary.csv";
  paths.manifest = config.output_path + ".manifest.json";

  std::ofstream records_out(paths.records);
  if (!records_out) throw IoError("cannot open for writing: " + paths.records);
  write_manifest(config, paths.manifest);

  records_out << kRecordsHeader << '\n';
  records_out.flush();

  const auto items = enumerate_items(config);
  OrderedRecordWriter writer(records_out);
  run_items(config, items,
            [&](std::size_t i, const RealizationRecord& rec) { writer.put(i, rec); });
  records_out.close();
  if (!records_out) throw IoError("write failed: " + paths.records);

  const auto records = read_records_csv(paths.records);
  const auto summary = summarize(config, records);
  write_summary_csv(summary, paths.summary);
  return paths;
}

void write_records_csv(std::span<const RealizationRecord> records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << kRecordsHeader << '\n';
  for (const auto& r : records) write_record_row(out, r);
  if (!out) throw IoError("write failed: " + path);
}

void write_summary_csv(std::span<const SummaryRow> rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    out << r.scenario_id << ',' << r.n << ',' << fmt_double(r.p) << ',' << fmt_double(r.mean_xn)
        << ',' << fmt_double(r.predicted_mean) << ',' << fmt_double(r.band_halfwidth) << ','
        << fmt_double(r.coverage) << ',' << fmt_double(r.connected_frac) << ','
        << fmt_double(r.en_frac) << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

std::vector<RealizationRecord> read_records_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line) || line != kRecordsHeader)
    throw IoError("bad records header in " + path);

  std::vector<RealizationRecord> records;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 9)
      throw IoError("bad record row at " + path + ":" + std::to_string(lineno));
    try {
      RealizationRecord r;
      r.scenario_id = std::stoi(f[0]);
      r.n = std::stoi(f[1]);
      r.p = std::stod(f[2]);
      r.replicate = std::stoi(f[3]);
      r.seed = std::stoull(f[4]);
      r.xn = std::stod(f[5]);
      r.connected = std::stoi(f[6]) != 0;
      r.event_en = std::stoi(f[7]) != 0;
      r.eigen_ms = std::stod(f[8]);
      records.push_back(r);
    } catch (const std::exception&) {
      throw IoError("bad record row at " + path + ":" + std::to_string(lineno));
    }
  }
  return records;
}

std::vector<SummaryRow> summarize(const ExperimentConfig& config,
                                  std::span<const RealizationRecord> records) {
  std::vector<SummaryRow> rows;
  for (int s = 0; s < static_cast<int>(config.scenarios.size()); ++s) {
    for (int n : config.n_grid) {
      const double p = config.scenarios[s].edge_probability(n);
      SummaryRow row;
      row.scenario_id = s;
      row.n = n;
      row.p = p;
      row.predicted_mean = expected_xn(n, p);
      row.band_halfwidth = fluctuation_bound(n, p, config.epsilon);

      // Fixed (replicate-index) accumulation order keeps sums bit-stable.
      std::map<int, const RealizationRecord*> cell;
      for (const auto& r : records)
        if (r.scenario_id == s && r.n == n) cell[r.replicate] = &r;
      if (cell.empty()) continue;

      double sum = 0.0;
      int covered = 0, connected = 0, en = 0;
      for (const auto& [rep, r] : cell) {
        sum += r->xn;
        if (std::abs(r->xn - row.predicted_mean) <= row.band_halfwidth) ++covered;
        if (r->connected) ++connected;
        if (r->event_en) ++en;
      }
      const double count = static_cast<double>(cell.size());
      row.mean_xn = sum / count;
      row.coverage = covered / count;
      row.connected_frac = connected / count;
      row.en_frac = en / count;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_manifest(const ExperimentConfig& config, const std::string& path) {
  nlohmann::json j;
  std::vector<std::string> labels;
  for (const auto& s : config.scenarios) labels.push_back(s.label());
  j["config"] = {{"scenarios", labels},
                 {"n_grid", config.n_grid},
                 {"replicates", config.replicates},
                 {"epsilon", config.epsilon},
                 {"output", config.output_path},
                 {"threads", config.threads},
                 {"timing", config.measure_timing}};
  j["seed"] = config.master_seed;
  j["grid"] = config.n_grid;
  j["code_version"] = std::string(kVersion) + " (rng " + std::string(kRngId) +
                      ", seed-hash " + std::string(kSeedHashId) + ")";

  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);

  ExperimentConfig config;
  config.scenarios.clear();
  config.n_grid.clear();

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string where = path + ":" + std::to_string(lineno);

    try {
      if (key == "scenarios") {
        for (const auto& item : split_list(value)) config.scenarios.push_back(parse_scenario(item));
      } else if (key == "n_grid") {
        for (const auto& item : split_list(value)) config.n_grid.push_back(std::stoi(item));
      } else if (key == "replicates") {
        config.replicates = std::stoi(value);
      } else if (key == "epsilon") {
        config.epsilon = std::stod(value);
      } else if (key == "master_seed") {
        config.master_seed = std::stoull(value);
      } else if (key == "output") {
        config.output_path = value;
      } else if (key == "threads") {
        config.threads = std::stoi(value);
      } else if (key == "timing") {
        if (value == "true" || value == "1") config.measure_timing = true;
        else if (value == "false" || value == "0") config.measure_timing = false;
        else throw ConfigError(where + ": timing must be true/false");
      } else {
        throw ConfigError(where + ": unknown key \"" + key + "\"");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError(where + ": bad value for \"" + key + "\"");
    }
  }

  // Unset fields fall back to the desk-scale defaults.
  const ExperimentConfig defaults = desk_config();
  if (config.scenarios.empty()) config.scenarios = defaults.scenarios;
  if (config.n_grid.empty()) config.n_grid = defaults.n_grid;
  return config;
}

}  // namespace kirchhoff

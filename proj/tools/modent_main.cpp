// Command-line front door: entropy pipelines, sweeps, and the verification
// suites, with deterministic JSON/CSV emission for offline analysis.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "modent/errors.hpp"
#include "modent/pipeline.hpp"
#include "modent/verify.hpp"
#include "modent/version.hpp"

namespace {

using modent::subspace::Convention;
using modent::subspace::RunOptions;
using modent::subspace::SpectralSummary;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string command;
  std::optional<double> phi;
  std::optional<std::vector<double>> interval;
  std::vector<double> phi_list;
  std::vector<int> modes_list;
  int modes = 512;
  int fft_samples = 1 << 16;
  std::string convention = "real";
  std::vector<double> q_values = {0.8};
  std::string out_dir;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string suite;

  /// Result-affecting fields only: neither output placement nor worker
  /// count changes any emitted byte, so they stay out of the config hash.
  json to_json() const {
    json j;
    j["command"] = command;
    if (phi) j["phi"] = *phi;
    if (interval) j["interval"] = *interval;
    if (!phi_list.empty()) j["phi_list"] = phi_list;
    if (!modes_list.empty()) j["modes_list"] = modes_list;
    j["modes"] = modes;
    j["fft_samples"] = fft_samples;
    j["convention"] = convention;
    j["q"] = q_values;
    j["seed"] = seed;
    if (!suite.empty()) j["suite"] = suite;
    return j;
  }
};

std::string fnv1a_hash(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void validate_common(const Config& cfg) {
  const bool has_phi = cfg.phi.has_value() || !cfg.phi_list.empty();
  const bool has_interval = cfg.interval.has_value();
  if (cfg.command != "verify") {
    if (has_phi == has_interval)
      throw modent::input_error("config: exactly one of {phi, interval} is required");
    if (cfg.interval && cfg.interval->size() != 4)
      throw modent::input_error("config: interval needs four endpoints a,b,c,d");
  }
  auto check_modes = [](int n) {
    if (!is_power_of_two(n) || n < 64 || n > 2048)
      throw modent::input_error("config: modes must be a power of two in [64, 2048], got " +
                                std::to_string(n));
  };
  check_modes(cfg.modes);
  for (int n : cfg.modes_list) check_modes(n);
  const int largest =
      std::max(cfg.modes, cfg.modes_list.empty()
                              ? cfg.modes
                              : *std::max_element(cfg.modes_list.begin(), cfg.modes_list.end()));
  if (cfg.fft_samples < 8 * largest)
    throw modent::input_error("config: fft_samples must be >= 8 * modes");
  if (!is_power_of_two(cfg.fft_samples))
    throw modent::input_error("config: fft_samples must be a power of two");
  if (cfg.convention != "real" && cfg.convention != "complex")
    throw modent::input_error("config: convention must be 'real' or 'complex'");
  if (cfg.jobs < 1) throw modent::input_error("config: jobs must be >= 1");
}

RunOptions to_options(const Config& cfg, int modes) {
  RunOptions opt;
  opt.cutoff = modes;
  opt.fft_samples = cfg.fft_samples;
  opt.convention = cfg.convention == "real" ? Convention::Real : Convention::Complex;
  opt.q_values = cfg.q_values;
  return opt;
}

std::filesystem::path resolve_out_dir(const Config& cfg) {
  if (!cfg.out_dir.empty()) return cfg.out_dir;
  if (const char* env = std::getenv("MODENT_OUT_DIR")) return env;
  return ".";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw modent::input_error("cannot open output file " + path.string());
  os << content;
}

std::string file_stamp(double phi, int modes) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "phi%.6f_N%d", phi, modes);
  return buf;
}

SpectralSummary run_one(const Config& cfg, double phi_or_unused, int modes) {
  if (cfg.interval) {
    const auto& iv = *cfg.interval;
    return modent::subspace::run_pipeline_interval(iv[0], iv[1], iv[2], iv[3],
                                                   to_options(cfg, modes));
  }
  return modent::subspace::run_pipeline(phi_or_unused, to_options(cfg, modes));
}

int cmd_entropy(const Config& cfg) {
  const std::string hash = fnv1a_hash(cfg.to_json().dump());
  const SpectralSummary s = run_one(cfg, cfg.phi.value_or(0.0), cfg.modes);

  const auto dir = resolve_out_dir(cfg);
  std::filesystem::create_directories(dir);
  const std::string stem = "entropy_" + file_stamp(s.phi, s.cutoff);
  write_file(dir / (stem + ".json"), s.to_json(modent::kVersion, hash) + "\n");
  std::string csv = "# modent " + std::string(modent::kVersion) + " config=" + hash + "\n";
  csv += SpectralSummary::csv_header() + "\n" + s.csv_row() + "\n";
  write_file(dir / (stem + ".csv"), csv);

  std::printf("phi=%.12g N=%d\n", s.phi, s.cutoff);
  std::printf("S_%s=%.12g (S_complex=%.12g, S_real=%.12g)\n",
              cfg.convention.c_str(), s.headline_entropy(), s.s_complex, s.s_real);
  std::printf("S_fermi=%.12g S_bose=%.12g lower_bound=%.12g\n", s.s_fermi, s.s_bose,
              s.lower_bound);
  std::printf("defect_idem=%.3e defect_herm=%.3e\n", s.defect_idempotent, s.defect_hermitian);
  std::printf("wrote %s/%s.{json,csv}\n", dir.string().c_str(), stem.c_str());
  return 0;
}

int cmd_sweep(const Config& cfg) {
  struct Point {
    double phi;
    int modes;
  };
  std::vector<Point> points;
  if (!cfg.phi_list.empty() && !cfg.modes_list.empty())
    throw modent::input_error("config: sweep over either phi or modes, not both");
  if (!cfg.phi_list.empty())
    for (double p : cfg.phi_list) points.push_back({p, cfg.modes});
  else if (!cfg.modes_list.empty())
    for (int n : cfg.modes_list) points.push_back({cfg.phi.value_or(std::numbers::pi / 2), n});
  if (points.size() < 2) throw modent::input_error("config: sweep needs at least 2 points");

  const std::string hash = fnv1a_hash(cfg.to_json().dump());
  std::vector<SpectralSummary> results(points.size());
  std::vector<std::string> errors(points.size());

  // Fixed-size worker pool; results land in input order for determinism.
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      try {
        results[i] = run_one(cfg, points[i].phi, points[i].modes);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const int jobs = std::min<int>(cfg.jobs, int(points.size()));
  pool.reserve(size_t(jobs));
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (size_t i = 0; i < points.size(); ++i)
    if (!errors[i].empty()) throw modent::diagnostic_error("sweep point " + std::to_string(i) +
                                                           " failed: " + errors[i]);

  std::string csv = "# modent " + std::string(modent::kVersion) + " config=" + hash + "\n";
  csv += SpectralSummary::csv_header() + ",delta_S,delta_qsum_pct\n";
  json rows = json::array();
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& s = results[i];
    double d_s = 0.0, d_q = 0.0;
    if (i > 0) {
      d_s = std::abs(s.headline_entropy() - results[i - 1].headline_entropy());
      const double q0 = s.mu_power_sums.begin()->second;
      const double q1 = results[i - 1].mu_power_sums.begin()->second;
      if (q1 != 0.0) d_q = 100.0 * std::abs(q0 - q1) / q1;
    }
    char tail[80];
    std::snprintf(tail, sizeof(tail), ",%.17g,%.17g", d_s, d_q);
    csv += s.csv_row() + tail + "\n";
    rows.push_back(json::parse(s.to_json()));
  }
  const auto dir = resolve_out_dir(cfg);
  std::filesystem::create_directories(dir);
  write_file(dir / "sweep.csv", csv);
  json doc;
  doc["meta"] = {{"version", modent::kVersion}, {"config_hash", hash}};
  doc["rows"] = rows;
  write_file(dir / "sweep.json", doc.dump(2) + "\n");
  std::printf("%zu sweep points -> %s/sweep.{csv,json}\n", points.size(),
              dir.string().c_str());
  return 0;
}

int cmd_verify(const Config& cfg) {
  const std::string hash = fnv1a_hash(cfg.to_json().dump());
  const auto rep = modent::verify::run_suite(cfg.suite, cfg.seed);
  const auto dir = resolve_out_dir(cfg);
  std::filesystem::create_directories(dir);
  write_file(dir / ("verify_" + cfg.suite + ".json"),
             rep.to_json(modent::kVersion, hash) + "\n");
  for (const auto& c : rep.checks)
    std::printf("%-40s %s  (value %.3e, tol %.3e)\n", c.name.c_str(),
                c.pass ? "pass" : "FAIL", c.value, c.threshold);
  if (!rep.pass()) {
    for (const auto& c : rep.checks)
      if (!c.pass) std::fprintf(stderr, "verify %s: failing check: %s\n", cfg.suite.c_str(),
                                c.name.c_str());
    return kExitFailure;
  }
  return 0;
}

void load_config_file(const std::string& path, Config& cfg) {
  std::ifstream is(path);
  if (!is) throw modent::input_error("cannot read config file " + path);
  json j;
  is >> j;
  if (j.contains("phi")) cfg.phi = j["phi"].get<double>();
  if (j.contains("interval")) cfg.interval = j["interval"].get<std::vector<double>>();
  if (j.contains("phi_list")) cfg.phi_list = j["phi_list"].get<std::vector<double>>();
  if (j.contains("modes_list")) cfg.modes_list = j["modes_list"].get<std::vector<int>>();
  if (j.contains("modes")) cfg.modes = j["modes"].get<int>();
  if (j.contains("fft_samples")) cfg.fft_samples = j["fft_samples"].get<int>();
  if (j.contains("convention")) cfg.convention = j["convention"].get<std::string>();
  if (j.contains("q")) cfg.q_values = j["q"].get<std::vector<double>>();
  if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
  if (j.contains("suite")) cfg.suite = j["suite"].get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modent: angle-operator spectra and entanglement entropies for "
               "interval inclusions on the circle"};
  app.require_subcommand(1);

  Config cfg;
  std::string config_path;
  std::string interval_csv;
  std::string phi_csv;
  std::string modes_csv;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file (flags override it)");
    sub->add_option("--phi", phi_csv, "angle in (0, pi); comma list sweeps");
    sub->add_option("--interval", interval_csv, "a,b,c,d interval endpoints (radians)");
    sub->add_option("--modes", modes_csv, "Fourier cutoff N; comma list sweeps");
    sub->add_option("--fft-samples", cfg.fft_samples, "FFT sample count (power of two)");
    sub->add_option("--convention", cfg.convention, "entropy convention: real|complex");
    sub->add_option("--q", cfg.q_values, "q exponents for spectrum power sums");
    sub->add_option("--jobs", cfg.jobs, "sweep worker pool size");
    sub->add_option("--seed", cfg.seed, "random seed for ensemble commands");
    sub->add_option("--out-dir", cfg.out_dir, "output directory (or MODENT_OUT_DIR)");
  };

  CLI::App* entropy = app.add_subcommand("entropy", "single-configuration pipeline");
  add_common(entropy);
  CLI::App* sweep = app.add_subcommand("sweep", "pipeline over a phi or modes list");
  add_common(sweep);
  CLI::App* verify = app.add_subcommand("verify", "run a module invariant battery");
  verify->add_option("suite", cfg.suite, "modular|fock|hankel|geometry");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : 0;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);

    auto parse_list = [](const std::string& text) {
      std::vector<double> out;
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
      return out;
    };
    if (!phi_csv.empty()) {
      const auto vals = parse_list(phi_csv);
      if (vals.size() == 1)
        cfg.phi = vals[0];
      else
        cfg.phi_list = vals;
    }
    if (!modes_csv.empty()) {
      const auto vals = parse_list(modes_csv);
      if (vals.size() == 1)
        cfg.modes = int(vals[0]);
      else
        for (double v : vals) cfg.modes_list.push_back(int(v));
    }
    if (!interval_csv.empty()) cfg.interval = parse_list(interval_csv);

    if (entropy->parsed()) cfg.command = "entropy";
    if (sweep->parsed()) cfg.command = "sweep";
    if (verify->parsed()) cfg.command = "verify";

    if (cfg.command == "verify") {
      if (cfg.suite.empty()) throw modent::input_error("config: missing field 'suite'");
      return cmd_verify(cfg);
    }
    validate_common(cfg);
    if (cfg.command == "entropy") return cmd_entropy(cfg);
    return cmd_sweep(cfg);
  } catch (const modent::input_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
}

// lfam: command-line front end for family-constant, density and Weil-group runs.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lfam/config.hpp"
#include "lfam/errors.hpp"
#include "lfam/runner.hpp"
#include "lfam/weil_expr.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kNumericError = 3;
constexpr int kCheckFailed = 4;

struct Common {
  std::string config;
  std::uint64_t primes = 0;
  double sigma = 0.0;
  unsigned threads = 0;
  std::string out;
  bool check = false;
};

void add_common(CLI::App* app, Common& c, bool needs_config = true) {
  auto* opt = app->add_option("--config", c.config, "experiment recipe (text or JSON)");
  if (needs_config) opt->required();
  app->add_option("--primes", c.primes, "prime cutoff P");
  app->add_option("--sigma", c.sigma, "support of the test function's transform");
  app->add_option("--threads", c.threads, "worker threads");
  app->add_option("--out", c.out, "directory for CSV/JSON output");
  app->add_flag("--check", c.check, "exit 4 when an acceptance threshold is violated");
}

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(dir);
  std::ofstream f(std::filesystem::path(dir) / name);
  if (!f) throw lfam::ConfigError("cannot write to '" + dir + "'");
  f << text;
}

lfam::runner::RunOptions options_of(const Common& c) {
  lfam::runner::RunOptions o;
  if (c.primes) o.primes = c.primes;
  if (c.sigma > 0) o.sigma = c.sigma;
  if (c.threads) o.threads = c.threads;
  return o;
}

int run_constants(const Common& c, bool convolutions_only) {
  using namespace lfam::runner;
  const auto cfg = load_config(c.config);
  auto opt = options_of(c);
  if (convolutions_only) {
    opt.only = convolution_ids(cfg);
    if (opt.only.empty()) throw lfam::ConfigError("no convolve families declared");
  }
  const auto rows = run_families(cfg, opt);
  const std::string csv = constants_csv(rows);
  std::cout << csv;
  const std::string out = c.out.empty() ? cfg.out_dir : c.out;
  if (!out.empty()) {
    write_file(out, "constants.csv", csv);
    write_file(out, "constants.json", constants_json(rows).dump(2) + "\n");
  }
  if (!rows_finite(rows)) {
    std::cerr << "error: non-finite value in results\n";
    return kNumericError;
  }
  if (c.check) {
    const auto bad = constant_violations(rows);
    for (const auto& b : bad) std::cerr << "check failed: " << b << "\n";
    if (!bad.empty()) return kCheckFailed;
  }
  return kOk;
}

int run_density(const Common& c) {
  using namespace lfam::runner;
  const auto cfg = load_config(c.config);
  const auto opt = options_of(c);
  const double sigma = opt.sigma ? *opt.sigma : cfg.sigma;
  if (!(sigma > 0 && sigma < 1)) throw lfam::ConfigError("density comparisons need sigma in (0, 1)");
  for (const auto& d : cfg.families)
    if (auto s = d.real_or("sigma"); s && !opt.sigma && !(*s > 0 && *s < 1))
      throw lfam::ConfigError("family '" + d.id + "': density comparisons need sigma in (0, 1)");
  const auto rows = run_families(cfg, opt);
  const std::string csv = density_csv(rows, cfg.density_tolerance);
  std::cout << csv;
  const std::string out = c.out.empty() ? cfg.out_dir : c.out;
  if (!out.empty()) {
    write_file(out, "density.csv", csv);
    write_file(out, "density.json", density_json(rows, cfg.density_tolerance).dump(2) + "\n");
  }
  if (!rows_finite(rows)) {
    std::cerr << "error: non-finite value in results\n";
    return kNumericError;
  }
  if (c.check) {
    const auto bad = density_violations(rows, cfg.density_tolerance);
    for (const auto& b : bad) std::cerr << "check failed: " << b << "\n";
    if (!bad.empty()) return kCheckFailed;
  }
  return kOk;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw lfam::ConfigError("bad number '" + item + "' in list");
    }
  }
  if (out.empty()) throw lfam::ConfigError("empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry types of L-function families from local data"};
  app.require_subcommand(1);

  Common constants, density, conv;
  add_common(app.add_subcommand("constants", "family constants (c, eps, r) per declared family"),
             constants);
  add_common(app.add_subcommand("density", "empirical vs predicted one-level density"), density);
  add_common(app.add_subcommand("convolve", "constants of declared convolutions and their factors"),
             conv);

  auto* weil = app.add_subcommand("weil", "evaluate a Weil-group expression");
  std::string expr;
  bool as_json = false;
  weil->add_option("expression", expr, "e.g. 'sym^3([12])' or 'eps([12] (*) [16])'")->required();
  weil->add_flag("--json", as_json, "JSON output");

  auto* table = app.add_subcommand("rmt-table", "one-level predictions for every group");
  std::string sigmas = "0.5,0.8,1.5", ranks = "0", tf = "fejer", series_dir;
  table->add_option("--sigma", sigmas, "comma-separated supports");
  table->add_option("--rank", ranks, "comma-separated ranks");
  table->add_option("--test-function", tf, "fejer or fejer2");
  table->add_option("--out", series_dir, "also write (x, W1) series per group here");

  auto* scan = app.add_subcommand("ec-scan", "per-prime moments of an elliptic family");
  std::string poly_a = "T", poly_b = "1";
  std::uint64_t p_min = 5, p_max = 500;
  std::string scan_out;
  scan->add_option("--A", poly_a, "A(T)");
  scan->add_option("--B", poly_b, "B(T)");
  scan->add_option("--pmin", p_min, "smallest prime reported");
  scan->add_option("--pmax", p_max, "largest prime");
  scan->add_option("--out", scan_out, "directory for ec_scan.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    if (app.got_subcommand("constants")) return run_constants(constants, false);
    if (app.got_subcommand("convolve")) return run_constants(conv, true);
    if (app.got_subcommand("density")) return run_density(density);
    if (app.got_subcommand("weil")) {
      const auto ev = lfam::weil::evaluate(expr);
      if (as_json) std::cout << ev.to_json(expr).dump(2) << "\n";
      else std::cout << ev.text() << "\n";
      return kOk;
    }
    if (app.got_subcommand("rmt-table")) {
      const std::string csv = lfam::runner::rmt_table_csv(parse_list(sigmas), parse_list(ranks), tf);
      std::cout << csv;
      if (!series_dir.empty()) {
        write_file(series_dir, "rmt_table.csv", csv);
        for (auto g : lfam::rmt::kAllSymmetries) {
          std::string name = lfam::rmt::to_string(g);
          for (char& ch : name)
            if (ch == '(' || ch == ')') ch = '_';
          write_file(series_dir, "density_" + name + ".csv", lfam::runner::density_series_csv(g));
        }
      }
      return kOk;
    }
    if (app.got_subcommand("ec-scan")) {
      lfam::ec::EllipticFamilySpec spec;
      spec.A = lfam::ec::Polynomial::parse(poly_a);
      spec.B = lfam::ec::Polynomial::parse(poly_b);
      const std::string csv = lfam::runner::ec_scan_csv(spec, p_min, p_max);
      std::cout << csv;
      if (!scan_out.empty()) write_file(scan_out, "ec_scan.csv", csv);
      return kOk;
    }
  } catch (const lfam::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kOk;
}

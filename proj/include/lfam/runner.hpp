#pragma once

// Orchestration of experiments declared in an ExperimentConfig: family
// constants, one-level densities, random-matrix tables and EC scans, with
// deterministic CSV/JSON output.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfam/config.hpp"
#include "lfam/ec.hpp"
#include "lfam/stats.hpp"

namespace lfam::runner {

// 12 significant digits, shortest form.
std::string format_number(double v);

struct FamilyRow {
  std::string id;
  std::string kind;
  std::uint64_t members = 0;
  std::uint64_t primes = 0;
  stats::FamilyConstant constant;
  stats::DensityReport density;
  std::optional<int> expect_c;
  // Convolutions only: c_left * c_right and whether it matches c.
  std::optional<int> product_expected;
  std::string product_check;
};

// Overrides from the command line.
struct RunOptions {
  std::optional<std::uint64_t> primes;
  std::optional<double> sigma;
  std::optional<unsigned> threads;
  // Restrict to these ids (and whatever convolutions need); empty runs all.
  std::set<std::string> only;
};

std::vector<FamilyRow> run_families(const ExperimentConfig& config, const RunOptions& opt = {});

std::string constants_csv(const std::vector<FamilyRow>& rows);
nlohmann::json constants_json(const std::vector<FamilyRow>& rows);
std::string density_csv(const std::vector<FamilyRow>& rows, double tolerance);
nlohmann::json density_json(const std::vector<FamilyRow>& rows, double tolerance);

bool rows_finite(const std::vector<FamilyRow>& rows);
// Rows breaking expect_c or a product check.
std::vector<std::string> constant_violations(const std::vector<FamilyRow>& rows);
// Rows whose |D1_emp - D1_pred| exceeds the tolerance.
std::vector<std::string> density_violations(const std::vector<FamilyRow>& rows, double tolerance);

// Ids of declared convolutions and the families they combine.
std::set<std::string> convolution_ids(const ExperimentConfig& config);

// group, test_function, sigma, rank, prediction, quadrature
std::string rmt_table_csv(const std::vector<double>& sigmas, const std::vector<double>& ranks,
                          const std::string& test_function = "fejer");
// Two-column (x, W_1(x)) series for one group, x in [0, x_max].
std::string density_series_csv(rmt::Symmetry g, double x_max = 4.0, double step = 0.01);

// p, sum_t a_t(p), sum_t a_t(p)^2, (sum a^2 - p^2)/p^1.5, running rank estimate.
std::string ec_scan_csv(const ec::EllipticFamilySpec& spec, std::uint64_t p_min,
                        std::uint64_t p_max);

}  // namespace lfam::runner

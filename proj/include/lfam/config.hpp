#pragma once

// Experiment recipes: a flat key-table text format (or JSON) declaring
// families and run parameters, and the registry that instantiates them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lfam/families.hpp"
#include "lfam/rmt.hpp"

namespace lfam::runner {

struct FamilyDecl {
  std::string id;
  std::string kind;
  std::map<std::string, std::string> params;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  std::string text(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  std::optional<std::int64_t> integer_or(const std::string& key) const;
  double real(const std::string& key) const;
  std::optional<double> real_or(const std::string& key) const;
};

struct ExperimentConfig {
  std::vector<FamilyDecl> families;  // declaration order
  std::string test_function = "fejer";
  double sigma = 0.5;
  std::uint64_t primes = 2000;
  int nu_max = 10;
  std::optional<double> log_r;  // empty: computed per family
  std::optional<double> tolerance;
  double density_tolerance = 0.1;
  unsigned threads = 1;
  std::string out_dir;

  const FamilyDecl& find(const std::string& id) const;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_json(const std::string& text);
// Chooses the JSON reader for *.json paths or text starting with '{'.
ExperimentConfig load_config(const std::string& path);

rmt::TestFunction make_test_function(const std::string& kind, double sigma);

// Builds declared families on demand, resolving references between them.
class FamilyRegistry {
 public:
  explicit FamilyRegistry(const ExperimentConfig& config);

  families::FamilyPtr get(const std::string& id);
  // Ids referenced by a declaration (base, left, right, fixed, family).
  static std::vector<std::string> references(const FamilyDecl& d);

 private:
  families::FamilyPtr build(const FamilyDecl& d);

  const ExperimentConfig& config_;
  std::map<std::string, families::FamilyPtr> built_;
  std::vector<std::string> stack_;
};

}  // namespace lfam::runner

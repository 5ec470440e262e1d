#include "lfam/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lfam/ec.hpp"
#include "lfam/errors.hpp"

namespace lfam::runner {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::set<std::string> kKinds = {"dirichlet", "character", "quadratic", "elliptic", "delta",
                                       "sym_lift",  "convolve",  "twist",     "zero"};

const std::set<std::string> kCommonKeys = {"primes", "sigma", "tolerance", "log_r", "nu_max",
                                           "expect_c"};

const std::map<std::string, std::set<std::string>> kKindKeys = {
    {"dirichlet", {"modulus", "order"}},
    {"character", {"modulus", "order"}},
    {"quadratic", {"d_min", "d_max", "d"}},
    {"elliptic", {"A", "B", "N", "t_begin", "t_end"}},
    {"delta", {"bound"}},
    {"sym_lift", {"base", "M"}},
    {"convolve", {"left", "right", "collisions"}},
    {"twist", {"fixed", "family"}},
    {"zero", {"members", "degree", "log_conductor"}},
};

void validate_decl(const FamilyDecl& d) {
  if (d.id.empty()) throw ConfigError("family declaration without an id");
  if (!kKinds.count(d.kind)) throw ConfigError("family '" + d.id + "': unknown kind '" + d.kind + "'");
  const auto& allowed = kKindKeys.at(d.kind);
  for (const auto& [k, v] : d.params)
    if (!allowed.count(k) && !kCommonKeys.count(k))
      throw ConfigError("family '" + d.id + "': unknown key '" + k + "'");
}

template <typename T>
T parse_number(const std::string& where, const std::string& v) {
  std::istringstream in(v);
  T x{};
  in >> x;
  if (in.fail() || !in.eof()) throw ConfigError(where + ": not a number: '" + v + "'");
  return x;
}

void set_global(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  const std::string where = "key '" + key + "'";
  if (key == "test_function") cfg.test_function = value;
  else if (key == "sigma") cfg.sigma = parse_number<double>(where, value);
  else if (key == "primes") cfg.primes = parse_number<std::uint64_t>(where, value);
  else if (key == "nu_max") cfg.nu_max = parse_number<int>(where, value);
  else if (key == "log_r") {
    if (value == "computed") cfg.log_r.reset();
    else cfg.log_r = parse_number<double>(where, value);
  } else if (key == "tolerance") cfg.tolerance = parse_number<double>(where, value);
  else if (key == "density_tolerance") cfg.density_tolerance = parse_number<double>(where, value);
  else if (key == "threads") cfg.threads = parse_number<unsigned>(where, value);
  else if (key == "out") cfg.out_dir = value;
  else throw ConfigError("unknown key '" + key + "'");
}

void validate(const ExperimentConfig& cfg) {
  if (!(cfg.sigma > 0)) throw ConfigError("sigma must be positive");
  if (cfg.primes < 2) throw ConfigError("primes must be at least 2");
  if (cfg.nu_max < 2) throw ConfigError("nu_max must be at least 2");
  if (cfg.threads == 0) throw ConfigError("threads must be at least 1");
  std::set<std::string> ids;
  for (const auto& d : cfg.families) {
    validate_decl(d);
    if (!ids.insert(d.id).second) throw ConfigError("duplicate family id '" + d.id + "'");
  }
  for (const auto& d : cfg.families)
    for (const auto& r : FamilyRegistry::references(d))
      if (!ids.count(r)) throw ConfigError("family '" + d.id + "' references unknown id '" + r + "'");
}

}  // namespace

std::string FamilyDecl::text(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw ConfigError("family '" + id + "': missing key '" + key + "'");
  return it->second;
}

std::int64_t FamilyDecl::integer(const std::string& key) const {
  return parse_number<std::int64_t>("family '" + id + "' key '" + key + "'", text(key));
}

std::optional<std::int64_t> FamilyDecl::integer_or(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return integer(key);
}

double FamilyDecl::real(const std::string& key) const {
  return parse_number<double>("family '" + id + "' key '" + key + "'", text(key));
}

std::optional<double> FamilyDecl::real_or(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return real(key);
}

const FamilyDecl& ExperimentConfig::find(const std::string& id) const {
  for (const auto& d : families)
    if (d.id == id) return d;
  throw ConfigError("unknown family id '" + id + "'");
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  FamilyDecl* cur = nullptr;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string at = "line " + std::to_string(lineno) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(at + "unterminated section header");
      const std::string inner = trim(line.substr(1, line.size() - 2));
      if (inner == "experiment") {
        cur = nullptr;
        continue;
      }
      if (inner.rfind("family", 0) != 0) throw ConfigError(at + "unknown section '" + inner + "'");
      const std::string id = trim(inner.substr(6));
      if (id.empty()) throw ConfigError(at + "family section without an id");
      cfg.families.push_back({id, "", {}});
      cur = &cfg.families.back();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(at + "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(at + "empty key");
    try {
      if (!cur) {
        set_global(cfg, key, value);
      } else if (key == "kind") {
        cur->kind = value;
      } else {
        cur->params[key] = value;
      }
    } catch (const ConfigError& e) {
      throw ConfigError(at + e.what());
    }
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig parse_config_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be an object");
  auto as_text = [](const json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_number()) {
      std::ostringstream o;
      o.precision(17);
      o << v.get<double>();
      return o.str();
    }
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    throw ConfigError("config values must be scalars");
  };
  ExperimentConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "families") {
      if (!value.is_array()) throw ConfigError("'families' must be an array");
      for (const auto& f : value) {
        if (!f.is_object()) throw ConfigError("family entries must be objects");
        FamilyDecl d;
        for (const auto& [k, v] : f.items()) {
          if (k == "id") d.id = as_text(v);
          else if (k == "kind") d.kind = as_text(v);
          else d.params[k] = as_text(v);
        }
        cfg.families.push_back(std::move(d));
      }
    } else {
      set_global(cfg, key, as_text(value));
    }
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const bool json = (path.size() >= 5 && path.substr(path.size() - 5) == ".json") ||
                    trim(text).rfind('{', 0) == 0;
  return json ? parse_config_json(text) : parse_config_text(text);
}

rmt::TestFunction make_test_function(const std::string& kind, double sigma) {
  if (kind == "fejer") return rmt::fejer_test_function(sigma);
  if (kind == "fejer2") return rmt::fejer_squared_test_function(sigma);
  throw ConfigError("unknown test function '" + kind + "'");
}

FamilyRegistry::FamilyRegistry(const ExperimentConfig& config) : config_(config) {}

std::vector<std::string> FamilyRegistry::references(const FamilyDecl& d) {
  std::vector<std::string> out;
  for (const char* k : {"base", "left", "right", "fixed", "family"})
    if (d.has(k)) out.push_back(d.text(k));
  return out;
}

families::FamilyPtr FamilyRegistry::get(const std::string& id) {
  if (auto it = built_.find(id); it != built_.end()) return it->second;
  if (std::find(stack_.begin(), stack_.end(), id) != stack_.end())
    throw ConfigError("family '" + id + "' refers to itself");
  const FamilyDecl& d = config_.find(id);
  stack_.push_back(id);
  families::FamilyPtr f;
  try {
    f = build(d);
  } catch (const ConfigError&) {
    stack_.pop_back();
    throw;
  } catch (const std::exception& e) {
    stack_.pop_back();
    throw ConfigError("family '" + id + "': " + e.what());
  }
  stack_.pop_back();
  built_[id] = f;
  return f;
}

families::FamilyPtr FamilyRegistry::build(const FamilyDecl& d) {
  using namespace families;
  if (d.kind == "dirichlet") {
    const auto m = static_cast<std::uint64_t>(d.integer("modulus"));
    if (auto o = d.integer_or("order")) return std::make_shared<DirichletFamily>(m, static_cast<std::uint32_t>(*o));
    return dirichlet_family(m);
  }
  if (d.kind == "character")
    return dirichlet_character(static_cast<std::uint64_t>(d.integer("modulus")),
                               static_cast<std::uint32_t>(d.integer("order")));
  if (d.kind == "quadratic") {
    if (d.has("d")) {
      const auto v = d.integer("d");
      return quadratic_family(v, v);
    }
    return quadratic_family(d.integer("d_min"), d.integer("d_max"));
  }
  if (d.kind == "elliptic") {
    ec::EllipticFamilySpec spec;
    spec.A = ec::Polynomial::parse(d.text("A"));
    spec.B = ec::Polynomial::parse(d.text("B"));
    if (d.has("N")) {
      const auto n = d.integer("N");
      spec.t_begin = n;
      spec.t_end = 2 * n;
    } else {
      spec.t_begin = d.integer("t_begin");
      spec.t_end = d.integer("t_end");
    }
    if (spec.t_end <= spec.t_begin) throw ConfigError("family '" + d.id + "': empty parameter range");
    return elliptic_family(spec);
  }
  if (d.kind == "delta") return cusp_form_delta(static_cast<std::size_t>(d.integer_or("bound").value_or(1000)));
  if (d.kind == "sym_lift") return sym_lift(get(d.text("base")), static_cast<int>(d.integer("M")));
  if (d.kind == "convolve") {
    const auto policy = collision_policy_from_string(d.has("collisions") ? d.text("collisions") : "auto");
    return convolve(get(d.text("left")), get(d.text("right")), policy);
  }
  if (d.kind == "twist") return twist_by_fixed(get(d.text("fixed")), get(d.text("family")));
  if (d.kind == "zero")
    return std::make_shared<ZeroFamily>(static_cast<std::size_t>(d.integer_or("members").value_or(1)),
                                        static_cast<int>(d.integer_or("degree").value_or(1)),
                                        d.real_or("log_conductor").value_or(10.0));
  throw ConfigError("family '" + d.id + "': unknown kind '" + d.kind + "'");
}

}  // namespace lfam::runner

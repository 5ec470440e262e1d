#include "lfam/runner.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "lfam/arith.hpp"
#include "lfam/errors.hpp"

namespace lfam::runner {

namespace {

std::string opt_int(const std::optional<int>& v) {
  if (!v) return "";
  return *v > 0 ? "+" + std::to_string(*v) : std::to_string(*v);
}

std::string opt_num(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

std::string group_name(const stats::FamilyConstant& fc) {
  const auto g = stats::symmetry_of(fc);
  return g ? rmt::to_string(*g) : "";
}

bool density_ok(const FamilyRow& r, double tol) {
  return !r.density.predicted || std::fabs(r.density.empirical - *r.density.predicted) <= tol;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::ostringstream o;
  o.precision(12);
  o << v;
  return o.str();
}

std::set<std::string> convolution_ids(const ExperimentConfig& config) {
  std::set<std::string> ids;
  for (const auto& d : config.families) {
    if (d.kind != "convolve") continue;
    ids.insert(d.id);
    ids.insert(d.text("left"));
    ids.insert(d.text("right"));
  }
  return ids;
}

std::vector<FamilyRow> run_families(const ExperimentConfig& config, const RunOptions& opt) {
  FamilyRegistry registry(config);
  std::vector<FamilyRow> rows;
  std::map<std::string, std::size_t> index;
  for (const auto& d : config.families) {
    if (!opt.only.empty() && !opt.only.count(d.id)) continue;
    const auto f = registry.get(d.id);
    const double sigma = opt.sigma ? *opt.sigma : d.real_or("sigma").value_or(config.sigma);
    const auto P = opt.primes ? *opt.primes
                              : static_cast<std::uint64_t>(d.integer_or("primes").value_or(
                                    static_cast<std::int64_t>(config.primes)));
    const int nu_max = static_cast<int>(d.integer_or("nu_max").value_or(config.nu_max));
    const unsigned threads = opt.threads ? *opt.threads : config.threads;
    std::optional<double> log_r = d.real_or("log_r");
    if (!log_r) log_r = config.log_r;
    const double lr = log_r ? *log_r : f->mean_log_conductor();
    const double tol = d.real_or("tolerance").value_or(
        config.tolerance ? *config.tolerance : f->default_tolerance());

    const auto phi = make_test_function(config.test_function, sigma);
    const auto prof = stats::collect_profile(*f, lr, sigma, P, nu_max, threads);

    FamilyRow row;
    row.id = d.id;
    row.kind = d.kind;
    row.members = f->total_weight();
    row.primes = P;
    row.constant = stats::family_constant(prof, phi, *f, tol);
    row.density = stats::one_level_density(prof, phi, row.members);
    row.density.group = stats::symmetry_of(row.constant);
    row.density.predicted = stats::predicted_density(row.constant, phi);
    if (auto e = d.integer_or("expect_c")) row.expect_c = static_cast<int>(*e);
    index[d.id] = rows.size();
    rows.push_back(std::move(row));
  }
  for (const auto& d : config.families) {
    if (d.kind != "convolve" || !index.count(d.id)) continue;
    auto& row = rows[index[d.id]];
    const auto l = index.find(d.text("left"));
    const auto r = index.find(d.text("right"));
    if (l == index.end() || r == index.end()) continue;
    const auto& cl = rows[l->second].constant.c_class;
    const auto& cr = rows[r->second].constant.c_class;
    if (!cl || !cr) {
      row.product_check = "indeterminate";
      continue;
    }
    row.product_expected = *cl * *cr;
    if (!row.constant.c_class) row.product_check = "indeterminate";
    else row.product_check = (*row.constant.c_class == *row.product_expected) ? "ok" : "mismatch";
  }
  return rows;
}

std::string constants_csv(const std::vector<FamilyRow>& rows) {
  std::ostringstream o;
  o << "family_id,sigma,P,c_est,c_class,r_est,eps,D1_emp,D1_pred,nu3_tail,bad_mass,"
       "kind,members,logR,c_raw,r_raw,tolerance,product_expected,product_check\n";
  for (const auto& r : rows) {
    const auto& c = r.constant;
    o << r.id << ',' << format_number(c.sigma) << ',' << r.primes << ','
      << format_number(c.c_estimate) << ',' << stats::class_to_string(c.c_class) << ','
      << format_number(c.r_estimate) << ',' << stats::sign_to_string(c.epsilon) << ','
      << format_number(r.density.empirical) << ',' << opt_num(r.density.predicted) << ','
      << format_number(r.density.tail) << ',' << format_number(r.density.bad_mass) << ','
      << r.kind << ',' << r.members << ',' << format_number(c.log_r) << ','
      << format_number(c.c_raw) << ',' << format_number(c.r_raw) << ','
      << format_number(c.tolerance) << ',' << opt_int(r.product_expected) << ','
      << r.product_check << '\n';
  }
  return o.str();
}

nlohmann::json constants_json(const std::vector<FamilyRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    const auto& c = r.constant;
    nlohmann::json j;
    j["family_id"] = r.id;
    j["kind"] = r.kind;
    j["members"] = r.members;
    j["sigma"] = c.sigma;
    j["P"] = r.primes;
    j["logR"] = c.log_r;
    j["c_est"] = c.c_estimate;
    j["c_raw"] = c.c_raw;
    j["c_class"] = stats::class_to_string(c.c_class);
    j["tolerance"] = c.tolerance;
    j["r_est"] = c.r_estimate;
    j["r_raw"] = c.r_raw;
    j["eps"] = stats::sign_to_string(c.epsilon);
    j["D1_emp"] = r.density.empirical;
    j["D1_pred"] = r.density.predicted ? nlohmann::json(*r.density.predicted) : nlohmann::json();
    j["nu3_tail"] = r.density.tail;
    j["bad_mass"] = r.density.bad_mass;
    if (!r.product_check.empty()) {
      j["product_expected"] = r.product_expected ? nlohmann::json(*r.product_expected) : nlohmann::json();
      j["product_check"] = r.product_check;
    }
    out.push_back(j);
  }
  return out;
}

std::string density_csv(const std::vector<FamilyRow>& rows, double tolerance) {
  std::ostringstream o;
  o << "family_id,sigma,P,cutoff,logR,members,group,D1_emp,D1_pred,diff,phi_hat0,nu1,nu2,nu3_tail,"
       "bad_mass,within_tolerance\n";
  for (const auto& r : rows) {
    const auto& d = r.density;
    o << r.id << ',' << format_number(d.sigma) << ',' << r.primes << ',' << d.cutoff << ','
      << format_number(d.log_r) << ',' << d.members << ',' << group_name(r.constant) << ','
      << format_number(d.empirical) << ',' << opt_num(d.predicted) << ','
      << (d.predicted ? format_number(d.empirical - *d.predicted) : "") << ','
      << format_number(d.phi_hat0) << ',' << format_number(d.nu1) << ','
      << format_number(d.nu2) << ',' << format_number(d.tail) << ','
      << format_number(d.bad_mass) << ','
      << (d.predicted ? (density_ok(r, tolerance) ? "yes" : "no") : "") << '\n';
  }
  return o.str();
}

nlohmann::json density_json(const std::vector<FamilyRow>& rows, double tolerance) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    const auto& d = r.density;
    nlohmann::json j;
    j["family_id"] = r.id;
    j["sigma"] = d.sigma;
    j["P"] = r.primes;
    j["cutoff"] = d.cutoff;
    j["logR"] = d.log_r;
    j["members"] = d.members;
    j["group"] = group_name(r.constant);
    j["D1_emp"] = d.empirical;
    j["D1_pred"] = d.predicted ? nlohmann::json(*d.predicted) : nlohmann::json();
    j["phi_hat0"] = d.phi_hat0;
    j["nu1"] = d.nu1;
    j["nu2"] = d.nu2;
    j["nu3_tail"] = d.tail;
    j["bad_mass"] = d.bad_mass;
    if (d.predicted) j["within_tolerance"] = density_ok(r, tolerance);
    out.push_back(j);
  }
  return out;
}

bool rows_finite(const std::vector<FamilyRow>& rows) {
  for (const auto& r : rows) {
    const auto& c = r.constant;
    const auto& d = r.density;
    for (double v : {c.c_estimate, c.c_raw, c.r_estimate, c.r_raw, d.empirical, d.nu1, d.nu2,
                     d.tail, d.bad_mass, d.log_r})
      if (!std::isfinite(v)) return false;
    if (d.predicted && !std::isfinite(*d.predicted)) return false;
  }
  return true;
}

std::vector<std::string> constant_violations(const std::vector<FamilyRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) {
    if (r.expect_c && r.constant.c_class != r.expect_c)
      out.push_back(r.id + ": expected c = " + opt_int(r.expect_c) + ", got " +
                    stats::class_to_string(r.constant.c_class) + " (estimate " +
                    format_number(r.constant.c_estimate) + ")");
    if (r.product_check == "mismatch")
      out.push_back(r.id + ": c = " + stats::class_to_string(r.constant.c_class) +
                    " differs from the product " + opt_int(r.product_expected));
  }
  return out;
}

std::vector<std::string> density_violations(const std::vector<FamilyRow>& rows, double tolerance) {
  std::vector<std::string> out;
  for (const auto& r : rows)
    if (!density_ok(r, tolerance))
      out.push_back(r.id + ": |D1_emp - D1_pred| = " +
                    format_number(std::fabs(r.density.empirical - *r.density.predicted)));
  return out;
}

std::string rmt_table_csv(const std::vector<double>& sigmas, const std::vector<double>& ranks,
                          const std::string& test_function) {
  std::ostringstream o;
  o << "group,test_function,sigma,rank,prediction,quadrature\n";
  for (auto g : rmt::kAllSymmetries)
    for (double s : sigmas) {
      const auto phi = make_test_function(test_function, s);
      for (double r : ranks) {
        const double pred = s < 1.0 ? rmt::one_level_prediction(g, phi, r)
                                    : std::nan("");
        const double quad = rmt::one_level_quadrature_u(g, phi) + r * phi.phi0();
        o << rmt::to_string(g) << ',' << test_function << ',' << format_number(s) << ','
          << format_number(r) << ',' << format_number(pred) << ',' << format_number(quad) << '\n';
      }
    }
  return o.str();
}

std::string density_series_csv(rmt::Symmetry g, double x_max, double step) {
  std::ostringstream o;
  o << "x,W1\n";
  const auto n = static_cast<long>(std::floor(x_max / step + 0.5));
  for (long i = 0; i <= n; ++i) {
    const double x = i * step;
    o << format_number(x) << ',' << format_number(rmt::density_one_point(g, x).regular) << '\n';
  }
  return o.str();
}

std::string ec_scan_csv(const ec::EllipticFamilySpec& spec, std::uint64_t p_min,
                        std::uint64_t p_max) {
  if (p_min < 5) p_min = 5;
  if (p_max < p_min) throw DomainError("ec-scan: empty prime range");
  std::ostringstream o;
  o << "p,sum_a,sum_a2,michel_deviation,nagao_partial\n";
  const arith::PrimeTable table(p_max);
  long double nagao = 0;
  const bool moment = spec.j_nonconstant();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::uint64_t p = table[i];
    if (p < 5) continue;
    const auto tr = ec::fiber_traces(spec, p);
    std::int64_t s1 = 0, s2 = 0;
    for (auto a : tr) {
      s1 += a;
      s2 += a * a;
    }
    nagao += table.logs()[i] * static_cast<long double>(s1) / static_cast<long double>(p);
    if (p < p_min) continue;
    const double dev = (static_cast<double>(s2) - static_cast<double>(p) * static_cast<double>(p)) /
                       std::pow(static_cast<double>(p), 1.5);
    o << p << ',' << s1 << ',' << s2 << ',' << (moment ? format_number(dev) : "") << ','
      << format_number(static_cast<double>(-nagao / p)) << '\n';
  }
  return o.str();
}

}  // namespace lfam::runner

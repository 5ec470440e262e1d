#include "lfam/stats.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "lfam/arith.hpp"
#include "lfam/errors.hpp"

namespace lfam::stats {

namespace {

std::uint64_t support_bound(double log_r, double reach, std::uint64_t P) {
  const double x = std::exp(reach * log_r);
  if (!(x < static_cast<double>(P))) return P;
  return static_cast<std::uint64_t>(std::floor(x));
}

// Weight (log p)/(p^(nu/2) log R) phi_hat(nu log p/log R).
double nu_weight(const PrimeRecord& r, int nu, double log_r, const TestFunction& phi) {
  const double u = nu * r.log_p / log_r;
  const double fh = phi.phi_hat(u);
  if (fh == 0.0) return 0.0;
  return r.log_p / (std::pow(static_cast<double>(r.p), 0.5 * nu) * log_r) * fh;
}

}  // namespace

PrimeProfile collect_profile(const Family& f, double log_r, double sigma, std::uint64_t P,
                             int nu_max, unsigned threads) {
  if (!(log_r > 0)) throw DomainError("log R must be positive");
  if (!(sigma > 0)) throw DomainError("support sigma must be positive");
  if (nu_max < 2) throw DomainError("nu_max must be at least 2");
  PrimeProfile prof;
  prof.log_r = log_r;
  prof.sigma = sigma;
  prof.nu_max = nu_max;
  prof.family_weight = static_cast<long double>(f.total_weight());
  const std::uint64_t bound = support_bound(log_r, sigma, P);
  prof.cutoff = bound;
  if (bound < 2) return prof;
  const arith::PrimeTable table(bound);
  const std::size_t n = table.size();
  std::vector<PrimeAverage> avgs(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) avgs[i] = f.average(table[i], nu_max);
  };
  const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (t == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < t; ++k) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  prof.primes.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    prof.primes.push_back({table[i], table.logs()[i], std::move(avgs[i])});
  return prof;
}

double prime_sum(const PrimeProfile& prof, const TestFunction& phi) {
  long double s = 0;
  for (const auto& r : prof.primes) {
    const double w = nu_weight(r, 1, prof.log_r, phi);
    if (w != 0.0) s += static_cast<long double>(w) * r.avg.mean(1);
  }
  return static_cast<double>(-2 * s);
}

double prime_sum(const Family& f, const TestFunction& phi, double log_r, std::uint64_t P,
                 unsigned threads) {
  return prime_sum(collect_profile(f, log_r, phi.sigma(), P, 2, threads), phi);
}

PrimeSquareSum prime_square_sum(const PrimeProfile& prof, const TestFunction& phi) {
  if (phi.phi0() == 0.0) throw DomainError("degenerate test function: phi(0) = 0");
  long double s = 0, w_sum = 0;
  for (const auto& r : prof.primes) {
    if (r.avg.good_weight <= 0) continue;
    const double w = nu_weight(r, 2, prof.log_r, phi);
    if (w == 0.0) continue;
    s += static_cast<long double>(w) * r.avg.mean(2);
    w_sum += w;
  }
  PrimeSquareSum out;
  out.sum = static_cast<double>(-2 * s);
  out.c_estimate = -2.0 * out.sum / phi.phi0();
  out.weight = static_cast<double>(w_sum);
  out.c_normalized = w_sum > 0 ? static_cast<double>(s / w_sum) : out.c_estimate;
  return out;
}

PrimeSquareSum prime_square_sum(const Family& f, const TestFunction& phi, double log_r,
                                std::uint64_t P, unsigned threads) {
  return prime_square_sum(collect_profile(f, log_r, phi.sigma(), P, 2, threads), phi);
}

double pnt_prime_sum(const TestFunction& fhat, int nu, double R, std::uint64_t P) {
  if (!(R > std::exp(1.0))) throw DomainError("pnt_prime_sum needs R > e");
  if (nu < 1) throw DomainError("nu must be positive");
  const double log_r = std::log(R);
  const std::uint64_t bound = support_bound(log_r, fhat.sigma() / nu, P);
  if (bound < 2) return 0.0;
  const arith::PrimeTable table(bound);
  long double s = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double lp = table.logs()[i];
    const double fh = fhat.phi_hat(nu * lp / log_r);
    if (fh != 0.0) s += static_cast<long double>(fh) * lp / (static_cast<double>(table[i]) * log_r);
  }
  return static_cast<double>(s);
}

DensityReport one_level_density(const PrimeProfile& prof, const TestFunction& phi,
                                std::uint64_t members) {
  DensityReport rep;
  rep.phi_hat0 = phi.phi_hat0();
  rep.log_r = prof.log_r;
  rep.sigma = phi.sigma();
  rep.cutoff = prof.cutoff;
  rep.members = members;
  long double t1 = 0, t2 = 0, tail = 0, bad = 0;
  for (const auto& r : prof.primes) {
    bad += r.avg.bad_fraction() / std::sqrt(static_cast<double>(r.p));
    if (r.avg.good_weight <= 0) continue;
    for (int nu = 1; nu <= prof.nu_max; ++nu) {
      const double w = nu_weight(r, nu, prof.log_r, phi);
      if (w == 0.0) break;  // support only shrinks with nu
      const long double term = static_cast<long double>(w) * r.avg.mean(nu);
      if (nu == 1) t1 += term;
      else if (nu == 2) t2 += term;
      else tail += term;
    }
  }
  rep.nu1 = static_cast<double>(-2 * t1);
  rep.nu2 = static_cast<double>(-2 * t2);
  rep.tail = static_cast<double>(-2 * tail);
  rep.bad_mass = static_cast<double>(bad);
  rep.empirical = rep.phi_hat0 + rep.nu1 + rep.nu2 + rep.tail;
  return rep;
}

DensityReport one_level_density(const Family& f, const TestFunction& phi, std::uint64_t P,
                                int nu_max, unsigned threads, std::optional<double> log_r) {
  const double lr = log_r ? *log_r : f.mean_log_conductor();
  const auto prof = collect_profile(f, lr, phi.sigma(), P, nu_max, threads);
  return one_level_density(prof, phi, f.total_weight());
}

std::optional<int> classify(double estimate, double tolerance) {
  if (!std::isfinite(estimate)) return std::nullopt;
  for (int c : {-1, 0, 1}) {
    if (std::fabs(estimate - c) >= tolerance) continue;
    bool clear = true;
    for (int o : {-1, 0, 1})
      if (o != c && std::fabs(estimate - o) <= 2 * tolerance) clear = false;
    if (clear) return c;
  }
  return std::nullopt;
}

FamilyConstant family_constant(const PrimeProfile& prof, const TestFunction& phi, const Family& f,
                               double tolerance, std::uint64_t min_members) {
  FamilyConstant fc;
  fc.tolerance = tolerance;
  fc.sigma = phi.sigma();
  fc.log_r = prof.log_r;
  fc.prime_cutoff = prof.cutoff;

  const auto sq = prime_square_sum(prof, phi);
  fc.c_estimate = sq.c_normalized;
  fc.c_raw = sq.c_estimate;

  long double s1 = 0, w1 = 0;
  for (const auto& r : prof.primes) {
    if (r.avg.good_weight <= 0) continue;
    const double w = nu_weight(r, 1, prof.log_r, phi);
    if (w == 0.0) continue;
    s1 += static_cast<long double>(w) * r.avg.mean(1);
    w1 += static_cast<long double>(w) / std::sqrt(static_cast<double>(r.p));
  }
  fc.r_raw = static_cast<double>(-2 * s1) / phi.phi0();
  fc.r_estimate = w1 > 0 ? static_cast<double>(-s1 / w1) : fc.r_raw;

  if (prof.family_weight >= static_cast<long double>(min_members) && sq.weight > 0)
    fc.c_class = classify(fc.c_estimate, tolerance);

  if (!fc.c_class) return fc;
  if (*fc.c_class != -1) {
    fc.epsilon = 0;
    return fc;
  }
  long double even = 0, total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto s = f.sign(i);
    if (!s) return fc;
    total += f.multiplicity(i);
    if (*s == 1) even += f.multiplicity(i);
  }
  if (total == 0) return fc;
  const double frac = static_cast<double>(even / total);
  if (frac == 1.0) fc.epsilon = 1;
  else if (frac == 0.0) fc.epsilon = -1;
  else if (std::fabs(frac - 0.5) <= 0.1) fc.epsilon = 0;
  return fc;
}

FamilyConstant family_constant(const Family& f, const TestFunction& phi,
                               const ConstantConfig& config) {
  const double lr = config.log_r ? *config.log_r : f.mean_log_conductor();
  const auto prof = collect_profile(f, lr, phi.sigma(), config.prime_cutoff,
                                    std::max(2, config.nu_max), config.threads);
  const double tol = config.tolerance ? *config.tolerance : f.default_tolerance();
  return family_constant(prof, phi, f, tol, config.min_members);
}

std::optional<rmt::Symmetry> symmetry_of(const FamilyConstant& fc) {
  if (!fc.c_class) return std::nullopt;
  if (*fc.c_class == 1) return rmt::Symmetry::Sp;
  if (*fc.c_class == 0) return rmt::Symmetry::U;
  if (fc.epsilon && *fc.epsilon == 1) return rmt::Symmetry::SOeven;
  if (fc.epsilon && *fc.epsilon == -1) return rmt::Symmetry::SOodd;
  return rmt::Symmetry::O;
}

std::optional<double> predicted_density(const FamilyConstant& fc, const TestFunction& phi) {
  const auto g = symmetry_of(fc);
  if (!g) return std::nullopt;
  const double r = std::max(0.0, std::round(fc.r_estimate));
  if (phi.sigma() < 1.0) return rmt::one_level_prediction(*g, phi, r);
  return phi.phi_hat0() - 0.5 * rmt::symmetry_constant(*g) * phi.phi0() + r * phi.phi0();
}

std::string class_to_string(const std::optional<int>& c) {
  if (!c) return "indeterminate";
  return *c > 0 ? "+1" : (*c < 0 ? "-1" : "0");
}

std::string sign_to_string(const std::optional<int>& e) {
  if (!e) return "unknown";
  return *e > 0 ? "+1" : (*e < 0 ? "-1" : "0");
}

}  // namespace lfam::stats

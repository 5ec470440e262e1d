#pragma once

// Prime and prime-square sums over a family, family-constant estimation and
// the prime side of the one-level explicit formula.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lfam/families.hpp"
#include "lfam/rmt.hpp"

namespace lfam::stats {

using families::Family;
using families::PrimeAverage;
using rmt::TestFunction;

struct PrimeRecord {
  std::uint64_t p = 0;
  double log_p = 0.0;
  PrimeAverage avg;
};

// Per-prime family averages for all p <= min(P, R^sigma), in increasing order.
struct PrimeProfile {
  double log_r = 0.0;
  double sigma = 0.0;
  std::uint64_t cutoff = 0;
  int nu_max = 0;
  long double family_weight = 0.0L;
  std::vector<PrimeRecord> primes;
};

PrimeProfile collect_profile(const Family& f, double log_r, double sigma, std::uint64_t P,
                             int nu_max, unsigned threads = 1);

// -2 sum_p p^(-1/2) (log p/log R) phi_hat(log p/log R) avg b(p), good members only.
double prime_sum(const PrimeProfile& prof, const TestFunction& phi);
double prime_sum(const Family& f, const TestFunction& phi, double log_r, std::uint64_t P,
                 unsigned threads = 1);

struct PrimeSquareSum {
  double sum = 0.0;         // S
  double c_estimate = 0.0;  // -2 S / phi(0)
  // S divided by -2 sum_p (log p/(p log R)) phi_hat(2 log p/log R): the
  // weighted mean of avg b(p^2), free of the finite-R prime-counting deficit.
  double c_normalized = 0.0;
  double weight = 0.0;      // the normalizing prime sum (0 if no prime contributes)
};

PrimeSquareSum prime_square_sum(const PrimeProfile& prof, const TestFunction& phi);
PrimeSquareSum prime_square_sum(const Family& f, const TestFunction& phi, double log_r,
                                std::uint64_t P, unsigned threads = 1);

// sum_{p <= P} Fhat(nu log p/log R) (log p)/(p log R).
double pnt_prime_sum(const TestFunction& fhat, int nu, double R, std::uint64_t P);

struct DensityReport {
  double empirical = 0.0;
  std::optional<double> predicted;
  std::optional<rmt::Symmetry> group;
  double phi_hat0 = 0.0;
  double nu1 = 0.0;
  double nu2 = 0.0;
  double tail = 0.0;  // nu >= 3
  double log_r = 0.0;
  double sigma = 0.0;
  std::uint64_t cutoff = 0;
  std::uint64_t members = 0;
  double bad_mass = 0.0;  // sum_p (bad fraction at p)/sqrt(p)
};

DensityReport one_level_density(const PrimeProfile& prof, const TestFunction& phi,
                                std::uint64_t members);
DensityReport one_level_density(const Family& f, const TestFunction& phi, std::uint64_t P,
                                int nu_max = satake::kDefaultNuMax, unsigned threads = 1,
                                std::optional<double> log_r = std::nullopt);

struct ConstantConfig {
  std::uint64_t prime_cutoff = 2000;
  int nu_max = satake::kDefaultNuMax;
  std::optional<double> tolerance;  // family default when empty
  std::optional<double> log_r;      // mean log-conductor when empty
  unsigned threads = 1;
  std::uint64_t min_members = 2;
};

struct FamilyConstant {
  double c_estimate = 0.0;
  double c_raw = 0.0;
  std::optional<int> c_class;   // empty: indeterminate
  std::optional<int> epsilon;   // empty: unknown
  double r_estimate = 0.0;
  double r_raw = 0.0;
  double tolerance = 0.0;
  double sigma = 0.0;
  double log_r = 0.0;
  std::uint64_t prime_cutoff = 0;
};

// Nearest of {-1, 0, 1} if within tol and the other two are beyond 2 tol.
std::optional<int> classify(double estimate, double tolerance);

FamilyConstant family_constant(const PrimeProfile& prof, const TestFunction& phi, const Family& f,
                               double tolerance, std::uint64_t min_members = 2);
FamilyConstant family_constant(const Family& f, const TestFunction& phi,
                               const ConstantConfig& config);

// Random-matrix group matching a family constant, if it is determined.
std::optional<rmt::Symmetry> symmetry_of(const FamilyConstant& fc);
// phi_hat(0) - c phi(0)/2 + r phi(0) for the classified group and nearest rank.
std::optional<double> predicted_density(const FamilyConstant& fc, const TestFunction& phi);

std::string class_to_string(const std::optional<int>& c);
std::string sign_to_string(const std::optional<int>& e);

}  // namespace lfam::stats

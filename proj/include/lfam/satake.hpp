#pragma once

// Local coefficients b(p^nu) = sum_j alpha_j(p)^nu of an L-function at one
// prime: Hecke recursions, symmetric-power lifts and Rankin-Selberg products.

#include <complex>
#include <cstdint>
#include <vector>

namespace lfam::satake {

inline constexpr int kDefaultNuMax = 10;

// b(p), b(p^2), ..., b(p^nu_max) for a self-dual factor of the given degree.
class LocalCoefficients {
 public:
  LocalCoefficients(std::uint64_t p, int degree, std::vector<double> b);

  std::uint64_t prime() const { return p_; }
  int degree() const { return degree_; }
  int nu_max() const { return static_cast<int>(b_.size()); }
  // b(p^nu), 1 <= nu <= nu_max.
  double b(int nu) const { return b_.at(static_cast<std::size_t>(nu - 1)); }
  const std::vector<double>& values() const { return b_; }

  // |b(p^nu)| <= degree for every stored nu (up to rounding slack).
  bool satisfies_ramanujan(double slack = 1e-9) const;

 private:
  std::uint64_t p_;
  int degree_;
  std::vector<double> b_;
};

// Parameters at a ramified prime vanish.
LocalCoefficients ramified(std::uint64_t p, int degree, int nu_max = kDefaultNuMax);
// The degree-1 trivial factor (all b = 1).
LocalCoefficients trivial(std::uint64_t p, int nu_max = kDefaultNuMax);

// Degree 2, parameters {alpha, 1/alpha} with alpha + 1/alpha = a_p.
LocalCoefficients hecke_b(double a_p, int nu_max = kDefaultNuMax, std::uint64_t p = 0);

// Normalized Hecke eigenvalues a(p^n), n = 0..n_max, with a(1) = 1, a(p) = a_p.
std::vector<double> hecke_a(double a_p, int n_max);

LocalCoefficients rankin_product(const LocalCoefficients& x, const LocalCoefficients& y);

struct SatakeSpectrum {
  std::uint64_t p = 0;
  std::vector<std::complex<double>> alpha;

  // {alpha, 1/alpha} with alpha + 1/alpha = a_p.
  static SatakeSpectrum from_trace(double a_p, std::uint64_t p = 0);
  LocalCoefficients power_sums(int nu_max) const;
};

// {alpha^M, alpha^(M-2), ..., alpha^(-M)}.
SatakeSpectrum sym_power_spectrum(const SatakeSpectrum& spec, int M);

// Entrywise products alpha_i * beta_j.
SatakeSpectrum rankin_spectrum(const SatakeSpectrum& x, const SatakeSpectrum& y);

// Local coefficients of sym^M for a degree-2 factor with normalized trace a_p.
LocalCoefficients sym_power_b(double a_p, int M, int nu_max = kDefaultNuMax,
                              std::uint64_t p = 0);

}  // namespace lfam::satake

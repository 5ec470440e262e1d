#include "lfam/satake.hpp"

#include <algorithm>
#include <cmath>

#include "lfam/errors.hpp"

namespace lfam::satake {

namespace {

// Power sums alpha^n + alpha^-n for n = 0..n_max given alpha + 1/alpha = a.
std::vector<double> lucas(double a, int n_max) {
  std::vector<double> v(static_cast<std::size_t>(n_max) + 1);
  v[0] = 2.0;
  if (n_max >= 1) v[1] = a;
  for (int n = 2; n <= n_max; ++n) v[n] = a * v[n - 1] - v[n - 2];
  return v;
}

void check_nu_max(int nu_max) {
  if (nu_max < 2) throw DomainError("nu_max must be >= 2");
}

}  // namespace

LocalCoefficients::LocalCoefficients(std::uint64_t p, int degree, std::vector<double> b)
    : p_(p), degree_(degree), b_(std::move(b)) {
  if (degree_ < 1) throw DomainError("LocalCoefficients: degree must be positive");
  if (b_.empty()) throw DomainError("LocalCoefficients: need at least b(p)");
}

bool LocalCoefficients::satisfies_ramanujan(double slack) const {
  return std::all_of(b_.begin(), b_.end(),
                     [&](double v) { return std::abs(v) <= degree_ + slack; });
}

LocalCoefficients ramified(std::uint64_t p, int degree, int nu_max) {
  return LocalCoefficients(p, degree, std::vector<double>(static_cast<std::size_t>(nu_max), 0.0));
}

LocalCoefficients trivial(std::uint64_t p, int nu_max) {
  return LocalCoefficients(p, 1, std::vector<double>(static_cast<std::size_t>(nu_max), 1.0));
}

LocalCoefficients hecke_b(double a_p, int nu_max, std::uint64_t p) {
  check_nu_max(nu_max);
  auto v = lucas(a_p, nu_max);
  return LocalCoefficients(p, 2, std::vector<double>(v.begin() + 1, v.end()));
}

std::vector<double> hecke_a(double a_p, int n_max) {
  std::vector<double> a(static_cast<std::size_t>(std::max(n_max, 1)) + 1);
  a[0] = 1.0;
  a[1] = a_p;
  for (int n = 2; n <= n_max; ++n) a[n] = a_p * a[n - 1] - a[n - 2];
  a.resize(static_cast<std::size_t>(n_max) + 1);
  return a;
}

LocalCoefficients rankin_product(const LocalCoefficients& x, const LocalCoefficients& y) {
  if (x.prime() != y.prime()) throw DomainError("rankin_product: prime mismatch");
  const int nu = std::min(x.nu_max(), y.nu_max());
  std::vector<double> b(static_cast<std::size_t>(nu));
  for (int i = 1; i <= nu; ++i) b[i - 1] = x.b(i) * y.b(i);
  return LocalCoefficients(x.prime(), x.degree() * y.degree(), std::move(b));
}

SatakeSpectrum SatakeSpectrum::from_trace(double a_p, std::uint64_t p) {
  // alpha is a root of z^2 - a_p z + 1.
  const std::complex<double> disc = std::sqrt(std::complex<double>(a_p * a_p - 4.0, 0.0));
  const std::complex<double> alpha = (a_p + disc) / 2.0;
  return SatakeSpectrum{p, {alpha, 1.0 / alpha}};
}

LocalCoefficients SatakeSpectrum::power_sums(int nu_max) const {
  std::vector<double> b(static_cast<std::size_t>(nu_max));
  for (int nu = 1; nu <= nu_max; ++nu) {
    std::complex<double> s = 0.0;
    for (const auto& a : alpha) s += std::pow(a, nu);
    b[nu - 1] = s.real();
  }
  return LocalCoefficients(p, static_cast<int>(alpha.size()), std::move(b));
}

SatakeSpectrum sym_power_spectrum(const SatakeSpectrum& spec, int M) {
  if (spec.alpha.size() != 2) throw DomainError("sym_power_spectrum: need a degree-2 spectrum");
  if (M < 1) throw DomainError("sym_power_spectrum: M must be positive");
  const auto alpha = spec.alpha[0];
  SatakeSpectrum out{spec.p, {}};
  for (int e = M; e >= -M; e -= 2) out.alpha.push_back(std::pow(alpha, e));
  return out;
}

SatakeSpectrum rankin_spectrum(const SatakeSpectrum& x, const SatakeSpectrum& y) {
  if (x.p != y.p) throw DomainError("rankin_spectrum: prime mismatch");
  SatakeSpectrum out{x.p, {}};
  for (const auto& a : x.alpha) {
    for (const auto& b : y.alpha) out.alpha.push_back(a * b);
  }
  return out;
}

LocalCoefficients sym_power_b(double a_p, int M, int nu_max, std::uint64_t p) {
  check_nu_max(nu_max);
  if (M < 1) throw DomainError("sym_power_b: M must be positive");
  const auto a = hecke_a(a_p, 2 * M);
  const auto v = lucas(a_p, M * nu_max);
  std::vector<double> b(static_cast<std::size_t>(nu_max));
  b[0] = a[M];
  double alt = 0.0;
  for (int j = 0; j <= M; ++j) alt += ((M - j) % 2 == 0 ? 1.0 : -1.0) * a[2 * j];
  b[1] = alt;
  for (int nu = 3; nu <= nu_max; ++nu) {
    // Exponents nu*(M - 2j) pair up as alpha^e + alpha^-e; e = 0 occurs once.
    double s = 0.0;
    for (int j = 0; 2 * j < M; ++j) s += v[nu * (M - 2 * j)];
    if (M % 2 == 0) s += 1.0;
    b[nu - 1] = s;
  }
  return LocalCoefficients(p, M + 1, std::move(b));
}

}  // namespace lfam::satake

#include <doctest.h>

#include <cmath>
#include <random>

#include "lfam/errors.hpp"
#include "lfam/satake.hpp"

using namespace lfam::satake;

namespace {

// Power sums straight from explicit parameters.
std::vector<double> power_sums(const std::vector<std::complex<double>>& alpha, int nu_max) {
  std::vector<double> out;
  for (int nu = 1; nu <= nu_max; ++nu) {
    std::complex<double> s = 0;
    for (auto a : alpha) s += std::pow(a, nu);
    out.push_back(s.real());
  }
  return out;
}

std::vector<std::complex<double>> params_of_angle(double theta) {
  return {std::polar(1.0, theta), std::polar(1.0, -theta)};
}

}  // namespace

TEST_CASE("hecke_b equals power sums of the Satake pair") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> th(0.0, M_PI);
  for (int it = 0; it < 200; ++it) {
    const double t = th(rng);
    const auto lc = hecke_b(2 * std::cos(t), 10);
    const auto ref = power_sums(params_of_angle(t), 10);
    for (int nu = 1; nu <= 10; ++nu) CHECK(lc.b(nu) == doctest::Approx(ref[nu - 1]).epsilon(1e-10));
    CHECK(lc.b(2) == doctest::Approx(lc.b(1) * lc.b(1) - 2));
    CHECK(lc.satisfies_ramanujan());
  }
  CHECK_THROWS_AS(hecke_b(0.5, 1), lfam::DomainError);
}

TEST_CASE("hecke_a is the Chebyshev recursion") {
  const auto a = hecke_a(2 * std::cos(0.3), 6);
  for (int n = 0; n <= 6; ++n)
    CHECK(a[n] == doctest::Approx(std::sin((n + 1) * 0.3) / std::sin(0.3)));
}

TEST_CASE("spectrum and closed forms agree") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ap(-2.0, 2.0);
  for (int it = 0; it < 100; ++it) {
    const double a = ap(rng);
    const auto spec = SatakeSpectrum::from_trace(a);
    const auto direct = spec.power_sums(10);
    const auto rec = hecke_b(a, 10);
    for (int nu = 1; nu <= 10; ++nu) CHECK(direct.b(nu) == doctest::Approx(rec.b(nu)).epsilon(1e-9));
    for (int M = 1; M <= 6; ++M) {
      const auto closed = sym_power_b(a, M, 10);
      const auto ref = sym_power_spectrum(spec, M).power_sums(10);
      CHECK(closed.degree() == M + 1);
      for (int nu = 1; nu <= 10; ++nu)
        CHECK(closed.b(nu) == doctest::Approx(ref.b(nu)).epsilon(1e-8));
    }
  }
}

TEST_CASE("sym_power_b examples") {
  const auto id = sym_power_b(0.7, 1, 5);
  const auto base = hecke_b(0.7, 5);
  for (int nu = 1; nu <= 5; ++nu) CHECK(id.b(nu) == doctest::Approx(base.b(nu)));
  CHECK(sym_power_b(0.0, 2, 4).b(1) == doctest::Approx(-1.0));
  // sym^2 at a = 2 (alpha = 1): all parameters 1
  const auto triv = sym_power_b(2.0, 2, 6);
  for (int nu = 1; nu <= 6; ++nu) CHECK(triv.b(nu) == doctest::Approx(3.0));
}

TEST_CASE("Rankin-Selberg products multiply power sums") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ap(-2.0, 2.0);
  for (int it = 0; it < 100; ++it) {
    const double a = ap(rng), b = ap(rng);
    const auto x = hecke_b(a, 8, 7), y = sym_power_b(b, 2, 8, 7);
    const auto prod = rankin_product(x, y);
    CHECK(prod.degree() == 6);
    const auto ref = rankin_spectrum(SatakeSpectrum::from_trace(a, 7),
                                     sym_power_spectrum(SatakeSpectrum::from_trace(b, 7), 2))
                         .power_sums(8);
    for (int nu = 1; nu <= 8; ++nu) CHECK(prod.b(nu) == doctest::Approx(ref.b(nu)).epsilon(1e-9));
    // b_{fxg}(p^2) = b_f(p^2) b_g(p^2)
    CHECK(prod.b(2) == doctest::Approx(x.b(2) * y.b(2)));
  }
  CHECK_THROWS_AS(rankin_product(hecke_b(0.1, 4, 5), hecke_b(0.1, 4, 7)), lfam::DomainError);
}

TEST_CASE("ramified and trivial factors") {
  const auto r = ramified(13, 3, 4);
  CHECK(r.degree() == 3);
  for (int nu = 1; nu <= 4; ++nu) CHECK(r.b(nu) == 0.0);
  const auto t = trivial(13, 4);
  for (int nu = 1; nu <= 4; ++nu) CHECK(t.b(nu) == 1.0);
}

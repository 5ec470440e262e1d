#include <doctest.h>

#include "../support/weil_checks.hpp"
#include "lfam/errors.hpp"
#include "lfam/weil.hpp"
#include "lfam/weil_expr.hpp"

using namespace lfam::weil;

TEST_CASE("decompositions print canonically") {
  CHECK(sym_power(WeilRep::disc(12), 3).to_string() == "[34] (+) [12]");
  CHECK(sym_power(WeilRep::disc(12), 2).to_string() == "[23] (+) [-]");
  CHECK(tensor(WeilRep(WeilIrr::plus()), WeilRep(WeilIrr::minus())).to_string() == "[-]");
  CHECK(tensor(WeilRep::disc(12), WeilRep::disc(12)).to_string() == "[23] (+) [+] (+) [-]");
  CHECK(tensor(WeilRep::disc(12), WeilRep::disc(16)).to_string() == "[27] (+) [5]");
  CHECK(WeilRep::disc(1).to_string() == "[+] (+) [-]");
  CHECK(WeilRep::disc(5, Rational(1, 2)).to_string() == "[5,1/2]");
  CHECK(wedge2(WeilRep::disc(7)).to_string() == "[-]");
  CHECK(wedge2(WeilRep::disc(8, Rational(1))).to_string() == "[+,2]");
}

TEST_CASE("dimensions are preserved") {
  for (int k = 2; k <= 20; ++k) {
    for (int m = 1; m <= 7; ++m) CHECK(sym_power(WeilRep::disc(k), m).dimension() == m + 1);
    for (int k2 = 2; k2 <= 20; ++k2) CHECK(tensor(WeilRep::disc(k), WeilRep::disc(k2)).dimension() == 4);
  }
}

TEST_CASE("character oracle confirms every algebra identity") {
  const auto r = oracle::check_weil_identities(2, 12, 6, 20);
  CHECK(r.identities > 100);
  CHECK(r.max_deviation < 1e-9);
}

TEST_CASE("oracle rejects the wrong sign assignment") {
  // Swapping the two sign characters in the claimed wedge^2 must be detected.
  std::mt19937_64 rng(1);
  for (int k = 2; k <= 9; ++k) {
    const WeilIrr d = WeilIrr::disc(k);
    const WeilIrr wrong = WeilIrr::sign(k + 1, Rational(0));
    double dev = 0;
    for (int i = 0; i < 10; ++i) {
      const auto w = oracle::random_element(rng, true);
      dev = std::max(dev, std::abs(oracle::wedge2_trace(oracle::eigenvalues(d, w)) -
                                   oracle::character(wrong, w)));
    }
    CHECK(dev > 1.0);
  }
}

TEST_CASE("epsilon factors") {
  CHECK(epsilon_factor(WeilIrr::plus()).to_string() == "+1");
  CHECK(epsilon_factor(WeilIrr::minus()).to_string() == "+i");
  CHECK(epsilon_factor(WeilIrr::disc(12)).to_string() == "+1");
  CHECK(epsilon_factor(WeilIrr::disc(3)).to_string() == "-i");
  CHECK(epsilon_factor(tensor(WeilRep::disc(12), WeilRep::disc(16))).to_string() == "+1");
  // sym^(2m+1)[k]: i^k, -1, -i^k, 1 by m mod 4
  for (int k = 2; k <= 30; ++k)
    for (int m = 0; m <= 11; ++m) {
      const IPower ik = IPower::of(k);
      const IPower table[] = {ik, IPower::of(2), ik * IPower::of(2), IPower::of(0)};
      CHECK(epsilon_factor(sym_power(WeilRep::disc(k), 2 * m + 1)) == table[m % 4]);
    }
  // sym^(2m)[k] has root number 1 for even weight
  for (int k = 2; k <= 30; k += 2)
    for (int m = 1; m <= 8; ++m) CHECK(epsilon_factor(sym_power(WeilRep::disc(k), 2 * m)) == IPower::of(0));
}

TEST_CASE("closed-form convolution root numbers match the tensor decomposition") {
  for (int k = 2; k <= 26; k += 2)
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n)
        for (Parity pa : {Parity::Even, Parity::Odd})
          for (Parity pb : {Parity::Even, Parity::Odd}) {
            const int A = sym_exponent(pa, m), B = sym_exponent(pb, n);
            if (A == 0 || B == 0) {
              CHECK_THROWS_AS(convolution_root_number(pa, m, pb, n, k), lfam::DomainError);
              continue;
            }
            const auto sym = epsilon_factor(tensor(sym_power(WeilRep::disc(k), A),
                                                   sym_power(WeilRep::disc(k), B)));
            CHECK(convolution_root_number(pa, m, pb, n, k) == sym);
          }
  CHECK_THROWS_AS(convolution_root_number(Parity::Odd, 1, Parity::Even, 1, 3), lfam::DomainError);
}

TEST_CASE("gamma factors and analytic conductors") {
  CHECK(gamma_factor(WeilRep::disc(12)).to_string() == "G_C(s+11/2)");
  CHECK(gamma_factor(WeilRep(WeilIrr::minus())).to_string() == "G_R(s+1)");
  CHECK(gamma_factor(sym_power(WeilRep::disc(12), 2)).degree() == 3);
  // [k]: T = (k-1)/2 contributes T(T+1)/4
  const double T = 5.5;
  CHECK(log_analytic_conductor(WeilRep::disc(12)) == doctest::Approx(std::log(T * (T + 1) / 4)));
  CHECK(log_analytic_conductor(WeilRep(WeilIrr::plus())) == 0.0);
  CHECK_THROWS_AS(log_analytic_conductor(WeilRep::disc(2, Rational(-3))), lfam::DomainError);
  // conductor grows like (k/2)^(M+1) for odd M, (k/2)^M for even M
  for (int M = 1; M <= 6; ++M) {
    const double big = log_analytic_conductor(sym_power(WeilRep::disc(4000), M));
    const double exponent = (M % 2 == 1) ? M + 1 : M;
    CHECK(big / std::log(2000.0) == doctest::Approx(exponent).epsilon(0.15));
  }
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(wedge2(WeilRep(WeilIrr::plus())), lfam::DomainError);
  CHECK_THROWS_AS(WeilIrr::disc(1), lfam::DomainError);
  CHECK_THROWS_AS(sym_power(WeilRep::disc(3) + WeilRep::disc(5), 2), lfam::UnsupportedError);
}

TEST_CASE("expression language") {
  CHECK(evaluate("sym^3([12])").text() == "[34] (+) [12]");
  CHECK(evaluate("eps([12] (*) [16])").text() == "+1");
  CHECK(evaluate("[+] (*) [-]").text() == "[-]");
  CHECK(evaluate(" wedge2( [7] ) ").text() == "[-]");
  CHECK(evaluate("([2] (+) [+]) (*) [-,1/2]").text() == "[2,1/2] (+) [-,1/2]");
  CHECK(evaluate("gamma([12])").text() == "G_C(s+11/2)");
  CHECK(evaluate("[12] (+) [12]").rep.dimension() == 4);
  const auto j = evaluate("sym^2([12])").to_json("sym^2([12])");
  CHECK(j["decomposition"] == "[23] (+) [-]");
  CHECK(j["dimension"] == 3);

  auto position_of = [](const std::string& e) -> long {
    try {
      evaluate(e);
    } catch (const ParseError& err) {
      return static_cast<long>(err.position());
    }
    return -1;
  };
  CHECK(position_of("[12") == 3);
  CHECK(position_of("sym^x([2])") == 4);
  CHECK(position_of("[12] (*) ") == 9);
  CHECK(position_of("wedge2([+])") == 0);
  CHECK(position_of("[0]") == 0);
  CHECK(position_of("") == 0);
  CHECK(position_of("[2,1/0]") == 5);
}

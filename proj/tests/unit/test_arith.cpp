#include <doctest.h>

#include <complex>
#include <random>

#include "../support/oracles.hpp"
#include "lfam/arith.hpp"
#include "lfam/errors.hpp"

using namespace lfam::arith;

TEST_CASE("sieve agrees with trial division") {
  const PrimeTable t(10000);
  CHECK(t.size() == 1229);
  std::size_t count = 0;
  for (std::uint64_t n = 2; n <= 10000; ++n) count += oracle::is_prime_trial(n);
  CHECK(count == t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(oracle::is_prime_trial(t[i]));
    CHECK(t.logs()[i] == doctest::Approx(std::log(static_cast<double>(t[i]))));
  }
  CHECK_THROWS_AS(sieve_primes(1), lfam::DomainError);
}

TEST_CASE("Miller-Rabin matches trial division") {
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == oracle::is_prime_trial(n));
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(4294967297ULL));      // 641 * 6700417
}

TEST_CASE("factorization reconstructs random products") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    const std::uint64_t a = rng() % 100000 + 1, b = rng() % 1000000 + 1, c = rng() % 50000 + 1;
    const std::uint64_t n = a * b * c;
    std::uint64_t prod = 1, last = 0;
    for (auto [p, e] : factorize(n)) {
      if (p < 1000000) CHECK(oracle::is_prime_trial(p));
      CHECK(is_prime(p));
      CHECK(p > last);
      last = p;
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
  CHECK(factorize(1).empty());
  const auto f = factorize(600851475143ULL);
  REQUIRE(f.size() == 4);
  CHECK(f.back().first == 6857);
}

TEST_CASE("squarefree") {
  CHECK(is_squarefree(1));
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
  CHECK_FALSE(is_squarefree(49 * 3));
}

TEST_CASE("Kronecker symbol agrees with Euler's criterion for p <= 200") {
  for (std::uint64_t p = 3; p <= 200; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    for (std::int64_t a = -250; a <= 250; ++a)
      CHECK(kronecker_symbol(a, static_cast<std::int64_t>(p)) == oracle::legendre_euler(a, p));
  }
}

TEST_CASE("Kronecker symbol special cases") {
  CHECK(kronecker_symbol(5, 2) == -1);
  CHECK(kronecker_symbol(1, 2) == 1);
  CHECK(kronecker_symbol(4, 2) == 0);
  CHECK(kronecker_symbol(-3, 2) == -1);
  CHECK(kronecker_symbol(-4, -1) == -1);
  CHECK(kronecker_symbol(5, -1) == 1);
  CHECK(kronecker_symbol(1, 1) == 1);
  // multiplicative in the bottom argument
  std::mt19937_64 rng(3);
  for (int it = 0; it < 500; ++it) {
    const std::int64_t a = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const std::int64_t m = static_cast<std::int64_t>(rng() % 300) + 1;
    const std::int64_t n = static_cast<std::int64_t>(rng() % 300) + 1;
    CHECK(kronecker_symbol(a, m * n) == kronecker_symbol(a, m) * kronecker_symbol(a, n));
  }
  CHECK_THROWS_AS(kronecker_symbol(3, 0), lfam::DomainError);
}

TEST_CASE("primitive roots generate the unit group") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 101ULL, 1009ULL}) {
    const auto g = primitive_root(p);
    std::uint64_t x = 1;
    std::size_t order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    CHECK(order == p - 1);
  }
}

TEST_CASE("Dirichlet characters mod a prime") {
  for (std::uint64_t m : {3ULL, 7ULL, 13ULL, 101ULL}) {
    const auto chars = characters_mod(m);
    REQUIRE(chars.size() == m - 1);
    CHECK(chars[0].is_trivial());
    // multiplicativity
    for (const auto& c : chars)
      for (std::int64_t a = 1; a < static_cast<std::int64_t>(m); a += 3)
        for (std::int64_t b = 1; b < static_cast<std::int64_t>(m); b += 5)
          CHECK(std::abs(c(a * b) - c(a) * c(b)) < 1e-12);
    // column orthogonality: sum over all chi of chi(a) is m-1 for a = 1, else 0
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(m); ++a) {
      std::complex<double> s = 0;
      for (const auto& c : chars) s += c(a);
      CHECK(std::abs(s - (a == 1 ? double(m - 1) : 0.0)) < 1e-9);
    }
    for (const auto& c : chars) CHECK(c(static_cast<std::int64_t>(m)) == std::complex<double>(0.0));
  }
  const auto c3 = characters_mod(3);
  CHECK(c3[1].is_quadratic());
  CHECK(c3[1].real_power(2, 1) == -1.0);
  CHECK(c3[1].real_power(2, 2) == 1.0);
  CHECK_THROWS_AS(characters_mod(15), lfam::DomainError);
}

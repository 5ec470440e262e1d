#pragma once

// Exact integer primitives: prime sieve, primality, factorization,
// Kronecker symbols and Dirichlet characters of prime modulus.

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lfam::arith {

class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::size_t size() const { return primes_.size(); }
  std::span<const std::uint64_t> primes() const { return primes_; }
  std::span<const double> logs() const { return logs_; }
  std::uint64_t operator[](std::size_t i) const { return primes_[i]; }

  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
  std::vector<double> logs_;
};

// Eratosthenes up to limit (limit >= 2, otherwise DomainError).
PrimeTable sieve_primes(std::uint64_t limit);

// Deterministic Miller-Rabin, exact for all 64-bit n.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Prime factorization as (prime, exponent), ascending. n >= 1.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

// Kronecker symbol (a/n); n != 0.
int kronecker_symbol(std::int64_t a, std::int64_t n);

// Smallest primitive root of a prime p.
std::uint64_t primitive_root(std::uint64_t p);

// A Dirichlet character of prime modulus m. Values are stored as exact
// exponents k with chi(a) = exp(2 pi i k / order); -1 marks chi(a) = 0.
class DirichletCharacter {
 public:
  DirichletCharacter(std::uint64_t modulus, std::uint32_t order,
                     std::vector<int> exponents);

  std::uint64_t modulus() const { return modulus_; }
  std::uint32_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool is_quadratic() const { return order_ == 2; }

  // Exponent of chi(a), or -1 when gcd(a, m) > 1.
  int exponent(std::int64_t a) const;
  std::complex<double> operator()(std::int64_t a) const;
  // Re chi(a)^nu.
  double real_power(std::int64_t a, int nu) const;

 private:
  std::size_t residue(std::int64_t a) const;

  std::uint64_t modulus_;
  std::uint32_t order_;
  std::vector<int> exponents_;
};

// All m - 1 characters mod a prime m >= 3, index 0 is the trivial one.
std::vector<DirichletCharacter> characters_mod(std::uint64_t m);

}  // namespace lfam::arith

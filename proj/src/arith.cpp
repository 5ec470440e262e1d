#include "lfam/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "lfam/errors.hpp"

namespace lfam::arith {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw DomainError("sieve_primes: limit must be >= 2");
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) primes_.push_back(i);
  }
  logs_.reserve(primes_.size());
  for (auto p : primes_) logs_.push_back(std::log(static_cast<double>(p)));
}

PrimeTable sieve_primes(std::uint64_t limit) { return PrimeTable(limit); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kSmall) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  std::uniform_int_distribution<std::uint64_t> dist(1, n - 1);
  while (true) {
    std::uint64_t y = dist(rng), c = dist(rng), g = 1, q = 1, x = 0, ys = 0;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_brent(n, rng);
  factor_into(d, out, rng);
  factor_into(n / d, out, rng);
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  std::mt19937_64 rng(0x5eed);
  factor_into(n, primes, rng);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, int>> result;
  for (auto p : primes) {
    if (!result.empty() && result.back().first == p) {
      ++result.back().second;
    } else {
      result.emplace_back(p, 1);
    }
  }
  return result;
}

bool is_squarefree(std::uint64_t n) {
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) throw DomainError("kronecker_symbol: n must be nonzero");
  static constexpr int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  // Work in 128 bits so that negating INT64_MIN is harmless.
  __int128 aa = a, nn = n;
  int k = 1;
  if (nn < 0) {
    nn = -nn;
    if (aa < 0) k = -1;
  }
  if (nn % 2 == 0) {
    if (aa % 2 == 0) return 0;
    int v = 0;
    while (nn % 2 == 0) {
      nn /= 2;
      ++v;
    }
    if (v % 2 == 1) k *= kTab2[static_cast<int>(((aa % 8) + 8) % 8)];
  }
  // nn odd and positive: Jacobi symbol (aa / nn).
  aa %= nn;
  if (aa < 0) aa += nn;
  while (aa != 0) {
    int v = 0;
    while (aa % 2 == 0) {
      aa /= 2;
      ++v;
    }
    if (v % 2 == 1) k *= kTab2[static_cast<int>(nn % 8)];
    if ((aa & nn & 2) != 0) k = -k;
    auto r = nn % aa;
    nn = aa;
    aa = r;
  }
  return nn == 1 ? k : 0;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("primitive_root: modulus must be prime");
  if (p == 2) return 1;
  const auto factors = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, e] : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw DomainError("primitive_root: none found");
}

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::uint32_t order,
                                       std::vector<int> exponents)
    : modulus_(modulus), order_(order), exponents_(std::move(exponents)) {
  if (exponents_.size() != modulus_) {
    throw DomainError("DirichletCharacter: value table size must equal modulus");
  }
}

std::size_t DirichletCharacter::residue(std::int64_t a) const {
  auto m = static_cast<std::int64_t>(modulus_);
  return static_cast<std::size_t>(((a % m) + m) % m);
}

int DirichletCharacter::exponent(std::int64_t a) const { return exponents_[residue(a)]; }

std::complex<double> DirichletCharacter::operator()(std::int64_t a) const {
  int k = exponent(a);
  if (k < 0) return {0.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * k / order_);
}

double DirichletCharacter::real_power(std::int64_t a, int nu) const {
  int k = exponent(a);
  if (k < 0) return 0.0;
  auto e = (static_cast<std::int64_t>(k) * nu) % order_;
  if (e == 0) return 1.0;
  if (2 * e == order_) return -1.0;
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(e) / order_);
}

std::vector<DirichletCharacter> characters_mod(std::uint64_t m) {
  if (m < 3 || !is_prime(m)) {
    throw DomainError("characters_mod: modulus must be a prime >= 3");
  }
  const std::uint64_t g = primitive_root(m);
  const std::uint64_t phi = m - 1;
  // Discrete log table: dlog[g^k mod m] = k.
  std::vector<std::uint64_t> dlog(m, 0);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < phi; ++k) {
    dlog[x] = k;
    x = x * g % m;
  }
  std::vector<DirichletCharacter> chars;
  chars.reserve(phi);
  for (std::uint64_t j = 0; j < phi; ++j) {
    const std::uint64_t gj = std::gcd(j, phi);
    const auto order = static_cast<std::uint32_t>(phi / gj);
    const std::uint64_t step = j / gj;
    std::vector<int> exps(m, -1);
    for (std::uint64_t a = 1; a < m; ++a) {
      exps[a] = static_cast<int>(step * dlog[a] % order);
    }
    chars.emplace_back(m, order, std::move(exps));
  }
  return chars;
}

}  // namespace lfam::arith

#pragma once

// Invariants and statistics of one-parameter families y^2 = x^3 + A(T) x + B(T).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lfam::ec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Integer polynomial, coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<std::int64_t> coeffs);
  explicit Polynomial(std::vector<std::int64_t> coeffs);

  BigInt operator()(const BigInt& t) const;
  // Value mod p in [0, p).
  std::uint64_t eval_mod(std::int64_t t, std::uint64_t p) const;
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::string to_string(const std::string& var = "T") const;

  static Polynomial parse(const std::string& text);

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

struct EllipticFamilySpec {
  Polynomial A;
  Polynomial B;
  std::int64_t t_begin = 0;  // inclusive
  std::int64_t t_end = 0;    // exclusive

  // t in [N, 2N).
  static EllipticFamilySpec dyadic(Polynomial A, Polynomial B, std::int64_t N);

  std::int64_t count() const { return t_end - t_begin; }
  // Delta(T) = -16(4A^3 + 27B^2) is not the zero polynomial.
  bool discriminant_nonzero() const;
  bool j_nonconstant() const;
  std::string to_string() const;
};

struct CurveInvariants {
  BigInt A, B, delta, c4, c6;
  std::optional<BigRational> j;  // empty when delta = 0

  bool singular() const { return delta == 0; }
};

CurveInvariants invariants(const BigInt& A, const BigInt& B);

// Standard j = 6912 A^3 / (4A^3 + 27B^2).
BigRational j_invariant(const BigInt& A, const BigInt& B);

// Prime-exponent form of the conductor proxy, ascending primes.
using Factorization = std::vector<std::pair<std::uint64_t, int>>;

// p >= 5: exponent 1 (multiplicative) or 2 (additive) after p-minimalization;
// p = 2 and p = 3 carry the capped exponents 8 and 5 when they divide the
// minimal discriminant.
Factorization conductor_factorization(const BigInt& A, const BigInt& B);
BigInt conductor_proxy(const BigInt& A, const BigInt& B);
double log_of(const Factorization& f);

// Bounds (C1C2)^2/g^4 <= Q <= (C1C2)^2/g, g = gcd(C1, C2).
std::pair<BigInt, BigInt> rs_conductor_bounds(const BigInt& c1, const BigInt& c2);

enum class ConductorBound { Lower, Upper, Midpoint };

// log Q for the convolution of curves with the given conductors.
double log_rs_conductor(const Factorization& c1, const Factorization& c2,
                        ConductorBound policy = ConductorBound::Midpoint);

struct AverageLogConductor {
  double value = 0.0;
  std::int64_t pairs = 0;
  std::int64_t singular_skipped = 0;  // fibers with Delta(t) = 0
};

AverageLogConductor avg_log_conductor(const EllipticFamilySpec& f, const EllipticFamilySpec& g,
                                      ConductorBound policy = ConductorBound::Midpoint);

// a_t(p) = -sum_x (x^3 + a x + b / p), for p >= 5.
std::int64_t trace_of_frobenius(std::uint64_t a, std::uint64_t b, std::uint64_t p);

// Quadratic character table chi[v] = (v / p), v in [0, p).
std::vector<std::int8_t> legendre_table(std::uint64_t p);

// a_r(p) for every residue r = 0..p-1 of the parameter.
std::vector<std::int64_t> fiber_traces(const EllipticFamilySpec& spec, std::uint64_t p);

// Rank estimate -(1/X) sum_{5<=p<=X} (log p / p) sum_{t mod p} a_t(p).
double nagao_sum(const EllipticFamilySpec& spec, std::uint64_t x_max);

// sum_{t mod p} a_t(p)^2. Requires j(T) non-constant.
std::int64_t michel_moment(const EllipticFamilySpec& spec, std::uint64_t p);

struct CollisionReport {
  std::int64_t count = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> sample;  // at most 100 (t, s)
};

// Pairs (t, s) in the two ranges with j_F(t) = j_G(s).
CollisionReport j_collision_count(const EllipticFamilySpec& f, const EllipticFamilySpec& g);

// y^2 = x^3 + A1 x + B1 and y^2 = x^3 + A2 x + B2 are isomorphic over Q.
bool isomorphic_over_q(const BigInt& a1, const BigInt& b1, const BigInt& a2, const BigInt& b2);

}  // namespace lfam::ec

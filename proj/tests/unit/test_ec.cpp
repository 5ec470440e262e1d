#include <doctest.h>

#include <cmath>

#include "../support/oracles.hpp"
#include "lfam/ec.hpp"
#include "lfam/errors.hpp"

using namespace lfam::ec;

namespace {

EllipticFamilySpec family(const char* a, const char* b, std::int64_t N) {
  return EllipticFamilySpec::dyadic(Polynomial::parse(a), Polynomial::parse(b), N);
}

}  // namespace

TEST_CASE("polynomials") {
  const auto p = Polynomial::parse("T^2 + 3*T - 1");
  CHECK(p.degree() == 2);
  CHECK(p(BigInt(4)) == 27);
  CHECK(p.eval_mod(-4, 7) == 3);  // 16 - 12 - 1
  CHECK(p.to_string() == "T^2 + 3*T - 1");
  CHECK(Polynomial::parse("-T").to_string() == "-T");
  CHECK(Polynomial::parse("2 - 2").is_zero());
  CHECK(Polynomial::parse("5T^3").coeffs() == std::vector<std::int64_t>{0, 0, 0, 5});
  CHECK_THROWS_AS(Polynomial::parse(""), lfam::DomainError);
  CHECK_THROWS_AS(Polynomial::parse("T^"), lfam::DomainError);
  CHECK_THROWS_AS(Polynomial::parse("T$2"), lfam::DomainError);
}

TEST_CASE("invariants of y^2 = x^3 + x + 1") {
  const auto inv = invariants(1, 1);
  CHECK(inv.delta == -496);
  CHECK(inv.c4 == -48);
  CHECK(inv.c6 == -864);
  CHECK(*inv.j == BigRational(6912, 31));
  CHECK(invariants(-3, 2).singular());
  CHECK_THROWS_AS(j_invariant(-3, 2), lfam::DomainError);
}

TEST_CASE("a_5 of y^2 = x^3 + x + 1") {
  CHECK(trace_of_frobenius(1, 1, 5) == -3);
  CHECK(oracle::trace_by_point_count(1, 1, 5) == -3);
}

TEST_CASE("character sums equal point counts for p <= 50") {
  const auto spec = family("T", "1", 30);
  for (std::uint64_t p = 5; p <= 50; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    const auto tr = fiber_traces(spec, p);
    for (std::int64_t t = spec.t_begin; t < spec.t_end; ++t) {
      const std::int64_t ap = trace_of_frobenius(static_cast<std::uint64_t>(t) % p, 1, p);
      CHECK(ap == oracle::trace_by_point_count(t, 1, p));
      CHECK(tr[static_cast<std::size_t>(t) % p] == ap);
      CHECK(static_cast<double>(ap * ap) <= 4.0 * p);  // Hasse, singular fibers included
    }
  }
  CHECK_THROWS_AS(fiber_traces(spec, 3), lfam::DomainError);
}

TEST_CASE("Legendre table") {
  for (std::uint64_t p : {5ULL, 13ULL, 101ULL}) {
    const auto chi = legendre_table(p);
    for (std::uint64_t v = 0; v < p; ++v) CHECK(chi[v] == oracle::legendre_euler(static_cast<std::int64_t>(v), p));
  }
}

TEST_CASE("discriminant and j flags") {
  CHECK(family("T", "1", 10).discriminant_nonzero());
  CHECK(family("T", "1", 10).j_nonconstant());
  CHECK_FALSE(family("0", "T", 10).j_nonconstant());
  CHECK_FALSE(family("T", "0", 10).j_nonconstant());
  CHECK_FALSE(family("T^2", "T^3", 10).j_nonconstant());
  CHECK_FALSE(family("-3*T^2", "2*T^3", 10).discriminant_nonzero());
  CHECK(family("T", "1", 100).count() == 100);
}

TEST_CASE("conductor proxy") {
  CHECK(conductor_factorization(1, 1) == Factorization{{2, 8}, {31, 1}});
  // scaling by u = 5 is undone by minimalization at 5
  CHECK(conductor_factorization(625, 15625) == conductor_factorization(1, 1));
  // 4*125 + 27*25 = 5^2 * 47 and 5 | A: additive at 5
  CHECK(conductor_factorization(5, 5) == Factorization{{2, 8}, {5, 2}, {47, 1}});
  // 3 | Delta: exponent 5
  CHECK(conductor_factorization(0, 1) == Factorization{{2, 8}, {3, 5}});
  CHECK(conductor_proxy(1, 1) == 256 * 31);
  CHECK(log_of(conductor_factorization(1, 1)) == doctest::Approx(std::log(256.0 * 31)));
}

TEST_CASE("Rankin-Selberg conductor bounds") {
  const auto [lo, hi] = rs_conductor_bounds(7, 7);
  CHECK(lo == 1);
  CHECK(hi == 343);
  const auto [lo2, hi2] = rs_conductor_bounds(6, 35);
  CHECK(lo2 == hi2);
  CHECK(lo2 == 210 * 210);
  const Factorization a{{2, 8}, {31, 1}}, b{{2, 8}, {47, 1}};
  const double lower = log_rs_conductor(a, b, ConductorBound::Lower);
  const double upper = log_rs_conductor(a, b, ConductorBound::Upper);
  const double mid = log_rs_conductor(a, b, ConductorBound::Midpoint);
  CHECK(lower < mid);
  CHECK(mid < upper);
  CHECK(mid == doctest::Approx(0.5 * (lower + upper)));
  const BigInt ca = 256 * 31, cb = 256 * 47;
  CHECK(upper == doctest::Approx(std::log(static_cast<double>(rs_conductor_bounds(ca, cb).second))));
}

TEST_CASE("average log-conductor") {
  const auto f = family("T", "1", 50), g = family("T", "2", 50);
  const auto r = avg_log_conductor(f, g);
  CHECK(r.pairs == 2500);
  CHECK(r.singular_skipped == 0);
  double s = 0;
  for (std::int64_t t = 50; t < 100; ++t)
    for (std::int64_t u = 50; u < 100; ++u)
      s += log_rs_conductor(conductor_factorization(t, 1), conductor_factorization(u, 2));
  CHECK(r.value == doctest::Approx(s / 2500));
}

TEST_CASE("independence identity over t mod p1 p2") {
  const auto spec = family("T", "1", 10);
  for (std::uint64_t p1 : {5ULL, 7ULL, 11ULL})
    for (std::uint64_t p2 : {13ULL, 17ULL})
      for (int r1 = 0; r1 <= 2; ++r1)
        for (int r2 = 0; r2 <= 2; ++r2) {
          std::int64_t lhs = 0, s1 = 0, s2 = 0;
          for (std::uint64_t t = 0; t < p1 * p2; ++t) {
            const auto a1 = oracle::trace_by_point_count(static_cast<std::int64_t>(t), 1, p1);
            const auto a2 = oracle::trace_by_point_count(static_cast<std::int64_t>(t), 1, p2);
            lhs += static_cast<std::int64_t>(std::pow(a1, r1) * std::pow(a2, r2));
          }
          const auto t1 = fiber_traces(spec, p1), t2 = fiber_traces(spec, p2);
          for (auto a : t1) s1 += static_cast<std::int64_t>(std::pow(a, r1));
          for (auto a : t2) s2 += static_cast<std::int64_t>(std::pow(a, r2));
          CHECK(lhs == s1 * s2);
        }
}

TEST_CASE("Michel moment") {
  const auto spec = family("T", "1", 10);
  for (std::uint64_t p = 5; p <= 60; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    std::int64_t brute = 0;
    for (std::uint64_t t = 0; t < p; ++t) {
      const auto a = oracle::trace_by_point_count(static_cast<std::int64_t>(t), 1, p);
      brute += a * a;
    }
    CHECK(michel_moment(spec, p) == brute);
    CHECK(std::fabs(static_cast<double>(brute) - double(p * p)) <= 4 * std::pow(double(p), 1.5));
  }
  CHECK_THROWS_AS(michel_moment(family("T", "0", 10), 7), lfam::DomainError);
}

TEST_CASE("first moments and Nagao sums") {
  // y^2 = x^3 + Tx: the t-sum vanishes for every p
  const auto cm = family("T", "0", 10);
  for (std::uint64_t p = 5; p < 100; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    std::int64_t s = 0;
    for (auto a : fiber_traces(cm, p)) s += a;
    CHECK(s == 0);
  }
  for (std::uint64_t X : {11ULL, 50ULL, 400ULL}) CHECK(nagao_sum(cm, X) == 0.0);
  // y^2 = x^3 + Tx + 1 has the point (0, 1): sum_t a_t(p) = -p exactly
  const auto f = family("T", "1", 10);
  for (std::uint64_t p = 5; p <= 500; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    std::int64_t s = 0;
    for (auto a : fiber_traces(f, p)) s += a;
    CHECK(s == -static_cast<std::int64_t>(p));
  }
  CHECK(nagao_sum(family("T", "-T", 10), 3000) == doctest::Approx(1.0).epsilon(0.3));
  CHECK_THROWS_AS(nagao_sum(f, 7), lfam::DomainError);
}

TEST_CASE("isomorphism over Q") {
  CHECK(isomorphic_over_q(1, 1, 16, 64));
  CHECK_FALSE(isomorphic_over_q(1, 1, 1, -1));
  CHECK(isomorphic_over_q(0, 1, 0, 64));
  CHECK_FALSE(isomorphic_over_q(0, 1, 0, 8));
  CHECK(isomorphic_over_q(3, 0, 48, 0));
  CHECK_FALSE(isomorphic_over_q(3, 0, 12, 0));
  CHECK(isomorphic_over_q(16, 64, 1, 1));
}

TEST_CASE("j collisions are the diagonal for x^3 + Tx + 1 against x^3 + Sx + 1") {
  const auto f = family("T", "1", 100), g = family("T", "1", 100);
  const auto rep = j_collision_count(f, g);
  CHECK(rep.count == 100);
  for (auto [t, s] : rep.sample) CHECK(t == s);
  CHECK(j_collision_count(f, family("T", "2", 100)).count == 0);
}

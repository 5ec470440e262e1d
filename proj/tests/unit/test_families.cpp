#include <doctest.h>

#include <cmath>
#include <map>

#include "../support/oracles.hpp"
#include "lfam/errors.hpp"
#include "lfam/families.hpp"
#include "lfam/weil.hpp"

using namespace lfam::families;
using lfam::ec::EllipticFamilySpec;
using lfam::ec::Polynomial;

namespace {

std::shared_ptr<EllipticFamily> ec_family(const char* a, const char* b, std::int64_t lo, std::int64_t hi) {
  return elliptic_family({Polynomial::parse(a), Polynomial::parse(b), lo, hi});
}

// Plain loop over members, for comparison with specialised averages.
PrimeAverage brute_average(const Family& f, std::uint64_t p, int nu_max) {
  return f.Family::average(p, nu_max);
}

void check_same_average(const PrimeAverage& a, const PrimeAverage& b, double tol = 1e-12) {
  CHECK(static_cast<double>(a.total_weight) == doctest::Approx(static_cast<double>(b.total_weight)));
  CHECK(static_cast<double>(a.good_weight) == doctest::Approx(static_cast<double>(b.good_weight)));
  for (int nu = 1; nu <= a.nu_max(); ++nu)
    CHECK(a.mean(nu) == doctest::Approx(b.mean(nu)).epsilon(tol));
}

}  // namespace

TEST_CASE("Dirichlet family") {
  const auto f3 = dirichlet_family(3);
  CHECK(f3->size() == 1);
  CHECK(f3->local(0, 2, 3).b(1) == -1.0);
  CHECK(f3->local(0, 7, 3).b(1) == 1.0);

  const auto f7 = dirichlet_family(7);
  CHECK(f7->size() == 5);
  CHECK(f7->average(2, 4).mean(1) == doctest::Approx(-0.2));
  CHECK(f7->average(29, 4).mean(1) == doctest::Approx(1.0));
  CHECK(f7->is_bad(0, 7));
  CHECK(f7->average(7, 4).good_weight == 0);
  CHECK(f7->log_conductor(2) == doctest::Approx(std::log(7.0)));
  // the family is closed under conjugation, so the complex average is real
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < f7->size(); ++i) s += f7->value(i, 3, 1);
  CHECK(std::abs(s.imag()) < 1e-12);
  CHECK(s.real() / 5 == doctest::Approx(f7->average(3, 2).mean(1)));
  CHECK_THROWS_AS(dirichlet_family(9), lfam::DomainError);

  const auto chi = dirichlet_character(7, 6);
  CHECK(chi->size() == 1);
  CHECK(chi->character(0).order() == 6);
}

TEST_CASE("quadratic family") {
  const auto q = quadratic_family(3, 20);
  CHECK(q->discriminants() == std::vector<std::int64_t>{5, 8, 12, 13, 17});
  CHECK(is_fundamental_discriminant(-4));
  CHECK(is_fundamental_discriminant(-3));
  CHECK_FALSE(is_fundamental_discriminant(-1));
  CHECK_FALSE(is_fundamental_discriminant(1));
  CHECK_FALSE(is_fundamental_discriminant(16));
  const auto q5 = quadratic_family(5, 5);
  CHECK(q5->local(0, 2, 2).b(1) == -1.0);
  for (std::uint64_t p : {2ULL, 3ULL, 7ULL, 11ULL}) CHECK(q5->local(0, p, 2).b(2) == 1.0);
  CHECK(q5->is_bad(0, 5));
  const auto big = quadratic_family(1000, 1400);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 101ULL}) check_same_average(big->average(p, 6), brute_average(*big, p, 6));
  CHECK_THROWS_AS(quadratic_family(25, 27), lfam::EmptyFamilyError);
}

TEST_CASE("elliptic family") {
  const auto f = ec_family("1", "1", 1, 2);
  CHECK(f->trace(0, 5) == -3);
  CHECK(f->local(0, 5, 2).b(1) == doctest::Approx(-3 / std::sqrt(5.0)));
  CHECK(f->local(0, 5, 2).b(2) == doctest::Approx(9.0 / 5 - 2));
  CHECK(f->is_bad(0, 2));
  CHECK(f->is_bad(0, 3));
  CHECK(f->is_bad(0, 31));
  CHECK_FALSE(f->is_bad(0, 5));

  const auto g = ec_family("T", "1", 40, 120);
  for (std::uint64_t p : {5ULL, 7ULL, 31ULL, 97ULL, 113ULL, 211ULL}) check_same_average(g->average(p, 6), brute_average(*g, p, 6), 1e-10);
  for (std::size_t i = 0; i < g->size(); ++i)
    for (std::uint64_t p : {5ULL, 11ULL, 47ULL}) {
      const auto t = g->parameter(i);
      CHECK(g->trace(i, p) == oracle::trace_by_point_count(t, 1, p));
    }

  // singular fibers are skipped: 4T^3 + 27 T^2 = T^2 (4T + 27) vanishes at T = 0
  const auto s = ec_family("T", "T", -1, 2);
  CHECK(s->size() == 2);
  CHECK(s->singular_fibers() == std::vector<std::int64_t>{0});
  CHECK_THROWS_AS(ec_family("-3*T^2", "2*T^3", 1, 5), lfam::DomainError);
}

TEST_CASE("Ramanujan tau") {
  const auto tau = ramanujan_tau(30);
  const std::int64_t known[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920};
  for (int n = 1; n <= 10; ++n) CHECK(static_cast<std::int64_t>(tau[n]) == known[n]);
  // multiplicativity and the Hecke relation at p = 2
  for (int m = 1; m <= 15; ++m)
    for (int n = 1; m * n <= 30; ++n)
      if (std::gcd(m, n) == 1) CHECK(tau[m * n] == tau[m] * tau[n]);
  CHECK(tau[4] == tau[2] * tau[2] - (__int128(1) << 11));

  const auto d = cusp_form_delta();
  CHECK(d->bound() == 1000);
  CHECK(d->tau(1) == 1);
  CHECK(d->normalized_a(2) == doctest::Approx(-0.5303).epsilon(1e-3));
  for (std::uint64_t p = 2; p <= 100; ++p)
    if (oracle::is_prime_trial(p)) CHECK(std::fabs(d->normalized_a(p)) <= 2.0);
  CHECK_THROWS_AS(d->tau(1001), lfam::RangeError);
  CHECK(d->local(0, 2, 3).b(2) == doctest::Approx(d->normalized_a(2) * d->normalized_a(2) - 2));
  CHECK(d->sign(0) == 1);
}

TEST_CASE("symmetric-power lifts") {
  const auto d = cusp_form_delta(200);
  const auto s1 = sym_lift(d, 1);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
    for (int nu = 1; nu <= 5; ++nu) CHECK(s1->local(0, p, 5).b(nu) == doctest::Approx(d->local(0, p, 5).b(nu)));
  const auto s2 = sym_lift(d, 2);
  CHECK(s2->degree() == 3);
  CHECK(s2->local(0, 7, 2).b(1) == doctest::Approx(std::pow(d->normalized_a(7), 2) - 1));
  CHECK(s2->log_conductor(0) ==
        doctest::Approx(lfam::weil::log_analytic_conductor(lfam::weil::sym_power(lfam::weil::WeilRep::disc(12), 2))));
  for (int M = 1; M <= 6; ++M) {
    const auto e = lfam::weil::epsilon_factor(lfam::weil::sym_power(lfam::weil::WeilRep::disc(12), M));
    REQUIRE(e.exponent % 2 == 0);
    CHECK(sym_lift(d, M)->sign(0) == (e.exponent == 0 ? 1 : -1));
  }
  check_same_average(s2->average(11, 4), brute_average(*s2, 11, 4));

  const auto e = ec_family("T", "1", 20, 60);
  const auto e3 = sym_lift(e, 3);
  CHECK(e3->log_conductor(4) == doctest::Approx(2.0 * e->log_conductor(4)));
  CHECK(sym_lift(e, 2)->log_conductor(4) == doctest::Approx(e->log_conductor(4)));
  for (std::uint64_t p : {5ULL, 13ULL, 71ULL}) check_same_average(e3->average(p, 4), brute_average(*e3, p, 4), 1e-10);
  CHECK_THROWS_AS(sym_lift(dirichlet_family(7), 2), lfam::UnsupportedError);
}

TEST_CASE("convolution averages equal brute-force pair enumeration") {
  const auto f = ec_family("T", "1", 30, 60);
  const auto g = ec_family("T", "1", 45, 70);  // overlaps: diagonal pairs are removed
  const auto fg = convolve(f, g);
  CHECK(fg->degree() == 4);
  CHECK(fg->excluded().size() == 15);
  CHECK(fg->size() == f->size() * g->size() - 15);
  CHECK(fg->total_weight() == f->total_weight() * g->total_weight() - 15);
  for (auto [a, b] : fg->excluded()) CHECK(f->parameter(a) == g->parameter(b));
  for (std::uint64_t p : {5ULL, 7ULL, 13ULL, 53ULL}) check_same_average(fg->average(p, 4), brute_average(*fg, p, 4), 1e-10);

  // without collisions the prime-square average is exactly multiplicative
  const auto h = ec_family("T", "2", 30, 60);
  const auto fh = convolve(f, h);
  CHECK(fh->excluded().empty());
  for (std::uint64_t p : {5ULL, 11ULL, 41ULL}) {
    const auto a = fh->average(p, 2);
    CHECK(a.mean(2) == doctest::Approx(f->average(p, 2).mean(2) * h->average(p, 2).mean(2)).epsilon(1e-12));
  }
  // log-conductor of an EC pair is the midpoint rule, averaged over kept pairs
  double s = 0;
  for (std::size_t i = 0; i < fg->size(); ++i) s += fg->log_conductor(i);
  CHECK(fg->mean_log_conductor() == doctest::Approx(s / fg->size()));
}

TEST_CASE("identity collisions for character families") {
  const auto q = quadratic_family(5, 40);
  const auto qq = convolve(q, q);
  CHECK(qq->excluded().size() == q->size());
  CHECK(qq->degree() == 1);
  const auto none = convolve(q, q, CollisionPolicy::None);
  CHECK(none->excluded().empty());
  for (std::uint64_t p : {2ULL, 3ULL, 7ULL}) check_same_average(qq->average(p, 3), brute_average(*qq, p, 3));
  CHECK(qq->mean_log_conductor() > 0);
  double s = 0;
  for (std::size_t i = 0; i < qq->size(); ++i) s += qq->log_conductor(i);
  CHECK(qq->mean_log_conductor() == doctest::Approx(s / qq->size()));
  CHECK_THROWS_AS(convolve(dirichlet_family(7), dirichlet_family(11)), lfam::UnsupportedError);
  CHECK_THROWS_AS(convolve(q, q, CollisionPolicy::Isomorphic), lfam::ConfigError);
}

TEST_CASE("fixed twists") {
  const auto e = ec_family("T", "1", 30, 90);
  const auto chi5 = quadratic_family(5, 5);
  const auto t5 = twist_by_fixed(chi5, e);
  CHECK(t5->size() == e->size());
  for (std::uint64_t p : {7ULL, 11ULL, 13ULL}) {
    // b(p^2) unchanged by a quadratic twist
    CHECK(t5->average(p, 2).mean(2) == doctest::Approx(e->average(p, 2).mean(2)));
    check_same_average(t5->average(p, 3), brute_average(*t5, p, 3), 1e-10);
  }
  CHECK(t5->average(5, 2).good_weight == 0);
  CHECK(t5->log_conductor(0) == doctest::Approx(e->log_conductor(0) + 2 * std::log(5.0)));

  const auto chi7 = dirichlet_character(7, 6);
  const auto t7 = twist_by_fixed(chi7, e);
  // at p = 2 (order 3 mod 7) chi(2)^2 has real part -1/2
  CHECK(t7->average(2 + 7 * 3, 2).mean(2) ==
        doctest::Approx(-0.5 * e->average(23, 2).mean(2)));

  const auto d = cusp_form_delta(100);
  const auto td = twist_by_fixed(d, e);
  CHECK(td->degree() == 4);
  const double a = d->normalized_a(11);
  CHECK(td->average(11, 2).mean(2) == doctest::Approx((a * a - 2) * e->average(11, 2).mean(2)));
  CHECK_THROWS_AS(twist_by_fixed(e, e), lfam::ConfigError);
}

TEST_CASE("zero stub") {
  const ZeroFamily z(4, 2, 3.0);
  CHECK(z.average(13, 3).mean(1) == 0.0);
  CHECK(z.mean_log_conductor() == 3.0);
  CHECK_THROWS_AS(ZeroFamily(0, 1, 1.0), lfam::EmptyFamilyError);
}

TEST_CASE("multiplicity bookkeeping") {
  const auto q = quadratic_family(100, 200);
  CHECK(q->max_multiplicity() == 1);
  CHECK(q->total_weight() == q->size());
}

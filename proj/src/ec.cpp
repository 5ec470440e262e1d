#include "lfam/ec.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "lfam/arith.hpp"
#include "lfam/errors.hpp"

namespace lfam::ec {

namespace {

using BigPoly = std::vector<BigInt>;

BigPoly to_big(const Polynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

BigPoly multiply(const BigPoly& x, const BigPoly& y) {
  if (x.empty() || y.empty()) return {};
  BigPoly out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

void trim(BigPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigPoly add_scaled(const BigPoly& x, const BigInt& sx, const BigPoly& y, const BigInt& sy) {
  BigPoly out(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += sx * x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += sy * y[i];
  trim(out);
  return out;
}

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((v % m) + m) % m);
}

bool is_perfect_power(BigInt x, int n) {
  if (x < 0) {
    if (n % 2 == 0) return false;
    x = -x;
  }
  if (x < 2) return true;
  BigInt lo = 1;
  BigInt hi = BigInt(1) << (static_cast<unsigned>(msb(x)) / static_cast<unsigned>(n) + 1);
  while (lo <= hi) {
    const BigInt mid = (lo + hi) / 2;
    const BigInt v = pow(mid, static_cast<unsigned>(n));
    if (v == x) return true;
    if (v < x) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return false;
}

bool is_rational_power(const BigRational& q, int n) {
  return is_perfect_power(numerator(q), n) && is_perfect_power(denominator(q), n);
}

}  // namespace

Polynomial::Polynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::operator()(const BigInt& t) const {
  BigInt v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
  return v;
}

std::uint64_t Polynomial::eval_mod(std::int64_t t, std::uint64_t p) const {
  const std::uint64_t tm = reduce(t, p);
  std::uint64_t v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    v = (arith::mul_mod(v, tm, p) + reduce(*it, p)) % p;
  }
  return v;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const auto c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || d == 0) os << mag;
    if (d >= 1) {
      if (mag != 1) os << '*';
      os << var;
      if (d > 1) os << '^' << d;
    }
  }
  return os.str();
}

Polynomial Polynomial::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw DomainError("Polynomial::parse: empty polynomial");
  std::vector<std::int64_t> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::int64_t coef = 1;
    bool have_digits = false;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      coef = std::stoll(s.substr(start, i - start));
      have_digits = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    int deg = 0;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw DomainError("Polynomial::parse: missing exponent in '" + text + "'");
        deg = std::stoi(s.substr(start, i - start));
      }
    } else if (!have_digits) {
      throw DomainError("Polynomial::parse: cannot parse '" + text + "'");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') {
      throw DomainError("Polynomial::parse: unexpected '" + std::string(1, s[i]) + "' in '" +
                        text + "'");
    }
    if (coeffs.size() <= static_cast<std::size_t>(deg)) coeffs.resize(deg + 1, 0);
    coeffs[static_cast<std::size_t>(deg)] += sign * coef;
  }
  return Polynomial(std::move(coeffs));
}

EllipticFamilySpec EllipticFamilySpec::dyadic(Polynomial A, Polynomial B, std::int64_t N) {
  return {std::move(A), std::move(B), N, 2 * N};
}

bool EllipticFamilySpec::discriminant_nonzero() const {
  const auto a = to_big(A), b = to_big(B);
  const auto core = add_scaled(multiply(multiply(a, a), a), 4, multiply(b, b), 27);
  return !core.empty();
}

bool EllipticFamilySpec::j_nonconstant() const {
  if (A.is_zero() || B.is_zero()) return false;
  const auto a = to_big(A), b = to_big(B);
  const auto a3 = multiply(multiply(a, a), a);
  const auto b2 = multiply(b, b);
  // j is constant iff A^3 and B^2 are proportional.
  if (a3.size() != b2.size()) return true;
  const auto diff = add_scaled(a3, b2.back(), b2, -a3.back());
  return !diff.empty();
}

std::string EllipticFamilySpec::to_string() const {
  return "y^2 = x^3 + (" + A.to_string() + ")x + (" + B.to_string() + "), T in [" +
         std::to_string(t_begin) + ", " + std::to_string(t_end) + ")";
}

BigRational j_invariant(const BigInt& A, const BigInt& B) {
  const BigInt core = 4 * A * A * A + 27 * B * B;
  if (core == 0) throw DomainError("j_invariant: singular curve");
  return BigRational(6912 * A * A * A, core);
}

CurveInvariants invariants(const BigInt& A, const BigInt& B) {
  CurveInvariants inv;
  inv.A = A;
  inv.B = B;
  const BigInt core = 4 * A * A * A + 27 * B * B;
  inv.delta = -16 * core;
  inv.c4 = -48 * A;
  inv.c6 = -864 * B;
  if (core != 0) inv.j = j_invariant(A, B);
  return inv;
}

Factorization conductor_factorization(const BigInt& A, const BigInt& B) {
  const BigInt core = 4 * A * A * A + 27 * B * B;
  if (core == 0) throw DomainError("conductor_proxy: singular curve (Delta = 0)");
  BigInt n = abs(core);
  bool three = false;
  while (n % 2 == 0) n /= 2;
  while (n % 3 == 0) {
    n /= 3;
    three = true;
  }
  if (n > std::numeric_limits<std::uint64_t>::max()) {
    throw RangeError("conductor_proxy: discriminant too large to factor");
  }
  Factorization out;
  out.emplace_back(2, 8);  // 16 | Delta always
  if (three) out.emplace_back(3, 5);
  for (const auto& [p, e] : arith::factorize(static_cast<std::uint64_t>(n))) {
    if (p == 1) continue;
    BigInt a = A, b = B;
    int v = e;
    const BigInt p4 = pow(BigInt(p), 4), p6 = pow(BigInt(p), 6);
    while (v >= 12 && a % p4 == 0 && b % p6 == 0) {
      a /= p4;
      b /= p6;
      v -= 12;
    }
    if (v > 0) out.emplace_back(p, a % p == 0 ? 2 : 1);
  }
  return out;
}

BigInt conductor_proxy(const BigInt& A, const BigInt& B) {
  BigInt c = 1;
  for (const auto& [p, e] : conductor_factorization(A, B)) c *= pow(BigInt(p), static_cast<unsigned>(e));
  return c;
}

double log_of(const Factorization& f) {
  double s = 0.0;
  for (const auto& [p, e] : f) s += e * std::log(static_cast<double>(p));
  return s;
}

std::pair<BigInt, BigInt> rs_conductor_bounds(const BigInt& c1, const BigInt& c2) {
  if (c1 < 1 || c2 < 1) throw DomainError("rs_conductor_bounds: conductors must be positive");
  const BigInt g = gcd(c1, c2);
  const BigInt sq = (c1 * c2) * (c1 * c2);
  return {sq / (g * g * g * g), sq / g};
}

double log_rs_conductor(const Factorization& c1, const Factorization& c2, ConductorBound policy) {
  double log_gcd = 0.0;
  auto i = c1.begin();
  auto j = c2.begin();
  while (i != c1.end() && j != c2.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      log_gcd += std::min(i->second, j->second) * std::log(static_cast<double>(i->first));
      ++i;
      ++j;
    }
  }
  double w = 2.5;
  if (policy == ConductorBound::Lower) w = 4.0;
  if (policy == ConductorBound::Upper) w = 1.0;
  return 2.0 * (log_of(c1) + log_of(c2)) - w * log_gcd;
}

AverageLogConductor avg_log_conductor(const EllipticFamilySpec& f, const EllipticFamilySpec& g,
                                      ConductorBound policy) {
  AverageLogConductor out;
  auto collect = [&](const EllipticFamilySpec& spec) {
    std::vector<Factorization> facts;
    for (std::int64_t t = spec.t_begin; t < spec.t_end; ++t) {
      const BigInt a = spec.A(BigInt(t)), b = spec.B(BigInt(t));
      if (4 * a * a * a + 27 * b * b == 0) {
        ++out.singular_skipped;
        continue;
      }
      facts.push_back(conductor_factorization(a, b));
    }
    return facts;
  };
  const auto cf = collect(f);
  const auto cg = collect(g);
  if (cf.empty() || cg.empty()) throw EmptyFamilyError("avg_log_conductor: all fibers singular");
  long double total = 0.0L;
  for (const auto& x : cf) {
    for (const auto& y : cg) total += log_rs_conductor(x, y, policy);
  }
  out.pairs = static_cast<std::int64_t>(cf.size() * cg.size());
  out.value = static_cast<double>(total / out.pairs);
  return out;
}

std::vector<std::int8_t> legendre_table(std::uint64_t p) {
  std::vector<std::int8_t> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t x = 1; x <= p / 2; ++x) chi[x * x % p] = 1;
  return chi;
}

std::int64_t trace_of_frobenius(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  a %= p;
  b %= p;
  std::int64_t s = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t v = (arith::mul_mod(arith::mul_mod(x, x, p), x, p) + arith::mul_mod(a, x, p) + b) % p;
    s += arith::kronecker_symbol(static_cast<std::int64_t>(v), static_cast<std::int64_t>(p));
  }
  return -s;
}

std::vector<std::int64_t> fiber_traces(const EllipticFamilySpec& spec, std::uint64_t p) {
  if (p < 5) throw DomainError("fiber_traces: p must be >= 5");
  const auto chi = legendre_table(p);
  std::vector<std::uint64_t> cube(p);
  for (std::uint64_t x = 0; x < p; ++x) cube[x] = x * x % p * x % p;
  std::vector<std::int64_t> traces(p);
  for (std::uint64_t r = 0; r < p; ++r) {
    const std::uint64_t a = spec.A.eval_mod(static_cast<std::int64_t>(r), p);
    const std::uint64_t b = spec.B.eval_mod(static_cast<std::int64_t>(r), p);
    std::int64_t s = 0;
    std::uint64_t ax = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t v = cube[x] + ax + b;
      if (v >= p) v -= p;
      if (v >= p) v -= p;
      s += chi[v];
      ax += a;
      if (ax >= p) ax -= p;
    }
    traces[r] = -s;
  }
  return traces;
}

double nagao_sum(const EllipticFamilySpec& spec, std::uint64_t x_max) {
  if (x_max < 11) throw DomainError("nagao_sum: cutoff must be >= 11");
  const auto primes = arith::sieve_primes(x_max);
  long double total = 0.0L;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto p = primes[i];
    if (p < 5) continue;
    std::int64_t s = 0;
    for (auto a : fiber_traces(spec, p)) s += a;
    total += static_cast<long double>(s) * primes.logs()[i] / static_cast<long double>(p);
  }
  return -static_cast<double>(total / static_cast<long double>(x_max));
}

std::int64_t michel_moment(const EllipticFamilySpec& spec, std::uint64_t p) {
  if (!spec.j_nonconstant()) {
    throw DomainError("michel_moment: j(T) is constant, the second-moment estimate does not apply");
  }
  std::int64_t s = 0;
  for (auto a : fiber_traces(spec, p)) s += a * a;
  return s;
}

CollisionReport j_collision_count(const EllipticFamilySpec& f, const EllipticFamilySpec& g) {
  if (!f.j_nonconstant() || !g.j_nonconstant()) {
    throw DomainError("j_collision_count: both families need non-constant j");
  }
  std::map<BigRational, std::vector<std::int64_t>> by_j;
  for (std::int64_t s = g.t_begin; s < g.t_end; ++s) {
    const BigInt a = g.A(BigInt(s)), b = g.B(BigInt(s));
    if (4 * a * a * a + 27 * b * b == 0) continue;
    by_j[j_invariant(a, b)].push_back(s);
  }
  CollisionReport report;
  for (std::int64_t t = f.t_begin; t < f.t_end; ++t) {
    const BigInt a = f.A(BigInt(t)), b = f.B(BigInt(t));
    if (4 * a * a * a + 27 * b * b == 0) continue;
    const auto it = by_j.find(j_invariant(a, b));
    if (it == by_j.end()) continue;
    for (auto s : it->second) {
      ++report.count;
      if (report.sample.size() < 100) report.sample.emplace_back(t, s);
    }
  }
  return report;
}

bool isomorphic_over_q(const BigInt& a1, const BigInt& b1, const BigInt& a2, const BigInt& b2) {
  // Looking for u in Q^x with a2 = u^4 a1 and b2 = u^6 b1.
  if ((a1 == 0) != (a2 == 0) || (b1 == 0) != (b2 == 0)) return false;
  if (a1 == 0 && b1 == 0) return true;
  if (a1 == 0) return is_rational_power(BigRational(b2, b1), 6);
  if (b1 == 0) return is_rational_power(BigRational(a2, a1), 4);
  const BigRational q(a2, a1), r(b2, b1);
  const BigRational w = r / q;  // u^2
  if (w <= 0 || !is_rational_power(w, 2)) return false;
  return q == w * w && r == w * w * w;
}

}  // namespace lfam::ec

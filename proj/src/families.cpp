#include "lfam/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "lfam/errors.hpp"
#include "lfam/weil.hpp"

namespace lfam::families {

namespace {

std::uint64_t mod_u64(const ec::BigInt& v, std::uint64_t p) {
  ec::BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

bool singular_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t a3 = arith::mul_mod(arith::mul_mod(a, a, p), a, p);
  const std::uint64_t b2 = arith::mul_mod(b, b, p);
  return (arith::mul_mod(4, a3, p) + arith::mul_mod(27, b2, p)) % p == 0;
}

std::int64_t trace_with_table(std::uint64_t a, std::uint64_t b, std::uint64_t p,
                              const std::vector<std::int8_t>& chi,
                              const std::vector<std::uint64_t>& cube) {
  std::int64_t s = 0;
  std::uint64_t ax = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = cube[x] + ax + b;
    v %= p;
    s += chi[v];
    ax += a;
    if (ax >= p) ax -= p;
  }
  return -s;
}

void accumulate_powers(PrimeAverage& out, long double w, const LocalCoefficients& lc) {
  const int n = std::min(out.nu_max(), lc.nu_max());
  for (int nu = 1; nu <= n; ++nu) out.good_sum[static_cast<std::size_t>(nu - 1)] += w * lc.b(nu);
}

int scaled_exponent(int M) { return M % 2 == 1 ? M + 1 : M; }

}  // namespace

double PrimeAverage::mean(int nu) const {
  if (good_weight <= 0) return 0.0;
  return static_cast<double>(good_sum.at(static_cast<std::size_t>(nu - 1)) / good_weight);
}

double PrimeAverage::bad_fraction() const {
  if (total_weight <= 0) return 0.0;
  return static_cast<double>((total_weight - good_weight) / total_weight);
}

PrimeAverage Family::average(std::uint64_t p, int nu_max) const {
  PrimeAverage out(nu_max);
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    const long double w = multiplicity(i);
    out.total_weight += w;
    if (is_bad(i, p)) continue;
    out.good_weight += w;
    accumulate_powers(out, w, local(i, p, nu_max));
  }
  return out;
}

void Family::for_each_trace(std::uint64_t p, const std::function<void(double, double)>& fn) const {
  if (degree() != 2) throw UnsupportedError("traces are defined for degree-2 families only");
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (is_bad(i, p)) continue;
    fn(static_cast<double>(multiplicity(i)), local(i, p, 2).b(1));
  }
}

double Family::mean_log_conductor() const {
  long double s = 0, w = 0;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    s += static_cast<long double>(multiplicity(i)) * log_conductor(i);
    w += multiplicity(i);
  }
  if (w == 0) throw EmptyFamilyError("family has no members");
  return static_cast<double>(s / w);
}

std::uint64_t Family::total_weight() const {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < size(); ++i) w += multiplicity(i);
  return w;
}

std::uint32_t Family::max_multiplicity() const {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < size(); ++i) m = std::max(m, multiplicity(i));
  return m;
}

// ---- Dirichlet ----

DirichletFamily::DirichletFamily(std::uint64_t m, std::optional<std::uint32_t> order,
                                 bool first_only)
    : modulus_(m) {
  if (m < 3 || !arith::is_prime(m)) throw DomainError("dirichlet family needs a prime modulus >= 3");
  auto all = arith::characters_mod(m);
  for (std::size_t j = 1; j < all.size(); ++j) {
    if (order && all[j].order() != *order) continue;
    chars_.push_back(all[j]);
    index_.push_back(j);
    if (first_only) break;
  }
  if (chars_.empty()) throw EmptyFamilyError("no characters of the requested order");
}

std::string DirichletFamily::member_label(std::size_t i) const {
  return "chi" + std::to_string(modulus_) + "_" + std::to_string(index_[i]);
}

LocalCoefficients DirichletFamily::local(std::size_t i, std::uint64_t p, int nu_max) const {
  if (p == modulus_) return satake::ramified(p, 1, nu_max);
  std::vector<double> b(static_cast<std::size_t>(nu_max));
  const auto a = static_cast<std::int64_t>(p % modulus_);
  for (int nu = 1; nu <= nu_max; ++nu) b[static_cast<std::size_t>(nu - 1)] = chars_[i].real_power(a, nu);
  return LocalCoefficients(p, 1, std::move(b));
}

double DirichletFamily::log_conductor(std::size_t) const {
  return std::log(static_cast<double>(modulus_));
}

std::complex<double> DirichletFamily::value(std::size_t i, std::uint64_t p, int nu) const {
  const auto& c = chars_[i];
  const int e = c.exponent(static_cast<std::int64_t>(p % modulus_));
  if (e < 0) return {0.0, 0.0};
  const auto k = static_cast<std::uint64_t>(e) * static_cast<std::uint64_t>(nu) % c.order();
  return std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / c.order());
}

// ---- quadratic ----

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  const std::int64_t r = ((d % 4) + 4) % 4;
  const auto ad = static_cast<std::uint64_t>(d < 0 ? -d : d);
  if (r == 1) return arith::is_squarefree(ad);
  if (r != 0) return false;
  const std::int64_t m = d / 4;
  const std::int64_t rm = ((m % 4) + 4) % 4;
  if (rm != 2 && rm != 3) return false;
  return arith::is_squarefree(static_cast<std::uint64_t>(m < 0 ? -m : m));
}

QuadraticFamily::QuadraticFamily(std::int64_t d_min, std::int64_t d_max) {
  for (std::int64_t d = d_min; d <= d_max; ++d)
    if (is_fundamental_discriminant(d)) discs_.push_back(d);
  if (discs_.empty()) throw EmptyFamilyError("no fundamental discriminants in range");
}

LocalCoefficients QuadraticFamily::local(std::size_t i, std::uint64_t p, int nu_max) const {
  const int k = arith::kronecker_symbol(discs_[i], static_cast<std::int64_t>(p));
  std::vector<double> b(static_cast<std::size_t>(nu_max));
  for (int nu = 1; nu <= nu_max; ++nu)
    b[static_cast<std::size_t>(nu - 1)] = (k == 0) ? 0.0 : ((nu % 2 == 1) ? k : 1.0);
  return LocalCoefficients(p, 1, std::move(b));
}

bool QuadraticFamily::is_bad(std::size_t i, std::uint64_t p) const {
  return discs_[i] % static_cast<std::int64_t>(p) == 0;
}

double QuadraticFamily::log_conductor(std::size_t i) const {
  return std::log(std::fabs(static_cast<double>(discs_[i])));
}

PrimeAverage QuadraticFamily::average(std::uint64_t p, int nu_max) const {
  PrimeAverage out(nu_max);
  long double odd = 0;
  for (std::int64_t d : discs_) {
    out.total_weight += 1;
    const int k = arith::kronecker_symbol(d, static_cast<std::int64_t>(p));
    if (k == 0) continue;
    out.good_weight += 1;
    odd += k;
  }
  for (int nu = 1; nu <= nu_max; ++nu)
    out.good_sum[static_cast<std::size_t>(nu - 1)] = (nu % 2 == 1) ? odd : out.good_weight;
  return out;
}

// ---- elliptic ----

EllipticFamily::EllipticFamily(ec::EllipticFamilySpec spec) : spec_(std::move(spec)) {
  if (!spec_.discriminant_nonzero()) throw DomainError("elliptic family has Delta(T) = 0 identically");
  for (std::int64_t t = spec_.t_begin; t < spec_.t_end; ++t) {
    ec::BigInt a = spec_.A(t), b = spec_.B(t);
    if (4 * a * a * a + 27 * b * b == 0) {
      singular_.push_back(t);
      continue;
    }
    cond_.push_back(ec::conductor_factorization(a, b));
    log_cond_.push_back(ec::log_of(cond_.back()));
    params_.push_back(t);
    a_.push_back(std::move(a));
    b_.push_back(std::move(b));
  }
  if (params_.empty()) throw EmptyFamilyError("elliptic family has no nonsingular fibers");
}

std::string EllipticFamily::member_key(std::size_t i) const {
  return "E[" + a_[i].str() + "," + b_[i].str() + "]";
}

std::int64_t EllipticFamily::trace(std::size_t i, std::uint64_t p) const {
  if (p < 5) throw DomainError("traces are computed for p >= 5");
  return ec::trace_of_frobenius(mod_u64(a_[i], p), mod_u64(b_[i], p), p);
}

LocalCoefficients EllipticFamily::local(std::size_t i, std::uint64_t p, int nu_max) const {
  if (p < 5) return satake::ramified(p, 2, nu_max);
  const double a = static_cast<double>(trace(i, p)) / std::sqrt(static_cast<double>(p));
  return satake::hecke_b(a, nu_max, p);
}

bool EllipticFamily::is_bad(std::size_t i, std::uint64_t p) const {
  if (p <= 3) return true;
  return singular_mod(mod_u64(a_[i], p), mod_u64(b_[i], p), p);
}

std::vector<std::pair<double, std::int64_t>> EllipticFamily::trace_distribution(std::uint64_t p) const {
  std::vector<std::pair<double, std::int64_t>> out;
  if (p < 5) return out;
  std::map<std::uint64_t, std::uint32_t> counts;
  const auto sp = static_cast<std::int64_t>(p);
  for (std::int64_t t : params_) ++counts[static_cast<std::uint64_t>(((t % sp) + sp) % sp)];
  const auto chi = ec::legendre_table(p);
  std::vector<std::uint64_t> cube(p);
  for (std::uint64_t x = 0; x < p; ++x) cube[x] = x * x % p * x % p;
  out.reserve(counts.size());
  for (const auto& [r, c] : counts) {
    const std::uint64_t a = spec_.A.eval_mod(static_cast<std::int64_t>(r), p);
    const std::uint64_t b = spec_.B.eval_mod(static_cast<std::int64_t>(r), p);
    if (singular_mod(a, b, p)) continue;
    out.emplace_back(static_cast<double>(c), trace_with_table(a, b, p, chi, cube));
  }
  return out;
}

PrimeAverage EllipticFamily::average(std::uint64_t p, int nu_max) const {
  PrimeAverage out(nu_max);
  out.total_weight = static_cast<long double>(params_.size());
  const double sq = std::sqrt(static_cast<double>(p));
  for (const auto& [w, a] : trace_distribution(p)) {
    out.good_weight += w;
    accumulate_powers(out, w, satake::hecke_b(static_cast<double>(a) / sq, nu_max, p));
  }
  return out;
}

void EllipticFamily::for_each_trace(std::uint64_t p,
                                    const std::function<void(double, double)>& fn) const {
  const double sq = std::sqrt(static_cast<double>(p));
  for (const auto& [w, a] : trace_distribution(p)) fn(w, static_cast<double>(a) / sq);
}

// ---- Delta ----

std::vector<__int128> ramanujan_tau(std::size_t n_max) {
  if (n_max == 0) return {};
  const std::size_t len = n_max;  // coefficients of x^0 .. x^(n_max-1)
  std::vector<__int128> e(len, 0);
  // Euler's pentagonal series for prod (1 - x^n).
  e[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    bool any = false;
    for (std::int64_t s : {k, -k}) {
      const std::int64_t g = s * (3 * s - 1) / 2;
      if (g < static_cast<std::int64_t>(len)) {
        e[static_cast<std::size_t>(g)] += (k % 2 == 0) ? 1 : -1;
        any = true;
      }
    }
    if (!any) break;
  }
  auto mul = [len](const std::vector<__int128>& x, const std::vector<__int128>& y) {
    std::vector<__int128> z(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; i + j < len; ++j) z[i + j] += x[i] * y[j];
    }
    return z;
  };
  const auto e2 = mul(e, e);
  const auto e4 = mul(e2, e2);
  const auto e8 = mul(e4, e4);
  const auto e16 = mul(e8, e8);
  const auto e24 = mul(e16, e8);
  std::vector<__int128> tau(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) tau[n] = e24[n - 1];
  return tau;
}

DeltaFamily::DeltaFamily(std::size_t bound) : tau_(ramanujan_tau(bound)) {}

__int128 DeltaFamily::tau(std::size_t n) const {
  if (n == 0 || n >= tau_.size()) throw RangeError("tau(n) beyond the precomputed bound");
  return tau_[n];
}

double DeltaFamily::normalized_a(std::uint64_t p) const {
  return static_cast<double>(tau(p)) / std::pow(static_cast<double>(p), 5.5);
}

LocalCoefficients DeltaFamily::local(std::size_t, std::uint64_t p, int nu_max) const {
  return satake::hecke_b(normalized_a(p), nu_max, p);
}

double DeltaFamily::log_conductor(std::size_t) const {
  return weil::log_analytic_conductor(weil::WeilRep::disc(12));
}

// ---- sym^M ----

SymLiftFamily::SymLiftFamily(FamilyPtr base, int M) : base_(std::move(base)), M_(M) {
  if (!base_) throw DomainError("sym_lift: null base family");
  if (M < 1) throw DomainError("sym_lift: M must be positive");
  if (base_->degree() != 2) throw UnsupportedError("sym_lift needs a degree-2 family");
}

std::string SymLiftFamily::member_label(std::size_t i) const {
  return "sym" + std::to_string(M_) + "(" + base_->member_label(i) + ")";
}

std::string SymLiftFamily::member_key(std::size_t i) const {
  return "sym" + std::to_string(M_) + "(" + base_->member_key(i) + ")";
}

LocalCoefficients SymLiftFamily::local(std::size_t i, std::uint64_t p, int nu_max) const {
  if (base_->is_bad(i, p)) return satake::ramified(p, M_ + 1, nu_max);
  return satake::sym_power_b(base_->local(i, p, 2).b(1), M_, nu_max, p);
}

double SymLiftFamily::log_conductor(std::size_t i) const {
  // Level-one forms: the archimedean conductor is all there is.
  if (base_->kind() == "delta") {
    const auto k = base_->archimedean_weight();
    return weil::log_analytic_conductor(weil::sym_power(weil::WeilRep::disc(*k), M_));
  }
  return 0.5 * scaled_exponent(M_) * base_->log_conductor(i);
}

std::optional<int> SymLiftFamily::sign(std::size_t) const {
  if (base_->kind() != "delta") return std::nullopt;
  const auto e = weil::epsilon_factor(weil::sym_power(weil::WeilRep::disc(*base_->archimedean_weight()), M_));
  if (e.exponent == 0) return 1;
  if (e.exponent == 2) return -1;
  return std::nullopt;
}

PrimeAverage SymLiftFamily::average(std::uint64_t p, int nu_max) const {
  PrimeAverage out(nu_max);
  out.total_weight = static_cast<long double>(base_->total_weight());
  base_->for_each_trace(p, [&](double w, double b1) {
    out.good_weight += w;
    accumulate_powers(out, w, satake::sym_power_b(b1, M_, nu_max, p));
  });
  return out;
}

// ---- Rankin-Selberg ----

CollisionPolicy collision_policy_from_string(const std::string& s) {
  if (s == "auto") return CollisionPolicy::Auto;
  if (s == "none") return CollisionPolicy::None;
  if (s == "identity") return CollisionPolicy::Identity;
  if (s == "isomorphic") return CollisionPolicy::Isomorphic;
  throw ConfigError("unknown collision policy '" + s + "'");
}

ProductFamily::ProductFamily(FamilyPtr f, FamilyPtr g, CollisionPolicy policy)
    : f_(std::move(f)), g_(std::move(g)) {
  if (!f_ || !g_) throw DomainError("convolve: null family");
  if (f_->kind() == "dirichlet" && g_->kind() == "dirichlet")
    throw UnsupportedError("convolve: products of two complex character families are not real");
  if (policy == CollisionPolicy::Auto)
    policy = elliptic_pair() ? CollisionPolicy::Isomorphic : CollisionPolicy::Identity;

  if (policy == CollisionPolicy::Isomorphic) {
    if (!elliptic_pair()) throw ConfigError("isomorphism collisions need two elliptic families");
    const auto& ef = static_cast<const EllipticFamily&>(*f_);
    const auto& eg = static_cast<const EllipticFamily&>(*g_);
    std::map<ec::BigRational, std::vector<std::size_t>> by_j;
    for (std::size_t b = 0; b < eg.size(); ++b)
      by_j[ec::j_invariant(eg.coeff_a(b), eg.coeff_b(b))].push_back(b);
    for (std::size_t a = 0; a < ef.size(); ++a) {
      auto it = by_j.find(ec::j_invariant(ef.coeff_a(a), ef.coeff_b(a)));
      if (it == by_j.end()) continue;
      for (std::size_t b : it->second)
        if (ec::isomorphic_over_q(ef.coeff_a(a), ef.coeff_b(a), eg.coeff_a(b), eg.coeff_b(b)))
          excluded_.emplace_back(a, b);
    }
  } else if (policy == CollisionPolicy::Identity) {
    std::unordered_map<std::string, std::vector<std::size_t>> keys;
    for (std::size_t b = 0; b < g_->size(); ++b) keys[g_->member_key(b)].push_back(b);
    for (std::size_t a = 0; a < f_->size(); ++a) {
      auto it = keys.find(f_->member_key(a));
      if (it == keys.end()) continue;
      for (std::size_t b : it->second) excluded_.emplace_back(a, b);
    }
  }
  std::sort(excluded_.begin(), excluded_.end());
  for (const auto& [a, b] : excluded_) excluded_flat_.push_back(a * g_->size() + b);
}

bool ProductFamily::elliptic_pair() const {
  return dynamic_cast<const EllipticFamily*>(f_.get()) != nullptr &&
         dynamic_cast<const EllipticFamily*>(g_.get()) != nullptr;
}

std::size_t ProductFamily::size() const {
  return f_->size() * g_->size() - excluded_flat_.size();
}

std::pair<std::size_t, std::size_t> ProductFamily::pair_of(std::size_t i) const {
  std::size_t idx = i;
  for (std::size_t e : excluded_flat_) {
    if (e <= idx) ++idx;
    else break;
  }
  return {idx / g_->size(), idx % g_->size()};
}

std::uint32_t ProductFamily::multiplicity(std::size_t i) const {
  const auto [a, b] = pair_of(i);
  return f_->multiplicity(a) * g_->multiplicity(b);
}

std::string ProductFamily::member_label(std::size_t i) const {
  const auto [a, b] = pair_of(i);
  return f_->member_label(a) + "x" + g_->member_label(b);
}

LocalCoefficients ProductFamily::local(std::size_t i, std::uint64_t p, int nu_max) const {
  const auto [a, b] = pair_of(i);
  if (f_->is_bad(a, p) || g_->is_bad(b, p)) return satake::ramified(p, degree(), nu_max);
  return satake::rankin_product(f_->local(a, p, nu_max), g_->local(b, p, nu_max));
}

bool ProductFamily::is_bad(std::size_t i, std::uint64_t p) const {
  const auto [a, b] = pair_of(i);
  return f_->is_bad(a, p) || g_->is_bad(b, p);
}

double ProductFamily::log_conductor(std::size_t i) const {
  const auto [a, b] = pair_of(i);
  if (elliptic_pair()) {
    const auto& ef = static_cast<const EllipticFamily&>(*f_);
    const auto& eg = static_cast<const EllipticFamily&>(*g_);
    return ec::log_rs_conductor(ef.conductor(a), eg.conductor(b));
  }
  return f_->log_conductor(a) + g_->log_conductor(b);
}

double ProductFamily::default_tolerance() const {
  return std::max(f_->default_tolerance(), g_->default_tolerance());
}

PrimeAverage ProductFamily::average(std::uint64_t p, int nu_max) const {
  const PrimeAverage x = f_->average(p, nu_max);
  const PrimeAverage y = g_->average(p, nu_max);
  PrimeAverage out(nu_max);
  out.total_weight = x.total_weight * y.total_weight;
  out.good_weight = x.good_weight * y.good_weight;
  for (int nu = 1; nu <= nu_max; ++nu) {
    const auto k = static_cast<std::size_t>(nu - 1);
    out.good_sum[k] = x.good_sum[k] * y.good_sum[k];
  }
  for (const auto& [a, b] : excluded_) {
    const long double w = static_cast<long double>(f_->multiplicity(a)) * g_->multiplicity(b);
    out.total_weight -= w;
    if (f_->is_bad(a, p) || g_->is_bad(b, p)) continue;
    out.good_weight -= w;
    const auto la = f_->local(a, p, nu_max);
    const auto lb = g_->local(b, p, nu_max);
    for (int nu = 1; nu <= nu_max; ++nu)
      out.good_sum[static_cast<std::size_t>(nu - 1)] -= w * la.b(nu) * lb.b(nu);
  }
  return out;
}

double ProductFamily::mean_log_conductor() const {
  if (size() == 0) throw EmptyFamilyError("convolution has no members");
  if (elliptic_pair()) {
    const auto& ef = static_cast<const EllipticFamily&>(*f_);
    const auto& eg = static_cast<const EllipticFamily&>(*g_);
    long double s = 0;
    std::size_t next = 0;
    for (std::size_t a = 0; a < ef.size(); ++a)
      for (std::size_t b = 0; b < eg.size(); ++b) {
        if (next < excluded_flat_.size() && excluded_flat_[next] == a * eg.size() + b) {
          ++next;
          continue;
        }
        s += ec::log_rs_conductor(ef.conductor(a), eg.conductor(b));
      }
    return static_cast<double>(s / static_cast<long double>(size()));
  }
  long double sf = 0, wf = 0, sg = 0, wg = 0;
  for (std::size_t a = 0; a < f_->size(); ++a) {
    sf += static_cast<long double>(f_->multiplicity(a)) * f_->log_conductor(a);
    wf += f_->multiplicity(a);
  }
  for (std::size_t b = 0; b < g_->size(); ++b) {
    sg += static_cast<long double>(g_->multiplicity(b)) * g_->log_conductor(b);
    wg += g_->multiplicity(b);
  }
  long double s = sf * wg + sg * wf, w = wf * wg;
  for (const auto& [a, b] : excluded_) {
    const long double m = static_cast<long double>(f_->multiplicity(a)) * g_->multiplicity(b);
    s -= m * (f_->log_conductor(a) + g_->log_conductor(b));
    w -= m;
  }
  return static_cast<double>(s / w);
}

// ---- fixed twist ----

TwistFamily::TwistFamily(FamilyPtr fixed, FamilyPtr g) : h_(std::move(fixed)), g_(std::move(g)) {
  if (!h_ || !g_) throw DomainError("twist: null family");
  if (h_->size() != 1) throw ConfigError("twist: the fixed factor must have exactly one member");
}

std::string TwistFamily::member_label(std::size_t i) const {
  return h_->member_label(0) + "x" + g_->member_label(i);
}

LocalCoefficients TwistFamily::local(std::size_t i, std::uint64_t p, int nu_max) const {
  if (is_bad(i, p)) return satake::ramified(p, degree(), nu_max);
  return satake::rankin_product(h_->local(0, p, nu_max), g_->local(i, p, nu_max));
}

bool TwistFamily::is_bad(std::size_t i, std::uint64_t p) const {
  return h_->is_bad(0, p) || g_->is_bad(i, p);
}

double TwistFamily::log_conductor(std::size_t i) const {
  return h_->degree() * g_->log_conductor(i) + g_->degree() * h_->log_conductor(0);
}

PrimeAverage TwistFamily::average(std::uint64_t p, int nu_max) const {
  PrimeAverage y = g_->average(p, nu_max);
  if (h_->is_bad(0, p)) {
    PrimeAverage out(nu_max);
    out.total_weight = y.total_weight;
    return out;
  }
  const auto lh = h_->local(0, p, nu_max);
  for (int nu = 1; nu <= nu_max; ++nu) y.good_sum[static_cast<std::size_t>(nu - 1)] *= lh.b(nu);
  return y;
}

double TwistFamily::mean_log_conductor() const {
  return h_->degree() * g_->mean_log_conductor() + g_->degree() * h_->log_conductor(0);
}

// ---- stub ----

ZeroFamily::ZeroFamily(std::size_t members, int degree, double log_conductor)
    : members_(members), degree_(degree), log_conductor_(log_conductor) {
  if (members == 0) throw EmptyFamilyError("zero family needs members");
  if (degree < 1) throw DomainError("zero family degree must be positive");
  if (!(log_conductor > 0)) throw DomainError("log-conductor must be positive");
}

LocalCoefficients ZeroFamily::local(std::size_t, std::uint64_t p, int nu_max) const {
  return satake::ramified(p, degree_, nu_max);
}

// ---- constructors ----

std::shared_ptr<DirichletFamily> dirichlet_family(std::uint64_t m) {
  return std::make_shared<DirichletFamily>(m);
}
std::shared_ptr<DirichletFamily> dirichlet_character(std::uint64_t m, std::uint32_t order) {
  return std::make_shared<DirichletFamily>(m, order, true);
}
std::shared_ptr<QuadraticFamily> quadratic_family(std::int64_t d_min, std::int64_t d_max) {
  return std::make_shared<QuadraticFamily>(d_min, d_max);
}
std::shared_ptr<EllipticFamily> elliptic_family(ec::EllipticFamilySpec spec) {
  return std::make_shared<EllipticFamily>(std::move(spec));
}
std::shared_ptr<DeltaFamily> cusp_form_delta(std::size_t bound) {
  return std::make_shared<DeltaFamily>(bound);
}
std::shared_ptr<SymLiftFamily> sym_lift(FamilyPtr f, int M) {
  return std::make_shared<SymLiftFamily>(std::move(f), M);
}
std::shared_ptr<ProductFamily> convolve(FamilyPtr f, FamilyPtr g, CollisionPolicy policy) {
  return std::make_shared<ProductFamily>(std::move(f), std::move(g), policy);
}
std::shared_ptr<TwistFamily> twist_by_fixed(FamilyPtr h, FamilyPtr g) {
  return std::make_shared<TwistFamily>(std::move(h), std::move(g));
}

}  // namespace lfam::families

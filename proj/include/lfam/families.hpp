#pragma once

// Families of L-functions: enumerable members with multiplicities, local
// coefficients per prime, bad-prime predicates and log-conductors, plus the
// symmetric-power, Rankin-Selberg and fixed-twist constructions on them.

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lfam/arith.hpp"
#include "lfam/ec.hpp"
#include "lfam/satake.hpp"

namespace lfam::families {

using satake::LocalCoefficients;

// Multiplicity-weighted sums of b(p^nu) over the members that are good at p.
struct PrimeAverage {
  std::vector<long double> good_sum;  // index nu - 1
  long double good_weight = 0.0L;
  long double total_weight = 0.0L;

  explicit PrimeAverage(int nu_max = satake::kDefaultNuMax)
      : good_sum(static_cast<std::size_t>(nu_max), 0.0L) {}

  int nu_max() const { return static_cast<int>(good_sum.size()); }
  // Mean of b(p^nu) over good members; 0 when no member is good at p.
  double mean(int nu) const;
  double bad_fraction() const;
};

class Family {
 public:
  virtual ~Family() = default;

  virtual std::string kind() const = 0;
  virtual std::size_t size() const = 0;
  virtual std::uint32_t multiplicity(std::size_t /*i*/) const { return 1; }
  virtual std::string member_label(std::size_t i) const = 0;
  // Identifies the underlying L-function, for detecting imprimitive pairs.
  virtual std::string member_key(std::size_t i) const { return kind() + ":" + member_label(i); }
  virtual int degree() const = 0;
  virtual LocalCoefficients local(std::size_t i, std::uint64_t p, int nu_max) const = 0;
  virtual bool is_bad(std::size_t i, std::uint64_t p) const = 0;
  virtual double log_conductor(std::size_t i) const = 0;
  virtual std::optional<int> sign(std::size_t /*i*/) const { return std::nullopt; }
  // Weight k of the archimedean component [k] when it is the same for every member.
  virtual std::optional<int> archimedean_weight() const { return std::nullopt; }
  // Classification tolerance suited to how fast the family's averages converge.
  virtual double default_tolerance() const { return 0.2; }

  virtual PrimeAverage average(std::uint64_t p, int nu_max) const;
  // Calls fn(weight, b(p)) once per good member (or residue class) at p.
  // Only meaningful for degree-2 families.
  virtual void for_each_trace(std::uint64_t p,
                              const std::function<void(double, double)>& fn) const;
  virtual double mean_log_conductor() const;

  std::uint64_t total_weight() const;
  std::uint32_t max_multiplicity() const;
};

using FamilyPtr = std::shared_ptr<const Family>;

// Nontrivial characters mod a prime m (or only those of a given order).
class DirichletFamily : public Family {
 public:
  // With first_only, keeps just the first character of the requested order.
  explicit DirichletFamily(std::uint64_t m, std::optional<std::uint32_t> order = std::nullopt,
                           bool first_only = false);

  std::string kind() const override { return "dirichlet"; }
  std::size_t size() const override { return chars_.size(); }
  std::string member_label(std::size_t i) const override;
  int degree() const override { return 1; }
  LocalCoefficients local(std::size_t i, std::uint64_t p, int nu_max) const override;
  bool is_bad(std::size_t, std::uint64_t p) const override { return p == modulus_; }
  double log_conductor(std::size_t) const override;
  double default_tolerance() const override { return 0.05; }

  std::uint64_t modulus() const { return modulus_; }
  const arith::DirichletCharacter& character(std::size_t i) const { return chars_[i]; }
  // Exact complex value chi(p)^nu.
  std::complex<double> value(std::size_t i, std::uint64_t p, int nu) const;

 private:
  std::uint64_t modulus_;
  std::vector<arith::DirichletCharacter> chars_;
  std::vector<std::size_t> index_;  // position among all characters mod m
};

bool is_fundamental_discriminant(std::int64_t d);

// Kronecker characters chi_d for fundamental discriminants d in [d_min, d_max].
class QuadraticFamily : public Family {
 public:
  QuadraticFamily(std::int64_t d_min, std::int64_t d_max);

  std::string kind() const override { return "quadratic"; }
  std::size_t size() const override { return discs_.size(); }
  std::string member_label(std::size_t i) const override { return std::to_string(discs_[i]); }
  int degree() const override { return 1; }
  LocalCoefficients local(std::size_t i, std::uint64_t p, int nu_max) const override;
  bool is_bad(std::size_t i, std::uint64_t p) const override;
  double log_conductor(std::size_t i) const override;
  std::optional<int> sign(std::size_t) const override { return 1; }
  double default_tolerance() const override { return 0.05; }
  PrimeAverage average(std::uint64_t p, int nu_max) const override;

  const std::vector<std::int64_t>& discriminants() const { return discs_; }

 private:
  std::vector<std::int64_t> discs_;
};

// Fibers E_t: y^2 = x^3 + A(t) x + B(t), normalized b_t(p) = a_t(p)/sqrt(p).
class EllipticFamily : public Family {
 public:
  explicit EllipticFamily(ec::EllipticFamilySpec spec);

  std::string kind() const override { return "elliptic"; }
  std::size_t size() const override { return params_.size(); }
  std::string member_label(std::size_t i) const override { return std::to_string(params_[i]); }
  std::string member_key(std::size_t i) const override;
  int degree() const override { return 2; }
  LocalCoefficients local(std::size_t i, std::uint64_t p, int nu_max) const override;
  bool is_bad(std::size_t i, std::uint64_t p) const override;
  double log_conductor(std::size_t i) const override { return log_cond_[i]; }
  std::optional<int> archimedean_weight() const override { return 2; }
  PrimeAverage average(std::uint64_t p, int nu_max) const override;
  void for_each_trace(std::uint64_t p,
                      const std::function<void(double, double)>& fn) const override;

  const ec::EllipticFamilySpec& spec() const { return spec_; }
  std::int64_t parameter(std::size_t i) const { return params_[i]; }
  const ec::BigInt& coeff_a(std::size_t i) const { return a_[i]; }
  const ec::BigInt& coeff_b(std::size_t i) const { return b_[i]; }
  const ec::Factorization& conductor(std::size_t i) const { return cond_[i]; }
  // Parameters t in range with Delta(t) = 0 (skipped members).
  const std::vector<std::int64_t>& singular_fibers() const { return singular_; }
  // Raw a_t(p) for member i.
  std::int64_t trace(std::size_t i, std::uint64_t p) const;

 private:
  // (weight, a_r(p)) for every residue class r holding good members.
  std::vector<std::pair<double, std::int64_t>> trace_distribution(std::uint64_t p) const;

  ec::EllipticFamilySpec spec_;
  std::vector<std::int64_t> params_;
  std::vector<ec::BigInt> a_, b_;
  std::vector<ec::Factorization> cond_;
  std::vector<double> log_cond_;
  std::vector<std::int64_t> singular_;
};

// tau(n) for 1 <= n <= n_max from the product x * prod (1 - x^n)^24.
std::vector<__int128> ramanujan_tau(std::size_t n_max);

// The weight-12 level-1 cusp form, normalized a(p) = tau(p)/p^(11/2).
class DeltaFamily : public Family {
 public:
  explicit DeltaFamily(std::size_t bound = 1000);

  std::string kind() const override { return "delta"; }
  std::size_t size() const override { return 1; }
  std::string member_label(std::size_t) const override { return "Delta"; }
  int degree() const override { return 2; }
  LocalCoefficients local(std::size_t i, std::uint64_t p, int nu_max) const override;
  bool is_bad(std::size_t, std::uint64_t) const override { return false; }
  double log_conductor(std::size_t) const override;
  std::optional<int> sign(std::size_t) const override { return 1; }
  std::optional<int> archimedean_weight() const override { return 12; }

  __int128 tau(std::size_t n) const;
  double normalized_a(std::uint64_t p) const;
  std::size_t bound() const { return tau_.size() - 1; }

 private:
  std::vector<__int128> tau_;
};

class SymLiftFamily : public Family {
 public:
  SymLiftFamily(FamilyPtr base, int M);

  std::string kind() const override { return "sym_lift"; }
  std::size_t size() const override { return base_->size(); }
  std::uint32_t multiplicity(std::size_t i) const override { return base_->multiplicity(i); }
  std::string member_label(std::size_t i) const override;
  std::string member_key(std::size_t i) const override;
  int degree() const override { return M_ + 1; }
  LocalCoefficients local(std::size_t i, std::uint64_t p, int nu_max) const override;
  bool is_bad(std::size_t i, std::uint64_t p) const override { return base_->is_bad(i, p); }
  double log_conductor(std::size_t i) const override;
  std::optional<int> sign(std::size_t i) const override;
  double default_tolerance() const override { return base_->default_tolerance(); }
  PrimeAverage average(std::uint64_t p, int nu_max) const override;

  int power() const { return M_; }

 private:
  FamilyPtr base_;
  int M_;
};

enum class CollisionPolicy {
  Auto,        // isomorphism for two elliptic families, identity otherwise
  None,
  Identity,    // same underlying L-function (member_key)
  Isomorphic,  // equal j-invariant and isomorphic over Q
};

CollisionPolicy collision_policy_from_string(const std::string& s);

// Rankin-Selberg convolution F x G with imprimitive pairs removed.
class ProductFamily : public Family {
 public:
  ProductFamily(FamilyPtr f, FamilyPtr g, CollisionPolicy policy = CollisionPolicy::Auto);

  std::string kind() const override { return "convolve"; }
  std::size_t size() const override;
  std::uint32_t multiplicity(std::size_t i) const override;
  std::string member_label(std::size_t i) const override;
  int degree() const override { return f_->degree() * g_->degree(); }
  LocalCoefficients local(std::size_t i, std::uint64_t p, int nu_max) const override;
  bool is_bad(std::size_t i, std::uint64_t p) const override;
  double log_conductor(std::size_t i) const override;
  double default_tolerance() const override;
  PrimeAverage average(std::uint64_t p, int nu_max) const override;
  double mean_log_conductor() const override;

  const Family& left() const { return *f_; }
  const Family& right() const { return *g_; }
  // Excluded (left, right) index pairs, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& excluded() const { return excluded_; }
  std::pair<std::size_t, std::size_t> pair_of(std::size_t i) const;

 private:
  bool elliptic_pair() const;

  FamilyPtr f_, g_;
  std::vector<std::pair<std::size_t, std::size_t>> excluded_;
  std::vector<std::size_t> excluded_flat_;  // a * |G| + b, sorted
};

// Convolution of every member of g with one fixed L-function (member 0 of h).
// Character-valued h contributes Re chi(p)^nu.
class TwistFamily : public Family {
 public:
  TwistFamily(FamilyPtr fixed, FamilyPtr g);

  std::string kind() const override { return "twist"; }
  std::size_t size() const override { return g_->size(); }
  std::uint32_t multiplicity(std::size_t i) const override { return g_->multiplicity(i); }
  std::string member_label(std::size_t i) const override;
  int degree() const override { return h_->degree() * g_->degree(); }
  LocalCoefficients local(std::size_t i, std::uint64_t p, int nu_max) const override;
  bool is_bad(std::size_t i, std::uint64_t p) const override;
  double log_conductor(std::size_t i) const override;
  double default_tolerance() const override { return g_->default_tolerance(); }
  PrimeAverage average(std::uint64_t p, int nu_max) const override;
  double mean_log_conductor() const override;

 private:
  FamilyPtr h_, g_;
};

// Members with every b(p^nu) = 0; a stub with no prime-side contribution.
class ZeroFamily : public Family {
 public:
  ZeroFamily(std::size_t members, int degree, double log_conductor);

  std::string kind() const override { return "zero"; }
  std::size_t size() const override { return members_; }
  std::string member_label(std::size_t i) const override { return std::to_string(i); }
  int degree() const override { return degree_; }
  LocalCoefficients local(std::size_t i, std::uint64_t p, int nu_max) const override;
  bool is_bad(std::size_t, std::uint64_t) const override { return false; }
  double log_conductor(std::size_t) const override { return log_conductor_; }

 private:
  std::size_t members_;
  int degree_;
  double log_conductor_;
};

std::shared_ptr<DirichletFamily> dirichlet_family(std::uint64_t m);
// Singleton holding the first character mod m of the given order.
std::shared_ptr<DirichletFamily> dirichlet_character(std::uint64_t m, std::uint32_t order);
std::shared_ptr<QuadraticFamily> quadratic_family(std::int64_t d_min, std::int64_t d_max);
std::shared_ptr<EllipticFamily> elliptic_family(ec::EllipticFamilySpec spec);
std::shared_ptr<DeltaFamily> cusp_form_delta(std::size_t bound = 1000);
std::shared_ptr<SymLiftFamily> sym_lift(FamilyPtr f, int M);
std::shared_ptr<ProductFamily> convolve(FamilyPtr f, FamilyPtr g,
                                        CollisionPolicy policy = CollisionPolicy::Auto);
std::shared_ptr<TwistFamily> twist_by_fixed(FamilyPtr h, FamilyPtr g);

}  // namespace lfam::families

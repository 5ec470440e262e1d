#pragma once

// Finite-dimensional representations of the Weil group of R and their
// archimedean epsilon- and Gamma-factors.
//
// Irreducibles are [+,t], [-,t] (dimension 1) and [k,t], k >= 2 (dimension 2).
// [1,t] is the reducible [+,t] (+) [-,t] and is never stored as an irreducible.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace lfam::weil {

using Rational = boost::rational<std::int64_t>;

enum class Kind { Plus, Minus, Disc };

struct WeilIrr {
  Kind kind = Kind::Plus;
  Rational twist{0};
  int weight = 0;  // k for Disc, 0 otherwise

  static WeilIrr plus(Rational t = Rational{0});
  static WeilIrr minus(Rational t = Rational{0});
  // k >= 2; use WeilRep::disc for k = 1.
  static WeilIrr disc(int k, Rational t = Rational{0});
  // [+,t] for even sign exponent, [-,t] for odd.
  static WeilIrr sign(int exponent, Rational t = Rational{0});

  int dimension() const { return kind == Kind::Disc ? 2 : 1; }
  std::string to_string() const;

  std::strong_ordering operator<=>(const WeilIrr& o) const;
  bool operator==(const WeilIrr& o) const = default;
};

// Multiset of irreducibles in canonical (sorted) form.
class WeilRep {
 public:
  WeilRep() = default;
  WeilRep(const WeilIrr& irr);  // NOLINT(google-explicit-constructor)

  // [k,t] for k >= 1, with [1,t] expanded to [+,t] (+) [-,t].
  static WeilRep disc(int k, Rational t = Rational{0});

  void add(const WeilIrr& irr, int multiplicity = 1);
  WeilRep& operator+=(const WeilRep& o);
  friend WeilRep operator+(WeilRep a, const WeilRep& b) { return a += b; }
  bool operator==(const WeilRep& o) const = default;

  int dimension() const;
  bool empty() const { return parts_.empty(); }
  bool is_irreducible() const;
  const std::map<WeilIrr, int>& constituents() const { return parts_; }

  // e.g. "[34] (+) [12]", twists printed as [k,t] when nonzero, largest first.
  std::string to_string() const;

 private:
  std::map<WeilIrr, int> parts_;
};

WeilRep tensor(const WeilIrr& x, const WeilIrr& y);
WeilRep tensor(const WeilRep& x, const WeilRep& y);

WeilRep sym_power(const WeilIrr& x, int m);
// Only irreducible inputs are accepted; plethysm is not implemented.
WeilRep sym_power(const WeilRep& x, int m);

WeilRep wedge2(const WeilIrr& x);
WeilRep wedge2(const WeilRep& x);

// An exact power of i.
struct IPower {
  int exponent = 0;  // in [0, 4)

  static IPower of(std::int64_t e);
  IPower operator*(IPower o) const { return of(exponent + o.exponent); }
  bool operator==(const IPower&) const = default;
  std::string to_string() const;  // "+1", "+i", "-1", "-i"
};

IPower epsilon_factor(const WeilIrr& x);
IPower epsilon_factor(const WeilRep& x);

struct GammaFactor {
  std::vector<Rational> real_shifts;     // Gamma_R(s + T)
  std::vector<Rational> complex_shifts;  // Gamma_C(s + T)

  int degree() const {
    return static_cast<int>(real_shifts.size() + 2 * complex_shifts.size());
  }
  std::string to_string() const;
};

GammaFactor gamma_factor(const WeilRep& x);

// Sum of logs of the archimedean conductor contributions: Gamma_R(s+T) gives
// T/2 and Gamma_C(s+T) gives T(T+1)/4, each floored at 1.
double log_analytic_conductor(const WeilRep& x);

enum class Parity { Even, Odd };

// Root number of sym^A[k] (x) sym^B[k] in closed form, where A is 2m+1 or 2m
// and B is 2n+1 or 2n according to the parities. k >= 2 even.
IPower convolution_root_number(Parity pa, int m, Parity pb, int n, int k);

// Exponent of sym^A for the given parity and half-index (2m+1 or 2m).
inline int sym_exponent(Parity p, int m) { return p == Parity::Odd ? 2 * m + 1 : 2 * m; }

}  // namespace lfam::weil

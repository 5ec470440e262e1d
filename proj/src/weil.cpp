#include "lfam/weil.hpp"

#include <cmath>
#include <sstream>

#include "lfam/errors.hpp"

namespace lfam::weil {

namespace {

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Position in the canonical order: Disc (heaviest first), then Plus, then Minus.
int rank(const WeilIrr& x) {
  switch (x.kind) {
    case Kind::Disc:
      return -x.weight;
    case Kind::Plus:
      return 1;
    case Kind::Minus:
      return 2;
  }
  return 3;
}

}  // namespace

WeilIrr WeilIrr::plus(Rational t) { return {Kind::Plus, t, 0}; }
WeilIrr WeilIrr::minus(Rational t) { return {Kind::Minus, t, 0}; }

WeilIrr WeilIrr::disc(int k, Rational t) {
  if (k < 2) throw DomainError("[k,t] is irreducible only for k >= 2");
  return {Kind::Disc, t, k};
}

WeilIrr WeilIrr::sign(int exponent, Rational t) {
  return exponent % 2 == 0 ? plus(t) : minus(t);
}

std::string WeilIrr::to_string() const {
  std::string head;
  switch (kind) {
    case Kind::Plus:
      head = "+";
      break;
    case Kind::Minus:
      head = "-";
      break;
    case Kind::Disc:
      head = std::to_string(weight);
      break;
  }
  if (twist.numerator() == 0) return "[" + head + "]";
  return "[" + head + "," + rational_string(twist) + "]";
}

std::strong_ordering WeilIrr::operator<=>(const WeilIrr& o) const {
  if (auto c = rank(*this) <=> rank(o); c != 0) return c;
  if (twist < o.twist) return std::strong_ordering::less;
  if (o.twist < twist) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

WeilRep::WeilRep(const WeilIrr& irr) { add(irr); }

WeilRep WeilRep::disc(int k, Rational t) {
  if (k < 1) throw DomainError("[k,t] needs k >= 1");
  if (k == 1) return WeilRep(WeilIrr::plus(t)) + WeilRep(WeilIrr::minus(t));
  return WeilRep(WeilIrr::disc(k, t));
}

void WeilRep::add(const WeilIrr& irr, int multiplicity) {
  if (multiplicity <= 0) return;
  parts_[irr] += multiplicity;
}

WeilRep& WeilRep::operator+=(const WeilRep& o) {
  for (const auto& [irr, mult] : o.parts_) add(irr, mult);
  return *this;
}

int WeilRep::dimension() const {
  int d = 0;
  for (const auto& [irr, mult] : parts_) d += irr.dimension() * mult;
  return d;
}

bool WeilRep::is_irreducible() const {
  return parts_.size() == 1 && parts_.begin()->second == 1;
}

std::string WeilRep::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& [irr, mult] : parts_) {
    for (int i = 0; i < mult; ++i) {
      if (!out.empty()) out += " (+) ";
      out += irr.to_string();
    }
  }
  return out;
}

WeilRep tensor(const WeilIrr& x, const WeilIrr& y) {
  const Rational t = x.twist + y.twist;
  if (x.kind != Kind::Disc && y.kind != Kind::Disc) {
    const bool odd = (x.kind == Kind::Minus) != (y.kind == Kind::Minus);
    return WeilRep(odd ? WeilIrr::minus(t) : WeilIrr::plus(t));
  }
  if (x.kind != Kind::Disc) return WeilRep(WeilIrr::disc(y.weight, t));
  if (y.kind != Kind::Disc) return WeilRep(WeilIrr::disc(x.weight, t));
  const int hi = std::max(x.weight, y.weight);
  const int lo = std::min(x.weight, y.weight);
  return WeilRep(WeilIrr::disc(hi + lo - 1, t)) + WeilRep::disc(hi - lo + 1, t);
}

WeilRep tensor(const WeilRep& x, const WeilRep& y) {
  WeilRep out;
  for (const auto& [a, ma] : x.constituents()) {
    for (const auto& [b, mb] : y.constituents()) {
      const WeilRep ab = tensor(a, b);
      for (const auto& [c, mc] : ab.constituents()) out.add(c, ma * mb * mc);
    }
  }
  return out;
}

WeilRep sym_power(const WeilIrr& x, int m) {
  if (m < 1) throw DomainError("sym_power: m must be positive");
  const Rational t = x.twist * static_cast<std::int64_t>(m);
  switch (x.kind) {
    case Kind::Plus:
      return WeilRep(WeilIrr::plus(t));
    case Kind::Minus:
      return WeilRep(WeilIrr::sign(m, t));
    case Kind::Disc:
      break;
  }
  const int k = x.weight;
  WeilRep out;
  if (m % 2 == 1) {
    const int half = (m - 1) / 2;
    for (int l = 0; l <= half; ++l) out.add(WeilIrr::disc((2 * l + 1) * (k - 1) + 1, t));
  } else {
    const int half = m / 2;
    out.add(WeilIrr::sign(half * (k - 1), t));
    for (int l = 1; l <= half; ++l) out.add(WeilIrr::disc(2 * l * (k - 1) + 1, t));
  }
  return out;
}

WeilRep sym_power(const WeilRep& x, int m) {
  if (!x.is_irreducible()) {
    throw UnsupportedError("sym_power: only irreducible representations are supported");
  }
  return sym_power(x.constituents().begin()->first, m);
}

WeilRep wedge2(const WeilIrr& x) {
  if (x.kind != Kind::Disc) throw DomainError("wedge2: needs a two-dimensional [k,t]");
  return WeilRep(WeilIrr::sign(x.weight, x.twist * static_cast<std::int64_t>(2)));
}

WeilRep wedge2(const WeilRep& x) {
  if (!x.is_irreducible()) {
    throw UnsupportedError("wedge2: only irreducible representations are supported");
  }
  return wedge2(x.constituents().begin()->first);
}

IPower IPower::of(std::int64_t e) { return IPower{static_cast<int>(((e % 4) + 4) % 4)}; }

std::string IPower::to_string() const {
  static const char* kNames[4] = {"+1", "+i", "-1", "-i"};
  return kNames[exponent];
}

IPower epsilon_factor(const WeilIrr& x) {
  switch (x.kind) {
    case Kind::Plus:
      return IPower::of(0);
    case Kind::Minus:
      return IPower::of(1);
    case Kind::Disc:
      return IPower::of(x.weight);
  }
  return IPower::of(0);
}

IPower epsilon_factor(const WeilRep& x) {
  std::int64_t e = 0;
  for (const auto& [irr, mult] : x.constituents()) {
    e += static_cast<std::int64_t>(epsilon_factor(irr).exponent) * mult;
  }
  return IPower::of(e);
}

std::string GammaFactor::to_string() const {
  std::string out;
  auto append = [&](const char* name, const Rational& shift) {
    if (!out.empty()) out += " * ";
    out += std::string(name) + "(s";
    if (shift.numerator() != 0) out += (shift.numerator() > 0 ? "+" : "") + rational_string(shift);
    out += ")";
  };
  for (const auto& s : real_shifts) append("G_R", s);
  for (const auto& s : complex_shifts) append("G_C", s);
  return out.empty() ? "1" : out;
}

GammaFactor gamma_factor(const WeilRep& x) {
  GammaFactor g;
  for (const auto& [irr, mult] : x.constituents()) {
    for (int i = 0; i < mult; ++i) {
      switch (irr.kind) {
        case Kind::Plus:
          g.real_shifts.push_back(irr.twist);
          break;
        case Kind::Minus:
          g.real_shifts.push_back(irr.twist + 1);
          break;
        case Kind::Disc:
          g.complex_shifts.push_back(irr.twist + Rational(irr.weight - 1, 2));
          break;
      }
    }
  }
  return g;
}

double log_analytic_conductor(const WeilRep& x) {
  const GammaFactor g = gamma_factor(x);
  double total = 0.0;
  for (const auto& s : g.real_shifts) {
    if (s.numerator() < 0) throw DomainError("log_analytic_conductor: negative Gamma shift");
    total += std::log(std::max(to_double(s) / 2.0, 1.0));
  }
  for (const auto& s : g.complex_shifts) {
    if (s.numerator() < 0) throw DomainError("log_analytic_conductor: negative Gamma shift");
    const double t = to_double(s);
    total += std::log(std::max(t * (t + 1.0) / 4.0, 1.0));
  }
  return total;
}

IPower convolution_root_number(Parity pa, int m, Parity pb, int n, int k) {
  if (k < 2 || k % 2 != 0) throw DomainError("convolution_root_number: k must be even and >= 2");
  if (m < 0 || n < 0) throw DomainError("convolution_root_number: negative index");
  if ((pa == Parity::Even && m == 0) || (pb == Parity::Even && n == 0)) {
    throw DomainError("convolution_root_number: sym^0 is not a lift");
  }
  if (pa == pb) return IPower::of(0);
  if (pa == Parity::Even) std::swap(m, n);
  // Now sym^(2m+1) (x) sym^(2n).
  const std::int64_t mm = m, nn = n, half_k = k / 2;
  std::int64_t e = 0;
  if (mm < nn) {
    e = (mm + 1) * (nn - mm) + (mm + 1) * (mm + 1) * half_k;
  } else {
    e = (mm - nn) * (mm + nn + 1) / 2 + (mm + 1) * (mm + 1) * half_k;
  }
  return IPower::of(e % 2 == 0 ? 0 : 2);
}

}  // namespace lfam::weil

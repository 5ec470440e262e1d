#include "lfam/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lfam/errors.hpp"

namespace lfam::rmt {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc_pi(double y) {
  if (std::abs(y) < 1e-8) return 1.0 - (kPi * y) * (kPi * y) / 6.0;
  return std::sin(kPi * y) / (kPi * y);
}

// Integrate f over [a, b] with adaptive Gauss-Kronrod.
template <class F>
double integrate(F f, double a, double b) {
  if (b <= a) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

// pi/2 - Si(z) for large z through the auxiliary asymptotic series.
double si_complement(double z) {
  const double z2 = z * z;
  const double f = (1.0 - 2.0 / z2 + 24.0 / (z2 * z2) - 720.0 / (z2 * z2 * z2)) / z;
  const double g = (1.0 - 6.0 / z2 + 120.0 / (z2 * z2)) / z2;
  return f * std::cos(z) + g * std::sin(z);
}

// Composite fixed-order Gauss-Legendre on [0, X] with panels of width h.
template <class F>
double integrate_panels(F f, double x_max, double h) {
  const auto panels = static_cast<long>(std::ceil(x_max / h));
  long double total = 0.0L;
  for (long i = 0; i < panels; ++i) {
    const double a = i * h;
    const double b = std::min(x_max, a + h);
    total += boost::math::quadrature::gauss<double, 20>::integrate(f, a, b);
  }
  return static_cast<double>(total);
}

}  // namespace

TestFunction::TestFunction(std::string name, double sigma, Fn phi, Fn phi_hat, double phi0,
                           double phi_hat0, Fn tail_mass)
    : name_(std::move(name)),
      sigma_(sigma),
      phi_(std::move(phi)),
      phi_hat_(std::move(phi_hat)),
      phi0_(phi0),
      phi_hat0_(phi_hat0),
      tail_(std::move(tail_mass)) {
  if (!(sigma_ > 0.0)) throw DomainError("TestFunction: support must be positive");
}

double TestFunction::phi_hat(double u) const {
  if (std::abs(u) >= sigma_) return 0.0;
  return phi_hat_(u);
}

TestFunction fejer_test_function(double sigma) {
  if (!(sigma > 0.0)) throw DomainError("fejer_test_function: sigma must be positive");
  auto phi = [sigma](double x) {
    const double s = sinc_pi(sigma * x);
    return sigma * s * s;
  };
  auto phi_hat = [sigma](double u) { return std::max(0.0, 1.0 - std::abs(u) / sigma); };
  auto tail = [sigma](double x) {
    // int_X^inf sin^2(a t)/t^2 dt = sin^2(aX)/X + a (pi/2 - Si(2aX)), a = pi sigma.
    const double a = kPi * sigma;
    const double s = std::sin(a * x);
    return (s * s / x + a * si_complement(2.0 * a * x)) / (kPi * kPi * sigma);
  };
  return TestFunction("fejer", sigma, phi, phi_hat, sigma, 1.0, tail);
}

TestFunction fejer_squared_test_function(double sigma) {
  if (!(sigma > 0.0)) throw DomainError("fejer_squared_test_function: sigma must be positive");
  const double s = sigma / 2.0;
  auto phi = [s](double x) {
    const double v = sinc_pi(s * x);
    return s * s * v * v * v * v;
  };
  auto phi_hat = [s](double u) {
    // Triangle of half-width s convolved with itself.
    const double v = std::abs(u) / s;
    if (v >= 2.0) return 0.0;
    if (v <= 1.0) return s * (2.0 / 3.0 - v * v + v * v * v / 2.0);
    const double w = 2.0 - v;
    return s * w * w * w / 6.0;
  };
  auto tail = [s](double x) {
    // Mean of sin^4 is 3/8.
    return 1.0 / (8.0 * std::pow(kPi, 4) * s * s * x * x * x);
  };
  return TestFunction("fejer2", sigma, phi, phi_hat, s * s, 2.0 * s / 3.0, tail);
}

TestFunction zero_test_function(double sigma) {
  auto zero = [](double) { return 0.0; };
  return TestFunction("zero", sigma, zero, zero, 0.0, 0.0);
}

double inverse_transform(const TestFunction& f, double x) {
  auto integrand = [&](double u) { return f.phi_hat(u) * std::cos(2.0 * kPi * u * x); };
  return 2.0 * integrate(integrand, 0.0, f.sigma());
}

std::string to_string(Symmetry g) {
  switch (g) {
    case Symmetry::U:
      return "U";
    case Symmetry::Sp:
      return "Sp";
    case Symmetry::O:
      return "O";
    case Symmetry::SOeven:
      return "SO(even)";
    case Symmetry::SOodd:
      return "SO(odd)";
  }
  return "?";
}

Symmetry symmetry_from_string(const std::string& name) {
  for (auto g : kAllSymmetries) {
    if (to_string(g) == name) return g;
  }
  if (name == "SOeven") return Symmetry::SOeven;
  if (name == "SOodd") return Symmetry::SOodd;
  throw DomainError("unknown symmetry group '" + name + "'");
}

bool is_orthogonal(Symmetry g) {
  return g == Symmetry::O || g == Symmetry::SOeven || g == Symmetry::SOodd;
}

std::optional<double> orthogonal_sign(Symmetry g) {
  switch (g) {
    case Symmetry::SOeven:
      return 0.0;
    case Symmetry::O:
      return 0.5;
    case Symmetry::SOodd:
      return 1.0;
    default:
      return std::nullopt;
  }
}

int symmetry_constant(Symmetry g) {
  if (g == Symmetry::U) return 0;
  if (g == Symmetry::Sp) return 1;
  return -1;
}

double eta(double u) {
  const double a = std::abs(u);
  if (a < 1.0) return 1.0;
  if (a == 1.0) return 0.5;
  return 0.0;
}

DensityValue fourier_density(Symmetry g, double u) {
  switch (g) {
    case Symmetry::SOeven:
      return {1.0, 0.5 * eta(u)};
    case Symmetry::SOodd:
      return {1.0, 1.0 - 0.5 * eta(u)};
    case Symmetry::O:
      return {1.0, 0.5};
    case Symmetry::Sp:
      return {1.0, -0.5 * eta(u)};
    case Symmetry::U:
      return {1.0, 0.0};
  }
  return {};
}

DensityValue density_one_point(Symmetry g, double x) {
  const double k2 = sinc_pi(2.0 * x);  // sin(2 pi x)/(2 pi x)
  switch (g) {
    case Symmetry::SOeven:
      return {0.0, 1.0 + k2};
    case Symmetry::SOodd:
      return {1.0, 1.0 - k2};
    case Symmetry::O:
      return {0.5, 1.0};
    case Symmetry::Sp:
      return {0.0, 1.0 - k2};
    case Symmetry::U:
      return {0.0, 1.0};
  }
  return {};
}

double one_level_prediction(Symmetry g, const TestFunction& phi, double rank) {
  if (phi.sigma() >= 1.0) {
    throw UnsupportedError("one_level_prediction: needs supp(phi_hat) inside (-1, 1)");
  }
  const double base = phi.phi_hat0() + rank * phi.phi0();
  return base - 0.5 * symmetry_constant(g) * phi.phi0();
}

double two_level_prediction(Symmetry g, const TestFunction& f1, const TestFunction& f2) {
  const auto sign = orthogonal_sign(g);
  if (!sign) throw DomainError("two_level_prediction: needs an orthogonal group");
  if (f1.sigma() + f2.sigma() > 1.0) {
    throw UnsupportedError("two_level_prediction: needs sigma1 + sigma2 <= 1");
  }
  const double s = std::min(f1.sigma(), f2.sigma());
  const double weighted =
      2.0 * integrate([&](double u) { return u * f1.phi_hat(u) * f2.phi_hat(u); }, 0.0, s);
  // int f1 f2 dx by Parseval on the compact Fourier side.
  const double product_hat0 =
      2.0 * integrate([&](double u) { return f1.phi_hat(u) * f2.phi_hat(u); }, 0.0, s);
  const double a = f1.phi_hat0() + 0.5 * f1.phi0();
  const double b = f2.phi_hat0() + 0.5 * f2.phi0();
  const double p0 = f1.phi0() * f2.phi0();
  return a * b + 2.0 * weighted - 2.0 * product_hat0 - p0 + *sign * p0;
}

double one_level_quadrature_x(Symmetry g, const TestFunction& phi) {
  const double x_max = 4000.0;
  auto integrand = [&](double x) { return phi.phi(x) * density_one_point(g, x).regular; };
  const double body = 2.0 * integrate_panels(integrand, x_max, 0.25);
  // For large x the regular part of W_1 tends to 1.
  const double tail = 2.0 * phi.tail_mass(x_max);
  return body + tail + density_one_point(g, 0.0).delta_coeff * phi.phi0();
}

double one_level_quadrature_u(Symmetry g, const TestFunction& phi) {
  auto integrand = [&](double u) { return phi.phi_hat(u) * fourier_density(g, u).regular; };
  const double s = phi.sigma();
  double regular = 0.0;
  if (s <= 1.0) {
    regular = 2.0 * integrate(integrand, 0.0, s);
  } else {
    regular = 2.0 * (integrate(integrand, 0.0, 1.0) + integrate(integrand, 1.0, s));
  }
  return fourier_density(g, 0.0).delta_coeff * phi.phi_hat(0.0) + regular;
}

}  // namespace lfam::rmt

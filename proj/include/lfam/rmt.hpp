#pragma once

// Random-matrix 1- and 2-level density predictions for the classical compact
// groups, and the band-limited test functions they are paired with.

#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace lfam::rmt {

// An even test function phi with supp(phi_hat) in (-sigma, sigma), using the
// transform phi_hat(u) = int phi(x) exp(-2 pi i x u) dx.
class TestFunction {
 public:
  using Fn = std::function<double(double)>;

  TestFunction(std::string name, double sigma, Fn phi, Fn phi_hat, double phi0, double phi_hat0,
               Fn tail_mass = {});

  const std::string& name() const { return name_; }
  double sigma() const { return sigma_; }
  double phi(double x) const { return phi_(x); }
  // Zero outside (-sigma, sigma).
  double phi_hat(double u) const;
  double phi0() const { return phi0_; }
  double phi_hat0() const { return phi_hat0_; }
  // int_X^inf phi(x) dx for large X (0 when not provided).
  double tail_mass(double x) const { return tail_ ? tail_(x) : 0.0; }

 private:
  std::string name_;
  double sigma_;
  Fn phi_;
  Fn phi_hat_;
  double phi0_;
  double phi_hat0_;
  Fn tail_;
};

// phi_hat(u) = (1 - |u|/sigma)^+, phi(x) = sigma (sin(pi sigma x)/(pi sigma x))^2.
TestFunction fejer_test_function(double sigma);

// The square of the Fejer function of support sigma/2: phi_hat is the
// self-convolution of the Fejer triangle and is supported in (-sigma, sigma).
TestFunction fejer_squared_test_function(double sigma);

// phi = 0 with the given nominal support.
TestFunction zero_test_function(double sigma);

// Numeric check: 2 int_0^sigma phi_hat(u) cos(2 pi u x) du.
double inverse_transform(const TestFunction& f, double x);

enum class Symmetry { U, Sp, O, SOeven, SOodd };

inline constexpr Symmetry kAllSymmetries[] = {Symmetry::U, Symmetry::Sp, Symmetry::O,
                                              Symmetry::SOeven, Symmetry::SOodd};

std::string to_string(Symmetry g);
Symmetry symmetry_from_string(const std::string& name);
bool is_orthogonal(Symmetry g);
// sign(G) = 0, 1/2, 1 for SO(even), O, SO(odd); empty otherwise.
std::optional<double> orthogonal_sign(Symmetry g);
// +1 symplectic, 0 unitary, -1 orthogonal.
int symmetry_constant(Symmetry g);

double eta(double u);

// Coefficient of delta(u) and the regular part of the Fourier transform of W_1.
struct DensityValue {
  double delta_coeff = 0.0;
  double regular = 0.0;
};

DensityValue fourier_density(Symmetry g, double u);
// W_1(x) as (coefficient of delta(x), regular value).
DensityValue density_one_point(Symmetry g, double x);

// int phi_hat W_1_hat, read at the evaluation point 0, plus r phi(0) for rank r.
// Requires sigma < 1.
double one_level_prediction(Symmetry g, const TestFunction& phi, double rank = 0.0);

// 2-level prediction for the orthogonal groups; sigma1 + sigma2 <= 1.
double two_level_prediction(Symmetry g, const TestFunction& f1, const TestFunction& f2);

// Quadrature of int phi(x) W_1(x) dx over the real line, delta atom included.
double one_level_quadrature_x(Symmetry g, const TestFunction& phi);
// Quadrature of int phi_hat(u) W_1_hat(u) du, delta atom included.
double one_level_quadrature_u(Symmetry g, const TestFunction& phi);

}  // namespace lfam::rmt

#pragma once

// Dispersion relation omega(k) = omega_R(k) + i omega_I(k) and the group
// velocity nu = omega_R'.

#include <functional>
#include <optional>
#include <vector>

namespace wnear {

/// Polynomial with coefficients in ascending powers.
struct Polynomial {
  std::vector<double> coeffs;

  double operator()(double x) const;
  Polynomial derivative() const;
  /// Degree ignoring trailing zero coefficients; -1 for the zero polynomial.
  int degree() const;
};

struct DispersionRelation {
  std::function<double(double)> omega_R;
  std::function<double(double)> omega_I;
  std::function<double(double)> nu;

  // Set when built from polynomials; nu is then omega_R'.
  std::optional<Polynomial> omega_R_poly;
  std::optional<Polynomial> omega_I_poly;

  static DispersionRelation from_polynomials(Polynomial omega_R, Polynomial omega_I = {});
  /// Callable form; the caller is responsible for nu = omega_R'.
  static DispersionRelation from_functions(std::function<double(double)> omega_R,
                                           std::function<double(double)> omega_I,
                                           std::function<double(double)> nu);
};

}  // namespace wnear

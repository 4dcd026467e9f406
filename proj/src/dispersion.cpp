#include "wnear/dispersion.hpp"

namespace wnear {

double Polynomial::operator()(double x) const {
  double v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  for (std::size_t i = 1; i < coeffs.size(); ++i) d.coeffs.push_back(static_cast<double>(i) * coeffs[i]);
  return d;
}

int Polynomial::degree() const {
  for (std::size_t i = coeffs.size(); i > 0; --i)
    if (coeffs[i - 1] != 0.0) return static_cast<int>(i - 1);
  return -1;
}

DispersionRelation DispersionRelation::from_polynomials(Polynomial omega_R, Polynomial omega_I) {
  DispersionRelation d;
  Polynomial nu = omega_R.derivative();
  d.omega_R = [omega_R](double k) { return omega_R(k); };
  d.omega_I = [omega_I](double k) { return omega_I(k); };
  d.nu = [nu](double k) { return nu(k); };
  d.omega_R_poly = std::move(omega_R);
  d.omega_I_poly = std::move(omega_I);
  return d;
}

DispersionRelation DispersionRelation::from_functions(std::function<double(double)> omega_R,
                                                      std::function<double(double)> omega_I,
                                                      std::function<double(double)> nu) {
  DispersionRelation d;
  d.omega_R = std::move(omega_R);
  d.omega_I = std::move(omega_I);
  d.nu = std::move(nu);
  return d;
}

}  // namespace wnear

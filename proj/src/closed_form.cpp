#include "spinbell/closed_form.hpp"

#include <cmath>

namespace spinbell::closed_form {

namespace {

double cos2_half(double t) {
  const double c = std::cos(t / 2.0);
  return c * c;
}

double sin2_half(double t) {
  const double s = std::sin(t / 2.0);
  return s * s;
}

}  // namespace

double spin_local_antiparallel(const Direction& a, const Direction& b) {
  return -std::cos(a.theta()) * std::cos(b.theta());
}

double spin_local_parallel(const Direction& a, const Direction& b) {
  return std::cos(a.theta()) * std::cos(b.theta());
}

double spin_nonlocal_parallel(double xi, double eta, const Direction& a, const Direction& b) {
  return 2.0 * std::sin(xi) * std::cos(xi) * std::sin(a.theta()) * std::sin(b.theta()) *
         std::cos(a.phi() + b.phi() + 2.0 * eta);
}

double spin_nonlocal_antiparallel(double xi, double eta, const Direction& a, const Direction& b) {
  return 2.0 * std::sin(xi) * std::cos(xi) * std::sin(a.theta()) * std::sin(b.theta()) *
         std::cos(a.phi() - b.phi() + 2.0 * eta);
}

double number_local_pp(double xi, const Direction& a, const Direction& b) {
  const double s = std::sin(xi);
  const double c = std::cos(xi);
  return s * s * cos2_half(a.theta()) * sin2_half(b.theta()) +
         c * c * sin2_half(a.theta()) * cos2_half(b.theta());
}

double number_local_mm(double xi, const Direction& a, const Direction& b) {
  const double s = std::sin(xi);
  const double c = std::cos(xi);
  return s * s * sin2_half(a.theta()) * cos2_half(b.theta()) +
         c * c * cos2_half(a.theta()) * sin2_half(b.theta());
}

double number_nonlocal_antiparallel(double xi, double eta, const Direction& a,
                                    const Direction& b) {
  return 0.5 * std::sin(xi) * std::cos(xi) * std::sin(a.theta()) * std::sin(b.theta()) *
         std::cos(a.phi() - b.phi() + 2.0 * eta);
}

double number_nonlocal_parallel(double xi, double eta, const Direction& a, const Direction& b) {
  return -0.5 * std::sin(xi) * std::cos(xi) * std::sin(a.theta()) * std::sin(b.theta()) *
         std::cos(a.phi() + b.phi() + 2.0 * eta);
}

double wigner_local(double theta_a, double theta_b, double theta_c) {
  return -(cos2_half(theta_a) - cos2_half(theta_c)) * cos2_half(theta_b) -
         cos2_half(theta_c) * sin2_half(theta_a);
}

double wigner_local_cosines(double theta_a, double theta_b, double theta_c) {
  const double ca = std::cos(theta_a);
  const double cb = std::cos(theta_b);
  const double cc = std::cos(theta_c);
  return 0.25 * (-1.0 - ca * cb + cc * cb + ca * cc);
}

double wigner_local_chain_term(double theta_a, double theta_c) {
  return -sin2_half(theta_c) * cos2_half(theta_a);
}

double wigner_nonlocal_antiparallel(double xi, double eta, const Direction& a,
                                    const Direction& b, const Direction& c) {
  const double sa = std::sin(a.theta());
  const double sb = std::sin(b.theta());
  const double sc = std::sin(c.theta());
  return 0.25 * std::sin(2.0 * xi) *
         (sa * sb * std::cos(a.phi() - b.phi() + 2.0 * eta) -
          sa * sc * std::cos(a.phi() - c.phi() + 2.0 * eta) -
          sc * sb * std::cos(c.phi() - b.phi() + 2.0 * eta));
}

double wigner_nonlocal_parallel(double xi, double eta, const Direction& a, const Direction& b,
                                const Direction& c) {
  const double sa = std::sin(a.theta());
  const double sb = std::sin(b.theta());
  const double sc = std::sin(c.theta());
  return -0.25 * std::sin(2.0 * xi) *
         (sa * sb * std::cos(a.phi() + b.phi() + 2.0 * eta) -
          sa * sc * std::cos(a.phi() + c.phi() + 2.0 * eta) -
          sc * sb * std::cos(c.phi() + b.phi() + 2.0 * eta));
}

}  // namespace spinbell::closed_form

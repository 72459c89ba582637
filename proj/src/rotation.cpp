#include "fourvec/rotation.hpp"

#include <cmath>
#include <string>

namespace fourvec {

namespace {

void check_axis(const Eigen::Vector3d& axis, double eps) {
  if (!(std::abs(axis.norm() - 1.0) <= eps)) {
    throw DomainError(ErrorKind::BadAxis,
                      "axis length " + std::to_string(axis.norm()));
  }
}

void check_pure(const Fourvectorcd& v, double eps, const char* what) {
  if (!is_pure(v, eps)) {
    throw DomainError(ErrorKind::NotPure, std::string(what) +
                                              " has a nonzero scalar part");
  }
}

}  // namespace

Rotor::Rotor(const Fourvectorcd& value, double eps) : value_(value) {
  const Complex n = norm(value);
  if (!(std::abs(n - 1.0) <= eps)) {
    throw DomainError(ErrorKind::NotRotor, "|norm - 1| = " +
                                               std::to_string(std::abs(n - 1.0)));
  }
}

BoostParameters BoostParameters::from_beta(double beta) {
  if (!(std::abs(beta) < 1.0)) {
    throw DomainError(ErrorKind::BadParameter, "beta must lie in (-1, 1)");
  }
  return {beta, 1.0 / std::sqrt(1.0 - beta * beta)};
}

BoostParameters BoostParameters::from_gamma(double gamma) {
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw DomainError(ErrorKind::BadParameter, "gamma must be >= 1");
  }
  return {std::sqrt(1.0 - 1.0 / (gamma * gamma)), gamma};
}

Fourvectorcd IntervalElement::materialize() const {
  return Fourvectorcd(Complex(dt, 0.0), Complex(0.0, dx), Complex(0.0, dy),
                      Complex(0.0, dz));
}

Rotor rotor_from_axis_angle(const AxisAngle& aa, double eps) {
  check_axis(aa.axis, eps);
  const double c = std::cos(aa.angle / 2.0);
  const double s = std::sin(aa.angle / 2.0);
  return Rotor(Fourvectorcd(c, aa.axis.x() * s, aa.axis.y() * s,
                            aa.axis.z() * s),
               eps);
}

Fourvectorcd rotate(const Fourvectorcd& v, const Rotor& r) {
  const Fourvectorcd& q = r.value();
  return product(q, product(conjugate(v), q));
}

Fourvectorcd rotate(const Fourvectorcd& v, const Fourvectorcd& r, double eps) {
  return rotate(v, Rotor(r, eps));
}

Fourvectorcd double_rotate(const Fourvectorcd& a, const Rotor& r) {
  const Fourvectorcd& q = r.value();
  return product(q, product(product(q, product(a, q)), q));
}

// rotate(V, r) is the Hamilton sandwich r V conj(r), so consecutive rotations
// compose through the (associative) Hamilton product.
Rotor compose_rotors(const Rotor& second, const Rotor& first) {
  return Rotor(hamilton_product(second.value(), first.value()));
}

Eigen::Vector3d euler_rodrigues(const Eigen::Vector3d& u, const AxisAngle& aa,
                                double eps) {
  check_axis(aa.axis, eps);
  const Eigen::Vector3d& n = aa.axis;
  const double c = std::cos(aa.angle);
  const double s = std::sin(aa.angle);
  return u * c + n * n.dot(u) * (1.0 - c) + n.cross(u) * s;
}

Rotor trig_rotor(double alpha) {
  return Rotor(Fourvectorcd(std::cos(alpha / 2.0), std::sin(alpha / 2.0), 0.0,
                            0.0));
}

Rotor hyperbolic_rotor(double alpha) {
  return Rotor(Fourvectorcd(std::cosh(alpha / 2.0),
                            Complex(0.0, std::sinh(alpha / 2.0)), 0.0, 0.0));
}

Rotor boost_rotor(const BoostParameters& params) {
  if (!(params.gamma >= 1.0)) {
    throw DomainError(ErrorKind::BadParameter, "gamma must be >= 1");
  }
  const double sign = params.beta < 0.0 ? -1.0 : 1.0;
  const double half_cosh = std::sqrt((params.gamma + 1.0) / 2.0);
  const double half_sinh = std::sqrt((params.gamma - 1.0) / 2.0);
  return Rotor(Fourvectorcd(half_cosh, Complex(0.0, sign * half_sinh), 0.0,
                            0.0));
}

Rotor boost_rotor_gamma(double gamma) {
  return boost_rotor(BoostParameters::from_gamma(gamma));
}

Rotor boost_rotor(BoostKind kind, double param) {
  switch (kind) {
    case BoostKind::Trig: return trig_rotor(param);
    case BoostKind::Hyper: return hyperbolic_rotor(param);
    case BoostKind::Gamma: return boost_rotor_gamma(param);
  }
  throw DomainError(ErrorKind::BadParameter, "unknown boost kind");
}

Complex interval(const IntervalElement& ds) {
  return interval(ds.materialize());
}

Complex interval(const Fourvectorcd& materialized) { return norm(materialized); }

Fourvectorcd reflect(const Fourvectorcd& x, const Fourvectorcd& a, double eps) {
  check_pure(x, eps, "reflected vector");
  check_pure(a, eps, "plane normal");
  if (!(std::abs(norm(a) - 1.0) <= eps)) {
    throw DomainError(ErrorKind::NotUnitNormal, "plane normal is not unit");
  }
  return product(a, product(x, a));
}

Fourvectorcd reflect_chain(const Fourvectorcd& x,
                           std::span<const Fourvectorcd> normals, double eps) {
  if (normals.empty()) {
    throw DomainError(ErrorKind::EmptyChain, "no mirrors given");
  }
  Fourvectorcd out = x;
  for (const Fourvectorcd& a : normals) out = reflect(out, a, eps);
  return out;
}

}  // namespace fourvec

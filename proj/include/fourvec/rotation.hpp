#pragma once

#include <Eigen/Core>

#include <span>

#include "fourvec/fourvector.hpp"

namespace fourvec {

/// A unit-norm fourvector used as a rotation operator. The norm may be
/// complex-valued but must equal 1 within the construction tolerance.
class Rotor {
 public:
  /// Throws DomainError(NotRotor) when |norm(value) - 1| > eps.
  explicit Rotor(const Fourvectorcd& value, double eps = kDefaultTolerance);

  static Rotor Identity() { return Rotor(Fourvectorcd::Identity()); }

  const Fourvectorcd& value() const { return value_; }

 private:
  Fourvectorcd value_;
};

struct AxisAngle {
  Eigen::Vector3d axis;  // unit length
  double angle;          // radians
};

/// Velocity ratio beta in (-1, 1) and gamma = 1 / sqrt(1 - beta^2).
struct BoostParameters {
  double beta;
  double gamma;

  static BoostParameters from_beta(double beta);
  /// Non-negative beta branch.
  static BoostParameters from_gamma(double gamma);
};

/// Interval differentials; c is absorbed into dt.
struct IntervalElement {
  double dt = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;

  /// (dt, i dx, i dy, i dz)
  Fourvectorcd materialize() const;
};

enum class BoostKind { Trig, Hyper, Gamma };

/// (cos(theta/2), n sin(theta/2)). Throws BadAxis unless |n| = 1 within eps.
Rotor rotor_from_axis_angle(const AxisAngle& aa,
                            double eps = kDefaultTolerance);

/// V' = r ** (conj(V) ** r). Real axis-angle rotors turn the vector part
/// through the angle about the axis and leave the scalar part unchanged.
Fourvectorcd rotate(const Fourvectorcd& v, const Rotor& r);

/// Validating overload; throws NotRotor for a non-unit r.
Fourvectorcd rotate(const Fourvectorcd& v, const Fourvectorcd& r,
                    double eps = kDefaultTolerance);

/// r ** ((r ** (a ** r)) ** r): for a rotor of angle theta this turns a
/// through 2 theta.
Fourvectorcd double_rotate(const Fourvectorcd& a, const Rotor& r);

/// Rotor equivalent to applying `first` then `second`.
Rotor compose_rotors(const Rotor& second, const Rotor& first);

/// v = u cos(theta) + n (n . u)(1 - cos(theta)) + (n x u) sin(theta)
Eigen::Vector3d euler_rodrigues(const Eigen::Vector3d& u, const AxisAngle& aa,
                                double eps = kDefaultTolerance);

/// q1 = (cos(alpha/2), sin(alpha/2), 0, 0)
Rotor trig_rotor(double alpha);
/// q2 = (cosh(alpha/2), i sinh(alpha/2), 0, 0)
Rotor hyperbolic_rotor(double alpha);
/// q3 = (sqrt((gamma+1)/2), i sgn(beta) sqrt((gamma-1)/2), 0, 0)
Rotor boost_rotor(const BoostParameters& params);
/// q3 for a bare gamma >= 1 (positive branch). Throws BadParameter.
Rotor boost_rotor_gamma(double gamma);
/// Dispatch on kind: alpha for Trig/Hyper, gamma for Gamma.
Rotor boost_rotor(BoostKind kind, double param);

/// c^2 dt^2 - dx^2 - dy^2 - dz^2, the norm of the materialized element.
Complex interval(const IntervalElement& ds);
Complex interval(const Fourvectorcd& materialized);

/// Mirror image of pure x in the plane with pure unit normal a: a ** (x ** a).
Fourvectorcd reflect(const Fourvectorcd& x, const Fourvectorcd& a,
                     double eps = kDefaultTolerance);

/// Successive reflections off the planes with normals a1, a2, ..., an.
Fourvectorcd reflect_chain(const Fourvectorcd& x,
                           std::span<const Fourvectorcd> normals,
                           double eps = kDefaultTolerance);

}  // namespace fourvec

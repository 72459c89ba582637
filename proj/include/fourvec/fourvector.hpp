#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <complex>
#include <type_traits>

#include "fourvec/errors.hpp"
#include "fourvec/tolerance.hpp"

namespace fourvec {

namespace internal {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

}  // namespace internal

/// A fourvector e*t + i*x + j*y + k*z over an arbitrary scalar field.
///
/// The coefficients are held in the fixed order (t, x, y, z). Instances are
/// immutable values; every algebraic operation below returns a new one.
template <typename Scalar_>
class Fourvector {
 public:
  using Scalar = Scalar_;
  using Coefficients = Eigen::Matrix<Scalar, 4, 1>;
  using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

  Fourvector() : Fourvector(Scalar(0), Scalar(0), Scalar(0), Scalar(0)) {}

  Fourvector(const Scalar& t, const Scalar& x, const Scalar& y,
             const Scalar& z) {
    coeffs_ << t, x, y, z;
  }

  explicit Fourvector(const Coefficients& coeffs) : coeffs_(coeffs) {}

  Fourvector(const Scalar& t, const Vector3& v)
      : Fourvector(t, v[0], v[1], v[2]) {}

  static Fourvector Zero() { return Fourvector(); }

  /// The left identity (1, 0, 0, 0).
  static Fourvector Identity() {
    return Fourvector(Scalar(1), Scalar(0), Scalar(0), Scalar(0));
  }

  /// Basis element by index: 0=e, 1=i, 2=j, 3=k.
  static Fourvector Unit(Eigen::Index index) {
    Coefficients c = Coefficients::Constant(Scalar(0));
    c[index] = Scalar(1);
    return Fourvector(c);
  }

  const Scalar& t() const { return coeffs_[0]; }
  const Scalar& x() const { return coeffs_[1]; }
  const Scalar& y() const { return coeffs_[2]; }
  const Scalar& z() const { return coeffs_[3]; }
  const Scalar& operator[](Eigen::Index i) const { return coeffs_[i]; }

  const Coefficients& coeffs() const { return coeffs_; }
  Vector3 vec() const { return coeffs_.template tail<3>(); }

  template <typename NewScalar>
  Fourvector<NewScalar> cast() const {
    return Fourvector<NewScalar>(coeffs_.template cast<NewScalar>());
  }

  friend Fourvector operator+(const Fourvector& a, const Fourvector& b) {
    return Fourvector(a.t() + b.t(), a.x() + b.x(), a.y() + b.y(),
                      a.z() + b.z());
  }
  friend Fourvector operator-(const Fourvector& a, const Fourvector& b) {
    return Fourvector(a.t() - b.t(), a.x() - b.x(), a.y() - b.y(),
                      a.z() - b.z());
  }
  friend Fourvector operator-(const Fourvector& a) {
    return Fourvector(-a.t(), -a.x(), -a.y(), -a.z());
  }

  /// Exact componentwise equality. Use is_approx for floating scalars.
  friend bool operator==(const Fourvector& a, const Fourvector& b) {
    return a.t() == b.t() && a.x() == b.x() && a.y() == b.y() &&
           a.z() == b.z();
  }

 private:
  Coefficients coeffs_;
};

using Fourvectord = Fourvector<double>;
using Fourvectorcd = Fourvector<std::complex<double>>;

template <typename Scalar>
struct ScalarVectorParts {
  Fourvector<Scalar> scalar_part;
  Fourvector<Scalar> vector_part;
};

template <typename Scalar>
Fourvector<Scalar> add(const Fourvector<Scalar>& a,
                       const Fourvector<Scalar>& b) {
  return a + b;
}

template <typename Scalar>
Fourvector<Scalar> sub(const Fourvector<Scalar>& a,
                       const Fourvector<Scalar>& b) {
  return a - b;
}

/// (t, -x, -y, -z)
template <typename Scalar>
Fourvector<Scalar> conjugate(const Fourvector<Scalar>& a) {
  return Fourvector<Scalar>(a.t(), -a.x(), -a.y(), -a.z());
}

/// Negates the imaginary part of every component. Identity on real scalars.
template <typename Scalar>
Fourvector<Scalar> complex_conjugate(const Fourvector<Scalar>& a) {
  if constexpr (internal::is_complex<Scalar>::value) {
    return Fourvector<Scalar>(std::conj(a.t()), std::conj(a.x()),
                              std::conj(a.y()), std::conj(a.z()));
  } else {
    return a;
  }
}

template <typename Scalar>
ScalarVectorParts<Scalar> split(const Fourvector<Scalar>& a) {
  const Scalar zero(0);
  return {Fourvector<Scalar>(a.t(), zero, zero, zero),
          Fourvector<Scalar>(zero, a.x(), a.y(), a.z())};
}

/// The fourvector product A ** B, expanded from the basis rules
///   e^2 = i^2 = j^2 = k^2 = e,  e i = -i e = i,  i j = -j i = k,  ...
/// In compact form: (ab + a.b, a b_vec - a_vec b + a x b).
/// Neither commutative nor associative.
template <typename Scalar>
Fourvector<Scalar> product(const Fourvector<Scalar>& a,
                           const Fourvector<Scalar>& b) {
  return Fourvector<Scalar>(
      a.t() * b.t() + a.x() * b.x() + a.y() * b.y() + a.z() * b.z(),
      a.t() * b.x() - a.x() * b.t() + a.y() * b.z() - a.z() * b.y(),
      a.t() * b.y() - a.x() * b.z() - a.y() * b.t() + a.z() * b.x(),
      a.t() * b.z() + a.x() * b.y() - a.y() * b.x() - a.z() * b.t());
}

/// The classical (associative) quaternion product, i^2 = j^2 = k^2 = ijk = -1.
template <typename Scalar>
Fourvector<Scalar> hamilton_product(const Fourvector<Scalar>& a,
                                    const Fourvector<Scalar>& b) {
  return Fourvector<Scalar>(
      a.t() * b.t() - a.x() * b.x() - a.y() * b.y() - a.z() * b.z(),
      a.t() * b.x() + a.x() * b.t() + a.y() * b.z() - a.z() * b.y(),
      a.t() * b.y() - a.x() * b.z() + a.y() * b.t() + a.z() * b.x(),
      a.t() * b.z() + a.x() * b.y() - a.y() * b.x() + a.z() * b.t());
}

/// Sum of the (non-conjugated) squares of the components. Complex-valued for
/// complex fourvectors; equals the scalar part of product(a, a).
template <typename Scalar>
Scalar norm(const Fourvector<Scalar>& a) {
  return a.t() * a.t() + a.x() * a.x() + a.y() * a.y() + a.z() * a.z();
}

template <typename Scalar>
Fourvector<Scalar> scalar_mul(const Scalar& c, const Fourvector<Scalar>& a) {
  return Fourvector<Scalar>(c * a.t(), c * a.x(), c * a.y(), c * a.z());
}

/// Componentwise a / c.
template <typename Scalar>
Fourvector<Scalar> divide_by(const Fourvector<Scalar>& a, const Scalar& c) {
  return Fourvector<Scalar>(a.t() / c, a.x() / c, a.y() / c, a.z() / c);
}

/// (A**B - B**A) / 2. Zero scalar part; vector part of A**B.
template <typename Scalar>
Fourvector<Scalar> commutator(const Fourvector<Scalar>& a,
                              const Fourvector<Scalar>& b) {
  const Fourvector<Scalar> d = product(a, b) - product(b, a);
  return divide_by(d, Scalar(2));
}

/// (A**B + B**A) / 2. Zero vector part; scalar part of A**B.
template <typename Scalar>
Fourvector<Scalar> anticommutator(const Fourvector<Scalar>& a,
                                  const Fourvector<Scalar>& b) {
  const Fourvector<Scalar> s = product(a, b) + product(b, a);
  return divide_by(s, Scalar(2));
}

/// Largest componentwise relative difference between two fourvectors.
template <typename Scalar>
double residual(const Fourvector<Scalar>& a, const Fourvector<Scalar>& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    worst = std::max(worst, relative_difference(a[i], b[i]));
  }
  return worst;
}

template <typename Scalar>
bool is_approx(const Fourvector<Scalar>& a, const Fourvector<Scalar>& b,
               double eps = kDefaultTolerance) {
  return residual(a, b) <= eps;
}

template <typename Scalar>
bool is_pure(const Fourvector<Scalar>& a, double eps = kDefaultTolerance) {
  using std::abs;
  return double(abs(a.t())) <= eps;
}

template <typename Scalar>
bool is_zero_norm(const Fourvector<Scalar>& a) {
  using std::abs;
  double magnitude2 = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    const double m = double(abs(a[i]));
    magnitude2 += m * m;
  }
  return double(abs(norm(a))) <= kZeroNormThreshold * std::max(1.0, magnitude2);
}

/// A / norm(A), so that A ** A^-1 = A^-1 ** A = (1, 0, 0, 0).
template <typename Scalar>
Fourvector<Scalar> inverse(const Fourvector<Scalar>& a) {
  if (is_zero_norm(a)) {
    throw DomainError(ErrorKind::ZeroNorm, "fourvector has no inverse");
  }
  return divide_by(a, norm(a));
}

/// A divided by the principal square root of its norm.
template <typename Scalar>
Fourvector<Scalar> normalize(const Fourvector<Scalar>& a) {
  if (is_zero_norm(a)) {
    throw DomainError(ErrorKind::ZeroNorm, "cannot normalize");
  }
  using std::sqrt;
  return divide_by(a, sqrt(norm(a)));
}

/// Matrix P with P * q == product(p, q) for every column q.
/// Satisfies P * P^T == norm(p) * I (plain transpose, no conjugation).
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> product_matrix(const Fourvector<Scalar>& p) {
  const Scalar& p0 = p.t();
  const Scalar& p1 = p.x();
  const Scalar& p2 = p.y();
  const Scalar& p3 = p.z();
  Eigen::Matrix<Scalar, 4, 4> m;
  m << p0, p1, p2, p3,
      -p1, p0, -p3, p2,
      -p2, p3, p0, -p1,
      -p3, -p2, p1, p0;
  return m;
}

template <typename Scalar>
Fourvector<Scalar> apply(const Eigen::Matrix<Scalar, 4, 4>& m,
                         const Fourvector<Scalar>& q) {
  return Fourvector<Scalar>(Eigen::Matrix<Scalar, 4, 1>(m * q.coeffs()));
}

/// a ** (b ** c) for pure a, b, c written with dot and cross products:
///   (a . (b x c),  a x (b x c) - a (b . c)).
/// The scalar part is the signed volume spanned by a, b, c.
template <typename Scalar>
Fourvector<Scalar> triple_pure_product(const Fourvector<Scalar>& a,
                                       const Fourvector<Scalar>& b,
                                       const Fourvector<Scalar>& c,
                                       double eps = kDefaultTolerance) {
  if (!is_pure(a, eps) || !is_pure(b, eps) || !is_pure(c, eps)) {
    throw DomainError(ErrorKind::NotPure,
                      "triple product needs zero scalar components");
  }
  using Vector3 = typename Fourvector<Scalar>::Vector3;
  const Vector3 av = a.vec();
  const Vector3 bv = b.vec();
  const Vector3 cv = c.vec();
  const Vector3 bxc = bv.cross(cv);
  // Bilinear dot products; Eigen's dot() would conjugate complex operands.
  const Scalar volume = av.cwiseProduct(bxc).sum();
  const Scalar bc = bv.cwiseProduct(cv).sum();
  return Fourvector<Scalar>(volume, Vector3(av.cross(bxc) - av * bc));
}

}  // namespace fourvec

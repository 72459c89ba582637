#include "fourvec/factor.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace fourvec {

namespace {

using Row4 = Eigen::Matrix<Complex, 1, 4>;
using Vec4 = Eigen::Matrix<Complex, 4, 1>;

// Bilinear (non-conjugating) dot product.
Complex bdot(const Vec4& a, const Vec4& b) { return a.cwiseProduct(b).sum(); }

// -1, 0, +1 with values inside the tolerance treated as equal.
int compare(double a, double b) {
  if (approx_equal(a, b)) return 0;
  return a < b ? -1 : 1;
}

Vec4 point_on_line(const Vec4& base, const Vec4& dir, Complex s) {
  return base + s * dir;
}

}  // namespace

// (P ** Q) / norm(Q) rather than P ** (Q / norm(Q)): one rounding per
// component instead of two.
Fourvectorcd divide(const Fourvectorcd& p, const Fourvectorcd& q) {
  if (is_zero_norm(q)) {
    throw DomainError(ErrorKind::ZeroNorm, "divisor has no inverse");
  }
  return divide_by(product(p, q), norm(q));
}

Fourvectorcd right_factor(const Fourvectorcd& a, const Fourvectorcd& b) {
  return product(inverse(conjugate(b)), a);
}

Fourvectorcd left_factor(const Fourvectorcd& a, const Fourvectorcd& b) {
  return hamilton_product(conjugate(a), inverse(b));
}

Fourvectorcd equivalent_left_rotor(const Fourvectorcd& p, const Rotor& r) {
  const Fourvectorcd& q = r.value();
  const Fourvectorcd p_inv = inverse(p);
  return hamilton_product(product(product(conjugate(p), q), q), p_inv);
}

bool lexicographic_less(const Fourvectorcd& a, const Fourvectorcd& b) {
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (int c = compare(a[i].real(), b[i].real()); c != 0) return c < 0;
    if (int c = compare(a[i].imag(), b[i].imag()); c != 0) return c < 0;
  }
  return false;
}

QuadraticSolution solve_quadratic(Side side, const Fourvectorcd& c,
                                  const Fourvectorcd& k) {
  // product(C, q) == M q; product(q, C) == conj(M q). Either way the scalar
  // row is M.row(0) and the vector rows are +-M.bottomRows(3).
  const Eigen::Matrix<Complex, 4, 4> m = product_matrix(c);
  const Row4 scalar_row = m.row(0);
  Eigen::Matrix<Complex, 3, 4> linear = m.bottomRows<3>();
  if (side == Side::Right) linear = -linear;
  const Eigen::Matrix<Complex, 3, 1> rhs = k.vec();

  Eigen::FullPivLU<Eigen::Matrix<Complex, 3, 4>> lu(linear);
  lu.setThreshold(1e-12);
  const Vec4 base = lu.solve(rhs);
  const double scale = std::max(1.0, rhs.norm());
  if ((linear * base - rhs).norm() > 1e-9 * scale) {
    throw DomainError(ErrorKind::NoSolution,
                      "vector components are inconsistent");
  }

  QuadraticSolution out;
  if (lu.rank() < 3) {
    out.degenerate = true;
    return out;
  }
  const Vec4 dir = lu.kernel().col(0).normalized();

  // f(s) = norm(base + s dir) + scalar_row (base + s dir) - k_t
  const Complex qa = bdot(dir, dir);
  const Complex qb = 2.0 * bdot(base, dir) + (scalar_row * dir)(0);
  const Complex qc = bdot(base, base) + (scalar_row * base)(0) - k.t();

  std::vector<Complex> params;
  const double coeff_scale = std::max({1.0, std::abs(qb), std::abs(qc)});
  if (std::abs(qa) <= 1e-12 * coeff_scale) {
    if (std::abs(qb) <= 1e-12 * coeff_scale) {
      if (std::abs(qc) <= 1e-12 * coeff_scale) {
        out.degenerate = true;
        return out;
      }
      throw DomainError(ErrorKind::NoSolution,
                        "scalar equation has no root on the solution line");
    }
    params.push_back(-qc / qb);
  } else {
    // Cancellation-free quadratic formula on the principal square root.
    const Complex root = std::sqrt(qb * qb - 4.0 * qa * qc);
    const Complex w = (std::real(std::conj(qb) * root) >= 0.0)
                          ? -(qb + root) / 2.0
                          : -(qb - root) / 2.0;
    if (w == Complex(0.0)) {
      params.push_back(Complex(0.0));
    } else {
      params.push_back(w / qa);
      params.push_back(qc / w);
    }
  }

  for (const Complex& s : params) {
    const Fourvectorcd q(Vec4(point_on_line(base, dir, s)));
    const bool duplicate =
        std::any_of(out.solutions.begin(), out.solutions.end(),
                    [&](const Fourvectorcd& other) { return is_approx(q, other); });
    if (!duplicate) out.solutions.push_back(q);
  }
  std::sort(out.solutions.begin(), out.solutions.end(), lexicographic_less);
  return out;
}

}  // namespace fourvec

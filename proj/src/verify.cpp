#include "fourvec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include "fourvec/basis.hpp"
#include "fourvec/factor.hpp"
#include "fourvec/rotation.hpp"

namespace fourvec {

double Sampler::unit_interval() {
  return double(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::real() { return 2.0 * unit_interval() - 1.0; }

long long Sampler::integer() { return (long long)(engine_() % 19) - 9; }

Complex Sampler::complex() {
  const double re = real();
  return {re, real()};
}

double Sampler::angle() { return std::numbers::pi * real(); }

Fourvectorcd Sampler::complex_fourvector() {
  const Complex t = complex();
  const Complex x = complex();
  const Complex y = complex();
  return Fourvectorcd(t, x, y, complex());
}

Fourvectorcd Sampler::real_fourvector() {
  const double t = real();
  const double x = real();
  const double y = real();
  return Fourvectorcd(t, x, y, real());
}

Fourvector<long long> Sampler::integer_fourvector() {
  const long long t = integer();
  const long long x = integer();
  const long long y = integer();
  return Fourvector<long long>(t, x, y, integer());
}

Fourvectorcd Sampler::pure_real_fourvector() {
  const double x = real();
  const double y = real();
  return Fourvectorcd(0.0, x, y, real());
}

Fourvector<long long> Sampler::pure_integer_fourvector() {
  const long long x = integer();
  const long long y = integer();
  return Fourvector<long long>(0, x, y, integer());
}

Eigen::Vector3d Sampler::unit_axis() {
  for (;;) {
    const double x = real();
    const double y = real();
    const Eigen::Vector3d v(x, y, real());
    const double n = v.norm();
    if (n > 1e-3 && n <= 1.0) return v / n;
  }
}

bool VerifyReport::all_passed() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityResult& r) { return r.passed; });
}

const IdentityResult* VerifyReport::find(const std::string& name) const {
  for (const auto& r : identities) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

namespace {

using Fv = Fourvectorcd;
using Iv = Fourvector<long long>;

double exact_gap(const Iv& a, const Iv& b) {
  long long worst = 0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    worst = std::max(worst, std::llabs(a[i] - b[i]));
  }
  return double(worst);
}

double exact_gap(long long a, long long b) { return double(std::llabs(a - b)); }

Iv jacobi(const Iv& a, const Iv& b, const Iv& c) {
  return commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
         commutator(c, commutator(a, b));
}

Fv jacobi(const Fv& a, const Fv& b, const Fv& c) {
  return commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
         commutator(c, commutator(a, b));
}

// Unit rotor with possibly complex components.
Fv random_complex_rotor(Sampler& s) {
  for (;;) {
    const Fv v = s.complex_fourvector();
    if (std::abs(norm(v)) > 1e-2) return normalize(v);
  }
}

Fv random_invertible(Sampler& s) {
  for (;;) {
    const Fv v = s.complex_fourvector();
    if (std::abs(norm(v)) > 1e-3) return v;
  }
}

// Largest magnitude of a difference, relative to max(1, scale).
double scaled_gap(const Fv& a, const Fv& b, double scale) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst / std::max(1.0, scale);
}

class Runner {
 public:
  Runner(std::size_t samples, std::uint64_t seed, double tolerance)
      : samples_(samples), seed_(seed), tolerance_(tolerance) {}

  // Exact identity over `count` draws; body returns the absolute gap.
  void exact(const std::string& name, std::size_t count,
             const std::function<double(Sampler&)>& body) {
    Sampler s = next_sampler();
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) worst = worse(worst, body(s));
    push({name, IdentityKind::Exact, count, worst, worst == 0.0});
  }
  void exact_sampled(const std::string& name,
                     const std::function<double(Sampler&)>& body) {
    exact(name, samples_, body);
  }

  // Floating identity; body returns a relative residual.
  void tolerance(const std::string& name, std::size_t count,
                 const std::function<double(Sampler&)>& body) {
    Sampler s = next_sampler();
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) worst = worse(worst, body(s));
    push({name, IdentityKind::Tolerance, count, worst, worst <= tolerance_});
  }
  void tolerance_sampled(const std::string& name,
                         const std::function<double(Sampler&)>& body) {
    tolerance(name, samples_, body);
  }

  void witness(const std::string& name, double gap, double threshold) {
    push({name, IdentityKind::Witness, 1, gap, gap > threshold});
  }

  double tol() const { return tolerance_; }

  VerifyReport finish() && {
    VerifyReport report;
    report.seed = seed_;
    report.samples = samples_;
    report.tolerance = tolerance_;
    report.identities = std::move(results_);
    return report;
  }

 private:
  static double worse(double worst, double r) {
    if (std::isnan(r)) return std::numeric_limits<double>::infinity();
    return std::max(worst, r);
  }

  Sampler next_sampler() {
    ++index_;
    return Sampler(seed_ + 0x9E3779B97F4A7C15ull * index_);
  }

  void push(IdentityResult r) { results_.push_back(std::move(r)); }

  std::size_t samples_;
  std::uint64_t seed_;
  double tolerance_;
  std::uint64_t index_ = 0;
  std::vector<IdentityResult> results_;
};

void algebra_identities(Runner& run) {
  const Iv e = Iv::Unit(0), i = Iv::Unit(1), j = Iv::Unit(2), k = Iv::Unit(3);

  run.exact("basis_table", 1, [](Sampler&) {
    double gap = 0.0;
    for (int l = 0; l < 4; ++l) {
      for (int r = 0; r < 4; ++r) {
        gap = std::max(gap, exact_gap(product(Iv::Unit(l), Iv::Unit(r)),
                                      to_fourvector<long long>(
                                          basis_product(l, r))));
      }
    }
    return gap;
  });
  run.exact("bridge_basis", 1, [](Sampler&) {
    double gap = 0.0;
    for (int l = 0; l < 4; ++l) {
      for (int r = 0; r < 4; ++r) {
        const Iv a = Iv::Unit(l), b = Iv::Unit(r);
        gap = std::max(gap, exact_gap(product(a, b),
                                      hamilton_product(b, conjugate(a))));
      }
    }
    return gap;
  });
  run.exact("non_commutativity", 1, [&](Sampler&) {
    return std::max(exact_gap(product(i, j), k),
                    exact_gap(product(j, i), -k));
  });
  run.exact("non_associativity", 1, [&](Sampler&) {
    const Iv left_first = product(product(product(i, e), j), k);
    const Iv middle_first = product(product(i, product(e, j)), k);
    return std::max(exact_gap(left_first, -middle_first),
                    exact_gap(left_first, -e));
  });
  run.exact("tait", 1, [&](Sampler&) {
    const Iv expected(0, -1, 0, 0);
    return std::max(exact_gap(product(i, product(j, j)), expected),
                    exact_gap(product(product(i, j), j), expected));
  });
  run.exact_sampled("bridge_exact", [](Sampler& s) {
    const Iv a = s.integer_fourvector(), b = s.integer_fourvector();
    return exact_gap(product(a, b), hamilton_product(b, conjugate(a)));
  });
  run.exact_sampled("norm_multiplicativity_exact", [](Sampler& s) {
    const Iv p = s.integer_fourvector(), q = s.integer_fourvector();
    return std::max(exact_gap(norm(product(p, q)), norm(p) * norm(q)),
                    exact_gap(norm(product(q, p)), norm(p) * norm(q)));
  });
  run.exact_sampled("four_squares_exact", [](Sampler& s) {
    const Iv a = s.integer_fourvector(), b = s.integer_fourvector();
    const long long lhs = norm(a) * norm(b);
    const long long s0 = a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
    const long long s1 = a[0] * b[1] - a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
    const long long s2 = a[0] * b[2] - a[1] * b[3] - a[2] * b[0] + a[3] * b[1];
    const long long s3 = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] - a[3] * b[0];
    return exact_gap(lhs, s0 * s0 + s1 * s1 + s2 * s2 + s3 * s3);
  });
  run.exact_sampled("self_product_exact", [](Sampler& s) {
    const Iv a = s.integer_fourvector();
    return exact_gap(product(a, a), Iv(norm(a), 0, 0, 0));
  });
  run.exact_sampled("conjugate_reversal_exact", [](Sampler& s) {
    const Iv p = s.integer_fourvector(), q = s.integer_fourvector();
    return exact_gap(conjugate(product(p, q)), product(q, p));
  });
  run.exact_sampled("identity_left_right_exact", [](Sampler& s) {
    const Iv p = s.integer_fourvector();
    return std::max(exact_gap(product(Iv::Identity(), p), p),
                    exact_gap(product(p, Iv::Identity()), conjugate(p)));
  });
  run.exact_sampled("distributivity_exact", [](Sampler& s) {
    const Iv a = s.integer_fourvector(), b = s.integer_fourvector(),
             c = s.integer_fourvector();
    return std::max(
        exact_gap(product(a, b + c), product(a, b) + product(a, c)),
        exact_gap(product(a + b, c), product(a, c) + product(b, c)));
  });
  run.exact_sampled("squared_product_exact", [](Sampler& s) {
    const Iv a = s.integer_fourvector(), b = s.integer_fourvector();
    const Iv ab = product(a, b);
    return exact_gap(product(ab, ab), product(product(a, a), product(b, b)));
  });
  run.exact_sampled("complex_non_embedding_exact", [](Sampler& s) {
    const long long a = s.integer(), b = s.integer(), c = s.integer(),
                    d = s.integer();
    return exact_gap(product(Iv(a, b, 0, 0), Iv(c, d, 0, 0)),
                     Iv(a * c + b * d, a * d - b * c, 0, 0));
  });
  run.exact_sampled("commutator_split_exact", [](Sampler& s) {
    const Iv a = s.integer_fourvector(), b = s.integer_fourvector();
    const Iv c = commutator(a, b), ac = anticommutator(a, b);
    double gap = exact_gap(c + ac, product(a, b));
    gap = std::max(gap, exact_gap(c, -commutator(b, a)));
    gap = std::max(gap, double(std::llabs(c.t())));
    gap = std::max(gap, double(std::llabs(ac.x()) + std::llabs(ac.y()) +
                               std::llabs(ac.z())));
    return gap;
  });
  run.exact_sampled("jacobi_pure_exact", [](Sampler& s) {
    const Iv a = s.pure_integer_fourvector(), b = s.pure_integer_fourvector(),
             c = s.pure_integer_fourvector();
    return exact_gap(jacobi(a, b, c), Iv::Zero());
  });
  run.exact_sampled("product_matrix_exact", [](Sampler& s) {
    const Iv p = s.integer_fourvector(), q = s.integer_fourvector();
    const Eigen::Matrix<long long, 4, 4> m = product_matrix(p);
    const Eigen::Matrix<long long, 4, 4> mmt = m * m.transpose();
    const Eigen::Matrix<long long, 4, 4> expected =
        norm(p) * Eigen::Matrix<long long, 4, 4>::Identity();
    return std::max(exact_gap(apply(m, q), product(p, q)),
                    double((mmt - expected).cwiseAbs().maxCoeff()));
  });
  run.exact_sampled("triple_pure_exact", [](Sampler& s) {
    const Iv a = s.pure_integer_fourvector(), b = s.pure_integer_fourvector(),
             c = s.pure_integer_fourvector();
    return exact_gap(triple_pure_product(a, b, c), product(a, product(b, c)));
  });
  run.exact_sampled("scalar_mul_exact", [](Sampler& s) {
    const long long c = s.integer();
    const Iv a = s.integer_fourvector();
    return exact_gap(scalar_mul(c, a), product(Iv(c, 0, 0, 0), a));
  });

  run.tolerance_sampled("bridge", [](Sampler& s) {
    const Fv a = s.complex_fourvector(), b = s.complex_fourvector();
    return residual(product(a, b), hamilton_product(b, conjugate(a)));
  });
  run.tolerance_sampled("conjugate_reversal", [](Sampler& s) {
    const Fv p = s.complex_fourvector(), q = s.complex_fourvector(),
             r = s.complex_fourvector();
    return std::max(residual(conjugate(product(p, q)), product(q, p)),
                    residual(conjugate(product(p, product(q, r))),
                             product(r, product(conjugate(q), p))));
  });
  run.tolerance_sampled("self_product", [](Sampler& s) {
    const Fv a = s.complex_fourvector();
    return residual(product(a, a), Fv(norm(a), 0.0, 0.0, 0.0));
  });
  run.tolerance_sampled("identity_left_right", [](Sampler& s) {
    const Fv p = s.complex_fourvector();
    return std::max(residual(product(Fv::Identity(), p), p),
                    residual(product(p, Fv::Identity()), conjugate(p)));
  });
  run.tolerance_sampled("norm_multiplicativity", [](Sampler& s) {
    const Fv p = s.complex_fourvector(), q = s.complex_fourvector();
    return std::max({relative_difference(norm(product(p, q)), norm(p) * norm(q)),
                     relative_difference(norm(product(q, p)), norm(p) * norm(q)),
                     relative_difference(norm(conjugate(p)), norm(p))});
  });
  run.tolerance_sampled("inverse_two_sided", [](Sampler& s) {
    const Fv p = random_invertible(s);
    const Fv inv = inverse(p);
    return std::max({residual(product(p, inv), Fv::Identity()),
                     residual(product(inv, p), Fv::Identity()),
                     residual(inverse(inv), p)});
  });
  run.tolerance_sampled("rotor_cancellation", [](Sampler& s) {
    const Fv r = random_complex_rotor(s);
    const Fv q = s.complex_fourvector();
    const Fv rc = conjugate(r);
    const double scale = r.coeffs().squaredNorm();
    return std::max(
        {scaled_gap(product(r, product(rc, q)), q, scale),
         scaled_gap(product(rc, product(r, q)), q, scale),
         scaled_gap(product(product(rc, q), r), conjugate(q), scale),
         scaled_gap(product(product(r, q), rc), conjugate(q), scale),
         scaled_gap(product(product(product(product(q, r), r), rc), rc), q,
                    scale * scale)});
  });
  run.tolerance_sampled("sandwich", [](Sampler& s) {
    const Fv p = s.complex_fourvector(), q = s.complex_fourvector();
    const Fv pc = conjugate(p);
    const Complex n = norm(p);
    return std::max({residual(product(p, product(pc, q)), scalar_mul(n, q)),
                     residual(product(pc, product(p, q)), scalar_mul(n, q)),
                     residual(product(product(pc, q), p),
                              scalar_mul(n, conjugate(q))),
                     residual(product(product(p, q), pc),
                              scalar_mul(n, conjugate(q)))});
  });
  run.tolerance_sampled("distributivity", [](Sampler& s) {
    const Fv a = s.complex_fourvector(), b = s.complex_fourvector(),
             c = s.complex_fourvector();
    return std::max(
        residual(product(a, b + c), product(a, b) + product(a, c)),
        residual(product(a + b, c), product(a, c) + product(b, c)));
  });
  run.tolerance_sampled("squared_product", [](Sampler& s) {
    const Fv a = s.complex_fourvector(), b = s.complex_fourvector();
    const Fv ab = product(a, b);
    return residual(product(ab, ab), product(product(a, a), product(b, b)));
  });
  run.tolerance_sampled("unit_trig_product", [](Sampler& s) {
    const double a = s.angle(), b = s.angle();
    return residual(
        product(Fv(std::cos(a), std::sin(a), 0.0, 0.0),
                Fv(std::cos(b), std::sin(b), 0.0, 0.0)),
        Fv(std::cos(b - a), std::sin(b - a), 0.0, 0.0));
  });
  run.tolerance_sampled("commutator_bilinear", [](Sampler& s) {
    const Fv a = s.complex_fourvector(), b = s.complex_fourvector(),
             c = s.complex_fourvector();
    const Complex k = s.complex();
    return std::max(
        residual(commutator(a + scalar_mul(k, b), c),
                 commutator(a, c) + scalar_mul(k, commutator(b, c))),
        residual(commutator(a, b), -commutator(b, a)));
  });
  run.tolerance_sampled("jacobi_pure", [](Sampler& s) {
    const Fv a = s.pure_real_fourvector(), b = s.pure_real_fourvector(),
             c = s.pure_real_fourvector();
    return residual(jacobi(a, b, c), Fv::Zero());
  });
  {
    // (1, 0, 0, 0), i, j: the Jacobi sum is (0, 0, 0, -1).
    const Fv gap = jacobi(Fv::Identity(), Fv::Unit(1), Fv::Unit(2));
    run.witness("jacobi_fails_nonpure", residual(gap, Fv::Zero()), 1e-3);
  }
  run.tolerance_sampled("product_matrix", [](Sampler& s) {
    const Fv p = s.complex_fourvector(), q = s.complex_fourvector();
    const Eigen::Matrix4cd m = product_matrix(p);
    const Eigen::Matrix4cd gap =
        m * m.transpose() - norm(p) * Eigen::Matrix4cd::Identity();
    return std::max(residual(apply(m, q), product(p, q)),
                    gap.cwiseAbs().maxCoeff());
  });
  run.tolerance_sampled("triple_pure", [](Sampler& s) {
    const Fv a = s.pure_real_fourvector(), b = s.pure_real_fourvector(),
             c = s.pure_real_fourvector();
    return residual(triple_pure_product(a, b, c), product(a, product(b, c)));
  });
}

void factor_identities(Runner& run) {
  run.tolerance_sampled("right_factor_roundtrip", [](Sampler& s) {
    const Fv a = s.complex_fourvector(), b = random_invertible(s);
    return residual(product(b, right_factor(a, b)), a);
  });
  run.tolerance_sampled("left_factor_roundtrip", [](Sampler& s) {
    const Fv a = s.complex_fourvector(), b = random_invertible(s);
    return residual(product(left_factor(a, b), b), a);
  });
  run.tolerance_sampled("factor_norms", [](Sampler& s) {
    const Fv a = s.complex_fourvector(), b = random_invertible(s);
    return relative_difference(norm(right_factor(a, b)),
                               norm(left_factor(a, b)));
  });
  run.tolerance_sampled("factor_cross_identity", [](Sampler& s) {
    const Fv a = random_invertible(s), b = random_invertible(s);
    const Fv x = right_factor(a, b), y = left_factor(a, b);
    return residual(product(x, inverse(y)), product(inverse(x), y));
  });
  run.tolerance_sampled("divide", [](Sampler& s) {
    const Fv p = random_invertible(s), v = s.pure_real_fourvector();
    const double ratio = 0.5 + std::abs(s.real());
    double r = residual(divide(p, p), Fv::Identity());
    if (std::abs(norm(v)) > 1e-6) {
      r = std::max(r, residual(divide(scalar_mul(Complex(ratio), v), v),
                               Fv(ratio, 0.0, 0.0, 0.0)));
    }
    return r;
  });
  run.tolerance_sampled("equivalent_left_rotor", [](Sampler& s) {
    const Fv p = random_invertible(s);
    const Rotor r = rotor_from_axis_angle({s.unit_axis(), s.angle()});
    return residual(product(equivalent_left_rotor(p, r), p), rotate(p, r));
  });
  run.tolerance_sampled("quadratic_substitution", [](Sampler& s) {
    const Fv c = s.complex_fourvector(), k = s.complex_fourvector();
    const Side side = s.real() < 0.0 ? Side::Left : Side::Right;
    QuadraticSolution sol;
    try {
      sol = solve_quadratic(side, c, k);
    } catch (const DomainError&) {
      return 0.0;
    }
    double worst = 0.0;
    for (const Fv& q : sol.solutions) {
      const Fv lhs = product(q, q) +
                     (side == Side::Right ? product(q, c) : product(c, q));
      // Backward-error scale: size of the terms that cancel into K.
      const double qn = q.coeffs().norm();
      const double scale = qn * qn + c.coeffs().norm() * qn;
      worst = std::max(worst, scaled_gap(lhs, k, scale));
    }
    return worst;
  });
}

void rotation_identities(Runner& run) {
  run.tolerance_sampled("rotation_norm_preservation", [](Sampler& s) {
    const Fv v = s.complex_fourvector();
    const Rotor real_rotor = rotor_from_axis_angle({s.unit_axis(), s.angle()});
    const Rotor complex_rotor(random_complex_rotor(s));
    const double scale = std::pow(complex_rotor.value().coeffs().squaredNorm(), 2);
    return std::max(
        relative_difference(norm(rotate(v, real_rotor)), norm(v)),
        std::abs(norm(rotate(v, complex_rotor)) - norm(v)) /
            std::max(1.0, scale));
  });
  run.tolerance_sampled("rotation_linearity", [](Sampler& s) {
    const Fv a = s.complex_fourvector(), b = s.complex_fourvector();
    const Rotor r = rotor_from_axis_angle({s.unit_axis(), s.angle()});
    return std::max(
        residual(rotate(product(a, b), r), product(rotate(a, r), rotate(b, r))),
        residual(rotate(a + b, r), rotate(a, r) + rotate(b, r)));
  });
  run.tolerance_sampled("inverse_rotation", [](Sampler& s) {
    const Fv a = s.real_fourvector();
    const double alpha = s.angle();
    return std::max(
        residual(rotate(rotate(a, trig_rotor(alpha)), trig_rotor(-alpha)), a),
        residual(rotate(rotate(a, trig_rotor(alpha)),
                        Rotor(conjugate(trig_rotor(alpha).value()))),
                 a));
  });
  run.tolerance_sampled("classical_x_rotation", [](Sampler& s) {
    const Fv a = s.real_fourvector();
    const double alpha = s.angle();
    const Fv expected(a.t(), a.x(),
                      a.y() * std::cos(alpha) - a.z() * std::sin(alpha),
                      a.z() * std::cos(alpha) + a.y() * std::sin(alpha));
    return residual(rotate(a, trig_rotor(alpha)), expected);
  });
  run.tolerance_sampled("euler_rodrigues", [](Sampler& s) {
    const AxisAngle aa{s.unit_axis(), s.angle()};
    const Fv u = s.pure_real_fourvector();
    const Eigen::Vector3d uv = u.vec().real();
    const Eigen::Vector3d expected = euler_rodrigues(uv, aa);
    return residual(rotate(u, rotor_from_axis_angle(aa)),
                    Fv(0.0, expected.x(), expected.y(), expected.z()));
  });
  run.tolerance_sampled("double_rotation", [](Sampler& s) {
    const Eigen::Vector3d axis = s.unit_axis();
    const double theta = s.angle();
    const Fv a = s.complex_fourvector();
    return residual(double_rotate(a, rotor_from_axis_angle({axis, theta})),
                    rotate(a, rotor_from_axis_angle({axis, 2.0 * theta})));
  });
  run.tolerance_sampled("compose_sequential", [](Sampler& s) {
    const Rotor first(random_complex_rotor(s));
    const Rotor second = rotor_from_axis_angle({s.unit_axis(), s.angle()});
    const Fv m = s.complex_fourvector();
    const Fv sequential = rotate(rotate(m, first), second);
    const double scale = std::pow(first.value().coeffs().squaredNorm(), 2);
    return scaled_gap(rotate(m, compose_rotors(second, first)), sequential,
                      scale);
  });
  run.tolerance_sampled("coaxial_composition", [](Sampler& s) {
    const double a = s.angle(), b = s.angle();
    const Fv m = s.complex_fourvector();
    return std::max(
        residual(rotate(rotate(m, trig_rotor(a)), trig_rotor(b)),
                 rotate(m, trig_rotor(a + b))),
        residual(rotate(rotate(m, hyperbolic_rotor(a)), hyperbolic_rotor(b)),
                 rotate(m, hyperbolic_rotor(a + b))));
  });
  run.tolerance_sampled("boost_invariance", [](Sampler& s) {
    const IntervalElement ds{s.real(), s.real(), s.real(), s.real()};
    const Fv v = ds.materialize();
    const Complex before = interval(ds);
    const double alpha = s.angle();
    const auto params = BoostParameters::from_beta(0.99 * s.real());
    return std::max(
        {relative_difference(interval(rotate(v, trig_rotor(alpha))), before),
         relative_difference(interval(rotate(v, hyperbolic_rotor(alpha))),
                             before),
         relative_difference(interval(rotate(v, boost_rotor(params))),
                             before)});
  });
  run.tolerance_sampled("boost_closed_form", [](Sampler& s) {
    const IntervalElement ds{s.real(), s.real(), s.real(), s.real()};
    const auto p = BoostParameters::from_beta(0.99 * s.real());
    const Complex i(0.0, 1.0);
    const Fv expected(ds.dt, i * ds.dx, i * p.gamma * (ds.dy - i * p.beta * ds.dz),
                      i * p.gamma * (ds.dz + i * p.beta * ds.dy));
    return residual(rotate(ds.materialize(), boost_rotor(p)), expected);
  });
  run.tolerance_sampled("reflection", [](Sampler& s) {
    const Fv x = s.pure_real_fourvector();
    const Eigen::Vector3d n = s.unit_axis();
    const Fv a(0.0, n.x(), n.y(), n.z());
    const Complex dot = x.x() * a.x() + x.y() * a.y() + x.z() * a.z();
    const Fv mirror = x - scalar_mul(2.0 * dot, a);
    const Fv reflected = reflect(x, a);
    return std::max({residual(reflected, mirror),
                     residual(reflect(reflected, a), x),
                     relative_difference(norm(reflected), norm(x))});
  });
  run.tolerance(
      "perpendicular_mirrors", 1, [](Sampler& s) {
        const Fv x = s.pure_real_fourvector();
        const std::vector<Fv> mirrors = {Fv::Unit(1), Fv::Unit(2)};
        const Rotor half_turn = rotor_from_axis_angle(
            {Eigen::Vector3d::UnitZ(), std::numbers::pi});
        return residual(reflect_chain(x, mirrors), rotate(x, half_turn));
      });
  {
    const Rotor roll =
        rotor_from_axis_angle({Eigen::Vector3d::UnitX(), std::numbers::pi / 2});
    const Rotor yaw =
        rotor_from_axis_angle({Eigen::Vector3d::UnitZ(), std::numbers::pi / 2});
    const Fv v(0.0, 1.0, 2.0, 3.0);
    run.witness("order_sensitivity",
                residual(rotate(rotate(v, roll), yaw),
                         rotate(rotate(v, yaw), roll)),
                10.0 * run.tol());
  }
}

const char* kind_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Exact: return "exact";
    case IdentityKind::Tolerance: return "tolerance";
    case IdentityKind::Witness: return "witness";
  }
  return "?";
}

}  // namespace

VerifyReport verify_suite(std::size_t samples, std::uint64_t seed,
                          double tolerance) {
  Runner run(std::max<std::size_t>(1, samples), seed, tolerance);
  algebra_identities(run);
  factor_identities(run);
  rotation_identities(run);
  return std::move(run).finish();
}

std::string format_verify_report(const VerifyReport& report) {
  std::string out;
  char line[256];
  for (const auto& r : report.identities) {
    std::snprintf(line, sizeof line, "%s  %-30s %-9s checks=%-6zu %s=%.3e\n",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(),
                  kind_name(r.kind), r.checks,
                  r.kind == IdentityKind::Witness ? "gap" : "worst",
                  r.worst_residual);
    out += line;
  }
  const auto failed = std::count_if(
      report.identities.begin(), report.identities.end(),
      [](const IdentityResult& r) { return !r.passed; });
  std::snprintf(line, sizeof line,
                "%zu identities, %td failed (seed=%llu samples=%zu tol=%g)\n",
                report.identities.size(), failed,
                (unsigned long long)report.seed, report.samples,
                report.tolerance);
  return out + line;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& r : report.identities) {
    ids.push_back({{"name", r.name},
                   {"kind", kind_name(r.kind)},
                   {"checks", r.checks},
                   {"worst_residual", r.worst_residual},
                   {"passed", r.passed}});
  }
  return {{"seed", report.seed},
          {"samples", report.samples},
          {"tolerance", report.tolerance},
          {"passed", report.all_passed()},
          {"identities", ids}};
}

}  // namespace fourvec

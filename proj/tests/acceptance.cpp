// Acceptance gate. Prints one PASS/FAIL line per criterion; with numeric
// arguments only those criteria run. Exit status is nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Geometry>

#include "fourvec/basis.hpp"
#include "fourvec/bench.hpp"
#include "fourvec/cli.hpp"
#include "fourvec/factor.hpp"
#include "fourvec/io.hpp"
#include "fourvec/rotation.hpp"
#include "fourvec/verify.hpp"
#include "json.hpp"
#include "test_support.hpp"

using namespace fourvec;
using namespace fourvec::testing;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << "  failed: " << what << '\n';
    }
  }
  void note(const std::string& what) { detail << "  " << what << '\n'; }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Largest absolute componentwise difference.
double max_abs(const Fourvectorcd& a, const Fourvectorcd& b) {
  return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Fourvectorcd cli_json(const std::vector<std::string>& args) {
  const CommandResult r = run_command(args);
  if (r.exit_code != 0) throw std::runtime_error("cli failed: " + r.err);
  return fourvector_from_json(nlohmann::json::parse(r.out));
}

void worked_factors(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::string a_text = "(7, 1, -3, 5)", b_text = "(1, 3+5i, 2, -1)";
  const Fourvectorcd a = parse_fourvector(a_text), b = parse_fourvector(b_text);
  const Fourvectorcd x = cli_json({"--json", "factor-right", a_text, b_text});
  const Fourvectorcd y = cli_json({"--json", "factor-left", a_text, b_text});

  const Fourvectorcd x_ref = fv(cx(-3.0 / 10, -2.0 / 5), cx(9.0 / 10, -4.0 / 5),
                                cx(12.0 / 25, -53.0 / 50), cx(9.0 / 25, -21.0 / 50));
  const Fourvectorcd y_ref = fv(cx(4.0 / 25, -1.0 / 50), cx(39.0 / 50, -29.0 / 25),
                                cx(-19.0 / 25, 11.0 / 50), cx(-11.0 / 50, 21.0 / 25));
  const double ex = max_abs(x, x_ref), ey = max_abs(y, y_ref);
  const double rx = max_abs(product(b, x), a), ry = max_abs(product(y, b), a);
  const double elapsed = seconds_since(start);
  out.note("X error " + sci(ex) + ", Y error " + sci(ey) + ", B**X-A " + sci(rx) +
           ", Y**B-A " + sci(ry) + ", " + sci(elapsed) + " s");
  out.require(ex <= 1e-12, "X matches the reference value");
  out.require(ey <= 1e-12, "Y matches the reference value");
  out.require(rx <= 1e-12, "B**X reproduces A");
  out.require(ry <= 1e-12, "Y**B reproduces A");
  out.require(elapsed < 1.0, "runtime under 1 s");
}

void division(Outcome& out) {
  const Fourvectorcd q = divide(fv(1, 2, 3, 4), fv(3, 6, 9, 12));
  const double err = max_abs(q, fv(1.0 / 3, 0, 0, 0));
  out.note("error " + sci(err));
  out.require(err <= 1e-15, "(1,2,3,4)/(3,6,9,12) == (1/3,0,0,0)");
}

void quadratics(Outcome& out) {
  const Fourvectorcd c = fv(0, -1, 1, 0);
  const Fourvectorcd k = fv(-1, 0, 0, 1);
  const double h = 1.0 / std::sqrt(2.0);

  struct Case {
    const char* label;
    Side side;
    std::vector<Fourvectorcd> reference;
  };
  const std::vector<Case> cases = {
      {"q**q + q**C", Side::Right,
       {fv(0, cx(-1, -h), cx(0, h), 0), fv(0, cx(1, h), cx(0, -h), 0)}},
      {"q**q + C**q", Side::Left,
       {fv(0, cx(0, -h), cx(-1, h), 0), fv(0, cx(0, h), cx(-1, -h), 0)}},
  };

  for (const Case& cs : cases) {
    auto lhs = [&](const Fourvectorcd& q) {
      return product(q, q) + (cs.side == Side::Right ? product(q, c) : product(c, q));
    };
    const QuadraticSolution sol = solve_quadratic(cs.side, c, k);
    out.require(!sol.degenerate && sol.solutions.size() == 2,
                std::string(cs.label) + ": two isolated roots");
    for (const Fourvectorcd& q : sol.solutions) {
      const double sub = max_abs(lhs(q), k);
      out.note(std::string(cs.label) + ": root " + format_fourvector(q, 6) +
               ", substitution error " + sci(sub));
      out.require(sub <= 1e-12, std::string(cs.label) + ": root substitutes to K");
    }
    for (const Fourvectorcd& ref : cs.reference) {
      double nearest = INFINITY;
      for (const Fourvectorcd& q : sol.solutions) nearest = std::min(nearest, max_abs(q, ref));
      const double ref_sub = max_abs(lhs(ref), k);
      out.note(std::string(cs.label) + ": reference " + format_fourvector(ref, 6) +
               ", nearest root " + sci(nearest) + ", its own substitution error " +
               sci(ref_sub));
      out.require(nearest <= 1e-12,
                  std::string(cs.label) + ": reference root " + format_fourvector(ref, 6) +
                      " reproduced");
      out.require(ref_sub <= 1e-12, std::string(cs.label) + ": reference root " +
                                        format_fourvector(ref, 6) + " substitutes to K");
    }
  }

  const QuadraticSolution unit =
      solve_quadratic(Side::Right, Fourvectorcd::Zero(), Fourvectorcd::Identity());
  out.require(unit.degenerate, "q**q == 1 reported degenerate");
}

void basis_table(Outcome& out) {
  // Reference table as integer (sign, index) cells; rows e, i, j, k.
  const int ref[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{-1, 1}, {1, 0}, {1, 3}, {-1, 2}},
      {{-1, 2}, {-1, 3}, {1, 0}, {1, 1}},
      {{-1, 3}, {1, 2}, {-1, 1}, {1, 0}},
  };
  using Fvi = Fourvector<long long>;
  int matches = 0;
  for (int l = 0; l < 4; ++l) {
    for (int r = 0; r < 4; ++r) {
      Fvi expected = Fvi::Unit(ref[l][r][1]);
      if (ref[l][r][0] < 0) expected = -expected;
      if (product(Fvi::Unit(l), Fvi::Unit(r)) == expected) ++matches;
    }
  }
  out.note(std::to_string(matches) + "/16 basis products match");
  out.require(matches == 16, "all basis products match");

  const Fvi e = Fvi::Unit(0), i = Fvi::Unit(1), j = Fvi::Unit(2), k = Fvi::Unit(3);
  const Fvi left = product(product(product(i, e), j), k);
  const Fvi middle = product(product(i, product(e, j)), k);
  out.note("i e j k groupings: " + std::to_string(left.t()) + "e and " +
           std::to_string(middle.t()) + "e");
  out.require(left == -middle && left != Fvi::Zero() && left.vec().isZero(),
              "i e j k groupings differ in sign");

  const Fvi tait_inner = product(i, product(j, j));
  const Fvi tait_outer = product(product(i, j), j);
  out.require(tait_inner == Fvi(0, -1, 0, 0), "i**(j**j) == (0,-1,0,0)");
  out.require(tait_outer == Fvi(0, -1, 0, 0), "(i**j)**j == (0,-1,0,0)");
}

void identity_suite(Outcome& out) {
  const VerifyReport report = verify_suite(10000, 42, 1e-9);
  const char* required[] = {"bridge",          "bridge_exact",
                            "conjugate_reversal", "conjugate_reversal_exact",
                            "self_product",    "self_product_exact",
                            "identity_left_right", "identity_left_right_exact",
                            "inverse_two_sided", "rotor_cancellation",
                            "distributivity",  "distributivity_exact",
                            "squared_product", "squared_product_exact"};
  double worst = 0.0;
  for (const char* name : required) {
    const IdentityResult* r = report.find(name);
    out.require(r != nullptr, std::string(name) + " present");
    if (!r) continue;
    worst = std::max(worst, r->worst_residual);
    out.require(r->passed && r->worst_residual <= 1e-9, std::string(name) + " passes");
  }
  std::size_t failed = 0;
  for (const auto& r : report.identities) failed += r.passed ? 0 : 1;
  out.note("worst residual over the named identities " + sci(worst) + "; " +
           std::to_string(report.identities.size() - failed) + "/" +
           std::to_string(report.identities.size()) + " suite identities pass");
  out.require(report.all_passed(), "whole suite passes");
}

void exhaustive_norms(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  using Fvi = Fourvector<long long>;
  std::vector<Fvi> all;
  for (int t = -2; t <= 2; ++t)
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y)
        for (int z = -2; z <= 2; ++z) all.emplace_back(t, x, y, z);

  std::size_t checks = 0, failures = 0;
  for (const Fvi& a : all) {
    const long long na = norm(a);
    for (const Fvi& b : all) {
      const long long nb = norm(b);
      const Fvi p = product(a, b);
      const long long squares =
          p.t() * p.t() + p.x() * p.x() + p.y() * p.y() + p.z() * p.z();
      const long long lhs = (a.t() * a.t() + a.x() * a.x() + a.y() * a.y() + a.z() * a.z()) *
                            (b.t() * b.t() + b.x() * b.x() + b.y() * b.y() + b.z() * b.z());
      if (norm(p) != na * nb) ++failures;
      if (squares != lhs) ++failures;
      checks += 2;
    }
  }
  const double elapsed = seconds_since(start);
  out.note(std::to_string(checks) + " exact checks, " + std::to_string(failures) +
           " failures, " + sci(elapsed) + " s");
  out.require(failures == 0, "norm multiplicativity and four squares hold exactly");
  out.require(elapsed < 30.0, "runtime under 30 s");
}

void rotations(Outcome& out) {
  Gen gen(7007);
  double worst_x = 0.0, worst_er = 0.0, worst_double = 0.0;
  for (int n = 0; n < 100; ++n) {
    const double a = gen.real(-kPi, kPi);
    const Fourvectorcd v = gen.real_fv();
    const Complex at = v.t(), ax = v.x(), ay = v.y(), az = v.z();
    const Fourvectorcd classical = fv(at, ax, ay * std::cos(a) - az * std::sin(a),
                                      az * std::cos(a) + ay * std::sin(a));
    worst_x = std::max(worst_x, max_abs(rotate(v, trig_rotor(a)), classical));
  }
  for (int n = 0; n < 1000; ++n) {
    const Eigen::Vector3d axis = gen.unit();
    const double angle = gen.real(-kPi, kPi);
    const Eigen::Vector3d u(gen.real(), gen.real(), gen.real());
    const Fourvectorcd out_v = rotate(fv(0, u.x(), u.y(), u.z()),
                                      rotor_from_axis_angle({axis, angle}));
    const Eigen::Vector3d er = euler_rodrigues(u, {axis, angle});
    worst_er = std::max(worst_er, max_abs(out_v, fv(0, er.x(), er.y(), er.z())));

    const Fourvectorcd a = gen.real_fv();
    const Fourvectorcd twice = double_rotate(a, rotor_from_axis_angle({axis, angle}));
    const Fourvectorcd single = rotate(a, rotor_from_axis_angle({axis, 2 * angle}));
    worst_double = std::max(worst_double, max_abs(twice, single));
  }
  out.note("x-axis formula " + sci(worst_x) + ", Euler-Rodrigues " + sci(worst_er) +
           ", double rotation " + sci(worst_double));
  out.require(worst_x <= 1e-12, "rotation about x matches the classical formula");
  out.require(worst_er <= 1e-9, "rotation matches Euler-Rodrigues");
  out.require(worst_double <= 1e-9, "double rotation equals rotation by twice the angle");
}

void boosts(Outcome& out) {
  Gen gen(8008);
  double worst_inv = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const IntervalElement ds{gen.real(), gen.real(), gen.real(), gen.real()};
    const Complex before = interval(ds);
    const Rotor qs[] = {trig_rotor(gen.real(-kPi, kPi)), hyperbolic_rotor(gen.real(-2, 2)),
                        boost_rotor(BoostParameters::from_beta(gen.real(-0.95, 0.95)))};
    for (const Rotor& q : qs) {
      worst_inv = std::max(worst_inv, relative_difference(interval(rotate(ds.materialize(), q)),
                                                          before));
    }
  }
  double worst_display = 0.0;
  const Complex i(0, 1);
  for (int n = 0; n < 10; ++n) {
    const BoostParameters p = BoostParameters::from_beta(gen.real(-0.99, 0.99));
    const IntervalElement ds{gen.real(), gen.real(), gen.real(), gen.real()};
    const double b = p.beta, g = p.gamma;
    const Fourvectorcd display = fv(ds.dt, i * ds.dx, i * g * (ds.dy - i * b * ds.dz),
                                    i * g * (ds.dz + i * b * ds.dy));
    worst_display = std::max(
        worst_display, max_abs(rotate(ds.materialize(), boost_rotor(p)), display));
  }
  out.note("interval drift " + sci(worst_inv) + ", boost display " + sci(worst_display));
  out.require(worst_inv <= 1e-9, "interval invariant under q1, q2, q3");
  out.require(worst_display <= 1e-12, "velocity boost matches the displayed components");
}

void composition(Outcome& out) {
  Gen gen(9009);
  double worst_closed = 0.0;
  for (int n = 0; n < 100; ++n) {
    const double a = gen.real(-1.5, 1.5), b = gen.real(-1.5, 1.5);
    const double ma = gen.real(), mb = gen.real(), mc = gen.real(), md = gen.real();
    const Fourvectorcd m = fv(ma, cx(0, mb), cx(0, mc), cx(0, md));
    const Fourvectorcd twice = rotate(rotate(m, hyperbolic_rotor(a)), hyperbolic_rotor(b));
    const double ch = std::cosh(a + b), sh = std::sinh(a + b);
    const Fourvectorcd closed = fv(ma, cx(0, mb), cx(md * sh, mc * ch), cx(-mc * sh, md * ch));
    worst_closed = std::max(worst_closed, max_abs(twice, closed));
    worst_closed = std::max(worst_closed, max_abs(twice, rotate(m, hyperbolic_rotor(a + b))));
  }

  double worst_compose = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Rotor first = rotor_from_axis_angle({gen.unit(), gen.real(-kPi, kPi)});
    const Rotor second = rotor_from_axis_angle({gen.unit(), gen.real(-kPi, kPi)});
    const Fourvectorcd v = gen.complex_fv();
    worst_compose = std::max(worst_compose, residual(rotate(v, compose_rotors(second, first)),
                                                     rotate(rotate(v, first), second)));
  }

  const Rotor roll = rotor_from_axis_angle({Eigen::Vector3d::UnitX(), kPi / 2});
  const Rotor yaw = rotor_from_axis_angle({Eigen::Vector3d::UnitZ(), kPi / 2});
  const Fourvectorcd wing = fv(0, 0, 1, 0);
  const double gap = residual(rotate(rotate(wing, roll), yaw), rotate(rotate(wing, yaw), roll));

  out.note("closed form " + sci(worst_closed) + ", general composition " +
           sci(worst_compose) + ", order gap " + sci(gap));
  out.require(worst_closed <= 1e-12, "coaxial hyperbolic composition matches the closed form");
  out.require(worst_compose <= 1e-9, "compose_rotors equals sequential rotation");
  out.require(gap > 10 * 1e-9, "opposite orders of quarter turns differ");
}

void reflections(Outcome& out) {
  Gen gen(10010);
  double worst_mirror = 0.0, worst_involution = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Eigen::Vector3d x(gen.real(), gen.real(), gen.real());
    const Eigen::Vector3d a = gen.unit();
    const Fourvectorcd px = fv(0, x.x(), x.y(), x.z()), pa = fv(0, a.x(), a.y(), a.z());
    const Eigen::Vector3d m = x - 2 * x.dot(a) * a;
    const Fourvectorcd r = reflect(px, pa);
    worst_mirror = std::max(worst_mirror, max_abs(r, fv(0, m.x(), m.y(), m.z())));
    worst_involution = std::max(worst_involution, max_abs(reflect(r, pa), px));
  }
  const Fourvectorcd x = fv(0, 1, 2, 3);
  const std::vector<Fourvectorcd> mirrors{fv(0, 1, 0, 0), fv(0, 0, 1, 0)};
  const double perp = max_abs(reflect_chain(x, mirrors),
                              rotate(x, rotor_from_axis_angle({Eigen::Vector3d::UnitZ(), kPi})));
  out.note("mirror " + sci(worst_mirror) + ", involution " + sci(worst_involution) +
           ", perpendicular mirrors " + sci(perp));
  out.require(worst_mirror <= 1e-12, "reflection matches x - 2(x.a)a");
  out.require(worst_involution <= 1e-12, "reflection is an involution");
  out.require(perp <= 1e-12, "two perpendicular mirrors equal a half turn");
}

void bench_counts(Outcome& out) {
  const BenchReport r = bench_compose(1000);
  out.note("fourvector " + std::to_string(r.mults_fourvector) + " mults / " +
           std::to_string(r.adds_fourvector) + " adds, matrix " +
           std::to_string(r.mults_matrix) + " mults / " + std::to_string(r.adds_matrix) +
           " adds; " + sci(r.ns_per_op_fourvector) + " vs " + sci(r.ns_per_op_matrix) +
           " ns/op (informative)");
  out.require(r.mults_fourvector == 16 && r.adds_fourvector == 12,
              "fourvector product is 16 mult / 12 add");
  out.require(r.mults_matrix == 27 && r.adds_matrix == 18,
              "3x3 matrix composition is 27 mult / 18 add");
}

void jacobi(Outcome& out) {
  auto sum = [](const Fourvectorcd& a, const Fourvectorcd& b, const Fourvectorcd& c) {
    return commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
           commutator(c, commutator(a, b));
  };
  Gen gen(12012);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    worst = std::max(worst, max_abs(sum(gen.pure_real_fv(), gen.pure_real_fv(),
                                        gen.pure_real_fv()),
                                    Fourvectorcd::Zero()));
  }
  const Fourvectorcd e = Fourvectorcd::Identity();
  const Fourvectorcd i = Fourvectorcd::Unit(1), j = Fourvectorcd::Unit(2);
  const Fourvectorcd witness = sum(e, i, j);
  const double gap = max_abs(witness, Fourvectorcd::Zero());
  out.note("pure triples " + sci(worst) + ", (e, i, j) sum " + format_fourvector(witness, 6));
  out.require(worst <= 1e-9, "Jacobi identity holds for pure triples");
  out.require(gap > 1e-3, "Jacobi identity fails for (e, i, j)");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "worked left/right factors", worked_factors},
      {2, "division example", division},
      {3, "quadratic solutions and degenerate case", quadratics},
      {4, "basis table, grouping and Tait witnesses", basis_table},
      {5, "identity suite, seed 42, 10^4 samples", identity_suite},
      {6, "exhaustive exact norm multiplicativity", exhaustive_norms},
      {7, "rotation formulas", rotations},
      {8, "boost invariance and boost display", boosts},
      {9, "composition and order sensitivity", composition},
      {10, "reflections", reflections},
      {11, "operation counts", bench_counts},
      {12, "Jacobi identity", jacobi},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& c : criteria()) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    Outcome out;
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s  criterion %2d: %s\n", out.passed ? "PASS" : "FAIL", c.id, c.title);
    std::fputs(out.detail.str().c_str(), stdout);
    if (!out.passed) ++failures;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

#include "fourvec/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fourvec/basis.hpp"
#include "fourvec/bench.hpp"
#include "fourvec/errors.hpp"
#include "fourvec/factor.hpp"
#include "fourvec/io.hpp"
#include "fourvec/rotation.hpp"
#include "fourvec/verify.hpp"

namespace fourvec {

namespace {

struct GlobalOptions {
  bool json = false;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  int precision = 12;
};

class Printer {
 public:
  explicit Printer(const GlobalOptions& opts) : opts_(opts) {}

  void fourvector(const Fourvectorcd& v) {
    if (opts_.json) {
      out << to_json(v).dump() << '\n';
    } else {
      out << format_fourvector(v, opts_.precision) << '\n';
    }
  }

  std::ostringstream out;

 private:
  const GlobalOptions& opts_;
};

using BinaryOp = std::function<Fourvectorcd(const Fourvectorcd&,
                                            const Fourvectorcd&)>;

std::string basis_cell(const BasisProduct& p) {
  return (p.sign < 0 ? "-" : "") + std::string(kBasisNames[p.index]);
}

std::string format_table() {
  std::ostringstream os;
  auto cell = [&](const std::string& s) {
    os << std::string(4 - std::min<std::size_t>(4, s.size()), ' ') << s;
  };
  cell("**");
  for (auto name : kBasisNames) cell(std::string(name));
  os << '\n';
  for (int l = 0; l < 4; ++l) {
    cell(std::string(kBasisNames[l]));
    for (int r = 0; r < 4; ++r) cell(basis_cell(basis_product(l, r)));
    os << '\n';
  }
  return os.str();
}

nlohmann::json table_json() {
  nlohmann::json rows = nlohmann::json::array();
  for (int l = 0; l < 4; ++l) {
    nlohmann::json row = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) row.push_back(basis_cell(basis_product(l, r)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  GlobalOptions opts;
  Printer print(opts);

  CLI::App app{"Fourvector algebra: products, factors, rotations, boosts.",
               "fourvec"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opts.json, "Structured JSON output");
  app.add_option("--tol", opts.tol, "Tolerance for unit/purity checks and verify")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", opts.seed, "Seed for verify sampling");
  app.add_option("--samples", opts.samples, "Samples per identity in verify")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", opts.precision, "Significant digits (1..17)")
      ->check(CLI::Range(1, 17));

  // Binary fourvector operations share one shape.
  const std::map<std::string, std::pair<std::string, BinaryOp>> binary = {
      {"prod", {"Fourvector product A ** B", [](auto& a, auto& b) { return product(a, b); }}},
      {"hprod", {"Hamilton quaternion product", [](auto& a, auto& b) { return hamilton_product(a, b); }}},
      {"divide", {"P ** Q^-1", [](auto& a, auto& b) { return divide(a, b); }}},
      {"factor-right", {"X with B ** X == A", [](auto& a, auto& b) { return right_factor(a, b); }}},
      {"factor-left", {"Y with Y ** B == A", [](auto& a, auto& b) { return left_factor(a, b); }}},
  };
  std::map<std::string, std::pair<std::string, std::string>> operands;
  for (const auto& [name, entry] : binary) {
    auto* sub = app.add_subcommand(name, entry.first);
    auto& slot = operands[name];
    sub->add_option("a", slot.first, "First operand, e.g. \"(1, 3+5i, 2, -1)\"")
        ->required();
    sub->add_option("b", slot.second, "Second operand")->required();
  }

  std::string rotate_v, rotate_r;
  std::vector<double> rotate_axis;
  std::optional<double> rotate_angle;
  bool rotate_double = false;
  auto* rotate_cmd = app.add_subcommand("rotate", "Rotate V with rotor R or an axis-angle");
  rotate_cmd->add_option("v", rotate_v, "Fourvector to rotate")->required();
  auto* rotor_opt = rotate_cmd->add_option("r", rotate_r, "Unit rotor literal");
  auto* axis_opt = rotate_cmd->add_option("--axis", rotate_axis, "Unit axis x,y,z")
                       ->expected(3)
                       ->delimiter(',');
  auto* angle_opt = rotate_cmd->add_option("--angle", rotate_angle, "Angle in radians");
  axis_opt->needs(angle_opt);
  angle_opt->needs(axis_opt);
  rotor_opt->excludes(axis_opt);
  rotate_cmd->add_flag("--double", rotate_double,
                       "Use the double-angle product r**((r**(v**r))**r)");

  std::string reflect_x;
  std::vector<std::string> reflect_normals;
  auto* reflect_cmd = app.add_subcommand("reflect", "Reflect X off planes with unit normals");
  reflect_cmd->add_option("x", reflect_x, "Pure fourvector")->required();
  reflect_cmd->add_option("normals", reflect_normals, "Pure unit normals, applied in order")
      ->required();

  std::string boost_ds;
  std::optional<double> boost_trig, boost_hyper, boost_beta, boost_gamma;
  auto* boost_cmd = app.add_subcommand(
      "boost", "Print a boost/rotation rotor, or apply it to DS");
  boost_cmd->add_option("ds", boost_ds, "Fourvector to rotate, e.g. \"(1, 0.5i, 0.2i, 0i)\"");
  auto* kind = boost_cmd->add_option_group("kind");
  kind->add_option("--trig", boost_trig, "q1: circular angle");
  kind->add_option("--hyper", boost_hyper, "q2: hyperbolic angle");
  kind->add_option("--beta", boost_beta, "q3 from velocity ratio beta");
  kind->add_option("--gamma", boost_gamma, "q3 from Lorentz factor gamma");
  kind->require_option(1);

  std::string quad_side = "right";
  std::string quad_c, quad_k;
  auto* quad_cmd = app.add_subcommand(
      "solve-quad", "Solve q**q + q**C == K (right) or q**q + C**q == K (left)");
  quad_cmd->add_option("--side", quad_side, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  quad_cmd->add_option("c", quad_c, "Constant C")->required();
  quad_cmd->add_option("k", quad_k, "Right-hand side K")->required();

  auto* table_cmd = app.add_subcommand("table", "Print the basis multiplication table");
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite");

  std::size_t bench_iterations = 100000;
  auto* bench_cmd = app.add_subcommand("bench", "Count and time rotation composition");
  bench_cmd->add_option("--iterations", bench_iterations, "Compositions per batch")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? exit_code::kOk : exit_code::kUsage;
    return result;
  }

  try {
    for (const auto& [name, entry] : binary) {
      if (app.got_subcommand(name)) {
        const auto& slot = operands[name];
        print.fourvector(entry.second(parse_fourvector(slot.first),
                                      parse_fourvector(slot.second)));
      }
    }

    if (rotate_cmd->parsed()) {
      const Fourvectorcd v = parse_fourvector(rotate_v);
      std::optional<Rotor> rotor;
      if (!rotate_axis.empty()) {
        const AxisAngle aa{{rotate_axis[0], rotate_axis[1], rotate_axis[2]},
                           *rotate_angle};
        rotor = rotor_from_axis_angle(aa, opts.tol);
      } else if (!rotate_r.empty()) {
        rotor = Rotor(parse_fourvector(rotate_r), opts.tol);
      } else {
        result.err = "rotate: give a rotor literal or --axis/--angle\n";
        result.exit_code = exit_code::kUsage;
        return result;
      }
      print.fourvector(rotate_double ? double_rotate(v, *rotor)
                                     : rotate(v, *rotor));
    }

    if (reflect_cmd->parsed()) {
      std::vector<Fourvectorcd> normals;
      for (const auto& n : reflect_normals) normals.push_back(parse_fourvector(n));
      print.fourvector(reflect_chain(parse_fourvector(reflect_x), normals, opts.tol));
    }

    if (boost_cmd->parsed()) {
      const Rotor q = boost_trig    ? trig_rotor(*boost_trig)
                      : boost_hyper ? hyperbolic_rotor(*boost_hyper)
                      : boost_beta  ? boost_rotor(BoostParameters::from_beta(*boost_beta))
                                    : boost_rotor_gamma(*boost_gamma);
      print.fourvector(boost_ds.empty() ? q.value()
                                        : rotate(parse_fourvector(boost_ds), q));
    }

    if (quad_cmd->parsed()) {
      const Side side = quad_side == "left" ? Side::Left : Side::Right;
      const QuadraticSolution sol =
          solve_quadratic(side, parse_fourvector(quad_c), parse_fourvector(quad_k));
      if (opts.json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& q : sol.solutions) list.push_back(to_json(q));
        print.out << nlohmann::json{{"degenerate", sol.degenerate},
                                    {"solutions", list}}
                         .dump()
                  << '\n';
      } else if (sol.degenerate) {
        print.out << "degenerate\n";
      } else {
        for (const auto& q : sol.solutions) print.fourvector(q);
      }
    }

    if (table_cmd->parsed()) {
      print.out << (opts.json ? table_json().dump() + "\n" : format_table());
    }

    if (verify_cmd->parsed()) {
      const VerifyReport report = verify_suite(opts.samples, opts.seed, opts.tol);
      print.out << (opts.json ? to_json(report).dump() + "\n"
                              : format_verify_report(report));
      if (!report.all_passed()) result.exit_code = exit_code::kCheckFailed;
    }

    if (bench_cmd->parsed()) {
      const BenchReport report = bench_compose(bench_iterations);
      print.out << (opts.json ? to_json(report).dump() + "\n"
                              : format_bench_report(report));
      const bool counts_ok = report.mults_fourvector == 16 &&
                             report.adds_fourvector == 12 &&
                             report.mults_matrix == 27 && report.adds_matrix == 18;
      if (!counts_ok) result.exit_code = exit_code::kCheckFailed;
    }
  } catch (const ParseError& e) {
    result.err = std::string("parse error ") + e.what() + "\n";
    result.exit_code = exit_code::kUsage;
    return result;
  } catch (const DomainError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = exit_code::kDomain;
    return result;
  }

  result.out = print.out.str();
  return result;
}

}  // namespace fourvec

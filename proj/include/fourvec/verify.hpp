#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"

#include "fourvec/fourvector.hpp"

namespace fourvec {

/// Deterministic sample source for identity sweeps. Integer components are
/// drawn from [-9, 9], real components from [-1, 1]. The mapping from the
/// 64-bit engine output to values is fixed here, so a seed reproduces the
/// same samples with any standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double real();
  long long integer();
  Complex complex();
  double angle();  // [-pi, pi]

  Fourvectorcd complex_fourvector();
  Fourvectorcd real_fourvector();
  Fourvector<long long> integer_fourvector();
  Fourvectorcd pure_real_fourvector();
  Fourvector<long long> pure_integer_fourvector();
  Eigen::Vector3d unit_axis();

 private:
  double unit_interval();  // [0, 1)

  std::mt19937_64 engine_;
};

enum class IdentityKind {
  Exact,      // integer arithmetic, must hold with zero residual
  Tolerance,  // floating point, worst residual <= tolerance
  Witness,    // a gap that must exceed a threshold (e.g. a counterexample)
};

struct IdentityResult {
  std::string name;
  IdentityKind kind = IdentityKind::Tolerance;
  std::size_t checks = 0;
  /// Worst relative residual, or for witnesses the smallest observed gap.
  double worst_residual = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double tolerance = 0.0;
  std::vector<IdentityResult> identities;

  bool all_passed() const;
  const IdentityResult* find(const std::string& name) const;
};

/// Runs the invariant catalogue of the algebra, the factor solvers and the
/// rotation engine. Every sampled identity is checked `samples` times.
VerifyReport verify_suite(std::size_t samples, std::uint64_t seed,
                          double tolerance);

std::string format_verify_report(const VerifyReport& report);
nlohmann::json to_json(const VerifyReport& report);

}  // namespace fourvec

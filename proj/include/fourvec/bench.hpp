#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "json.hpp"

namespace fourvec {

struct OperationCounts {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;
};

/// Scalar operations in one fourvector product, measured with CountingScalar.
OperationCounts count_fourvector_product();
/// Same for one Hamilton product (used when composing rotors).
OperationCounts count_hamilton_product();
/// Scalar operations in one 3x3 rotation-matrix composition.
OperationCounts count_matrix_composition();

struct BenchReport {
  std::size_t iterations = 0;
  std::uint64_t mults_fourvector = 0;
  std::uint64_t adds_fourvector = 0;
  std::uint64_t mults_matrix = 0;
  std::uint64_t adds_matrix = 0;
  double ns_per_op_fourvector = 0.0;
  double ns_per_op_matrix = 0.0;
  // Deviation from a unit rotor / orthogonal matrix after `iterations`
  // successive compositions of the same small rotation. Informative only.
  double drift_fourvector = 0.0;
  double drift_matrix = 0.0;
};

/// Counts come from the instrumented scalar; timings are the median of five
/// batches of `iterations` compositions after a 10% warm-up.
BenchReport bench_compose(std::size_t iterations);

std::string format_bench_report(const BenchReport& report);
nlohmann::json to_json(const BenchReport& report);

}  // namespace fourvec

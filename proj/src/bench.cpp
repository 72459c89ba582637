#include "fourvec/bench.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "fourvec/counting_scalar.hpp"
#include "fourvec/fourvector.hpp"

namespace fourvec {

namespace {

template <typename T>
inline void keep(const T& value) {
  asm volatile("" : : "g"(&value) : "memory");
}

using CountingMatrix3 = Eigen::Matrix<CountingScalar, 3, 3>;

constexpr std::size_t kOperandCount = 64;
constexpr int kBatches = 5;

template <typename Body>
double median_ns_per_op(std::size_t iterations, Body&& body) {
  const std::size_t warmup = std::max<std::size_t>(1, iterations / 10);
  for (std::size_t i = 0; i < warmup; ++i) body(i);

  std::array<double, kBatches> samples{};
  for (double& sample : samples) {
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < iterations; ++i) body(i);
    const auto stop = std::chrono::steady_clock::now();
    sample = std::chrono::duration<double, std::nano>(stop - start).count() /
             double(iterations);
  }
  std::sort(samples.begin(), samples.end());
  return samples[kBatches / 2];
}

Fourvectord axis_angle_rotor(const Eigen::Vector3d& axis, double angle) {
  const Eigen::Vector3d n = axis.normalized();
  return Fourvectord(std::cos(angle / 2), Eigen::Vector3d(n * std::sin(angle / 2)));
}

}  // namespace

OperationCounts count_fourvector_product() {
  const Fourvector<CountingScalar> a(1.0, 2.0, 3.0, 4.0);
  const Fourvector<CountingScalar> b(5.0, 6.0, 7.0, 8.0);
  CountingScalar::reset();
  const auto r = product(a, b);
  keep(r);
  const auto tally = CountingScalar::tally();
  return {tally.mults, tally.adds};
}

OperationCounts count_hamilton_product() {
  const Fourvector<CountingScalar> a(1.0, 2.0, 3.0, 4.0);
  const Fourvector<CountingScalar> b(5.0, 6.0, 7.0, 8.0);
  CountingScalar::reset();
  const auto r = hamilton_product(a, b);
  keep(r);
  const auto tally = CountingScalar::tally();
  return {tally.mults, tally.adds};
}

OperationCounts count_matrix_composition() {
  CountingMatrix3 a;
  CountingMatrix3 b;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      a(i, j) = CountingScalar(1.0 + i + 3 * j);
      b(i, j) = CountingScalar(2.0 - i + j);
    }
  }
  CountingScalar::reset();
  const CountingMatrix3 c = a.lazyProduct(b);
  keep(c);
  const auto tally = CountingScalar::tally();
  return {tally.mults, tally.adds};
}

BenchReport bench_compose(std::size_t iterations) {
  iterations = std::max<std::size_t>(1, iterations);
  BenchReport report;
  report.iterations = iterations;

  const OperationCounts fv = count_fourvector_product();
  const OperationCounts mat = count_matrix_composition();
  report.mults_fourvector = fv.mults;
  report.adds_fourvector = fv.adds;
  report.mults_matrix = mat.mults;
  report.adds_matrix = mat.adds;

  std::vector<Fourvectord> rotors;
  std::vector<Eigen::Matrix3d> matrices;
  for (std::size_t i = 0; i < kOperandCount; ++i) {
    const Eigen::Vector3d axis(1.0 + double(i % 3), 0.5 * double(i % 5) - 1.0,
                               0.25 * double(i % 7) + 0.1);
    const double angle = 0.01 * double(i + 1);
    rotors.push_back(axis_angle_rotor(axis, angle));
    matrices.push_back(
        Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix());
  }

  Fourvectord acc_fv = Fourvectord::Identity();
  report.ns_per_op_fourvector = median_ns_per_op(iterations, [&](std::size_t i) {
    acc_fv = hamilton_product(rotors[i % kOperandCount], acc_fv);
    keep(acc_fv);
  });
  Eigen::Matrix3d acc_mat = Eigen::Matrix3d::Identity();
  report.ns_per_op_matrix = median_ns_per_op(iterations, [&](std::size_t i) {
    const Eigen::Matrix3d next = matrices[i % kOperandCount].lazyProduct(acc_mat);
    acc_mat = next;
    keep(acc_mat);
  });

  const Eigen::Vector3d drift_axis(1.0, 2.0, 3.0);
  const Fourvectord step_fv = axis_angle_rotor(drift_axis, 1e-3);
  const Eigen::Matrix3d step_mat =
      Eigen::AngleAxisd(1e-3, drift_axis.normalized()).toRotationMatrix();
  Fourvectord r = Fourvectord::Identity();
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  for (std::size_t i = 0; i < iterations; ++i) {
    r = hamilton_product(step_fv, r);
    const Eigen::Matrix3d next = step_mat.lazyProduct(m);
    m = next;
  }
  report.drift_fourvector = std::abs(norm(r) - 1.0);
  report.drift_matrix = (m.transpose() * m - Eigen::Matrix3d::Identity()).norm();
  return report;
}

std::string format_bench_report(const BenchReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "iterations: %zu\n"
                "fourvector composition: %llu mults, %llu adds, %.3f ns/op, "
                "drift %.3g\n"
                "matrix composition:     %llu mults, %llu adds, %.3f ns/op, "
                "drift %.3g\n",
                r.iterations, (unsigned long long)r.mults_fourvector,
                (unsigned long long)r.adds_fourvector, r.ns_per_op_fourvector,
                r.drift_fourvector, (unsigned long long)r.mults_matrix,
                (unsigned long long)r.adds_matrix, r.ns_per_op_matrix,
                r.drift_matrix);
  return buf;
}

nlohmann::json to_json(const BenchReport& r) {
  return {
      {"iterations", r.iterations},
      {"mults_fourvector", r.mults_fourvector},
      {"adds_fourvector", r.adds_fourvector},
      {"mults_matrix", r.mults_matrix},
      {"adds_matrix", r.adds_matrix},
      {"wall_time_ns_per_op", {{"fourvector", r.ns_per_op_fourvector},
                               {"matrix", r.ns_per_op_matrix}}},
      {"drift", {{"fourvector", r.drift_fourvector},
                 {"matrix", r.drift_matrix}}},
  };
}

}  // namespace fourvec

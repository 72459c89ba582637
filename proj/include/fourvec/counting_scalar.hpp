#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>

namespace fourvec {

/// A double that tallies every multiplication and addition/subtraction it
/// takes part in. Negation and comparisons are free. Counters are per thread.
class CountingScalar {
 public:
  struct Tally {
    std::uint64_t mults = 0;
    std::uint64_t adds = 0;
  };

  CountingScalar() = default;
  CountingScalar(double v) : value_(v) {}  // NOLINT: implicit like a scalar

  double value() const { return value_; }

  static Tally& tally() {
    thread_local Tally t;
    return t;
  }
  static void reset() { tally() = Tally{}; }

  friend CountingScalar operator*(CountingScalar a, CountingScalar b) {
    ++tally().mults;
    return a.value_ * b.value_;
  }
  friend CountingScalar operator/(CountingScalar a, CountingScalar b) {
    ++tally().mults;
    return a.value_ / b.value_;
  }
  friend CountingScalar operator+(CountingScalar a, CountingScalar b) {
    ++tally().adds;
    return a.value_ + b.value_;
  }
  friend CountingScalar operator-(CountingScalar a, CountingScalar b) {
    ++tally().adds;
    return a.value_ - b.value_;
  }
  friend CountingScalar operator-(CountingScalar a) { return -a.value_; }
  CountingScalar& operator+=(CountingScalar b) { return *this = *this + b; }
  CountingScalar& operator-=(CountingScalar b) { return *this = *this - b; }
  CountingScalar& operator*=(CountingScalar b) { return *this = *this * b; }

  friend bool operator==(CountingScalar a, CountingScalar b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(CountingScalar a, CountingScalar b) {
    return a.value_ < b.value_;
  }
  friend double abs(CountingScalar a) { return std::abs(a.value_); }

 private:
  double value_ = 0.0;
};

}  // namespace fourvec

namespace Eigen {

template <>
struct NumTraits<fourvec::CountingScalar> : NumTraits<double> {
  using Real = fourvec::CountingScalar;
  using NonInteger = fourvec::CountingScalar;
  using Nested = fourvec::CountingScalar;
  using Literal = fourvec::CountingScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1,
  };
};

}  // namespace Eigen

#pragma once

#include <array>
#include <stdexcept>
#include <string_view>

#include "fourvec/fourvector.hpp"

namespace fourvec {

/// One cell of the basis multiplication table: sign * basis[index].
struct BasisProduct {
  int sign;   // +1 or -1
  int index;  // 0=e, 1=i, 2=j, 3=k

  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

inline constexpr std::array<std::string_view, 4> kBasisNames = {"e", "i", "j",
                                                                 "k"};

// Row is the left factor, column the right factor, both in order e, i, j, k.
inline constexpr std::array<std::array<BasisProduct, 4>, 4> kBasisTable = {{
    {{{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}}},
    {{{-1, 1}, {+1, 0}, {+1, 3}, {-1, 2}}},
    {{{-1, 2}, {-1, 3}, {+1, 0}, {+1, 1}}},
    {{{-1, 3}, {+1, 2}, {-1, 1}, {+1, 0}}},
}};

inline BasisProduct basis_product(int left, int right) {
  if (left < 0 || left > 3 || right < 0 || right > 3) {
    throw std::out_of_range("basis index must be in 0..3");
  }
  return kBasisTable[left][right];
}

template <typename Scalar>
Fourvector<Scalar> to_fourvector(const BasisProduct& p) {
  return scalar_mul(Scalar(p.sign), Fourvector<Scalar>::Unit(p.index));
}

}  // namespace fourvec

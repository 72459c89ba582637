#pragma once

#include <vector>

#include "fourvec/fourvector.hpp"
#include "fourvec/rotation.hpp"

namespace fourvec {

/// P ** Q^-1. Throws ZeroNorm if Q is not invertible.
Fourvectorcd divide(const Fourvectorcd& p, const Fourvectorcd& q);

/// X with B ** X == A, computed as conj(B)^-1 ** A.
Fourvectorcd right_factor(const Fourvectorcd& a, const Fourvectorcd& b);

/// Y with Y ** B == A, computed as hamilton_product(conj(A), B^-1).
Fourvectorcd left_factor(const Fourvectorcd& a, const Fourvectorcd& b);

/// L with L ** p == rotate(p, r); the raw left-factor formula, not reduced
/// to a rotor.
Fourvectorcd equivalent_left_rotor(const Fourvectorcd& p, const Rotor& r);

/// Side on which the constant C multiplies the unknown q.
enum class Side {
  Left,   // q**q + C**q == K
  Right,  // q**q + q**C == K
};

struct QuadraticSolution {
  /// Zero, one or two roots, lexicographically ordered by (re, im) of t, x,
  /// y, z. Empty when degenerate.
  std::vector<Fourvectorcd> solutions;
  /// The linear constraints leave a family of solutions of dimension >= 1.
  bool degenerate = false;
};

/// Solves q**q + q**C == K or q**q + C**q == K.
///
/// q**q only feeds the scalar component, so the three vector equations are
/// linear in q. Their one-dimensional solution line is substituted into the
/// scalar equation, leaving an ordinary complex quadratic in one parameter.
/// Throws NoSolution when no point of the line satisfies the scalar equation.
QuadraticSolution solve_quadratic(Side side, const Fourvectorcd& c,
                                  const Fourvectorcd& k);

/// Lexicographic (re, im) order over t, x, y, z; values within the default
/// tolerance compare equal.
bool lexicographic_less(const Fourvectorcd& a, const Fourvectorcd& b);

}  // namespace fourvec

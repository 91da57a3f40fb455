#pragma once

#include <complex>

namespace spinecensus {

// Evaluation point of the quantum invariants: q0 = exp(i pi s / r) with
// gcd(s, r) = 1, so q0^2 is a primitive r-th root of unity.  s = 1 is the
// standard choice.
struct QuantumContext {
  int r = 5;
  int s = 1;
  std::complex<double> q0;

  static QuantumContext make(int r, int s = 1);  // validates, throws
};

// [k] = (q0^k - q0^-k) / (q0 - q0^-1), real for q0 on the unit circle.
// Computed with complex arithmetic; throws if the imaginary part survives.
double quantum_integer(int k, const QuantumContext& ctx);

// Independent evaluation: sin(k pi s / r) / sin(pi s / r) in long double.
double quantum_integer_real(int k, const QuantumContext& ctx);

// [k]! = [1][2]...[k]; k in [0, r-1].
double quantum_factorial(int k, const QuantumContext& ctx);

// The all-equal-entries quantum 6j symbol {h h h; h h h}:
//   Delta(h,h,h)^4 * sum_{z=3h}^{min(4h, r-2)} (-1)^z [z+1]! /
//                       ([z-3h]!^4 [4h-z]!^3)
// with Delta(h,h,h) = sqrt([h]!^3 / [3h+1]!).  Admissible h: 0 <= 3h <= r-2.
double quantum_6j_all(int h, const QuantumContext& ctx);

// Straight-line re-evaluation of the same expression in long double through
// the sine form of the quantum integers (oracle for the value above).
double quantum_6j_all_real(int h, const QuantumContext& ctx);

// The level-r invariant of the n-tetrahedron one-edged manifolds:
//   sum over admissible h of {h h h; h h h}^n * [2h+1]^(1-n),  n >= 2.
double turaev_viro(int n, const QuantumContext& ctx);

}  // namespace spinecensus

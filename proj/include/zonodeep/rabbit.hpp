#pragma once

#include <vector>

#include "zonodeep/exactmath.hpp"

namespace zonodeep {

// Vector of non-integral rationals together with the lcm of their reduced
// denominators. The quantities below only depend on the entries mod 1.
struct RationalAlphaVector {
  RatVec entries;
  Int common_denominator;  // >= 2

  explicit RationalAlphaVector(RatVec raw);  // Domain if empty or any entry integral
  std::size_t size() const { return entries.size(); }
};

struct PsiResult {
  Rat value;
  Int argmax_q;  // smallest Q in [0, N) attaining the value
};

// sup over integers Q of min_i dist_to_nearest_int(Q * alpha_i). The function
// of Q is periodic with period the common denominator N, so the sweep over
// Q = 0..N-1 is exhaustive.
PsiResult psi(const RationalAlphaVector& alpha);

// The z-extremal vector: coprime residues a <= z/2 divided by z, followed by
// the reciprocals of the distinct primes of z when z is composite. z >= 3.
RationalAlphaVector extremal_alpha(long z);

// extremal_alpha(w_of(d)) padded at the front with copies of 1/w_of(d) so the
// length is exactly d. d >= 1.
RationalAlphaVector padded_extremal_alpha(long d);

}  // namespace zonodeep

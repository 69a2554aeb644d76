#pragma once

#include <vector>

#include "zonodeep/exactmath.hpp"

namespace zonodeep {

// base + sum_i [0, 1] * generators[i] with linearly independent integer
// generators. `det_abs` is |det| of the generator matrix.
class LatticeParallelepiped {
 public:
  LatticeParallelepiped(IntVec base, std::vector<IntVec> generators);

  std::size_t dim() const { return base_.size(); }
  const IntVec& base() const { return base_; }
  const std::vector<IntVec>& generators() const { return generators_; }
  const Int& det_abs() const { return det_abs_; }

 private:
  IntVec base_;
  std::vector<IntVec> generators_;
  Int det_abs_;
};

// Coefficient vector alpha with w = base + sum_i alpha_i * generators[i].
RatVec coefficients_of(const LatticeParallelepiped& p, const RatVec& w);

// All lattice points with every coefficient strictly inside (0, 1), sorted
// lexicographically. Each residue class of Z^d modulo the generator lattice
// holds at most one such point, so the sweep visits |det| candidates (one per
// Hermite-normal-form coset). InstanceTooLarge when |det| exceeds the limit
// (default: the ZONODEEP_MAX_BOX guard).
std::vector<IntVec> interior_lattice_points(const LatticeParallelepiped& p,
                                            const Int& limit = enumeration_guard());

// Lattice points of base + sum_i [0,1) * generators[i]; exactly |det| many.
std::vector<IntVec> half_open_lattice_points(const LatticeParallelepiped& p,
                                             const Int& limit = enumeration_guard());

struct DeepPointResult {
  IntVec point;   // the deep interior lattice point found
  Rat ca;         // its coefficient of asymmetry inside p
  Int multiplier; // the sweep value Q producing it
};

// Starting from interior lattice point w with coefficient vector alpha,
// sweeps Q = 0..N-1 (N = lcm of coefficient denominators), scores
// m(Q) = max_i |frac(Q alpha_i) - 1/2|, and returns the point with
// coefficients frac(Q* alpha_i) for the smallest minimizing Q*. The result
// is again a lattice point of p and its asymmetry is (1/2 + m)/(1/2 - m).
DeepPointResult deep_point(const LatticeParallelepiped& p, const IntVec& w);

// [0, v^z] + [0, e_2] + ... + [0, e_k] where v^z lists z followed by
// z * alpha_i for the remaining entries of extremal_alpha(z). z >= 3.
LatticeParallelepiped extremal_parallelepiped(long z);

// extremal_parallelepiped(w_of(d)) embedded in dimension d, padded with
// generators 2 e_j for the remaining coordinates. d >= 1.
LatticeParallelepiped lifted_extremal(long d);

}  // namespace zonodeep

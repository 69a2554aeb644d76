#pragma once

#include <vector>

#include "zonodeep/exactmath.hpp"
#include "zonodeep/zonotope.hpp"

namespace zonodeep {

// A lonely-runner instance: d >= 2 distinct positive speeds with gcd 1,
// stored sorted ascending (input in any order).
class VelocityVector {
 public:
  explicit VelocityVector(IntVec speeds);

  std::size_t dim() const { return speeds_.size(); }
  const IntVec& speeds() const { return speeds_; }
  const Int& max_speed() const { return speeds_.back(); }

 private:
  IntVec speeds_;
};

// Unbounded slab R n + [0,1]^d. Symmetric about the line through
// c = (1 + n)/2 with direction n; every gauge computation minimizes over
// that recession line.
class Zonohedron {
 public:
  explicit Zonohedron(VelocityVector velocity);

  const VelocityVector& velocity() const { return velocity_; }
  std::size_t dim() const { return velocity_.dim(); }
  const RatVec& center() const { return center_; }

 private:
  VelocityVector velocity_;
  RatVec center_;
};

struct GapResult {
  Rat value;    // max over beta in [0,1) of min_i dist of beta n_i to Z
  Rat witness;  // smallest beta attaining it
};

// The maximum is attained on the finite set {a/(n_i+n_j) : i<j,
// 0 < a < n_i+n_j}; candidates are scanned in increasing order.
GapResult gap(const VelocityVector& n);

// Gauge of x in R n + [-1/2,1/2]^d: min_t max_i 2|x_i - t n_i|, solved
// exactly by evaluating every crossing of the 2d branch lines.
Rat zonohedron_norm(const Zonohedron& zn, const RatVec& x);

// Interior lattice points of the slab, one representative per class modulo
// translation by n: points of the strip {t n + (0,1)^d : t in [0,1)} found
// in the bounding box of [0,n] + [0,1]^d, deduplicated, sorted. Classes are
// what matter: the gauge is invariant under adding n.
std::vector<IntVec> interior_representatives(const Zonohedron& zn,
                                             const Int& limit = enumeration_guard());

struct MinCaResult {
  Rat value;
  IntVec argmin;  // lexicographically smallest minimizing representative
};

// Minimum coefficient of asymmetry over the interior representatives.
MinCaResult min_ca_zonohedron(const Zonohedron& zn, const Int& limit = enumeration_guard());

struct LrcResult {
  bool holds;     // gap >= 1/(d+1)
  Rat gap_value;
  Rat witness;    // beta attaining the gap
  Rat threshold;  // 1/(d+1)
};

LrcResult lrc_holds(const VelocityVector& n);

struct SweepReport {
  long dimension;
  long max_speed;
  Int visited;                     // velocity vectors evaluated
  Rat threshold;                   // 1/(d+1)
  Rat min_gap;
  IntVec argmin;                   // lexicographically first attaining min_gap
  std::vector<IntVec> tight;       // gap == threshold, in lexicographic order
  std::vector<IntVec> violations;  // gap < threshold (conjecturally empty)
};

// Evaluates gap on every velocity vector with entries <= max_speed.
// BudgetExceeded when C(max_speed, dimension) exceeds the budget. The
// report is independent of the worker count.
SweepReport sweep(long dimension, long max_speed, unsigned jobs = 1,
                  const Int& budget = enumeration_guard());

VelocityVector canonical_instance(long d);  // (1, 2, ..., d)

// Compact companions of the slab: Zon(e_1,...,e_d, n) and Zon(e_1,...,e_d, 3n).
LatticeZonotope lonely_runner_zonotope(const VelocityVector& n);
LatticeZonotope t_zonotope(const VelocityVector& n);

// Asymmetry of the all-ones point in the canonical-instance zonotope;
// equals d for every d >= 2.
Rat ca_of_all_one(long d);

enum class ZonohedronCount { Volume, Interior, Closed };

// Closed-form lattice data of Zon(e_1,...,e_d, n): normalized volume
// 1 + sum n_i; interior count sum of phi(l) over l dividing some n_j;
// closed count 2^d + sum of phi(l) (2^{|J_l|} - 1) with J_l the indices
// j with l | n_j.
Int count_zonohedron(const VelocityVector& n, ZonohedronCount mode);

}  // namespace zonodeep

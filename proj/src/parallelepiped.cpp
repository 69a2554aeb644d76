#include "zonodeep/parallelepiped.hpp"

#include <algorithm>

#include "zonodeep/asymmetry.hpp"
#include "zonodeep/numtheory.hpp"
#include "zonodeep/rabbit.hpp"

namespace zonodeep {

namespace {

Int det_of_columns(const std::vector<IntVec>& cols) {
  Rat d = determinant(RatMat::from_columns(cols));
  return d.get_num();
}

// Lower-triangular column Hermite form of a nonsingular integer matrix,
// positive diagonal. Column operations only, so the columns span the same
// lattice as the input generators.
std::vector<IntVec> hermite_columns(const std::vector<IntVec>& gens) {
  const std::size_t d = gens[0].size();
  std::vector<IntVec> h(d, IntVec(d));  // h[c] is a column
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) h[c][r] = gens[c][r];
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (h[j][i] == 0) continue;
      Int g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h[i][i].get_mpz_t(),
                 h[j][i].get_mpz_t());
      Int u = h[i][i] / g;
      Int v = h[j][i] / g;
      for (std::size_t r = 0; r < d; ++r) {
        Int ci = h[i][r], cj = h[j][r];
        h[i][r] = x * ci + y * cj;
        h[j][r] = u * cj - v * ci;
      }
    }
    if (h[i][i] < 0)
      for (std::size_t r = 0; r < d; ++r) h[i][r] = -h[i][r];
  }
  return h;
}

struct CosetSweep {
  std::vector<RatVec> inverse_columns;  // V^{-1} e_j
  std::vector<Int> diagonal;            // Hermite diagonal, product = |det|
};

CosetSweep prepare_sweep(const LatticeParallelepiped& p) {
  const std::size_t d = p.dim();
  RatMat v = RatMat::from_columns(p.generators());
  CosetSweep s;
  for (std::size_t j = 0; j < d; ++j) {
    RatVec e(d, Rat(0));
    e[j] = 1;
    s.inverse_columns.push_back(solve_linear(v, e));
  }
  std::vector<IntVec> h = hermite_columns(p.generators());
  for (std::size_t i = 0; i < d; ++i) s.diagonal.push_back(h[i][i]);
  return s;
}

}  // namespace

LatticeParallelepiped::LatticeParallelepiped(IntVec base, std::vector<IntVec> generators)
    : base_(std::move(base)), generators_(std::move(generators)) {
  const std::size_t d = base_.size();
  if (d == 0) fail(ErrorKind::Domain, "parallelepiped dimension must be positive");
  if (generators_.size() != d)
    fail(ErrorKind::Domain, "parallelepiped needs exactly dim generators");
  for (const IntVec& g : generators_)
    if (g.size() != d) fail(ErrorKind::Domain, "generator dimension mismatch");
  Int det = det_of_columns(generators_);
  if (det == 0) fail(ErrorKind::SingularMatrix, "generators are linearly dependent");
  det_abs_ = abs(det);
}

RatVec coefficients_of(const LatticeParallelepiped& p, const RatVec& w) {
  if (w.size() != p.dim()) fail(ErrorKind::Domain, "point dimension mismatch");
  return solve_linear(RatMat::from_columns(p.generators()),
                      sub(w, to_rat(p.base())));
}

namespace {

// Shared sweep over one representative per coset of the generator lattice.
// `half_open` keeps coefficient 0; otherwise such cosets are skipped.
std::vector<IntVec> coset_points(const LatticeParallelepiped& p, bool half_open,
                                 const Int& limit) {
  if (p.det_abs() > limit)
    fail(ErrorKind::InstanceTooLarge,
         "enumeration needs " + p.det_abs().get_str() + " candidates, limit is " +
             limit.get_str());
  const std::size_t d = p.dim();
  CosetSweep sweep = prepare_sweep(p);
  std::vector<IntVec> points;
  IntVec rep(d, Int(0));
  while (true) {
    // alpha = V^{-1} rep; the unique point of this coset with coefficients in
    // [0,1)^d is base + rep - V * floor(alpha).
    RatVec alpha(d, Rat(0));
    for (std::size_t j = 0; j < d; ++j)
      if (rep[j] != 0) alpha = add(alpha, scale(Rat(rep[j]), sweep.inverse_columns[j]));
    bool keep = true;
    IntVec x = add(p.base(), rep);
    for (std::size_t i = 0; i < d && keep; ++i) {
      Rat f = frac_part(alpha[i]);
      if (!half_open && f == 0) keep = false;
      Int fl = floor_rat(alpha[i]);
      if (fl != 0)
        for (std::size_t r = 0; r < d; ++r) x[r] -= fl * p.generators()[i][r];
    }
    if (keep) points.push_back(x);
    std::size_t pos = 0;
    while (pos < d) {
      ++rep[pos];
      if (rep[pos] < sweep.diagonal[pos]) break;
      rep[pos] = 0;
      ++pos;
    }
    if (pos == d) break;
  }
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace

std::vector<IntVec> interior_lattice_points(const LatticeParallelepiped& p, const Int& limit) {
  return coset_points(p, false, limit);
}

std::vector<IntVec> half_open_lattice_points(const LatticeParallelepiped& p, const Int& limit) {
  return coset_points(p, true, limit);
}

DeepPointResult deep_point(const LatticeParallelepiped& p, const IntVec& w) {
  if (w.size() != p.dim()) fail(ErrorKind::Domain, "point dimension mismatch");
  RatVec alpha = coefficients_of(p, to_rat(w));
  for (const Rat& a : alpha)
    if (a <= 0 || a >= 1)
      fail(ErrorKind::NotInterior, "starting point is not interior to the parallelepiped");
  const std::size_t d = p.dim();
  Int n = lcm_of_denominators(alpha);
  Rat best = 1;
  Int best_q = -1;
  RatVec best_frac;
  for (Int q = 0; q < n; ++q) {
    Rat worst = 0;
    RatVec fracs(d);
    for (std::size_t i = 0; i < d; ++i) {
      fracs[i] = frac_part(Rat(q) * alpha[i]);
      Rat dev = abs(fracs[i] - Rat(1, 2));
      if (dev > worst) worst = dev;
    }
    if (worst < best) {
      best = worst;
      best_q = q;
      best_frac = fracs;
    }
  }
  // Q = 1 keeps the starting coefficients, so the score is below 1/2 and
  // every chosen coefficient is strictly inside (0, 1). The result is a
  // lattice point: base + V * best_frac = base + Q*(w - base) - V * floor.
  RatVec acc = to_rat(p.base());
  for (std::size_t i = 0; i < d; ++i)
    acc = add(acc, scale(best_frac[i], to_rat(p.generators()[i])));
  IntVec point = to_int(acc);
  return DeepPointResult{point, ca_parallelepiped(best_frac), best_q};
}

LatticeParallelepiped extremal_parallelepiped(long z) {
  RationalAlphaVector alpha = extremal_alpha(z);
  const std::size_t k = alpha.size();
  RatVec scaled = scale(Rat(z), alpha.entries);
  scaled[0] = z;  // first entry is z itself, not z * alpha_1 = 1
  IntVec v = to_int(scaled);
  std::vector<IntVec> gens;
  gens.push_back(v);
  for (std::size_t j = 1; j < k; ++j) {
    IntVec e(k, Int(0));
    e[j] = 1;
    gens.push_back(e);
  }
  return LatticeParallelepiped(IntVec(k, Int(0)), gens);
}

LatticeParallelepiped lifted_extremal(long d) {
  if (d < 1) fail(ErrorKind::Domain, "lifted_extremal needs d >= 1");
  long z = w_of(d);
  LatticeParallelepiped core = extremal_parallelepiped(z);
  const std::size_t k = core.dim();
  const std::size_t dd = static_cast<std::size_t>(d);
  std::vector<IntVec> gens;
  for (const IntVec& g : core.generators()) {
    IntVec lifted(dd, Int(0));
    for (std::size_t i = 0; i < k; ++i) lifted[i] = g[i];
    gens.push_back(lifted);
  }
  for (std::size_t j = k; j < dd; ++j) {
    IntVec e(dd, Int(0));
    e[j] = 2;
    gens.push_back(e);
  }
  return LatticeParallelepiped(IntVec(dd, Int(0)), gens);
}

}  // namespace zonodeep

#include "zonodeep/asymmetry.hpp"

#include <algorithm>
#include <set>

namespace zonodeep {

SymmetricZonotopeBody::SymmetricZonotopeBody(std::size_t dim, std::vector<RatVec> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (dim_ == 0) fail(ErrorKind::Domain, "body dimension must be positive");
  for (const RatVec& g : generators_)
    if (g.size() != dim_) fail(ErrorKind::Domain, "generator dimension mismatch");
  if (rank_of(generators_, dim_) != dim_)
    fail(ErrorKind::Domain, "generators do not span the ambient space");
  // One candidate normal per (dim-1)-subset of generators; rank-deficient
  // subsets are skipped.
  std::set<IntVec> seen;
  for_each_combination(generators_.size(), dim_ - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVec> subset;
    subset.reserve(dim_ - 1);
    for (std::size_t j : idx) subset.push_back(generators_[j]);
    IntVec u;
    try {
      u = kernel_normal(subset, dim_);
    } catch (const Error&) {
      return;
    }
    seen.insert(u);
  });
  for (const IntVec& u : seen) {
    normals_.push_back(u);
    support_.push_back(support_value(*this, u));
  }
}

std::vector<IntVec> facet_normals(const SymmetricZonotopeBody& body) { return body.normals(); }

Rat support_value(const SymmetricZonotopeBody& body, const IntVec& u) {
  Rat h = 0;
  RatVec ru = to_rat(u);
  for (const RatVec& g : body.generators()) h += abs(dot(ru, g));
  return h / 2;
}

Rat zonotope_norm(const SymmetricZonotopeBody& body, const RatVec& x) {
  if (x.size() != body.dim()) fail(ErrorKind::Domain, "point dimension mismatch");
  Rat best = 0;
  const std::vector<IntVec>& normals = body.normals();
  for (std::size_t i = 0; i < normals.size(); ++i) {
    Rat v = abs(dot(to_rat(normals[i]), x)) / body.support(i);
    if (v > best) best = v;
  }
  return best;
}

Rat ca_from_norm(const Rat& nu) {
  if (nu < 0) fail(ErrorKind::Domain, "norm must be nonnegative");
  if (nu >= 1) fail(ErrorKind::Domain, "norm must be below 1 for an interior point");
  return (1 + nu) / (1 - nu);
}

AsymmetryReport ca_symmetric(const SymmetricZonotopeBody& body, const RatVec& center,
                             const RatVec& w) {
  Rat nu = zonotope_norm(body, sub(w, center));
  if (nu >= 1) fail(ErrorKind::NotInterior, "point is not interior to the body");
  return AsymmetryReport{w, nu, ca_from_norm(nu)};
}

Rat ca_parallelepiped(const RatVec& alphas) {
  if (alphas.empty()) fail(ErrorKind::Domain, "coefficient vector must be nonempty");
  Rat m = 0;
  for (const Rat& a : alphas) {
    if (a <= 0 || a >= 1)
      fail(ErrorKind::Domain, "coefficient " + to_string(a) + " outside the open unit interval");
    Rat dev = abs(a - Rat(1, 2));
    if (dev > m) m = dev;
  }
  return (Rat(1, 2) + m) / (Rat(1, 2) - m);
}

}  // namespace zonodeep

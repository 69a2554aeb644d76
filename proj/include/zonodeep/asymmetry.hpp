#pragma once

#include <vector>

#include "zonodeep/exactmath.hpp"

namespace zonodeep {

// Origin-centered body sum_i [-g_i/2, +g_i/2]. Generators may be rational;
// they must span the ambient space. Facet normals and support values are
// precomputed at construction since every norm evaluation uses them.
class SymmetricZonotopeBody {
 public:
  SymmetricZonotopeBody(std::size_t dim, std::vector<RatVec> generators);

  std::size_t dim() const { return dim_; }
  const std::vector<RatVec>& generators() const { return generators_; }
  const std::vector<IntVec>& normals() const { return normals_; }

  // Support value h(u) = (1/2) sum_i |u . g_i| for a precomputed normal index.
  const Rat& support(std::size_t normal_index) const { return support_[normal_index]; }

 private:
  std::size_t dim_;
  std::vector<RatVec> generators_;
  std::vector<IntVec> normals_;
  std::vector<Rat> support_;
};

struct AsymmetryReport {
  RatVec point;
  Rat norm;  // gauge of point relative to the body
  Rat ca;    // (1 + norm) / (1 - norm)
};

// Primitive facet normals up to sign, sign-normalized so the first nonzero
// entry is positive, deduplicated, sorted lexicographically.
std::vector<IntVec> facet_normals(const SymmetricZonotopeBody& body);

Rat support_value(const SymmetricZonotopeBody& body, const IntVec& u);

// Gauge norm ||x|| = max over facet normals of |u . x| / h(u).
Rat zonotope_norm(const SymmetricZonotopeBody& body, const RatVec& x);

// (1 + nu) / (1 - nu). Domain unless 0 <= nu < 1.
Rat ca_from_norm(const Rat& nu);

// Coefficient of asymmetry of `body + center` about the interior point w.
// NotInterior if w is not strictly inside.
AsymmetryReport ca_symmetric(const SymmetricZonotopeBody& body, const RatVec& center,
                             const RatVec& w);

// Asymmetry about the point with given coefficients inside a unit-coefficient
// parallelepiped: (1/2 + m) / (1/2 - m) with m = max_i |alpha_i - 1/2|.
// Domain unless every alpha_i lies in the open interval (0, 1).
Rat ca_parallelepiped(const RatVec& alphas);

}  // namespace zonodeep

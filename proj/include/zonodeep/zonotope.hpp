#pragma once

#include <vector>

#include "zonodeep/asymmetry.hpp"
#include "zonodeep/exactmath.hpp"
#include "zonodeep/parallelepiped.hpp"

namespace zonodeep {

// sum_j [0, generators[j]] with integer generators spanning the space.
// Duplicate, antiparallel and zero generators are allowed. The symmetric
// body Z - center and its facet data are precomputed at construction.
class LatticeZonotope {
 public:
  LatticeZonotope(std::size_t dim, std::vector<IntVec> generators);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVec>& generators() const { return generators_; }
  const RatVec& center() const { return center_; }
  const SymmetricZonotopeBody& body() const { return body_; }
  const IntVec& generator_sum() const { return generator_sum_; }  // = 2 * center

 private:
  std::size_t dim_;
  std::vector<IntVec> generators_;
  IntVec generator_sum_;
  RatVec center_;
  SymmetricZonotopeBody body_;
};

// Facet of a zonotope: outer normal, the full set S of generator indices
// orthogonal to it (rank dim-1), and the indices with positive projection,
// whose generator sum is the facet's base translation.
struct FacetDescription {
  IntVec normal;                           // primitive outer normal
  std::vector<std::size_t> spanning_indices;  // S, sorted
  std::vector<std::size_t> shifted_indices;   // { j : normal . g_j > 0 }, sorted

  IntVec base_point(const LatticeZonotope& z) const;
};

// One (dim-1)-cell of a facet paving: a translate of the sub-parallelepiped
// spanned by the generators in `spanning`.
struct PavingCell {
  std::vector<std::size_t> spanning;  // global generator indices, size dim-1
  IntVec translation;
};

bool contains(const LatticeZonotope& z, const RatVec& x, bool strict);

// Lattice points strictly inside, in lexicographic order, found by scanning
// the integer bounding box. InstanceTooLarge when the box has more than
// `limit` points.
std::vector<IntVec> interior_lattice_points(const LatticeZonotope& z,
                                            const Int& limit = enumeration_guard());

// The facet containing boundary point p; when p lies on several facets the
// lexicographically smallest outer normal wins. NotOnBoundary unless the
// gauge of p - center is exactly 1.
FacetDescription facet_through(const LatticeZonotope& z, const RatVec& p);

// Paving of the facet into translates of (dim-1)-sub-parallelepipeds: the
// sweep construction processes the facet's generators in index order, and the
// result is sorted by (spanning, translation), so the cell list is canonical.
// Cells are interior-disjoint within the facet's hyperplane and their union
// is the facet.
std::vector<PavingCell> pave_facet(const FacetDescription& f, const LatticeZonotope& z);

// Whether p lies in the closed cell (a translate of the sub-parallelepiped
// spanned by cell.spanning inside the hyperplane of facet f).
bool cell_contains(const PavingCell& cell, const FacetDescription& f,
                   const LatticeZonotope& z, const RatVec& p);

// Symmetric lattice parallelepiped P with center(P) = center(z), v interior
// to P, and P inside z: built from the cell of the paved facet hit by the
// ray from the center through v. NotInterior unless v is an interior
// lattice point.
LatticeParallelepiped steinitz_reduce(const LatticeZonotope& z, const IntVec& v);

struct ZonotopeDeepPoint {
  IntVec start;               // lexicographically first interior lattice point
  LatticeParallelepiped pep;  // the reduction used
  IntVec point;               // deep point found inside the parallelepiped
  Rat ca;                     // its coefficient of asymmetry in z
};

// NoInteriorPoint when z has no interior lattice point.
ZonotopeDeepPoint deep_point(const LatticeZonotope& z,
                             const Int& limit = enumeration_guard());

// Coefficients g_0..g_dim of the lattice-point counting polynomial of the
// dilates: |kZ meet Z^dim| = sum_i g_i k^i, with g_i the sum over i-subsets
// J of the generators of the gcd of i-minors of V_J. InstanceTooLarge when
// the number of generators makes the subset sum unreasonable.
std::vector<Int> ehrhart_coefficients(const LatticeZonotope& z);

enum class CountMode { Interior, Closed };

// Interior: (-1)^dim * sum_i (-1)^i g_i. Closed: sum_i g_i.
Int count_lattice_points(const LatticeZonotope& z, CountMode mode);

}  // namespace zonodeep

#include "zonodeep/zonotope.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace zonodeep {

namespace {

std::vector<RatVec> rat_columns(const std::vector<IntVec>& gens) {
  std::vector<RatVec> out;
  out.reserve(gens.size());
  for (const IntVec& g : gens) out.push_back(to_rat(g));
  return out;
}

IntVec negated(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

std::size_t first_nonzero(const IntVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  fail(ErrorKind::Domain, "zero vector has no nonzero coordinate");
}

IntVec drop_coordinate(const IntVec& v, std::size_t drop) {
  IntVec out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != drop) out.push_back(v[i]);
  return out;
}

RatVec drop_coordinate(const RatVec& v, std::size_t drop) {
  RatVec out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != drop) out.push_back(v[i]);
  return out;
}

// Primitive facet normals, canonical sign, sorted: one per hyperplane spanned
// by an independent (r-1)-subset of gens.
std::vector<IntVec> canonical_normals(const std::vector<IntVec>& gens, std::size_t r) {
  std::vector<RatVec> rat = rat_columns(gens);
  std::set<IntVec> seen;
  for_each_combination(gens.size(), r - 1, [&](const std::vector<std::size_t>& subset) {
    std::vector<RatVec> span;
    span.reserve(subset.size());
    for (std::size_t j : subset) span.push_back(rat[j]);
    try {
      seen.insert(kernel_normal(span, r));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RankDeficient) throw;
    }
  });
  return std::vector<IntVec>(seen.begin(), seen.end());
}

struct LocalCell {
  std::vector<std::size_t> spanning;  // indices into the current generator list
  std::vector<std::size_t> offset;
};

// Paves the zonotope of `gens` (rank r in dimension r) by sweeping in the
// last generator: the region added to Zon(gens minus last) is a prism over
// each facet visible from that direction, and each such facet is paved
// recursively after projecting its hyperplane one dimension down. When the
// leading generators do not span, the whole zonotope is a single prism.
std::vector<LocalCell> pave_recursive(const std::vector<IntVec>& gens, std::size_t r) {
  if (r == 0) return {LocalCell{{}, {}}};
  const std::size_t last = gens.size() - 1;
  std::vector<IntVec> head(gens.begin(), gens.end() - 1);
  const IntVec& g_last = gens[last];

  if (rank_of(head, r) < r) {
    // Prism case: head spans a hyperplane and g_last leaves it.
    std::vector<IntVec> probe;
    std::vector<RatVec> indep;
    for (const IntVec& g : head) {
      probe.push_back(g);
      if (rank_of(probe, r) == indep.size() + 1)
        indep.push_back(to_rat(g));
      else
        probe.pop_back();
    }
    IntVec v = kernel_normal(indep, r);
    std::size_t dropc = first_nonzero(v);
    std::vector<IntVec> proj;
    proj.reserve(head.size());
    for (const IntVec& g : head) proj.push_back(drop_coordinate(g, dropc));
    std::vector<LocalCell> cells = pave_recursive(proj, r - 1);
    for (LocalCell& c : cells) c.spanning.push_back(last);
    return cells;
  }

  std::vector<LocalCell> cells = pave_recursive(head, r);
  for (const IntVec& u : canonical_normals(head, r)) {
    for (int sign = 0; sign < 2; ++sign) {
      IntVec v = sign == 0 ? u : negated(u);
      if (dot(v, g_last) <= 0) continue;  // facet not visible from g_last
      std::size_t dropc = first_nonzero(v);
      std::vector<std::size_t> on_facet, shifted;
      std::vector<IntVec> facet_gens;
      for (std::size_t j = 0; j < head.size(); ++j) {
        Int dv = dot(v, head[j]);
        if (dv == 0) {
          on_facet.push_back(j);
          facet_gens.push_back(drop_coordinate(head[j], dropc));
        } else if (dv > 0) {
          shifted.push_back(j);
        }
      }
      for (const LocalCell& sub : pave_recursive(facet_gens, r - 1)) {
        LocalCell cell;
        for (std::size_t i : sub.spanning) cell.spanning.push_back(on_facet[i]);
        cell.spanning.push_back(last);
        for (std::size_t i : sub.offset) cell.offset.push_back(on_facet[i]);
        cell.offset.insert(cell.offset.end(), shifted.begin(), shifted.end());
        std::sort(cell.offset.begin(), cell.offset.end());
        cells.push_back(std::move(cell));
      }
    }
  }
  return cells;
}

}  // namespace

LatticeZonotope::LatticeZonotope(std::size_t dim, std::vector<IntVec> generators)
    : dim_(dim),
      generators_(std::move(generators)),
      generator_sum_(dim, Int(0)),
      center_(dim, Rat(0)),
      body_(dim, rat_columns(generators_)) {
  for (const IntVec& g : generators_)
    for (std::size_t i = 0; i < dim_; ++i) generator_sum_[i] += g[i];
  for (std::size_t i = 0; i < dim_; ++i) center_[i] = make_rat(generator_sum_[i], 2);
}

IntVec FacetDescription::base_point(const LatticeZonotope& z) const {
  IntVec b(z.dim(), Int(0));
  for (std::size_t j : shifted_indices) b = add(b, z.generators()[j]);
  return b;
}

bool contains(const LatticeZonotope& z, const RatVec& x, bool strict) {
  Rat nu = zonotope_norm(z.body(), sub(x, z.center()));
  return strict ? nu < 1 : nu <= 1;
}

std::vector<IntVec> interior_lattice_points(const LatticeZonotope& z, const Int& limit) {
  const std::size_t d = z.dim();
  IntVec lo(d, Int(0)), hi(d, Int(0));
  for (const IntVec& g : z.generators()) {
    for (std::size_t i = 0; i < d; ++i) {
      if (g[i] < 0)
        lo[i] += g[i];
      else
        hi[i] += g[i];
    }
  }
  Int box = 1;
  for (std::size_t i = 0; i < d; ++i) box *= hi[i] - lo[i] + 1;
  if (box > limit)
    fail(ErrorKind::InstanceTooLarge, "bounding box holds " + box.get_str() +
                                          " lattice points, limit is " + limit.get_str());

  // Integer membership test: x is interior iff |u.(2x - s)| < sum_i |u.g_i|
  // for every facet normal u, where s is the generator sum.
  const std::vector<IntVec>& normals = z.body().normals();
  std::vector<Int> width;
  width.reserve(normals.size());
  for (const IntVec& u : normals) {
    Int total = 0;
    for (const IntVec& g : z.generators()) total += abs(dot(u, g));
    width.push_back(total);
  }

  std::vector<IntVec> out;
  IntVec x(lo);
  while (true) {
    bool inside = true;
    for (std::size_t k = 0; k < normals.size() && inside; ++k) {
      Int t = 0;
      for (std::size_t i = 0; i < d; ++i) t += normals[k][i] * (2 * x[i] - z.generator_sum()[i]);
      inside = abs(t) < width[k];
    }
    if (inside) out.push_back(x);
    std::size_t j = d;
    while (j > 0 && x[j - 1] == hi[j - 1]) --j;
    if (j == 0) break;
    ++x[j - 1];
    for (std::size_t k = j; k < d; ++k) x[k] = lo[k];
  }
  return out;
}

FacetDescription facet_through(const LatticeZonotope& z, const RatVec& p) {
  RatVec x = sub(p, z.center());
  if (zonotope_norm(z.body(), x) != 1)
    fail(ErrorKind::NotOnBoundary, "point is not on the boundary of the zonotope");
  const std::vector<IntVec>& normals = z.body().normals();
  bool found = false;
  IntVec best;
  for (std::size_t k = 0; k < normals.size(); ++k) {
    Rat d = dot(to_rat(normals[k]), x);
    const Rat& h = z.body().support(k);
    IntVec candidate;
    if (d == h)
      candidate = normals[k];
    else if (-d == h)
      candidate = negated(normals[k]);
    else
      continue;
    if (!found || candidate < best) {
      best = std::move(candidate);
      found = true;
    }
  }
  if (!found) fail(ErrorKind::NotOnBoundary, "no facet attains the support value at p");
  FacetDescription f;
  f.normal = std::move(best);
  for (std::size_t j = 0; j < z.generators().size(); ++j) {
    Int d = dot(f.normal, z.generators()[j]);
    if (d == 0)
      f.spanning_indices.push_back(j);
    else if (d > 0)
      f.shifted_indices.push_back(j);
  }
  return f;
}

std::vector<PavingCell> pave_facet(const FacetDescription& f, const LatticeZonotope& z) {
  const std::size_t d = z.dim();
  const std::size_t dropc = first_nonzero(f.normal);
  std::vector<IntVec> gens;
  gens.reserve(f.spanning_indices.size());
  for (std::size_t j : f.spanning_indices)
    gens.push_back(drop_coordinate(z.generators()[j], dropc));
  const IntVec base = f.base_point(z);

  std::vector<PavingCell> out;
  for (const LocalCell& c : pave_recursive(gens, d - 1)) {
    PavingCell cell;
    cell.spanning.reserve(c.spanning.size());
    for (std::size_t i : c.spanning) cell.spanning.push_back(f.spanning_indices[i]);
    std::sort(cell.spanning.begin(), cell.spanning.end());
    cell.translation = base;
    for (std::size_t i : c.offset)
      cell.translation = add(cell.translation, z.generators()[f.spanning_indices[i]]);
    out.push_back(std::move(cell));
  }
  std::sort(out.begin(), out.end(), [](const PavingCell& a, const PavingCell& b) {
    if (a.spanning != b.spanning) return a.spanning < b.spanning;
    return a.translation < b.translation;
  });
  return out;
}

bool cell_contains(const PavingCell& cell, const FacetDescription& f,
                   const LatticeZonotope& z, const RatVec& p) {
  RatVec rel = sub(p, to_rat(cell.translation));
  if (dot(to_rat(f.normal), rel) != 0) return false;
  if (z.dim() == 1) return true;  // 0-cell: the hyperplane check pins p
  const std::size_t dropc = first_nonzero(f.normal);
  std::vector<RatVec> cols;
  cols.reserve(cell.spanning.size());
  for (std::size_t j : cell.spanning)
    cols.push_back(to_rat(drop_coordinate(z.generators()[j], dropc)));
  RatVec lambda = solve_linear(RatMat::from_columns(cols), drop_coordinate(rel, dropc));
  for (const Rat& l : lambda)
    if (l < 0 || l > 1) return false;
  return true;
}

LatticeParallelepiped steinitz_reduce(const LatticeZonotope& z, const IntVec& v) {
  RatVec dir = sub(to_rat(v), z.center());
  Rat nu = zonotope_norm(z.body(), dir);
  if (nu >= 1) fail(ErrorKind::NotInterior, "point is not strictly inside the zonotope");
  if (nu == 0) {
    dir[0] = 1;  // v is the center; any direction selects a valid facet
    nu = zonotope_norm(z.body(), dir);
  }
  RatVec p = add(z.center(), scale(Rat(1) / nu, dir));

  FacetDescription f = facet_through(z, p);
  std::vector<PavingCell> cells = pave_facet(f, z);
  const PavingCell* hit = nullptr;
  for (const PavingCell& cell : cells) {
    if (cell_contains(cell, f, z, p)) {
      hit = &cell;
      break;
    }
  }
  if (hit == nullptr) fail(ErrorKind::Domain, "paving does not cover the boundary point");

  // The opposite generator closes the parallelepiped: the cell and its
  // antipodal copy are its two facets normal to f, so the center matches
  // the zonotope's and the segment through v stays inside.
  IntVec t_last = sub(z.generator_sum(), hit->translation);
  t_last = sub(t_last, hit->translation);
  std::vector<IntVec> gens;
  gens.reserve(z.dim());
  for (std::size_t j : hit->spanning) {
    gens.push_back(z.generators()[j]);
    t_last = sub(t_last, z.generators()[j]);
  }
  gens.push_back(std::move(t_last));
  return LatticeParallelepiped(hit->translation, std::move(gens));
}

ZonotopeDeepPoint deep_point(const LatticeZonotope& z, const Int& limit) {
  std::vector<IntVec> pts = interior_lattice_points(z, limit);
  if (pts.empty()) fail(ErrorKind::NoInteriorPoint, "zonotope has no interior lattice point");
  ZonotopeDeepPoint out{pts.front(), steinitz_reduce(z, pts.front()), IntVec{}, Rat(0)};
  DeepPointResult inner = deep_point(out.pep, out.start);
  out.point = std::move(inner.point);
  out.ca = ca_symmetric(z.body(), z.center(), to_rat(out.point)).ca;
  return out;
}

std::vector<Int> ehrhart_coefficients(const LatticeZonotope& z) {
  const std::size_t d = z.dim();
  const std::size_t m = z.generators().size();
  if (m > 22)
    fail(ErrorKind::InstanceTooLarge,
         "counting needs one term per generator subset; " + std::to_string(m) +
             " generators exceed the supported 22");
  std::vector<Int> g(d + 1, Int(0));
  g[0] = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    for_each_combination(m, i, [&](const std::vector<std::size_t>& subset) {
      std::vector<IntVec> cols;
      cols.reserve(i);
      for (std::size_t j : subset) cols.push_back(z.generators()[j]);
      g[i] += gcd_of_minors(RatMat::from_columns(cols), i);
    });
  }
  return g;
}

Int count_lattice_points(const LatticeZonotope& z, CountMode mode) {
  std::vector<Int> g = ehrhart_coefficients(z);
  Int total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (mode == CountMode::Closed || (z.dim() - i) % 2 == 0)
      total += g[i];
    else
      total -= g[i];
  }
  return total;
}

}  // namespace zonodeep

#include "zonodeep/lonelyrunner.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>
#include <thread>
#include <utility>

#include "zonodeep/numtheory.hpp"

namespace zonodeep {

namespace {

long to_long(const Int& v, const char* what) {
  if (!v.fits_slong_p()) fail(ErrorKind::Domain, std::string(what) + " does not fit a machine word");
  return v.get_si();
}

}  // namespace

VelocityVector::VelocityVector(IntVec speeds) : speeds_(std::move(speeds)) {
  if (speeds_.size() < 2) fail(ErrorKind::Domain, "a velocity vector needs at least two speeds");
  std::sort(speeds_.begin(), speeds_.end());
  if (speeds_.front() <= 0) fail(ErrorKind::Domain, "speeds must be positive");
  Int g = 0;
  for (std::size_t i = 0; i < speeds_.size(); ++i) {
    if (i > 0 && speeds_[i] == speeds_[i - 1])
      fail(ErrorKind::Domain, "speeds must be distinct");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), speeds_[i].get_mpz_t());
  }
  if (g != 1) fail(ErrorKind::Domain, "speeds must have gcd 1");
}

Zonohedron::Zonohedron(VelocityVector velocity) : velocity_(std::move(velocity)) {
  center_.reserve(velocity_.dim());
  for (const Int& s : velocity_.speeds()) center_.push_back(make_rat(s + 1, 2));
}

GapResult gap(const VelocityVector& n) {
  const IntVec& sp = n.speeds();
  std::set<Rat> candidates;
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t j = i + 1; j < sp.size(); ++j) {
      Int s = sp[i] + sp[j];
      for (Int a = 1; a < s; ++a) candidates.insert(make_rat(a, s));
    }
  GapResult best{Rat(0), Rat(0)};
  for (const Rat& beta : candidates) {
    Rat value;
    bool first = true;
    for (const Int& s : sp) {
      Rat d = dist_to_nearest_int(Rat(beta * s));
      if (first || d < value) {
        value = d;
        first = false;
      }
    }
    if (value > best.value) best = {value, beta};
  }
  return best;
}

Rat zonohedron_norm(const Zonohedron& zn, const RatVec& x) {
  const IntVec& sp = zn.velocity().speeds();
  if (x.size() != sp.size()) fail(ErrorKind::Domain, "point dimension mismatch");
  std::set<Rat> candidates;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    for (std::size_t j = i; j < sp.size(); ++j) {
      candidates.insert(Rat((x[i] + x[j]) / Rat(sp[i] + sp[j])));
      if (j > i) candidates.insert(Rat((x[i] - x[j]) / Rat(sp[i] - sp[j])));
    }
  }
  bool first = true;
  Rat norm;
  for (const Rat& t : candidates) {
    Rat worst = 0;
    for (std::size_t i = 0; i < sp.size(); ++i) {
      Rat v = Rat(2 * (x[i] - t * sp[i]));
      if (v < 0) v = -v;
      if (v > worst) worst = v;
    }
    if (first || worst < norm) {
      norm = worst;
      first = false;
    }
  }
  return norm;
}

std::vector<IntVec> interior_representatives(const Zonohedron& zn, const Int& limit) {
  const IntVec& sp = zn.velocity().speeds();
  const std::size_t d = sp.size();
  Int box = 1;
  for (const Int& s : sp) box *= s + 2;
  if (box > limit)
    fail(ErrorKind::InstanceTooLarge, "bounding box holds " + box.get_str() +
                                          " lattice points, limit is " + limit.get_str());

  std::vector<IntVec> reps;
  IntVec w(d, Int(0));
  while (true) {
    // w is interior iff the witness interval (lo, hi) = { t : w - t n in
    // (0,1)^d } is nonempty; the class representative is the member whose
    // interval meets [0, 1).
    Rat lo, hi;
    for (std::size_t i = 0; i < d; ++i) {
      Rat a = make_rat(w[i] - 1, sp[i]);
      Rat b = make_rat(w[i], sp[i]);
      if (i == 0 || a > lo) lo = a;
      if (i == 0 || b < hi) hi = b;
    }
    if (lo < hi && hi > 0 && lo < 1) {
      bool fresh = true;
      for (const IntVec& seen : reps) {
        Rat k = make_rat(w[0] - seen[0], sp[0]);
        if (is_integral(k)) {
          Int ki = floor_rat(k);
          bool same = true;
          for (std::size_t i = 0; i < d && same; ++i) same = w[i] - seen[i] == ki * sp[i];
          if (same) {
            fresh = false;
            break;
          }
        }
      }
      if (fresh) reps.push_back(w);
    }
    std::size_t j = d;
    while (j > 0 && w[j - 1] == sp[j - 1] + 1) --j;
    if (j == 0) break;
    ++w[j - 1];
    for (std::size_t k = j; k < d; ++k) w[k] = 0;
  }
  return reps;
}

MinCaResult min_ca_zonohedron(const Zonohedron& zn, const Int& limit) {
  std::vector<IntVec> reps = interior_representatives(zn, limit);
  if (reps.empty()) fail(ErrorKind::NoInteriorPoint, "slab has no interior lattice point");
  MinCaResult best{Rat(0), IntVec{}};
  bool first = true;
  for (const IntVec& w : reps) {
    Rat nu = zonohedron_norm(zn, sub(to_rat(w), zn.center()));
    Rat ca = ca_from_norm(nu);
    if (first || ca < best.value) {
      best = {ca, w};
      first = false;
    }
  }
  return best;
}

LrcResult lrc_holds(const VelocityVector& n) {
  GapResult g = gap(n);
  Rat threshold = make_rat(1, Int(n.dim()) + 1);
  return {g.value >= threshold, g.value, g.witness, threshold};
}

SweepReport sweep(long dimension, long max_speed, unsigned jobs, const Int& budget) {
  if (dimension < 2) fail(ErrorKind::Domain, "sweep needs dimension >= 2");
  if (max_speed < dimension)
    fail(ErrorKind::Domain, "max speed leaves no room for distinct speeds");
  Int total;
  mpz_bin_uiui(total.get_mpz_t(), static_cast<unsigned long>(max_speed),
               static_cast<unsigned long>(dimension));
  if (total > budget)
    fail(ErrorKind::BudgetExceeded, "sweep would visit " + total.get_str() +
                                        " candidate vectors, budget is " + budget.get_str());
  if (jobs == 0) jobs = 1;

  const std::size_t d = std::size_t(dimension);
  struct Shard {
    Int visited = 0;
    bool has_best = false;
    Rat best_gap;
    unsigned long best_rank = 0;
    IntVec best_vec;
    std::vector<std::pair<unsigned long, IntVec>> tight;
    std::vector<std::pair<unsigned long, IntVec>> violations;
    std::exception_ptr error;
  };
  const Rat threshold = make_rat(1, dimension + 1);
  std::vector<Shard> shards(jobs);

  auto worker = [&](unsigned wi) {
    Shard& s = shards[wi];
    try {
      std::vector<long> comb(d);
      for (std::size_t i = 0; i < d; ++i) comb[i] = long(i) + 1;
      unsigned long rank = 0;
      while (true) {
        if (rank % jobs == wi) {
          long g = 0;
          for (long v : comb) g = std::gcd(g, v);
          if (g == 1) {
            IntVec speeds;
            speeds.reserve(d);
            for (long v : comb) speeds.emplace_back(v);
            VelocityVector n(std::move(speeds));
            Rat value = gap(n).value;
            s.visited += 1;
            if (!s.has_best || value < s.best_gap) {
              s.has_best = true;
              s.best_gap = value;
              s.best_rank = rank;
              s.best_vec = n.speeds();
            }
            if (value == threshold)
              s.tight.emplace_back(rank, n.speeds());
            else if (value < threshold)
              s.violations.emplace_back(rank, n.speeds());
          }
        }
        // next combination of {1..max_speed} in lexicographic order
        std::size_t i = d;
        while (i > 0 && comb[i - 1] == max_speed - long(d - i)) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t k = i; k < d; ++k) comb[k] = comb[k - 1] + 1;
        ++rank;
      }
    } catch (...) {
      s.error = std::current_exception();
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned wi = 0; wi < jobs; ++wi) threads.emplace_back(worker, wi);
    for (std::thread& t : threads) t.join();
  }
  for (const Shard& s : shards)
    if (s.error) std::rethrow_exception(s.error);

  SweepReport rep;
  rep.dimension = dimension;
  rep.max_speed = max_speed;
  rep.visited = 0;
  rep.threshold = threshold;
  bool has_best = false;
  unsigned long best_rank = 0;
  std::vector<std::pair<unsigned long, IntVec>> tight, violations;
  for (const Shard& s : shards) {
    rep.visited += s.visited;
    if (s.has_best &&
        (!has_best || s.best_gap < rep.min_gap ||
         (s.best_gap == rep.min_gap && s.best_rank < best_rank))) {
      has_best = true;
      rep.min_gap = s.best_gap;
      rep.argmin = s.best_vec;
      best_rank = s.best_rank;
    }
    tight.insert(tight.end(), s.tight.begin(), s.tight.end());
    violations.insert(violations.end(), s.violations.begin(), s.violations.end());
  }
  auto by_rank = [](const std::pair<unsigned long, IntVec>& a,
                    const std::pair<unsigned long, IntVec>& b) { return a.first < b.first; };
  std::sort(tight.begin(), tight.end(), by_rank);
  std::sort(violations.begin(), violations.end(), by_rank);
  for (auto& t : tight) rep.tight.push_back(std::move(t.second));
  for (auto& v : violations) rep.violations.push_back(std::move(v.second));
  return rep;
}

VelocityVector canonical_instance(long d) {
  if (d < 2) fail(ErrorKind::Domain, "canonical instance needs d >= 2");
  IntVec speeds;
  speeds.reserve(std::size_t(d));
  for (long i = 1; i <= d; ++i) speeds.emplace_back(i);
  return VelocityVector(std::move(speeds));
}

namespace {

LatticeZonotope unit_vectors_plus(const VelocityVector& n, const Int& factor) {
  const std::size_t d = n.dim();
  std::vector<IntVec> gens;
  gens.reserve(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    IntVec e(d, Int(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  IntVec scaled(d);
  for (std::size_t i = 0; i < d; ++i) scaled[i] = factor * n.speeds()[i];
  gens.push_back(std::move(scaled));
  return LatticeZonotope(d, std::move(gens));
}

}  // namespace

LatticeZonotope lonely_runner_zonotope(const VelocityVector& n) {
  return unit_vectors_plus(n, Int(1));
}

LatticeZonotope t_zonotope(const VelocityVector& n) { return unit_vectors_plus(n, Int(3)); }

Rat ca_of_all_one(long d) {
  LatticeZonotope z = lonely_runner_zonotope(canonical_instance(d));
  RatVec ones(std::size_t(d), Rat(1));
  return ca_symmetric(z.body(), z.center(), ones).ca;
}

Int count_zonohedron(const VelocityVector& n, ZonohedronCount mode) {
  const IntVec& sp = n.speeds();
  if (mode == ZonohedronCount::Volume) {
    Int v = 1;
    for (const Int& s : sp) v += s;
    return v;
  }
  std::set<long> divisors;
  for (const Int& s : sp) {
    long v = to_long(s, "speed");
    for (long l = 1; l * l <= v; ++l) {
      if (v % l == 0) {
        divisors.insert(l);
        divisors.insert(v / l);
      }
    }
  }
  Int total = 0;
  if (mode == ZonohedronCount::Closed) {
    total = Int(1) << static_cast<unsigned long>(sp.size());
  }
  for (long l : divisors) {
    unsigned long members = 0;
    for (const Int& s : sp)
      if (s % l == 0) ++members;
    Int phi = euler_phi(l);
    if (mode == ZonohedronCount::Interior)
      total += phi;
    else
      total += phi * ((Int(1) << members) - 1);
  }
  return total;
}

}  // namespace zonodeep

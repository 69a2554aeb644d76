#include "zonodeep/rabbit.hpp"

#include "zonodeep/numtheory.hpp"

namespace zonodeep {

RationalAlphaVector::RationalAlphaVector(RatVec raw) : entries(std::move(raw)) {
  if (entries.empty()) fail(ErrorKind::Domain, "alpha vector must be nonempty");
  for (const Rat& q : entries)
    if (is_integral(q))
      fail(ErrorKind::Domain, "alpha entry " + to_string(q) + " is integral");
  common_denominator = lcm_of_denominators(entries);
}

PsiResult psi(const RationalAlphaVector& alpha) {
  const Int& n = alpha.common_denominator;
  Rat best = -1;
  Int best_q = 0;
  for (Int q = 0; q < n; ++q) {
    Rat worst = 1;
    for (const Rat& a : alpha.entries) {
      Rat dist = dist_to_nearest_int(Rat(q) * a);
      if (dist < worst) worst = dist;
    }
    if (worst > best) {
      best = worst;
      best_q = q;
    }
  }
  return PsiResult{best, best_q};
}

RationalAlphaVector extremal_alpha(long z) {
  if (z < 3) fail(ErrorKind::Domain, "extremal_alpha needs z >= 3");
  RatVec entries;
  for (long a : coprime_half_set(z)) entries.push_back(make_rat(a, z));
  if (!is_prime(z))
    for (long p : distinct_primes(z)) entries.push_back(make_rat(1, p));
  return RationalAlphaVector(std::move(entries));
}

RationalAlphaVector padded_extremal_alpha(long d) {
  if (d < 1) fail(ErrorKind::Domain, "padded_extremal_alpha needs d >= 1");
  long z = w_of(d);
  RationalAlphaVector base = extremal_alpha(z);
  long pad = d - static_cast<long>(base.size());
  RatVec entries(pad, make_rat(1, z));
  entries.insert(entries.end(), base.entries.begin(), base.entries.end());
  return RationalAlphaVector(std::move(entries));
}

}  // namespace zonodeep

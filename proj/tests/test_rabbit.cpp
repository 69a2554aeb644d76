#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zonodeep/numtheory.hpp"
#include "zonodeep/rabbit.hpp"

using namespace zonodeep;

namespace {

// Oracle: evaluate the minimax over a window of 4N+1 integers Q instead of
// one period, including negative Q.
Rat psi_window_oracle(const RatVec& entries) {
  Int n = lcm_of_denominators(entries);
  Rat best = -1;
  for (Int q = -2 * n; q <= 2 * n; ++q) {
    Rat worst = 1;
    for (const Rat& a : entries) {
      Rat d = dist_to_nearest_int(Rat(q) * a);
      if (d < worst) worst = d;
    }
    if (worst > best) best = worst;
  }
  return best;
}

}  // namespace

TEST_CASE("alpha vector validation") {
  CHECK_THROWS_AS(RationalAlphaVector(RatVec{}), Error);
  CHECK_THROWS_AS(RationalAlphaVector(RatVec{Rat(1, 2), Rat(3)}), Error);
  RationalAlphaVector a(RatVec{Rat(1, 6), Rat(3, 4)});
  CHECK(a.common_denominator == 12);
}

TEST_CASE("psi on single entries") {
  PsiResult half = psi(RationalAlphaVector(RatVec{Rat(1, 2)}));
  CHECK(half.value == Rat(1, 2));
  CHECK(half.argmax_q == 1);
  PsiResult third = psi(RationalAlphaVector(RatVec{Rat(1, 3)}));
  CHECK(third.value == Rat(1, 3));
  CHECK(third.argmax_q == 1);
}

TEST_CASE("psi equals the wide-window oracle") {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 120; ++iter) {
    std::size_t d = static_cast<std::size_t>(oracle::rand_long(rng, 1, 4));
    RatVec entries(d);
    for (auto& a : entries) {
      long den = oracle::rand_long(rng, 2, 12);
      long num = oracle::rand_long(rng, 1, den - 1);
      long g = std::__gcd(num, den);
      num /= g;
      den /= g;
      if (den == 1) num = den = 2;  // keep non-integral
      a = make_rat(num, den == 1 ? 2 : den);
      if (is_integral(a)) a = Rat(1, 2);
    }
    RationalAlphaVector alpha(entries);
    CHECK(psi(alpha).value == psi_window_oracle(entries));
  }
}

TEST_CASE("psi is invariant under integer shifts and negation of entries") {
  std::mt19937 rng(32);
  for (int iter = 0; iter < 60; ++iter) {
    RatVec entries;
    for (int i = 0; i < 3; ++i) {
      long den = oracle::rand_long(rng, 2, 10);
      entries.push_back(make_rat(oracle::rand_long(rng, 1, den - 1), den));
      if (is_integral(entries.back())) entries.back() = Rat(1, 2);
    }
    RatVec shifted = entries;
    shifted[0] += Int(oracle::rand_long(rng, -3, 3));
    RatVec negated = entries;
    negated[1] = -negated[1];
    CHECK(psi(RationalAlphaVector(entries)).value == psi(RationalAlphaVector(shifted)).value);
    CHECK(psi(RationalAlphaVector(entries)).value == psi(RationalAlphaVector(negated)).value);
  }
}

TEST_CASE("extremal_alpha matches the construction tables") {
  CHECK(extremal_alpha(3).entries == RatVec{Rat(1, 3)});
  CHECK(extremal_alpha(4).entries == RatVec{Rat(1, 4), Rat(1, 2)});
  CHECK(extremal_alpha(5).entries == RatVec{Rat(1, 5), Rat(2, 5)});
  CHECK(extremal_alpha(8).entries == RatVec{Rat(1, 8), Rat(3, 8), Rat(1, 2)});
  CHECK(extremal_alpha(12).entries == RatVec{Rat(1, 12), Rat(5, 12), Rat(1, 2), Rat(1, 3)});
  CHECK(extremal_alpha(15).entries ==
        RatVec{Rat(1, 15), Rat(2, 15), Rat(4, 15), Rat(7, 15), Rat(1, 3), Rat(1, 5)});
  CHECK_THROWS_AS(extremal_alpha(2), Error);
}

TEST_CASE("extremal_alpha length is phi/2 plus h") {
  for (long z = 3; z <= 60; ++z)
    CHECK(static_cast<long>(extremal_alpha(z).size()) == euler_phi(z) / 2 + h_of(z));
}

TEST_CASE("psi of the extremal vector is exactly 1/z") {
  for (long z = 3; z <= 30; ++z) {
    PsiResult r = psi(extremal_alpha(z));
    CHECK(r.value == make_rat(1, z));
  }
}

TEST_CASE("padded_extremal_alpha pads in front with 1/w") {
  RationalAlphaVector d2 = padded_extremal_alpha(2);
  CHECK(d2.entries == RatVec{Rat(1, 5), Rat(2, 5)});
  RationalAlphaVector d1 = padded_extremal_alpha(1);
  CHECK(d1.entries == RatVec{Rat(1, 3)});
  for (long d = 1; d <= 14; ++d) {
    RationalAlphaVector padded = padded_extremal_alpha(d);
    long z = w_of(d);
    CHECK(static_cast<long>(padded.size()) == d);
    long pad = d - (euler_phi(z) / 2 + h_of(z));
    for (long i = 0; i <= pad; ++i) CHECK(padded.entries[i] == make_rat(1, z));
    CHECK(psi(padded).value == make_rat(1, z));
  }
}

TEST_CASE("psi respects the dimension lower bound") {
  std::mt19937 rng(33);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t d = static_cast<std::size_t>(oracle::rand_long(rng, 1, 4));
    RatVec entries(d);
    for (auto& a : entries) {
      long den = oracle::rand_long(rng, 2, 30);
      a = make_rat(oracle::rand_long(rng, 1, den - 1), den);
      if (is_integral(a)) a = make_rat(1, 2);
    }
    Rat bound = rabbit_constants(static_cast<long>(d)).rab;
    CHECK(psi(RationalAlphaVector(entries)).value >= bound);
  }
}

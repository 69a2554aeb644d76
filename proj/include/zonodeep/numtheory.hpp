#pragma once

#include <vector>

#include "zonodeep/exactmath.hpp"

namespace zonodeep {

// Arithmetic functions behind the Diophantine bounds. All take plain
// machine integers; the values involved stay far below 2^63.

bool is_prime(long z);
long euler_phi(long z);                     // z >= 1
std::vector<long> distinct_primes(long z);  // increasing; empty for z = 1

// 0 when z is prime, otherwise the number of distinct prime factors.
// Domain if z < 2.
long h_of(long z);

// { a : 1 <= a <= z/2, gcd(a, z) = 1 }, increasing. For z >= 3 this has
// exactly phi(z)/2 elements. Domain if z < 2.
std::vector<long> coprime_half_set(long z);

// Largest z with phi(z)/2 + h_of(z) <= d. The search may stop at 8d^2 + 6:
// phi(z) >= sqrt(z/2) makes the constraint fail beyond that. Domain if d < 1.
long w_of(long d);

struct RabbitConstants {
  long d;
  long w;     // w_of(d)
  Rat rab;    // 1 / w
  Rat delta;  // 1/2 - 1/w
};
RabbitConstants rabbit_constants(long d);

// Phi(d) = sum of euler_phi(1..d).
long totient_summatory(long d);

// Sylvester sequence s_1 = 2, s_i = 1 + s_1 * ... * s_{i-1}; first k terms.
std::vector<Int> sylvester_numbers(int k);

// d(2d+1)(s_{2d+1} - 1) - 1, the general-body asymmetry bound kept around
// for comparison against w_of(d) - 1.
Int akn_bound(long d);

}  // namespace zonodeep

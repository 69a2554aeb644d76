#include "zonodeep/numtheory.hpp"

namespace zonodeep {

bool is_prime(long z) {
  if (z < 2) return false;
  for (long p = 2; p * p <= z; ++p)
    if (z % p == 0) return false;
  return true;
}

std::vector<long> distinct_primes(long z) {
  std::vector<long> primes;
  for (long p = 2; p * p <= z; ++p) {
    if (z % p != 0) continue;
    primes.push_back(p);
    while (z % p == 0) z /= p;
  }
  if (z > 1) primes.push_back(z);
  return primes;
}

long euler_phi(long z) {
  if (z < 1) fail(ErrorKind::Domain, "euler_phi needs z >= 1");
  long phi = z;
  for (long p : distinct_primes(z)) phi = phi / p * (p - 1);
  return phi;
}

long h_of(long z) {
  if (z < 2) fail(ErrorKind::Domain, "h_of needs z >= 2");
  if (is_prime(z)) return 0;
  return static_cast<long>(distinct_primes(z).size());
}

std::vector<long> coprime_half_set(long z) {
  if (z < 2) fail(ErrorKind::Domain, "coprime_half_set needs z >= 2");
  std::vector<long> half;
  for (long a = 1; 2 * a <= z; ++a) {
    long x = a, y = z;
    while (y != 0) {
      long t = x % y;
      x = y;
      y = t;
    }
    if (x == 1) half.push_back(a);
  }
  return half;
}

long w_of(long d) {
  if (d < 1) fail(ErrorKind::Domain, "w_of needs d >= 1");
  long best = 0;
  for (long z = 2; z <= 8 * d * d + 6; ++z)
    if (euler_phi(z) + 2 * h_of(z) <= 2 * d) best = z;
  return best;
}

RabbitConstants rabbit_constants(long d) {
  long w = w_of(d);
  return RabbitConstants{d, w, make_rat(1, w), Rat(1, 2) - make_rat(1, w)};
}

long totient_summatory(long d) {
  if (d < 1) fail(ErrorKind::Domain, "totient_summatory needs d >= 1");
  long sum = 0;
  for (long z = 1; z <= d; ++z) sum += euler_phi(z);
  return sum;
}

std::vector<Int> sylvester_numbers(int k) {
  if (k < 1) fail(ErrorKind::Domain, "sylvester_numbers needs k >= 1");
  std::vector<Int> s;
  Int product = 1;
  for (int i = 0; i < k; ++i) {
    s.push_back(product + 1);
    product *= s.back();
  }
  return s;
}

Int akn_bound(long d) {
  if (d < 1) fail(ErrorKind::Domain, "akn_bound needs d >= 1");
  std::vector<Int> s = sylvester_numbers(static_cast<int>(2 * d + 1));
  return Int(d) * Int(2 * d + 1) * (s.back() - 1) - 1;
}

}  // namespace zonodeep

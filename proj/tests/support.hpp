#pragma once

// Helpers shared by the test binaries. The reference implementations here
// are deliberately naive so they can serve as independent oracles.

#include <numeric>
#include <vector>

#include "sqfbrace/arith.hpp"
#include "sqfbrace/groups.hpp"
#include "sqfbrace/holomorph.hpp"

namespace sqfb::testing {

inline std::vector<Int> squarefree_orders(Int limit) {
  std::vector<Int> out;
  for (Int n = 1; n <= limit; ++n)
    if (is_squarefree(n)) out.push_back(n);
  return out;
}

inline bool naive_squarefree(Int n) {
  for (Int p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

inline Int naive_gcd(Int a, Int b) {
  while (b) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Int naive_order(Int k, Int m) {
  if (m == 1) return 1;
  Int x = k % m, o = 1;
  while (x != 1) {
    x = x * (k % m) % m;
    ++o;
  }
  return o;
}

/// sum_{i<j} m^i mod modulus by direct summation.
inline Int naive_geometric_sum(Int m, Int j, Int modulus) {
  Int s = 0, p = 1 % modulus;
  for (Int i = 0; i < j; ++i) {
    s = (s + p) % modulus;
    p = p * (m % modulus) % modulus;
  }
  return s;
}

/// sum_{h<j} S(t, h) k^(h-1) mod modulus, with k^-1 taken mod modulus.
inline Int naive_t_sum(Int k, Int t, Int j, Int modulus) {
  if (j == 0) return 0;
  Int kinv = 0;
  for (Int x = 0; x < modulus; ++x)
    if (x * (k % modulus) % modulus == 1 % modulus) kinv = x;
  Int s = 0, kp = kinv;
  for (Int h = 0; h < j; ++h) {
    s = (s + naive_geometric_sum(t, h, modulus) * kp) % modulus;
    kp = kp * (k % modulus) % modulus;
  }
  return s;
}

/// Y^j by repeated multiplication.
inline HolElement iterated_power(const Holomorph& H, const HolElement& Y, Int j) {
  HolElement out = H.identity();
  for (Int i = 0; i < j; ++i) out = H.mul(out, Y);
  return out;
}

/// k with ord_q(k) = r_q at each listed prime q of g and k = 1 modulo z.
/// flip inverts the residue at the prime of that index.
inline GroupDescriptor group_from_prime_orders(Int d, Int z, const std::vector<Int>& primes,
                                               const std::vector<Int>& orders, int flip = -1) {
  std::vector<Int> residues, moduli;
  Int e = z;
  if (z > 1) {
    residues.push_back(1);
    moduli.push_back(z);
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const Int q = primes[i];
    Int r = powmod(primitive_root(q), (q - 1) / orders[i], q);
    if (static_cast<int>(i) == flip) r = inverse_mod(r, q);
    residues.push_back(r);
    moduli.push_back(q);
    e *= q;
  }
  return canonicalize(d, e, crt(residues, moduli));
}

}  // namespace sqfb::testing

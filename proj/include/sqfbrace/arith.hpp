#pragma once

// Exact integer helpers for squarefree orders. Residues are always kept as
// least nonnegative representatives; products go through 128-bit
// intermediates so any modulus below 2^62 is safe.

#include <cstdint>
#include <vector>

namespace sqfb {

using Int = std::int64_t;

Int mod(Int a, Int m);
Int mulmod(Int a, Int b, Int m);
Int powmod(Int base, Int exp, Int m);

/// Inverse of a modulo m. Throws NotCoprime when gcd(a, m) > 1.
Int inverse_mod(Int a, Int m);

/// Distinct primes of n in ascending order (any n >= 1).
std::vector<Int> prime_factors(Int n);

bool is_squarefree(Int n);

/// Ascending distinct primes of a squarefree n; empty for n = 1.
/// Throws NotSquarefree if some prime divides n twice.
std::vector<Int> factor_squarefree(Int n);

std::vector<Int> divisors(Int n);
Int euler_phi(Int n);
int omega(Int n);

/// Residues in [0, m) coprime to m. For m = 1 this is {0}.
std::vector<Int> units(Int m);

/// ord_m(a). Throws NotCoprime when gcd(a, m) > 1; ord_1(a) = 1.
Int multiplicative_order(Int a, Int m);

/// S(m, j) = sum_{i<j} m^i, reduced mod modulus. O(log j).
Int geometric_sum(Int m, Int j, Int modulus);

/// T(k, t, j) = sum_{h<j} S(t, h) k^{h-1}, with T(k, t, 0) = 0. O(log j).
/// Throws NotCoprime when k is not a unit mod modulus.
Int t_sum(Int k, Int t, Int j, Int modulus);

/// Chinese remainder for pairwise coprime moduli.
Int crt(const std::vector<Int>& residues, const std::vector<Int>& moduli);

/// Smallest primitive root modulo an odd or even prime p.
Int primitive_root(Int p);

}  // namespace sqfb

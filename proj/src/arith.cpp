#include "sqfbrace/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "sqfbrace/errors.hpp"

namespace sqfb {

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int mulmod(Int a, Int b, Int m) {
  return static_cast<Int>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

Int powmod(Int base, Int exp, Int m) {
  Int result = 1 % m;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

Int inverse_mod(Int a, Int m) {
  // extended Euclid on (a mod m, m)
  Int old_r = mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    if (m == 1) return 0;
    throw NotCoprime("inverse_mod: " + std::to_string(a) + " is not a unit mod " +
                     std::to_string(m));
  }
  return mod(old_s, m);
}

namespace {

// (prime, multiplicity) pairs by trial division.
std::vector<std::pair<Int, int>> factor_with_multiplicity(Int n) {
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    out.emplace_back(p, mult);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (auto [p, mult] : factor_with_multiplicity(n)) out.push_back(p);
  return out;
}

bool is_squarefree(Int n) {
  if (n < 1) return false;
  for (auto [p, mult] : factor_with_multiplicity(n))
    if (mult > 1) return false;
  return true;
}

std::vector<Int> factor_squarefree(Int n) {
  if (n < 1) throw NotSquarefree("order must be positive, got " + std::to_string(n));
  std::vector<Int> out;
  for (auto [p, mult] : factor_with_multiplicity(n)) {
    if (mult > 1)
      throw NotSquarefree(std::to_string(n) + " is divisible by " + std::to_string(p) + "^2");
    out.push_back(p);
  }
  return out;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> out;
  for (Int i = 1; i <= n / i; ++i) {
    if (n % i) continue;
    out.push_back(i);
    if (i != n / i) out.push_back(n / i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int euler_phi(Int n) {
  Int result = n;
  for (Int p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

int omega(Int n) { return static_cast<int>(prime_factors(n).size()); }

std::vector<Int> units(Int m) {
  std::vector<Int> out;
  for (Int x = 0; x < m; ++x)
    if (std::gcd(x, m) == 1) out.push_back(x);
  return out;
}

Int multiplicative_order(Int a, Int m) {
  if (m == 1) return 1;
  a = mod(a, m);
  if (std::gcd(a, m) != 1)
    throw NotCoprime("multiplicative_order: gcd(" + std::to_string(a) + ", " +
                     std::to_string(m) + ") > 1");
  Int order = euler_phi(m);
  for (Int p : prime_factors(order)) {
    while (order % p == 0 && powmod(a, order / p, m) == 1) order /= p;
  }
  return order;
}

Int geometric_sum(Int m, Int j, Int modulus) {
  // (sum, power) for S(m, j) and m^j, built by binary expansion of j
  Int sum = 0, power = 1 % modulus;
  Int bit_sum = 1 % modulus, bit_power = mod(m, modulus);  // S(m, 2^b), m^(2^b)
  while (j > 0) {
    if (j & 1) {
      // S(m, a + b) = S(m, a) + m^a S(m, b)
      sum = mod(sum + mulmod(power, bit_sum, modulus), modulus);
      power = mulmod(power, bit_power, modulus);
    }
    bit_sum = mulmod(bit_sum, 1 + bit_power, modulus);
    bit_power = mulmod(bit_power, bit_power, modulus);
    j >>= 1;
  }
  return sum;
}

namespace {

using Mat3 = std::array<std::array<Int, 3>, 3>;

Mat3 mat_mul(const Mat3& x, const Mat3& y, Int m) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int acc = 0;
      for (int l = 0; l < 3; ++l) acc = mod(acc + mulmod(x[i][l], y[l][j], m), m);
      out[i][j] = acc;
    }
  return out;
}

}  // namespace

Int t_sum(Int k, Int t, Int j, Int modulus) {
  Int k_inv = inverse_mod(k, modulus);
  if (modulus == 1 || j == 0) return 0;
  // Row state (T_h, S(t,h) k^{h-1}, k^{h-1}) advanced by one step:
  //   T' = T + W,  W' = tk W + k P,  P' = k P.
  Mat3 step{};
  step[0][0] = 1 % modulus;
  step[1][0] = 1 % modulus;
  step[1][1] = mulmod(t, k, modulus);
  step[2][1] = mod(k, modulus);
  step[2][2] = mod(k, modulus);
  Mat3 acc{};
  for (int i = 0; i < 3; ++i) acc[i][i] = 1 % modulus;
  for (Int e = j; e > 0; e >>= 1) {
    if (e & 1) acc = mat_mul(acc, step, modulus);
    step = mat_mul(step, step, modulus);
  }
  // initial state (0, 0, k^{-1})
  return mulmod(k_inv, acc[2][0], modulus);
}

Int crt(const std::vector<Int>& residues, const std::vector<Int>& moduli) {
  Int x = 0, m = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    Int mi = moduli[i];
    // x + m * y == residues[i] (mod mi)
    Int y = mulmod(mod(residues[i] - x, mi), inverse_mod(m, mi), mi);
    x = x + m * y;
    m *= mi;
    x = mod(x, m);
  }
  return x;
}

Int primitive_root(Int p) {
  if (p == 2) return 1;
  auto fac = prime_factors(p - 1);
  for (Int g = 2; g < p; ++g) {
    bool ok = std::all_of(fac.begin(), fac.end(),
                          [&](Int q) { return powmod(g, (p - 1) / q, p) != 1; });
    if (ok) return g;
  }
  return 1;
}

}  // namespace sqfb

#pragma once

// Closed-form skew brace counts for groups of squarefree order.
//
// For A = G(d, e, k) (additive) and M = G(delta, epsilon, kappa)
// (multiplicative), with g = e / gcd(k - 1, e), gamma = epsilon /
// gcd(kappa - 1, epsilon) and w = phi(gcd(delta, d)):
//
//   b(M, A) = 2^omega(g) * w   if gamma | e,
//           = 0                otherwise.

#include <optional>
#include <vector>

#include "sqfbrace/groups.hpp"

namespace sqfb {

struct PairContext {
  GroupDescriptor M;
  GroupDescriptor A;
  Int zeta = 1;
  Int gamma = 1;
  Int z = 1;
  Int g = 1;
  Int w = 1;
  bool gamma_divides_e = true;
  int omega_g = 0;
};

/// Throws OrderMismatch when |M| != |A|.
PairContext pair_context(const GroupDescriptor& M, const GroupDescriptor& A);

Int count_skew_braces(const GroupDescriptor& M, const GroupDescriptor& A);

/// Rows are multiplicative groups M, columns additive groups A, both in
/// enumerate_groups order.
struct CountMatrix {
  Int n = 1;
  std::vector<GroupDescriptor> groups;
  std::vector<std::vector<Int>> entries;
  Int total = 0;

  std::vector<Int> row_totals() const;
  std::vector<Int> column_totals() const;
};

CountMatrix count_matrix(Int n);

/// Two-prime table for n = p q, p > q, p = 1 (mod q): rows/columns are
/// (C_n, C_p x| C_q). Throws CongruenceFails otherwise.
CountMatrix pq_closed_form(Int p, Int q);

/// Closed-form evaluation for n = p1 p2 p3 with p_i = 1 (mod p_j), i > j.
/// Factorisations 1..6 label the (d, g) shapes of the groups of order n.
struct ThreePrimeTable {
  Int p1 = 0, p2 = 0, p3 = 0;
  /// entries[i][j] for factorisation i + 1 (M) and j + 1 (A).
  std::vector<std::vector<Int>> entries;
  /// Number of isomorphism types per factorisation (p1 - 1 for the 4th).
  std::vector<Int> multiplicity;
  /// Closed-form marginals per factorisation and the total.
  std::vector<Int> row_totals;
  std::vector<Int> column_totals;
  Int total = 0;

  /// Table entries expanded over the concrete groups of order n, indexed
  /// like enumerate_groups(n).
  CountMatrix expand() const;
};

/// Which of the six shapes a group of order p1 p2 p3 has (1-based), or 0.
int three_prime_factorisation(const GroupDescriptor& G, Int p1, Int p2, Int p3);

/// Throws CongruenceFails listing the violated congruences.
ThreePrimeTable three_prime_closed_form(Int p1, Int p2, Int p3);

struct SpecialCaseValue {
  char which;  // 'i' .. 'l' for cases (i) .. (iv)
  Int value;
};

/// Every special case that applies to (M, A): M cyclic, A cyclic,
/// M dihedral, A dihedral.
std::vector<SpecialCaseValue> applicable_special_cases(const GroupDescriptor& M,
                                                   const GroupDescriptor& A);

/// Value of the first applicable special case, if any.
std::optional<Int> corollary_cases(const GroupDescriptor& M, const GroupDescriptor& A);

}  // namespace sqfb

#pragma once

// Brute-force side of the skew brace count: regular subgroups of Hol(A)
// isomorphic to M, their Aut(A)-orbits, and numeric checks of every
// intermediate congruence used by the closed formula.
//
// Notation: A = G(d, e, k) with z, g; M = G(delta, epsilon, kappa) with
// zeta, gamma. Candidate generators are
//   X = [sigma^a, theta^c],  Y = [sigma^u tau, theta^v phi_t]
// for a quintuple (t, a, c, u, v) in U(e) x Z_e x Z_g x Z_e x Z_g, and they
// must satisfy X^gamma = Y^(zeta delta) = 1, Y X Y^-1 = X^kappa_h.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqfbrace/counting.hpp"
#include "sqfbrace/holomorph.hpp"

namespace sqfb {

struct KappaOrbits {
  /// Units m mod delta with m = 1 mod gcd(delta, d).
  std::vector<Int> Delta;
  /// {kappa^r mod epsilon : r a unit mod delta}, ascending.
  std::vector<Int> K;
  /// Least residue of each Delta-orbit on K, ascending; size w.
  std::vector<Int> reps;
};

KappaOrbits kappa_orbit_reps(const GroupDescriptor& M, const GroupDescriptor& A);

enum class PrimeClass { P, Q1, Q2, R, SPrime, SPlus, SMinus, T, U1, U2 };

/// "P", "Q'", "Q''", "R", "S'", "S+", "S-", "T", "U'", "U''"
const char* to_string(PrimeClass c);

struct PrimeInfo {
  Int q = 0;
  PrimeClass cls = PrimeClass::P;
  Int r_q = 0;    // ord_q(k)
  Int rho_q = 0;  // ord_q(kappa) when q | epsilon, else 0
  // residues mod q
  Int k = 0, k_inv = 0, kappa = 0, lambda = 0, mu = 0;
};

struct PrimePartition {
  GroupDescriptor M;
  GroupDescriptor A;
  int h = 1;  // family index, 1-based
  Int kappa_h = 1;
  Int lambda = 0;  // z^-1 (k - 1) mod g
  Int mu = 0;      // k^-1 z^-1 (k - 1) mod g
  std::vector<PrimeInfo> primes;  // one per prime dividing e, ascending

  const PrimeInfo* find(Int q) const;
};

/// Classifies every prime of e for family h (1-based).
/// Throws GammaNotDividing when gamma does not divide e.
PrimePartition prime_partition(const GroupDescriptor& M, const GroupDescriptor& A, int h);

struct Quintuple {
  Int t = 1, a = 0, c = 0, u = 0, v = 0;
  friend auto operator<=>(const Quintuple&, const Quintuple&) = default;
};

/// Residue conditions at one prime (all values reduced mod q).
bool prime_condition(const PrimeInfo& p, const Quintuple& q5);
/// Membership in N_h: prime_condition at every prime of e.
bool quintuple_predicate(const Quintuple& q5, const PrimePartition& part);
/// Tabulated q-part of the stabiliser index for a member of N_h.
Int tabulated_index(const PrimeInfo& p, const Quintuple& q5);
/// Tabulated number of residue tuples mod q accepted at p (all rows).
Int tabulated_count(const PrimeInfo& p);
/// Product of tabulated_index over the primes of e.
Int predicted_stabilizer_index(const PrimePartition& part, const Quintuple& q5);

/// X = [sigma^a, theta^c] and Y = [sigma^u tau, theta^v phi_t].
HolElement quintuple_x(const Holomorph& H, const Quintuple& q5);
HolElement quintuple_y(const Holomorph& H, const Quintuple& q5);

/// Regularity by breadth-first search over the orbit of 1_A. Returns the
/// subgroup sorted by code when <gens> is regular on A, else nullopt.
std::optional<std::vector<HolElement>> regular_closure(const Holomorph& H,
                                                       const std::vector<HolElement>& gens);

/// Build-and-test without the residue tables: X, Y satisfy the relations
/// for kappa_h and generate a regular subgroup.
bool quintuple_generates_regular(const Holomorph& H, const PairContext& ctx, Int kappa_h,
                                 const Quintuple& q5);

struct RegularSubgroup {
  GroupDescriptor M;
  GroupDescriptor A;
  HolElement X;
  HolElement Y;
  std::optional<Quintuple> quintuple;  // first generating quintuple in scan order
  int h = 0;                           // family index, 0 when unknown
  std::vector<HolElement> elements;    // sorted by code
  std::vector<std::uint64_t> key;      // sorted codes
  std::vector<Quintuple> generating_quintuples;
};

enum class Strategy { Quintuple, Generic };

struct EnumerationOptions {
  Int max_generic_n = 30;
  Int max_quintuple_n = 60;
  unsigned workers = 1;
};

/// All regular subgroups of Hol(A) isomorphic to M ordered by key.
/// Throws BoundExceeded when n exceeds the strategy's bound.
std::vector<RegularSubgroup> enumerate_regular_subgroups(const GroupDescriptor& M,
                                                         const GroupDescriptor& A,
                                                         Strategy strategy,
                                                         const EnumerationOptions& opts = {});

/// Every regular subgroup of Hol(A), of any isomorphism type, found by
/// closing pairs of semiregular elements. M of each entry is its recognised
/// type.
std::vector<RegularSubgroup> generic_regular_subgroups(const GroupDescriptor& A,
                                                       const EnumerationOptions& opts = {});

/// Abstract isomorphism type of a finite group of squarefree order given by
/// its multiplication table (identity need not be index 0).
/// Throws NotAGroup.
GroupDescriptor recognize_table(const std::vector<std::vector<int>>& table);
GroupDescriptor recognize_group(const Holomorph& H, const std::vector<HolElement>& elements);

struct OrbitPartition {
  std::vector<int> orbit_of;              // per subgroup
  std::vector<std::vector<int>> orbits;   // subgroup indices, ordered by first member
  std::vector<Int> orbit_sizes;           // per orbit
  std::vector<Int> stabilizer_indices;    // per subgroup
};

/// Orbits of Aut(A) acting by conjugation. Throws Error when the list is
/// not closed under the action.
OrbitPartition aut_orbits(const std::vector<RegularSubgroup>& subgroups, const Holomorph& H);

/// Orbit size of one subgroup, i.e. the index of its stabiliser in Aut(A).
Int measured_stabilizer_index(const RegularSubgroup& sub, const Holomorph& H);

struct StabilizerIndex {
  Int measured = 0;
  Int predicted = 0;
};
StabilizerIndex stabilizer_index(const RegularSubgroup& sub, const Holomorph& H);

/// True iff some automorphism of A conjugates s1 onto s2.
bool braces_isomorphic(const RegularSubgroup& s1, const RegularSubgroup& s2, const Holomorph& H);

struct OracleReport {
  GroupDescriptor M;
  GroupDescriptor A;
  Int b_oracle = 0;
  Int e_prime = 0;
  Int e = 0;
  std::vector<Int> orbit_sizes;
  std::vector<Int> stabilizer_indices;
};

OracleReport oracle_counts(const GroupDescriptor& M, const GroupDescriptor& A,
                           Strategy strategy = Strategy::Quintuple,
                           const EnumerationOptions& opts = {});
OracleReport report_from(const GroupDescriptor& M, const GroupDescriptor& A,
                         const std::vector<RegularSubgroup>& subgroups, const OrbitPartition& orbits);

/// gamma phi(e) w / phi(delta): generating quintuples per subgroup.
Int expected_pair_count(const PairContext& ctx);
Int pair_count_check(const RegularSubgroup& sub);

struct Rational {
  Int num = 0;
  Int den = 1;
  /// Throws NonIntegral when den != 1.
  Int as_integer() const;
};

/// phi(delta) / (gamma phi(e) w) * sum over all generating quintuples of
/// 1 / (measured stabiliser index), exactly. Requires gamma | e.
Rational weighted_count_check(const GroupDescriptor& M, const GroupDescriptor& A,
                              const EnumerationOptions& opts = {});
Rational weighted_count(const PairContext& ctx, const std::vector<RegularSubgroup>& subgroups,
                        const OrbitPartition& orbits);

/// Checks the congruences for A(di) at every prime of e for the sampled i;
/// q5 must lie in N_h for part. Returns the first failure, or nullopt.
std::optional<std::string> adi_congruence_failure(const PrimePartition& part, const Quintuple& q5,
                                                  const std::vector<Int>& samples);
bool adi_congruence_check(const PrimePartition& part, const Quintuple& q5,
                          const std::vector<Int>& samples);

}  // namespace sqfb

#pragma once

// Differential checks of the closed count against the brute-force oracle,
// one (M, A) pair at a time.

#include <optional>
#include <string>
#include <vector>

#include "sqfbrace/brace.hpp"
#include "sqfbrace/oracle.hpp"

namespace sqfb {

struct VerifyOptions {
  EnumerationOptions enumeration;
  /// Cross-check against the generic strategy when n <= max_generic_n.
  bool generic = true;
  /// Exhaustive residue-table versus build-and-test comparison.
  bool residue_tables = true;
  /// Build, verify and classify the skew braces.
  bool braces = true;
};

struct PairVerification {
  GroupDescriptor M;
  GroupDescriptor A;
  Int formula = 0;
  std::optional<OracleReport> report;
  bool generic_checked = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct OrderVerification {
  Int n = 1;
  std::vector<PairVerification> pairs;

  bool ok() const;
};

struct ResidueTableScan {
  Int scanned = 0;
  Int accepted = 0;
  Int regular = 0;
  std::optional<Quintuple> mismatch;
};

/// Every quintuple of family h: membership by residue tables against
/// building X, Y and testing the relations and regularity directly.
ResidueTableScan scan_residue_tables(const GroupDescriptor& M, const GroupDescriptor& A, int h);

/// Number of residue tuples mod q accepted at p, counted directly.
Int count_prime_residues(const PrimeInfo& p, bool q_divides_g);

/// Pointwise check of the automorphism composition law on every element.
std::optional<std::string> composition_law_failure(const Holomorph& H);

/// generic_all: every regular subgroup of Hol(A) from the generic
/// strategy, or nullptr to skip that cross-check.
PairVerification verify_pair(const GroupDescriptor& M, const GroupDescriptor& A,
                             const VerifyOptions& opts,
                             const std::vector<RegularSubgroup>* generic_all = nullptr);

OrderVerification verify_order(Int n, const VerifyOptions& opts);

}  // namespace sqfb

#pragma once

// Skew braces realised on the carrier of A. Elements are labelled
// sigma^u tau^f -> u * d + f, so 0 is the identity of both operations.
// For a regular subgroup R of Hol(A), m_x denotes the unique element of R
// with m_x . 1 = x, and x * y = m_x . y.

#include <string>
#include <vector>

#include "sqfbrace/oracle.hpp"

namespace sqfb {

using Table = std::vector<std::vector<int>>;

struct SkewBrace {
  int n = 0;
  Table add;
  Table mul;
  /// lambda[b][a] = -b + (b * a)
  Table lambda;
};

/// Recomputes the lambda table from add and mul.
Table lambda_table(const Table& add, const Table& mul);

/// Throws OwnerMismatch when sub is not inside Hol(A) for H, NotRegular when
/// sub does not act regularly on A.
SkewBrace build_skew_brace(const RegularSubgroup& sub, const Holomorph& H);

struct BraceCheck {
  bool ok = true;
  std::string axiom;        // empty when ok
  std::vector<int> witness; // offending labels
};

BraceCheck verify_skew_brace(const SkewBrace& B);

/// A bijection of the carrier that is an isomorphism for both operations.
bool skew_braces_isomorphic(const SkewBrace& B1, const SkewBrace& B2);
/// Number of isomorphism classes among the given braces.
Int count_brace_classes(const std::vector<SkewBrace>& braces);

/// One brace per Aut(A)-orbit of regular subgroups isomorphic to M,
/// ordered by the orbit's first subgroup.
std::vector<SkewBrace> orbit_representative_braces(const GroupDescriptor& M,
                                                   const GroupDescriptor& A,
                                                   Strategy strategy = Strategy::Quintuple,
                                                   const EnumerationOptions& opts = {});

/// {"n", "add_table", "mul_table", "lambda_table"}
std::string brace_to_json(const SkewBrace& B, int indent = -1);
/// Throws ShapeError on malformed input.
SkewBrace brace_from_json(const std::string& text);

}  // namespace sqfb

#include "sqfbrace/counting.hpp"

#include <numeric>

#include "sqfbrace/errors.hpp"

namespace sqfb {

PairContext pair_context(const GroupDescriptor& M, const GroupDescriptor& A) {
  if (M.n != A.n)
    throw OrderMismatch("|M| = " + std::to_string(M.n) + " but |A| = " + std::to_string(A.n));
  PairContext ctx;
  ctx.M = M;
  ctx.A = A;
  ctx.zeta = M.z();
  ctx.gamma = M.g();
  ctx.z = A.z();
  ctx.g = A.g();
  ctx.w = euler_phi(std::gcd(M.d, A.d));
  ctx.gamma_divides_e = A.e % ctx.gamma == 0;
  ctx.omega_g = omega(ctx.g);
  return ctx;
}

Int count_skew_braces(const GroupDescriptor& M, const GroupDescriptor& A) {
  factor_squarefree(A.n);
  auto ctx = pair_context(M, A);
  if (!ctx.gamma_divides_e) return 0;
  return (Int{1} << ctx.omega_g) * ctx.w;
}

std::vector<Int> CountMatrix::row_totals() const {
  std::vector<Int> out;
  for (const auto& row : entries) out.push_back(std::accumulate(row.begin(), row.end(), Int{0}));
  return out;
}

std::vector<Int> CountMatrix::column_totals() const {
  std::vector<Int> out(groups.size(), 0);
  for (const auto& row : entries)
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j];
  return out;
}

CountMatrix count_matrix(Int n) {
  CountMatrix cm;
  cm.n = n;
  cm.groups = enumerate_groups(n);
  for (const auto& M : cm.groups) {
    std::vector<Int> row;
    for (const auto& A : cm.groups) {
      row.push_back(count_skew_braces(M, A));
      cm.total += row.back();
    }
    cm.entries.push_back(std::move(row));
  }
  return cm;
}

std::vector<SpecialCaseValue> applicable_special_cases(const GroupDescriptor& M,
                                                   const GroupDescriptor& A) {
  std::vector<SpecialCaseValue> out;
  Int two_omega_g = Int{1} << omega(A.g());
  if (M.is_cyclic()) out.push_back({'i', two_omega_g});
  if (A.is_cyclic()) out.push_back({'j', 1});
  if (M.is_dihedral()) out.push_back({'k', A.d <= 2 ? two_omega_g : 0});
  if (A.is_dihedral()) out.push_back({'l', Int{1} << omega(A.e)});
  return out;
}

std::optional<Int> corollary_cases(const GroupDescriptor& M, const GroupDescriptor& A) {
  auto cases = applicable_special_cases(M, A);
  if (cases.empty()) return std::nullopt;
  return cases.front().value;
}

}  // namespace sqfb

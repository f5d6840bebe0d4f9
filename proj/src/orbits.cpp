#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sqfbrace/errors.hpp"
#include "sqfbrace/oracle.hpp"

namespace sqfb {

namespace {

std::vector<std::uint64_t> conjugate_key(const Holomorph& H, Automorphism psi,
                                         const std::vector<HolElement>& elements) {
  std::vector<std::uint64_t> key;
  key.reserve(elements.size());
  for (const auto& h : elements) key.push_back(H.encode(H.conjugate_by_aut(psi, h)));
  std::sort(key.begin(), key.end());
  return key;
}

Rational reduced(Int num, Int den) {
  Int g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

}  // namespace

OrbitPartition aut_orbits(const std::vector<RegularSubgroup>& subgroups, const Holomorph& H) {
  std::map<std::vector<std::uint64_t>, int> index;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    index.emplace(subgroups[i].key, static_cast<int>(i));
  const auto auts = H.automorphisms();

  OrbitPartition out;
  out.orbit_of.assign(subgroups.size(), -1);
  out.stabilizer_indices.assign(subgroups.size(), 0);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (out.orbit_of[i] >= 0) continue;
    const int id = static_cast<int>(out.orbits.size());
    std::set<int> members;
    for (auto psi : auts) {
      auto it = index.find(conjugate_key(H, psi, subgroups[i].elements));
      if (it == index.end())
        throw Error("subgroup list is not closed under conjugation by Aut(A)");
      members.insert(it->second);
    }
    std::vector<int> orbit(members.begin(), members.end());
    for (int j : orbit) {
      out.orbit_of[static_cast<std::size_t>(j)] = id;
      out.stabilizer_indices[static_cast<std::size_t>(j)] = static_cast<Int>(orbit.size());
    }
    out.orbit_sizes.push_back(static_cast<Int>(orbit.size()));
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

Int measured_stabilizer_index(const RegularSubgroup& sub, const Holomorph& H) {
  std::set<std::vector<std::uint64_t>> images;
  for (auto psi : H.automorphisms()) images.insert(conjugate_key(H, psi, sub.elements));
  return static_cast<Int>(images.size());
}

StabilizerIndex stabilizer_index(const RegularSubgroup& sub, const Holomorph& H) {
  StabilizerIndex out;
  out.measured = measured_stabilizer_index(sub, H);
  if (sub.quintuple && sub.h > 0)
    out.predicted = predicted_stabilizer_index(prime_partition(sub.M, sub.A, sub.h), *sub.quintuple);
  return out;
}

bool braces_isomorphic(const RegularSubgroup& s1, const RegularSubgroup& s2, const Holomorph& H) {
  if (s1.elements.size() != s2.elements.size()) return false;
  for (auto psi : H.automorphisms())
    if (conjugate_key(H, psi, s1.elements) == s2.key) return true;
  return false;
}

OracleReport report_from(const GroupDescriptor& M, const GroupDescriptor& A,
                         const std::vector<RegularSubgroup>& subgroups,
                         const OrbitPartition& orbits) {
  OracleReport r;
  r.M = M;
  r.A = A;
  r.b_oracle = static_cast<Int>(orbits.orbits.size());
  r.e_prime = static_cast<Int>(subgroups.size());
  r.orbit_sizes = orbits.orbit_sizes;
  r.stabilizer_indices = orbits.stabilizer_indices;
  const Int num = aut_group_order(M) * r.e_prime, den = aut_group_order(A);
  if (num % den != 0)
    throw NonIntegral("|Aut(M)| e' / |Aut(A)| = " + std::to_string(num) + "/" +
                      std::to_string(den));
  r.e = num / den;
  return r;
}

OracleReport oracle_counts(const GroupDescriptor& M, const GroupDescriptor& A, Strategy strategy,
                           const EnumerationOptions& opts) {
  auto subs = enumerate_regular_subgroups(M, A, strategy, opts);
  Holomorph H(A);
  return report_from(M, A, subs, aut_orbits(subs, H));
}

Int expected_pair_count(const PairContext& ctx) {
  const Int num = ctx.gamma * euler_phi(ctx.A.e) * ctx.w, den = euler_phi(ctx.M.d);
  if (num % den != 0)
    throw NonIntegral("pair count " + std::to_string(num) + "/" + std::to_string(den));
  return num / den;
}

Int pair_count_check(const RegularSubgroup& sub) {
  return static_cast<Int>(sub.generating_quintuples.size());
}

Int Rational::as_integer() const {
  if (den != 1) throw NonIntegral(std::to_string(num) + "/" + std::to_string(den));
  return num;
}

Rational weighted_count(const PairContext& ctx, const std::vector<RegularSubgroup>& subgroups,
                        const OrbitPartition& orbits) {
  Rational sum{0, 1};
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const Int hits = static_cast<Int>(subgroups[i].generating_quintuples.size());
    const Int idx = orbits.stabilizer_indices[i];
    sum = reduced(sum.num * idx + hits * sum.den, sum.den * idx);
  }
  const Int den = ctx.gamma * euler_phi(ctx.A.e) * ctx.w;
  return reduced(sum.num * euler_phi(ctx.M.d), sum.den * den);
}

Rational weighted_count_check(const GroupDescriptor& M, const GroupDescriptor& A,
                              const EnumerationOptions& opts) {
  auto ctx = pair_context(M, A);
  if (!ctx.gamma_divides_e)
    throw GammaNotDividing("gamma = " + std::to_string(ctx.gamma) + " does not divide e = " +
                           std::to_string(A.e));
  auto subs = enumerate_regular_subgroups(M, A, Strategy::Quintuple, opts);
  Holomorph H(A);
  return weighted_count(ctx, subs, aut_orbits(subs, H));
}

}  // namespace sqfb

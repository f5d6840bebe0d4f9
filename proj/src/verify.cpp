#include "sqfbrace/verify.hpp"

#include <set>
#include <sstream>

#include "sqfbrace/errors.hpp"

namespace sqfb {

namespace {

std::string show(const Quintuple& q5) {
  std::ostringstream os;
  os << "(t,a,c,u,v)=(" << q5.t << "," << q5.a << "," << q5.c << "," << q5.u << "," << q5.v << ")";
  return os.str();
}

std::set<std::vector<std::uint64_t>> keys_of(const std::vector<RegularSubgroup>& subs) {
  std::set<std::vector<std::uint64_t>> keys;
  for (const auto& s : subs) keys.insert(s.key);
  return keys;
}

void check_intermediate_counts(const PairContext& ctx, const std::vector<RegularSubgroup>& subs,
                  const OrbitPartition& orbits, const Holomorph& H, PairVerification& out) {
  auto& failures = out.failures;
  const Int per_subgroup = expected_pair_count(ctx);
  const int w = static_cast<int>(ctx.w);
  std::vector<PrimePartition> parts;
  for (int h = 1; h <= w; ++h) parts.push_back(prime_partition(ctx.M, ctx.A, h));

  std::vector<Int> per_family(static_cast<std::size_t>(w), 0);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto& s = subs[i];
    const auto& part = parts[static_cast<std::size_t>(s.h - 1)];
    per_family[static_cast<std::size_t>(s.h - 1)] += pair_count_check(s);
    if (pair_count_check(s) != per_subgroup)
      failures.push_back("subgroup " + std::to_string(i) + " has " +
                         std::to_string(pair_count_check(s)) + " generating quintuples, expected " +
                         std::to_string(per_subgroup));
    const Int measured = orbits.stabilizer_indices[i];
    for (const auto& q5 : s.generating_quintuples) {
      const Int predicted = predicted_stabilizer_index(part, q5);
      if (predicted != measured) {
        failures.push_back("orbit size " + std::to_string(measured) + " but tabulated index " +
                           std::to_string(predicted) + " for " + show(q5));
        break;
      }
    }

    // closed power formula and the A(di) congruences on the first generator pair
    const Quintuple& q5 = *s.quintuple;
    const HolElement Y = quintuple_y(H, q5);
    HolElement iter = H.identity();
    std::vector<Int> samples;
    for (Int j = 0; j <= ctx.zeta * ctx.M.d; ++j) {
      if (H.y_power(Y, j) != iter) {
        failures.push_back("closed power differs from iterated product at j=" + std::to_string(j) +
                           " for " + show(q5));
        break;
      }
      iter = H.mul(iter, Y);
      samples.push_back(j);
    }
    if (auto why = adi_congruence_failure(part, q5, samples))
      failures.push_back(*why + " for " + show(q5));
  }

  for (int h = 1; h <= w; ++h) {
    Int expected = 1;
    for (const auto& p : parts[static_cast<std::size_t>(h - 1)].primes)
      expected *= tabulated_count(p);
    if (per_family[static_cast<std::size_t>(h - 1)] != expected)
      failures.push_back("family " + std::to_string(h) + " has " +
                         std::to_string(per_family[static_cast<std::size_t>(h - 1)]) +
                         " quintuples, product of tabulated counts is " + std::to_string(expected));
    for (const auto& p : parts[static_cast<std::size_t>(h - 1)].primes) {
      const Int direct = count_prime_residues(p, ctx.g % p.q == 0);
      if (direct != tabulated_count(p))
        failures.push_back("prime " + std::to_string(p.q) + " (" + to_string(p.cls) + ") accepts " +
                           std::to_string(direct) + " residue tuples, tabulated " +
                           std::to_string(tabulated_count(p)));
    }
  }

  const Rational weighted = weighted_count(ctx, subs, orbits);
  if (weighted.den != 1 || weighted.num != out.formula)
    failures.push_back("weighted quintuple sum is " + std::to_string(weighted.num) + "/" +
                       std::to_string(weighted.den) + ", formula gives " +
                       std::to_string(out.formula));
}

void check_braces(const std::vector<RegularSubgroup>& subs, const OrbitPartition& orbits,
                  const Holomorph& H, PairVerification& out) {
  std::vector<SkewBrace> braces;
  for (const auto& orbit : orbits.orbits) {
    const auto& sub = subs[static_cast<std::size_t>(orbit.front())];
    SkewBrace B = build_skew_brace(sub, H);
    auto check = verify_skew_brace(B);
    if (!check.ok) {
      std::string w;
      for (int x : check.witness) w += " " + std::to_string(x);
      out.failures.push_back("brace fails " + check.axiom + " at" + w);
    }
    if (!(recognize_table(B.mul) == out.M))
      out.failures.push_back("brace multiplicative group is " + recognize_table(B.mul).label());
    if (!(recognize_table(B.add) == out.A))
      out.failures.push_back("brace additive group is " + recognize_table(B.add).label());
    braces.push_back(std::move(B));
  }
  const Int classes = count_brace_classes(braces);
  if (classes != out.formula)
    out.failures.push_back(std::to_string(classes) + " non-isomorphic braces built, formula gives " +
                           std::to_string(out.formula));
}

}  // namespace

std::optional<std::string> composition_law_failure(const Holomorph& H) {
  const auto auts = H.automorphisms();
  const auto els = H.base().elements();
  for (auto a : auts)
    for (auto b : auts)
      for (const auto& x : els)
        if (H.apply(H.compose(a, b), x) != H.apply(a, H.apply(b, x)))
          return "composition (" + std::to_string(a.r) + "," + std::to_string(a.s) + ")(" +
                 std::to_string(b.r) + "," + std::to_string(b.s) + ") disagrees with applying in turn";
  return std::nullopt;
}

bool OrderVerification::ok() const {
  for (const auto& p : pairs)
    if (!p.ok()) return false;
  return true;
}

Int count_prime_residues(const PrimeInfo& p, bool q_divides_g) {
  const Int q = p.q, cv = q_divides_g ? q : 1;
  Int count = 0;
  Quintuple q5;
  for (q5.t = 1; q5.t < q; ++q5.t)
    for (q5.a = 0; q5.a < q; ++q5.a)
      for (q5.u = 0; q5.u < q; ++q5.u)
        for (q5.c = 0; q5.c < cv; ++q5.c)
          for (q5.v = 0; q5.v < cv; ++q5.v)
            if (prime_condition(p, q5)) ++count;
  return count;
}

ResidueTableScan scan_residue_tables(const GroupDescriptor& M, const GroupDescriptor& A, int h) {
  const auto ctx = pair_context(M, A);
  const auto part = prime_partition(M, A, h);
  Holomorph H(A);
  const Int e = A.e, g = ctx.g;
  const HolElement one = H.identity();

  // X depends on (a, c) only: cache X^gamma = 1 and X^kappa_h.
  std::vector<char> x_ok(static_cast<std::size_t>(e * g));
  std::vector<HolElement> x_kap(static_cast<std::size_t>(e * g));
  for (Int a = 0; a < e; ++a)
    for (Int c = 0; c < g; ++c) {
      Quintuple q5{1, a, c, 0, 0};
      const HolElement X = quintuple_x(H, q5);
      x_ok[static_cast<std::size_t>(a * g + c)] = H.pow(X, ctx.gamma) == one;
      x_kap[static_cast<std::size_t>(a * g + c)] = H.pow(X, part.kappa_h);
    }

  ResidueTableScan out;
  Quintuple q5;
  for (Int t : units(e)) {
    q5.t = t;
    for (q5.u = 0; q5.u < e; ++q5.u)
      for (q5.v = 0; q5.v < g; ++q5.v) {
        const HolElement Y = quintuple_y(H, q5);
        const bool y_ok = H.pow(Y, ctx.zeta * M.d) == one;
        const HolElement y_inv = H.inv(Y);
        for (q5.a = 0; q5.a < e; ++q5.a)
          for (q5.c = 0; q5.c < g; ++q5.c) {
            ++out.scanned;
            const bool predicted = quintuple_predicate(q5, part);
            bool direct = false;
            const auto xi = static_cast<std::size_t>(q5.a * g + q5.c);
            if (y_ok && x_ok[xi]) {
              const HolElement X = quintuple_x(H, q5);
              if (H.mul(H.mul(Y, X), y_inv) == x_kap[xi])
                direct = regular_closure(H, {X, Y}).has_value();
            }
            out.accepted += predicted;
            out.regular += direct;
            if (predicted != direct && !out.mismatch) out.mismatch = q5;
          }
      }
  }
  return out;
}

PairVerification verify_pair(const GroupDescriptor& M, const GroupDescriptor& A,
                             const VerifyOptions& opts,
                             const std::vector<RegularSubgroup>* generic_all) {
  PairVerification out;
  out.M = M;
  out.A = A;
  out.formula = count_skew_braces(M, A);
  const auto ctx = pair_context(M, A);

  auto subs = enumerate_regular_subgroups(M, A, Strategy::Quintuple, opts.enumeration);
  Holomorph H(A);
  auto orbits = aut_orbits(subs, H);
  out.report = report_from(M, A, subs, orbits);
  if (out.report->b_oracle != out.formula)
    out.failures.push_back("oracle finds " + std::to_string(out.report->b_oracle) +
                           " orbits, formula gives " + std::to_string(out.formula));

  if (generic_all) {
    std::vector<RegularSubgroup> generic;
    for (const auto& s : *generic_all)
      if (s.M == M) generic.push_back(s);
    out.generic_checked = true;
    if (keys_of(generic) != keys_of(subs))
      out.failures.push_back("generic search finds " + std::to_string(generic.size()) +
                             " subgroups, quintuple search " + std::to_string(subs.size()));
  }

  if (ctx.gamma_divides_e) {
    check_intermediate_counts(ctx, subs, orbits, H, out);
    if (opts.residue_tables)
      for (int h = 1; h <= static_cast<int>(ctx.w); ++h) {
        auto scan = scan_residue_tables(M, A, h);
        if (scan.mismatch)
          out.failures.push_back("residue tables and direct test disagree on " +
                                 show(*scan.mismatch) + " in family " + std::to_string(h));
      }
  }
  if (opts.braces) check_braces(subs, orbits, H, out);
  return out;
}

OrderVerification verify_order(Int n, const VerifyOptions& opts) {
  OrderVerification out;
  out.n = n;
  const auto groups = enumerate_groups(n);
  for (const auto& A : groups) {
    if (auto why = composition_law_failure(Holomorph(A))) throw Error(A.label() + ": " + *why);
    std::optional<std::vector<RegularSubgroup>> generic;
    if (opts.generic && n <= opts.enumeration.max_generic_n)
      generic = generic_regular_subgroups(A, opts.enumeration);
    for (const auto& M : groups)
      out.pairs.push_back(verify_pair(M, A, opts, generic ? &*generic : nullptr));
  }
  return out;
}

}  // namespace sqfb

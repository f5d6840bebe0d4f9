#include <algorithm>
#include <map>
#include <thread>

#include "sqfbrace/errors.hpp"
#include "sqfbrace/oracle.hpp"

namespace sqfb {

namespace {

using Key = std::vector<std::uint64_t>;

Key key_of(const Holomorph& H, const std::vector<HolElement>& elements) {
  Key key;
  key.reserve(elements.size());
  for (const auto& h : elements) key.push_back(H.encode(h));
  return key;
}

// Runs body(worker, begin, end) over contiguous chunks of [0, count).
// Chunks are returned in index order so merges stay deterministic.
template <typename Body>
void for_chunks(std::size_t count, unsigned workers, Body body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    body(0u, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  const std::size_t step = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = std::min(count, w * step), end = std::min(count, begin + step);
    threads.emplace_back(body, w, begin, end);
  }
  for (auto& t : threads) t.join();
}

// Allowed residues of t mod q for each class; empty means unconstrained.
std::vector<Int> t_options(const PrimeInfo& p) {
  const Int q = p.q;
  const Int kap_kinv = mulmod(p.kappa, p.k_inv, q);
  switch (p.cls) {
    case PrimeClass::P: return {p.kappa};
    case PrimeClass::Q1:
    case PrimeClass::Q2: return {1 % q};
    case PrimeClass::R:
    case PrimeClass::SPrime:
    case PrimeClass::SMinus: return {p.kappa, kap_kinv};
    case PrimeClass::SPlus:
    case PrimeClass::T: return {1 % q, p.kappa};
    case PrimeClass::U1:
    case PrimeClass::U2: return {1 % q, p.k_inv};
  }
  return {};
}

bool t_admissible(const PrimePartition& part, Int t) {
  for (const auto& p : part.primes) {
    auto opts = t_options(p);
    if (std::find(opts.begin(), opts.end(), mod(t, p.q)) == opts.end()) return false;
  }
  return true;
}

struct Found {
  HolElement X, Y;
  std::optional<Quintuple> quintuple;
  int h = 0;
  std::vector<HolElement> elements;
  std::vector<Quintuple> quintuples;
};

void merge_into(std::map<Key, Found>& into, std::map<Key, Found>&& from, bool track_family) {
  for (auto& [key, f] : from) {
    auto it = into.find(key);
    if (it == into.end()) {
      into.emplace(key, std::move(f));
      continue;
    }
    if (track_family && it->second.h != f.h)
      throw Error("regular subgroup reached from families " + std::to_string(it->second.h) +
                  " and " + std::to_string(f.h));
    auto& qs = it->second.quintuples;
    qs.insert(qs.end(), f.quintuples.begin(), f.quintuples.end());
  }
}

std::vector<RegularSubgroup> to_subgroups(const Holomorph& H, const GroupDescriptor& M,
                                          std::map<Key, Found>&& found) {
  std::vector<RegularSubgroup> out;
  out.reserve(found.size());
  for (auto& [key, f] : found) {
    RegularSubgroup s;
    s.M = M;
    s.A = H.descriptor();
    s.X = f.X;
    s.Y = f.Y;
    s.quintuple = f.quintuple;
    s.h = f.h;
    s.elements = std::move(f.elements);
    s.key = key;
    s.generating_quintuples = std::move(f.quintuples);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<RegularSubgroup> enumerate_by_quintuples(const GroupDescriptor& M,
                                                     const GroupDescriptor& A,
                                                     const EnumerationOptions& opts) {
  auto ctx = pair_context(M, A);
  if (A.n > opts.max_quintuple_n)
    throw BoundExceeded("n = " + std::to_string(A.n) + " exceeds the quintuple bound " +
                        std::to_string(opts.max_quintuple_n));
  if (!ctx.gamma_divides_e) return {};
  Holomorph H(A);
  const Int e = A.e, g = ctx.g;
  const auto reps = kappa_orbit_reps(M, A).reps;

  std::map<Key, Found> merged;
  for (int h = 1; h <= static_cast<int>(reps.size()); ++h) {
    auto part = prime_partition(M, A, h);
    std::vector<Int> ts;
    for (Int t : units(e))
      if (t_admissible(part, t)) ts.push_back(t);

    std::vector<std::map<Key, Found>> local(std::max(1u, opts.workers == 0
                                                             ? std::thread::hardware_concurrency()
                                                             : opts.workers));
    std::vector<std::exception_ptr> errors(local.size());
    for_chunks(ts.size(), static_cast<unsigned>(local.size()),
               [&](unsigned w, std::size_t begin, std::size_t end) {
                 try {
                   auto& out = local[w];
                   for (std::size_t ti = begin; ti < end; ++ti) {
                     Quintuple q5;
                     q5.t = ts[ti];
                     for (q5.a = 0; q5.a < e; ++q5.a)
                       for (q5.u = 0; q5.u < e; ++q5.u)
                         for (q5.c = 0; q5.c < g; ++q5.c)
                           for (q5.v = 0; q5.v < g; ++q5.v) {
                             if (!quintuple_predicate(q5, part)) continue;
                             if (!quintuple_generates_regular(H, ctx, part.kappa_h, q5))
                               throw NotRegular("quintuple (" + std::to_string(q5.t) + "," +
                                                std::to_string(q5.a) + "," +
                                                std::to_string(q5.c) + "," +
                                                std::to_string(q5.u) + "," +
                                                std::to_string(q5.v) +
                                                ") passes the residue tables but does not "
                                                "generate a regular subgroup");
                             HolElement X = quintuple_x(H, q5), Y = quintuple_y(H, q5);
                             auto elements = *regular_closure(H, {X, Y});
                             auto key = key_of(H, elements);
                             auto it = out.find(key);
                             if (it == out.end()) {
                               Found f{X, Y, q5, h, std::move(elements), {q5}};
                               out.emplace(std::move(key), std::move(f));
                             } else {
                               it->second.quintuples.push_back(q5);
                             }
                           }
                   }
                 } catch (...) {
                   errors[w] = std::current_exception();
                 }
               });
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
    for (auto& m : local) merge_into(merged, std::move(m), true);
  }
  return to_subgroups(H, M, std::move(merged));
}

bool is_semiregular(const Holomorph& H, const HolElement& h) {
  const Group& A = H.base();
  const Int n = A.order();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  Int cycle = -1;
  for (Int start = 0; start < n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    Int len = 0;
    Element y = A.from_label(start);
    do {
      visited[static_cast<std::size_t>(A.label(y))] = 1;
      y = H.act(h, y);
      ++len;
    } while (A.label(y) != start);
    if (cycle < 0) cycle = len;
    if (len != cycle) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<HolElement>> regular_closure(const Holomorph& H,
                                                       const std::vector<HolElement>& gens) {
  const Group& A = H.base();
  const auto n = static_cast<std::size_t>(A.order());
  std::vector<HolElement> by_point(n);
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> queue{0};
  by_point[0] = H.identity();
  seen[0] = 1;
  // Closure under left multiplication by the generators, with at most one
  // element per image of 1_A, is exactly a regular subgroup.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const HolElement m = by_point[queue[head]];
    for (const auto& gen : gens) {
      HolElement prod = H.mul(gen, m);
      auto p = static_cast<std::size_t>(A.label(prod.x));
      if (!seen[p]) {
        seen[p] = 1;
        by_point[p] = prod;
        queue.push_back(p);
      } else if (by_point[p] != prod) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) return std::nullopt;
  std::sort(by_point.begin(), by_point.end(),
            [&](const HolElement& x, const HolElement& y) { return H.encode(x) < H.encode(y); });
  return by_point;
}

bool quintuple_generates_regular(const Holomorph& H, const PairContext& ctx, Int kappa_h,
                                 const Quintuple& q5) {
  const HolElement X = quintuple_x(H, q5), Y = quintuple_y(H, q5);
  const HolElement one = H.identity();
  if (H.pow(X, ctx.gamma) != one) return false;
  if (H.pow(Y, ctx.zeta * ctx.M.d) != one) return false;
  if (H.mul(H.mul(Y, X), H.inv(Y)) != H.pow(X, kappa_h)) return false;
  return regular_closure(H, {X, Y}).has_value();
}

std::vector<RegularSubgroup> generic_regular_subgroups(const GroupDescriptor& A,
                                                       const EnumerationOptions& opts) {
  if (A.n > opts.max_generic_n)
    throw BoundExceeded("n = " + std::to_string(A.n) + " exceeds the generic bound " +
                        std::to_string(opts.max_generic_n));
  Holomorph H(A);
  std::vector<HolElement> candidates;
  for (const auto& h : H.elements())
    if (is_semiregular(H, h)) candidates.push_back(h);

  const unsigned workers =
      opts.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.workers;
  std::vector<std::map<Key, Found>> local(workers);
  for_chunks(candidates.size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& out = local[w];
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = i; j < candidates.size(); ++j) {
        auto elements = regular_closure(H, {candidates[i], candidates[j]});
        if (!elements) continue;
        auto key = key_of(H, *elements);
        if (out.count(key)) continue;
        Found f;
        f.X = candidates[i];
        f.Y = candidates[j];
        f.elements = std::move(*elements);
        out.emplace(std::move(key), std::move(f));
      }
  });
  std::map<Key, Found> merged;
  for (auto& m : local) merge_into(merged, std::move(m), false);

  std::vector<RegularSubgroup> out;
  for (auto& [key, f] : merged) {
    RegularSubgroup s;
    s.M = recognize_group(H, f.elements);
    s.A = A;
    s.X = f.X;
    s.Y = f.Y;
    s.elements = std::move(f.elements);
    s.key = key;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<RegularSubgroup> enumerate_regular_subgroups(const GroupDescriptor& M,
                                                         const GroupDescriptor& A,
                                                         Strategy strategy,
                                                         const EnumerationOptions& opts) {
  if (M.n != A.n)
    throw OrderMismatch("|M| = " + std::to_string(M.n) + " but |A| = " + std::to_string(A.n));
  factor_squarefree(A.n);
  if (strategy == Strategy::Quintuple) return enumerate_by_quintuples(M, A, opts);
  std::vector<RegularSubgroup> out;
  for (auto& s : generic_regular_subgroups(A, opts))
    if (s.M == M) out.push_back(std::move(s));
  return out;
}

}  // namespace sqfb

#include "sqfbrace/brace.hpp"

#include <algorithm>
#include <json.hpp>

#include "sqfbrace/errors.hpp"

namespace sqfb {

namespace {

using Witness = std::vector<int>;

BraceCheck fail(std::string axiom, Witness w) { return {false, std::move(axiom), std::move(w)}; }

bool well_formed(const Table& t, int n) {
  if (static_cast<int>(t.size()) != n) return false;
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) return false;
    for (int x : row)
      if (x < 0 || x >= n) return false;
  }
  return true;
}

std::vector<int> inverses(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t[x][y] == 0 && t[y][x] == 0) inv[x] = y;
  return inv;
}

// Group axioms with identity 0; name prefixes the failing axiom.
BraceCheck check_group(const Table& t, int n, const std::string& name) {
  if (!well_formed(t, n)) return fail(name + " table malformed", {});
  for (int x = 0; x < n; ++x)
    if (t[0][x] != x || t[x][0] != x) return fail(name + " identity", {x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int w = 0; w < n; ++w)
        if (t[t[x][y]][w] != t[x][t[y][w]]) return fail(name + " associativity", {x, y, w});
  auto inv = inverses(t);
  for (int x = 0; x < n; ++x)
    if (inv[x] < 0) return fail(name + " inverse", {x});
  return {};
}

int element_order(const Table& t, int x) {
  int o = 1;
  for (int p = x; p != 0; p = t[p][x]) ++o;
  return o;
}

std::vector<bool> closure(const Table& t, const std::vector<int>& gens) {
  std::vector<bool> in(t.size(), false);
  std::vector<int> queue{0};
  in[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int g : gens) {
      int p = t[g][queue[head]];
      if (!in[p]) {
        in[p] = true;
        queue.push_back(p);
      }
    }
  return in;
}

// Greedy generating set: largest order first, then anything not yet reached.
std::vector<int> generators(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> by_order(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) by_order[x] = x;
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    return element_order(t, a) > element_order(t, b);
  });
  std::vector<int> gens;
  auto in = closure(t, gens);
  for (int x : by_order)
    if (!in[x]) {
      gens.push_back(x);
      in = closure(t, gens);
    }
  return gens;
}

// Extends the generator images to a homomorphism of the additive group;
// returns an empty vector when the assignment is inconsistent or not bijective.
std::vector<int> extend(const Table& from, const Table& to, const std::vector<int>& gens,
                        const std::vector<int>& images) {
  const std::size_t n = from.size();
  std::vector<int> f(n, -1);
  std::vector<int> queue{0};
  f[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int p = from[gens[i]][x];
      int fp = to[images[i]][f[x]];
      if (f[p] < 0) {
        f[p] = fp;
        queue.push_back(p);
      } else if (f[p] != fp) {
        return {};
      }
    }
  }
  std::vector<bool> hit(n, false);
  for (int v : f) {
    if (v < 0 || hit[v]) return {};
    hit[v] = true;
  }
  return f;
}

std::vector<std::pair<int, int>> order_signature(const SkewBrace& B) {
  std::vector<std::pair<int, int>> sig;
  for (int x = 0; x < B.n; ++x) sig.emplace_back(element_order(B.add, x), element_order(B.mul, x));
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

Table lambda_table(const Table& add, const Table& mul) {
  const auto neg = inverses(add);
  const std::size_t n = add.size();
  Table lam(n, std::vector<int>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) lam[b][a] = add[neg[b]][mul[b][a]];
  return lam;
}

SkewBrace build_skew_brace(const RegularSubgroup& sub, const Holomorph& H) {
  if (!(sub.A == H.descriptor()))
    throw OwnerMismatch("subgroup of Hol(" + sub.A.label() + ") used with Hol(" +
                        H.descriptor().label() + ")");
  const Group& A = H.base();
  const int n = static_cast<int>(A.order());
  std::vector<const HolElement*> m(static_cast<std::size_t>(n), nullptr);
  if (static_cast<int>(sub.elements.size()) != n)
    throw NotRegular("subgroup has " + std::to_string(sub.elements.size()) + " elements, n = " +
                     std::to_string(n));
  for (const auto& h : sub.elements) {
    if (!H.contains(h)) throw OwnerMismatch("element outside Hol(" + A.descriptor().label() + ")");
    auto x = static_cast<std::size_t>(A.label(H.act(h, A.identity())));
    if (m[x]) throw NotRegular("two elements send 1 to label " + std::to_string(x));
    m[x] = &h;
  }
  SkewBrace B;
  B.n = n;
  B.add.assign(n, std::vector<int>(n));
  B.mul.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      B.add[x][y] = static_cast<int>(A.label(A.mul(A.from_label(x), A.from_label(y))));
      B.mul[x][y] = static_cast<int>(A.label(H.act(*m[x], A.from_label(y))));
    }
  B.lambda = lambda_table(B.add, B.mul);
  return B;
}

BraceCheck verify_skew_brace(const SkewBrace& B) {
  const int n = B.n;
  if (n <= 0) return fail("empty carrier", {});
  if (auto c = check_group(B.add, n, "additive"); !c.ok) return c;
  if (auto c = check_group(B.mul, n, "multiplicative"); !c.ok) return c;
  const auto& add = B.add;
  const auto& mul = B.mul;
  const auto neg = inverses(add);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[a][add[b][c]] != add[add[mul[a][b]][neg[a]]][mul[a][c]])
          return fail("compatibility", {a, b, c});
  const Table lam = lambda_table(add, mul);
  if (!B.lambda.empty() && B.lambda != lam) {
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a)
        if (!well_formed(B.lambda, n) || B.lambda[b][a] != lam[b][a])
          return fail("lambda table", {b, a});
  }
  for (int b = 0; b < n; ++b) {
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int a = 0; a < n; ++a) {
      if (hit[lam[b][a]]) return fail("lambda bijective", {b, a});
      hit[lam[b][a]] = true;
    }
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        if (lam[b][add[a][c]] != add[lam[b][a]][lam[b][c]])
          return fail("lambda additive", {b, a, c});
  }
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      for (int a = 0; a < n; ++a)
        if (lam[mul[b][c]][a] != lam[b][lam[c][a]]) return fail("lambda multiplicative", {b, c, a});
      if (mul[b][c] != add[b][lam[b][c]]) return fail("cocycle", {b, c});
    }
  return {};
}

bool skew_braces_isomorphic(const SkewBrace& B1, const SkewBrace& B2) {
  if (B1.n != B2.n) return false;
  if (order_signature(B1) != order_signature(B2)) return false;
  const int n = B1.n;
  const auto gens = generators(B1.add);
  std::vector<std::vector<int>> choices;
  for (int g : gens) {
    std::vector<int> c;
    const int o = element_order(B1.add, g);
    for (int y = 0; y < n; ++y)
      if (element_order(B2.add, y) == o) c.push_back(y);
    choices.push_back(std::move(c));
  }
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<int> images(gens.size());
  while (true) {
    bool empty = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (choices[i].empty()) empty = true;
      else images[i] = choices[i][pos[i]];
    }
    if (empty) return false;
    auto f = extend(B1.add, B2.add, gens, images);
    if (!f.empty()) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y) ok = f[B1.mul[x][y]] == B2.mul[f[x]][f[y]];
      if (ok) return true;
    }
    std::size_t i = 0;
    while (i < gens.size() && ++pos[i] == choices[i].size()) pos[i++] = 0;
    if (i == gens.size()) return false;
  }
}

Int count_brace_classes(const std::vector<SkewBrace>& braces) {
  std::vector<const SkewBrace*> reps;
  for (const auto& B : braces) {
    bool known = false;
    for (const auto* r : reps)
      if (skew_braces_isomorphic(*r, B)) {
        known = true;
        break;
      }
    if (!known) reps.push_back(&B);
  }
  return static_cast<Int>(reps.size());
}

std::vector<SkewBrace> orbit_representative_braces(const GroupDescriptor& M,
                                                   const GroupDescriptor& A, Strategy strategy,
                                                   const EnumerationOptions& opts) {
  auto subs = enumerate_regular_subgroups(M, A, strategy, opts);
  Holomorph H(A);
  auto orbits = aut_orbits(subs, H);
  std::vector<SkewBrace> out;
  for (const auto& orbit : orbits.orbits)
    out.push_back(build_skew_brace(subs[static_cast<std::size_t>(orbit.front())], H));
  return out;
}

std::string brace_to_json(const SkewBrace& B, int indent) {
  nlohmann::json j;
  j["n"] = B.n;
  j["add_table"] = B.add;
  j["mul_table"] = B.mul;
  j["lambda_table"] = B.lambda;
  return j.dump(indent);
}

SkewBrace brace_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    SkewBrace B;
    B.n = j.at("n").get<int>();
    B.add = j.at("add_table").get<Table>();
    B.mul = j.at("mul_table").get<Table>();
    if (j.contains("lambda_table")) B.lambda = j.at("lambda_table").get<Table>();
    return B;
  } catch (const nlohmann::json::exception& ex) {
    throw ShapeError(std::string("brace JSON: ") + ex.what());
  }
}

}  // namespace sqfb

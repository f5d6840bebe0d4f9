#include <map>
#include <numeric>

#include "sqfbrace/errors.hpp"
#include "sqfbrace/oracle.hpp"

namespace sqfb {

GroupDescriptor recognize_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int x : row) {
      if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)])
        throw NotAGroup("row is not a permutation");
      hit[static_cast<std::size_t>(x)] = 1;
    }
  }
  auto at = [&](int x, int y) { return table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; };
  int one = -1;
  for (int x = 0; x < n && one < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) ok = at(x, y) == y && at(y, x) == y;
    if (ok) one = x;
  }
  if (one < 0) throw NotAGroup("no identity");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int w = 0; w < n; ++w)
        if (at(at(x, y), w) != at(x, at(y, w)))
          throw NotAGroup("not associative at (" + std::to_string(x) + "," + std::to_string(y) +
                          "," + std::to_string(w) + ")");
  if (!is_squarefree(n)) throw NotSquarefree("group order " + std::to_string(n));

  std::vector<Int> order(static_cast<std::size_t>(n));
  std::vector<int> inverse(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    Int o = 1;
    int p = x;
    while (p != one) {
      p = at(p, x);
      ++o;
    }
    order[static_cast<std::size_t>(x)] = o;
    for (int y = 0; y < n; ++y)
      if (at(x, y) == one) inverse[static_cast<std::size_t>(x)] = y;
  }

  auto divs = divisors(n);
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const Int e = *it, d = n / e;
    for (int s = 0; s < n; ++s) {
      if (order[static_cast<std::size_t>(s)] != e) continue;
      // position of each power of s
      std::map<int, Int> power_of;
      int p = one;
      for (Int i = 0; i < e; ++i) {
        power_of[p] = i;
        p = at(p, s);
      }
      for (int t = 0; t < n; ++t) {
        if (order[static_cast<std::size_t>(t)] != d) continue;
        int conj = at(at(t, s), inverse[static_cast<std::size_t>(t)]);
        auto hit = power_of.find(conj);
        if (hit == power_of.end()) continue;
        const Int k = hit->second;
        if (std::gcd(k, e) != 1 || multiplicative_order(k, e) != d) continue;
        return canonicalize(d, e, k);
      }
    }
  }
  throw NotAGroup("no metacyclic presentation found");
}

GroupDescriptor recognize_group(const Holomorph& H, const std::vector<HolElement>& elements) {
  std::map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index[H.encode(elements[i])] = static_cast<int>(i);
  if (index.size() != elements.size()) throw NotAGroup("repeated element");
  std::vector<std::vector<int>> table(elements.size(), std::vector<int>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      auto it = index.find(H.encode(H.mul(elements[i], elements[j])));
      if (it == index.end()) throw NotAGroup("not closed under multiplication");
      table[i][j] = it->second;
    }
  return recognize_table(table);
}

}  // namespace sqfb

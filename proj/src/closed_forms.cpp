#include <string>

#include "sqfbrace/counting.hpp"
#include "sqfbrace/errors.hpp"

namespace sqfb {

namespace {

bool is_prime(Int p) { return p >= 2 && prime_factors(p) == std::vector<Int>{p}; }

// The least element of order `order` modulo the prime p, which is also the
// canonical k for the nonabelian group of shape (order, p).
Int element_of_order(Int order, Int p) {
  return powmod(primitive_root(p), (p - 1) / order, p);
}

}  // namespace

CountMatrix pq_closed_form(Int p, Int q) {
  if (!is_prime(p) || !is_prime(q) || p <= q)
    throw CongruenceFails("pq_closed_form needs primes p > q, got (" + std::to_string(p) + "," +
                          std::to_string(q) + ")");
  if (p % q != 1)
    throw CongruenceFails("p = " + std::to_string(p) + " is not 1 mod q = " + std::to_string(q));
  CountMatrix cm;
  cm.n = p * q;
  cm.groups = {canonicalize(1, p * q, 1), canonicalize(q, p, element_of_order(q, p))};
  cm.entries = {{1, 2}, {1, 2 * (q - 1)}};
  cm.total = 2 * q + 2;
  return cm;
}

int three_prime_factorisation(const GroupDescriptor& G, Int p1, Int p2, Int p3) {
  Int g = G.g();
  if (G.d == 1) return 1;
  if (G.d == p1 && g == p2) return 2;
  if (G.d == p1 && g == p3) return 3;
  if (G.d == p1 && g == p2 * p3) return 4;
  if (G.d == p2 && g == p3) return 5;
  if (G.d == p1 * p2 && g == p3) return 6;
  return 0;
}

ThreePrimeTable three_prime_closed_form(Int p1, Int p2, Int p3) {
  if (!is_prime(p1) || !is_prime(p2) || !is_prime(p3) || !(p1 < p2 && p2 < p3))
    throw CongruenceFails("three_prime_closed_form needs primes p1 < p2 < p3");
  std::string violated;
  auto need = [&](Int a, Int m, const char* text) {
    if (a % m != 1) violated += (violated.empty() ? "" : ", ") + std::string(text);
  };
  need(p2, p1, "p2 = 1 mod p1");
  need(p3, p1, "p3 = 1 mod p1");
  need(p3, p2, "p3 = 1 mod p2");
  if (!violated.empty()) throw CongruenceFails("violated: " + violated);

  ThreePrimeTable t;
  t.p1 = p1;
  t.p2 = p2;
  t.p3 = p3;
  const Int a = p1 - 1, b = p2 - 1;
  t.entries = {
      {1, 2, 2, 4, 2, 2},
      {1, 2 * a, 2 * a, 4 * a, 0, 0},
      {1, 2 * a, 2 * a, 4 * a, 2, 2 * a},
      {1, 2 * a, 2 * a, 4 * a, 0, 0},
      {1, 2, 2, 4, 2 * b, 2 * b},
      {1, 2 * a, 2 * a, 4 * a, 2 * b, 2 * a * b},
  };
  t.multiplicity = {1, 1, 1, p1 - 1, 1, 1};
  t.row_totals = {
      4 * p1 + 5,
      4 * p1 * p1 - 4 * p1 + 1,
      4 * p1 * p1 - 2 * p1 + 1,
      4 * p1 * p1 - 4 * p1 + 1,
      4 * p1 + 4 * p2 - 3,
      4 * p1 * p1 + 2 * p1 * p2 - 6 * p1 + 1,
  };
  t.column_totals = {
      p1 + 4, 2 * p1 * p1 + 2 * p1, 2 * p1 * p1 + 2 * p1, 4 * p1 * p1 + 4 * p1, 4 * p2, 2 * p1 * p2,
  };
  t.total = 4 * p1 * p1 * p1 + 4 * p1 * p1 + 2 * p1 * p2 + p1 + 4 * p2 + 4;
  return t;
}

CountMatrix ThreePrimeTable::expand() const {
  CountMatrix cm;
  cm.n = p1 * p2 * p3;
  cm.groups = enumerate_groups(cm.n);
  std::vector<int> shape;
  for (const auto& G : cm.groups) {
    int f = three_prime_factorisation(G, p1, p2, p3);
    if (f == 0) throw InvalidTriple(G.label() + " matches no factorisation");
    shape.push_back(f - 1);
  }
  for (int i : shape) {
    std::vector<Int> row;
    for (int j : shape) {
      row.push_back(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      cm.total += row.back();
    }
    cm.entries.push_back(std::move(row));
  }
  return cm;
}

}  // namespace sqfb

#pragma once

// Groups of squarefree order n, each isomorphic to exactly one
//
//   G(d, e, k) = < sigma, tau | sigma^e = tau^d = 1, tau sigma tau^-1 = sigma^k >
//
// with n = d e, gcd(d, e) = 1 and ord_e(k) = d. Two triples give isomorphic
// groups iff (d, e) agree and k generates the same cyclic subgroup of the
// units mod e; the canonical k is the least generator of that subgroup.

#include <compare>
#include <string>
#include <vector>

#include "sqfbrace/arith.hpp"

namespace sqfb {

struct GroupDescriptor {
  Int n = 1;
  Int d = 1;
  Int e = 1;
  Int k = 1;
  std::vector<Int> primes_of_n;

  /// z = gcd(k - 1, e).
  Int z() const;
  /// g = e / z; always odd.
  Int g() const;

  bool is_cyclic() const { return d == 1; }
  /// Dihedral of order 2m with m odd: G(2, m, m - 1), m >= 3.
  bool is_dihedral() const { return d == 2 && e > 1 && mod(k + 1, e) == 0; }

  /// "G(d,e,k)"
  std::string label() const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.d == b.d && a.e == b.e && a.k == b.k;
  }
  friend auto operator<=>(const GroupDescriptor& a, const GroupDescriptor& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    if (auto c = a.e <=> b.e; c != 0) return c;
    return a.k <=> b.k;
  }
};

struct StructureParams {
  Int z = 1;
  Int g = 1;
};

/// Validates (d, e, k) and returns the canonical descriptor.
/// Throws InvalidTriple naming the failed condition.
GroupDescriptor canonicalize(Int d, Int e, Int k);

/// All groups of order n, canonical and ordered by (d, e, k).
/// Throws NotSquarefree.
std::vector<GroupDescriptor> enumerate_groups(Int n);

StructureParams structure_params(const GroupDescriptor& G);

/// |Aut(G)| = g * phi(e).
Int aut_group_order(const GroupDescriptor& G);

/// sigma^u tau^f in normal form, u mod e and f mod d.
struct Element {
  Int u = 0;
  Int f = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// Element arithmetic for one fixed G(d, e, k). Powers k^f and sums S(k, f)
/// for f < d are tabulated so that multiplication is O(1).
class Group {
 public:
  explicit Group(GroupDescriptor desc);

  const GroupDescriptor& descriptor() const { return desc_; }
  Int order() const { return desc_.n; }
  Int d() const { return desc_.d; }
  Int e() const { return desc_.e; }
  Int k() const { return desc_.k; }
  Int z() const { return z_; }
  Int g() const { return g_; }

  Element identity() const { return {}; }
  Element sigma() const { return {1 % desc_.e, 0}; }
  Element tau() const { return {0, 1 % desc_.d}; }
  Element make(Int u, Int f) const { return {mod(u, desc_.e), mod(f, desc_.d)}; }
  bool contains(Element x) const;

  Element mul(Element x, Element y) const;
  Element inv(Element x) const;
  Element pow(Element x, Int j) const;
  Int element_order(Element x) const;

  /// k^f mod e for 0 <= f < d.
  Int k_pow(Int f) const { return k_pow_[static_cast<std::size_t>(f)]; }
  /// S(k, f) mod e for 0 <= f < d.
  Int k_sum(Int f) const { return k_sum_[static_cast<std::size_t>(f)]; }

  /// Carrier label u * d + f; the identity is 0.
  Int label(Element x) const { return x.u * desc_.d + x.f; }
  Element from_label(Int label) const { return {label / desc_.d, label % desc_.d}; }

  /// All n elements in label order.
  std::vector<Element> elements() const;

 private:
  GroupDescriptor desc_;
  Int z_;
  Int g_;
  std::vector<Int> k_pow_;
  std::vector<Int> k_sum_;
};

/// Checked multiplication for free-standing use; throws OwnerMismatch when
/// either operand is not a normal-form element of G.
Element group_mul(const Group& G, Element x, Element y);

}  // namespace sqfb

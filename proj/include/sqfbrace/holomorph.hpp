#pragma once

// Hol(A) = A x| Aut(A) for A = G(d, e, k).
//
// Aut(A) is generated by theta and phi_s (s a unit mod e):
//   theta(sigma) = sigma, theta(tau) = sigma^z tau,
//   phi_s(sigma) = sigma^s, phi_s(tau) = tau.
// The pair (r, s) names theta^r phi_s, applied as phi_s first, then theta^r:
//   (theta^r phi_s)(sigma^u tau^f) = sigma^(s u + r z S(k, f)) tau^f,
// so phi_s theta^c phi_s^-1 = theta^(c s) and
//   (r, s)(r', s') = (r + s r', s s').
// Holomorph elements [x, alpha] multiply as [x, a][y, b] = [x a(y), a b] and
// act on A by [x, a] . y = x a(y).

#include <compare>
#include <cstdint>
#include <vector>

#include "sqfbrace/groups.hpp"

namespace sqfb {

struct Automorphism {
  Int r = 0;  // mod g
  Int s = 1;  // unit mod e
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

struct HolElement {
  Element x;
  Automorphism alpha;
  friend auto operator<=>(const HolElement&, const HolElement&) = default;
};

class Holomorph {
 public:
  explicit Holomorph(const GroupDescriptor& A);

  const Group& base() const { return A_; }
  const GroupDescriptor& descriptor() const { return A_.descriptor(); }
  Int n() const { return A_.order(); }
  Int g() const { return A_.g(); }
  Int e() const { return A_.e(); }

  /// n * g * phi(e)
  Int order() const;
  Int aut_order() const;

  Automorphism aut_identity() const { return {0, 1 % A_.e()}; }
  Automorphism theta(Int r = 1) const { return {mod(r, A_.g()), 1 % A_.e()}; }
  Automorphism phi(Int s) const { return {0, mod(s, A_.e())}; }
  bool contains(Automorphism a) const;
  bool contains(const HolElement& h) const;

  Element apply(Automorphism a, Element x) const;
  Automorphism compose(Automorphism a, Automorphism b) const;
  Automorphism inverse(Automorphism a) const;
  /// All g * phi(e) automorphisms ordered by (r, s).
  std::vector<Automorphism> automorphisms() const;

  HolElement identity() const { return {A_.identity(), aut_identity()}; }
  HolElement translation(Element x) const { return {x, aut_identity()}; }
  HolElement make(Int u, Int f, Int r, Int s) const;

  HolElement mul(const HolElement& a, const HolElement& b) const;
  HolElement inv(const HolElement& h) const;
  /// Square-and-multiply power; j may be negative.
  HolElement pow(HolElement h, Int j) const;
  Element act(const HolElement& h, Element y) const;

  /// Closed form for Y^j with Y = [sigma^u tau, theta^v phi_t]:
  ///   Y^j = [sigma^A(j) tau^j, theta^(v S(t, j)) phi_(t^j)],
  ///   A(j) = u S(t k, j) + v z k T(k, t, j).
  /// Throws ShapeError if the tau-exponent of Y is not 1 (mod d).
  HolElement y_power(const HolElement& Y, Int j) const;
  /// The sigma-exponent A(j) alone.
  Int y_exponent(Int u, Int v, Int t, Int j) const;

  /// [1, psi] h [1, psi]^-1 = [psi(x), psi alpha psi^-1].
  HolElement conjugate_by_aut(Automorphism psi, const HolElement& h) const;

  /// Mixed-radix code whose numeric order is the (u, f, r, s) lexicographic
  /// order; used as the canonical key of subgroups.
  std::uint64_t encode(const HolElement& h) const;
  HolElement decode(std::uint64_t code) const;

  /// Every element of Hol(A) in code order.
  std::vector<HolElement> elements() const;

 private:
  Group A_;
};

/// Checked variants for callers holding elements of unknown provenance;
/// throw OwnerMismatch when an operand is not an element of Hol(A).
Element aut_apply(const Holomorph& H, Automorphism a, Element x);
Automorphism aut_compose(const Holomorph& H, Automorphism a, Automorphism b);
HolElement hol_mul(const Holomorph& H, const HolElement& a, const HolElement& b);
Element hol_act(const Holomorph& H, const HolElement& h, Element y);

}  // namespace sqfb

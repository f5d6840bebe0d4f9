#include "sqfbrace/holomorph.hpp"

#include <numeric>

#include "sqfbrace/errors.hpp"

namespace sqfb {

Holomorph::Holomorph(const GroupDescriptor& A) : A_(A) {}

Int Holomorph::aut_order() const { return A_.g() * euler_phi(A_.e()); }

Int Holomorph::order() const { return A_.order() * aut_order(); }

bool Holomorph::contains(Automorphism a) const {
  return a.r >= 0 && a.r < A_.g() && a.s >= 0 && a.s < A_.e() && std::gcd(a.s, A_.e()) == 1;
}

bool Holomorph::contains(const HolElement& h) const {
  return A_.contains(h.x) && contains(h.alpha);
}

Element Holomorph::apply(Automorphism a, Element x) const {
  // r ranges mod g, so r z is well defined mod e
  Int u = (a.s * x.u + a.r * A_.z() % A_.e() * A_.k_sum(x.f)) % A_.e();
  return {u, x.f};
}

Automorphism Holomorph::compose(Automorphism a, Automorphism b) const {
  return {(a.r + a.s % A_.g() * b.r) % A_.g(), a.s * b.s % A_.e()};
}

Automorphism Holomorph::inverse(Automorphism a) const {
  Int s_inv = inverse_mod(a.s, A_.e());
  return {mod(-(s_inv % A_.g()) * a.r, A_.g()), s_inv};
}

std::vector<Automorphism> Holomorph::automorphisms() const {
  std::vector<Automorphism> out;
  auto us = units(A_.e());
  for (Int r = 0; r < A_.g(); ++r)
    for (Int s : us) out.push_back({r, s});
  return out;
}

HolElement Holomorph::make(Int u, Int f, Int r, Int s) const {
  return {A_.make(u, f), {mod(r, A_.g()), mod(s, A_.e())}};
}

HolElement Holomorph::mul(const HolElement& a, const HolElement& b) const {
  return {A_.mul(a.x, apply(a.alpha, b.x)), compose(a.alpha, b.alpha)};
}

HolElement Holomorph::inv(const HolElement& h) const {
  Automorphism a_inv = inverse(h.alpha);
  return {apply(a_inv, A_.inv(h.x)), a_inv};
}

HolElement Holomorph::pow(HolElement h, Int j) const {
  if (j < 0) {
    h = inv(h);
    j = -j;
  }
  HolElement result = identity();
  while (j > 0) {
    if (j & 1) result = mul(result, h);
    h = mul(h, h);
    j >>= 1;
  }
  return result;
}

Element Holomorph::act(const HolElement& h, Element y) const { return A_.mul(h.x, apply(h.alpha, y)); }

Int Holomorph::y_exponent(Int u, Int v, Int t, Int j) const {
  const Int e = A_.e(), k = A_.k();
  Int first = mulmod(u, geometric_sum(mulmod(t, k, e), j, e), e);
  Int second = mulmod(mulmod(v * A_.z() % e, k, e), t_sum(k, t, j, e), e);
  return mod(first + second, e);
}

HolElement Holomorph::y_power(const HolElement& Y, Int j) const {
  if (Y.x.f != 1 % A_.d())
    throw ShapeError("y_power needs tau-exponent 1, got " + std::to_string(Y.x.f));
  const Int u = Y.x.u, v = Y.alpha.r, t = Y.alpha.s;
  return {A_.make(y_exponent(u, v, t, j), j),
          {mulmod(v, geometric_sum(t, j, A_.g()), A_.g()), powmod(t, j, A_.e())}};
}

HolElement Holomorph::conjugate_by_aut(Automorphism psi, const HolElement& h) const {
  return {apply(psi, h.x), compose(compose(psi, h.alpha), inverse(psi))};
}

std::uint64_t Holomorph::encode(const HolElement& h) const {
  auto d = static_cast<std::uint64_t>(A_.d());
  auto g = static_cast<std::uint64_t>(A_.g());
  auto e = static_cast<std::uint64_t>(A_.e());
  return ((static_cast<std::uint64_t>(h.x.u) * d + static_cast<std::uint64_t>(h.x.f)) * g +
          static_cast<std::uint64_t>(h.alpha.r)) *
             e +
         static_cast<std::uint64_t>(h.alpha.s);
}

HolElement Holomorph::decode(std::uint64_t code) const {
  auto d = static_cast<std::uint64_t>(A_.d());
  auto g = static_cast<std::uint64_t>(A_.g());
  auto e = static_cast<std::uint64_t>(A_.e());
  HolElement h;
  h.alpha.s = static_cast<Int>(code % e);
  code /= e;
  h.alpha.r = static_cast<Int>(code % g);
  code /= g;
  h.x.f = static_cast<Int>(code % d);
  h.x.u = static_cast<Int>(code / d);
  return h;
}

std::vector<HolElement> Holomorph::elements() const {
  std::vector<HolElement> out;
  auto auts = automorphisms();
  out.reserve(static_cast<std::size_t>(order()));
  for (Element x : A_.elements())
    for (Automorphism a : auts) out.push_back({x, a});
  return out;
}

Element aut_apply(const Holomorph& H, Automorphism a, Element x) {
  if (!H.contains(a) || !H.base().contains(x))
    throw OwnerMismatch("operand outside " + H.descriptor().label());
  return H.apply(a, x);
}

Automorphism aut_compose(const Holomorph& H, Automorphism a, Automorphism b) {
  if (!H.contains(a) || !H.contains(b))
    throw OwnerMismatch("automorphism outside Aut(" + H.descriptor().label() + ")");
  return H.compose(a, b);
}

HolElement hol_mul(const Holomorph& H, const HolElement& a, const HolElement& b) {
  if (!H.contains(a) || !H.contains(b))
    throw OwnerMismatch("element outside Hol(" + H.descriptor().label() + ")");
  return H.mul(a, b);
}

Element hol_act(const Holomorph& H, const HolElement& h, Element y) {
  if (!H.contains(h) || !H.base().contains(y))
    throw OwnerMismatch("operand outside Hol(" + H.descriptor().label() + ")");
  return H.act(h, y);
}

}  // namespace sqfb

#include "sqfbrace/groups.hpp"

#include <numeric>
#include <set>

#include "sqfbrace/errors.hpp"

namespace sqfb {

Int GroupDescriptor::z() const { return std::gcd(mod(k - 1, e), e); }

Int GroupDescriptor::g() const { return e / z(); }

std::string GroupDescriptor::label() const {
  return "G(" + std::to_string(d) + "," + std::to_string(e) + "," + std::to_string(k) + ")";
}

namespace {

// Elements of <k> of exact order d, i.e. k^j with gcd(j, d) = 1.
Int least_generator(Int k, Int d, Int e) {
  Int best = e;  // sentinel above any residue
  Int power = 1 % e;
  for (Int j = 1; j <= d; ++j) {
    power = mulmod(power, k, e);
    if (std::gcd(j, d) == 1) best = std::min(best, power);
  }
  return best;
}

GroupDescriptor make_descriptor(Int d, Int e, Int k) {
  GroupDescriptor G;
  G.n = d * e;
  G.d = d;
  G.e = e;
  G.k = k;
  G.primes_of_n = prime_factors(G.n);
  return G;
}

}  // namespace

GroupDescriptor canonicalize(Int d, Int e, Int k) {
  auto triple = "(" + std::to_string(d) + "," + std::to_string(e) + "," + std::to_string(k) + ")";
  if (d < 1 || e < 1) throw InvalidTriple(triple + ": d and e must be positive");
  if (!is_squarefree(d * e)) throw InvalidTriple(triple + ": d*e is not squarefree");
  if (std::gcd(d, e) != 1) throw InvalidTriple(triple + ": gcd(d,e) != 1");
  if (e == 1) {
    if (d != 1) throw InvalidTriple(triple + ": ord_1(k) = 1 != d");
    return make_descriptor(1, 1, 1);
  }
  k = mod(k, e);
  if (std::gcd(k, e) != 1) throw InvalidTriple(triple + ": k is not a unit mod e");
  if (multiplicative_order(k, e) != d)
    throw InvalidTriple(triple + ": ord_e(k) = " + std::to_string(multiplicative_order(k, e)) +
                        " != d");
  return make_descriptor(d, e, least_generator(k, d, e));
}

std::vector<GroupDescriptor> enumerate_groups(Int n) {
  factor_squarefree(n);  // validates
  std::vector<GroupDescriptor> out;
  if (n == 1) {
    out.push_back(make_descriptor(1, 1, 1));
    return out;
  }
  for (Int d : divisors(n)) {
    Int e = n / d;
    if (e == 1) continue;  // ord_1(k) = 1 only allows n = 1
    if (d == 1) {
      out.push_back(make_descriptor(1, e, 1));
      continue;
    }
    // Every subgroup's generators are all >= its least one, so an ascending
    // scan meets each cyclic subgroup first at its canonical k.
    std::vector<bool> seen(static_cast<std::size_t>(e), false);
    for (Int k = 2; k < e; ++k) {
      if (seen[static_cast<std::size_t>(k)] || std::gcd(k, e) != 1) continue;
      if (multiplicative_order(k, e) != d) continue;
      out.push_back(make_descriptor(d, e, k));
      Int power = 1;
      for (Int j = 1; j <= d; ++j) {
        power = mulmod(power, k, e);
        if (std::gcd(j, d) == 1) seen[static_cast<std::size_t>(power)] = true;
      }
    }
  }
  return out;
}

StructureParams structure_params(const GroupDescriptor& G) { return {G.z(), G.g()}; }

Int aut_group_order(const GroupDescriptor& G) { return G.g() * euler_phi(G.e); }

Group::Group(GroupDescriptor desc) : desc_(std::move(desc)), z_(desc_.z()), g_(desc_.g()) {
  k_pow_.resize(static_cast<std::size_t>(desc_.d));
  k_sum_.resize(static_cast<std::size_t>(desc_.d));
  Int power = 1 % desc_.e, sum = 0;
  for (Int f = 0; f < desc_.d; ++f) {
    k_pow_[static_cast<std::size_t>(f)] = power;
    k_sum_[static_cast<std::size_t>(f)] = sum;
    sum = mod(sum + power, desc_.e);
    power = mulmod(power, desc_.k, desc_.e);
  }
}

bool Group::contains(Element x) const {
  return x.u >= 0 && x.u < desc_.e && x.f >= 0 && x.f < desc_.d;
}

Element Group::mul(Element x, Element y) const {
  // sigma^u1 tau^f1 sigma^u2 tau^f2 = sigma^(u1 + k^f1 u2) tau^(f1 + f2)
  Int u = (x.u + k_pow(x.f) * y.u) % desc_.e;
  Int f = x.f + y.f;
  if (f >= desc_.d) f -= desc_.d;
  return {u, f};
}

Element Group::inv(Element x) const {
  // (sigma^u tau^f)^-1 = tau^-f sigma^-u = sigma^(-k^-f u) tau^-f
  Int f = mod(-x.f, desc_.d);
  return {mod(-k_pow(f) * x.u, desc_.e), f};
}

Element Group::pow(Element x, Int j) const {
  if (j < 0) {
    x = inv(x);
    j = -j;
  }
  Element result = identity();
  while (j > 0) {
    if (j & 1) result = mul(result, x);
    x = mul(x, x);
    j >>= 1;
  }
  return result;
}

Int Group::element_order(Element x) const {
  Int order = 1;
  for (Element y = x; y != identity(); y = mul(y, x)) ++order;
  return order;
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(desc_.n));
  for (Int l = 0; l < desc_.n; ++l) out.push_back(from_label(l));
  return out;
}

Element group_mul(const Group& G, Element x, Element y) {
  if (!G.contains(x) || !G.contains(y))
    throw OwnerMismatch("element is not in normal form for " + G.descriptor().label());
  return G.mul(x, y);
}

}  // namespace sqfb

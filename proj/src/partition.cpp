#include <algorithm>
#include <numeric>
#include <set>

#include "sqfbrace/errors.hpp"
#include "sqfbrace/oracle.hpp"

namespace sqfb {

KappaOrbits kappa_orbit_reps(const GroupDescriptor& M, const GroupDescriptor& A) {
  const Int delta = M.d, epsilon = M.e, kappa = M.k;
  const Int common = std::gcd(delta, A.d);
  KappaOrbits out;
  auto exponents = units(delta);
  for (Int m : exponents)
    if (mod(m - 1, common) == 0) out.Delta.push_back(m);

  std::set<Int> K;
  for (Int r : exponents) K.insert(powmod(kappa, r, epsilon));
  out.K.assign(K.begin(), K.end());

  // Delta acts on K by exponentiation; each orbit is met first at its least
  // element because K is scanned in ascending order.
  std::set<Int> covered;
  for (Int x : out.K) {
    if (covered.count(x)) continue;
    out.reps.push_back(x);
    for (Int m : out.Delta) covered.insert(powmod(x, m, epsilon));
  }
  return out;
}

const char* to_string(PrimeClass c) {
  switch (c) {
    case PrimeClass::P: return "P";
    case PrimeClass::Q1: return "Q'";
    case PrimeClass::Q2: return "Q''";
    case PrimeClass::R: return "R";
    case PrimeClass::SPrime: return "S'";
    case PrimeClass::SPlus: return "S+";
    case PrimeClass::SMinus: return "S-";
    case PrimeClass::T: return "T";
    case PrimeClass::U1: return "U'";
    case PrimeClass::U2: return "U''";
  }
  return "?";
}

const PrimeInfo* PrimePartition::find(Int q) const {
  for (const auto& p : primes)
    if (p.q == q) return &p;
  return nullptr;
}

PrimePartition prime_partition(const GroupDescriptor& M, const GroupDescriptor& A, int h) {
  auto ctx = pair_context(M, A);
  if (!ctx.gamma_divides_e)
    throw GammaNotDividing("gamma = " + std::to_string(ctx.gamma) + " does not divide e = " +
                           std::to_string(A.e) + "; no regular subgroups exist");
  auto orbits = kappa_orbit_reps(M, A);
  if (h < 1 || static_cast<std::size_t>(h) > orbits.reps.size())
    throw Error("family index " + std::to_string(h) + " out of range 1.." +
                std::to_string(orbits.reps.size()));

  PrimePartition part;
  part.M = M;
  part.A = A;
  part.h = h;
  part.kappa_h = orbits.reps[static_cast<std::size_t>(h - 1)];
  const Int g = ctx.g, z = ctx.z, k = A.k;
  if (g > 1) {
    part.lambda = mulmod(inverse_mod(z, g), k - 1, g);
    part.mu = mulmod(inverse_mod(k, g), part.lambda, g);
  }

  for (Int q : prime_factors(A.e)) {
    PrimeInfo p;
    p.q = q;
    p.k = mod(k, q);
    p.k_inv = inverse_mod(k, q);
    p.r_q = multiplicative_order(k, q);
    if (M.e % q == 0) {
      p.kappa = mod(part.kappa_h, q);
      p.rho_q = multiplicative_order(M.k, q);
    }
    if (g % q == 0) {
      p.lambda = mod(part.lambda, q);
      p.mu = mod(part.mu, q);
    }
    const bool in_z = z % q == 0;
    if (ctx.gamma % q == 0) {
      if (in_z) {
        p.cls = PrimeClass::P;
      } else if (p.rho_q != p.r_q) {
        p.cls = PrimeClass::R;
      } else if (p.r_q == 2) {
        p.cls = PrimeClass::T;
      } else if (p.kappa == p.k) {
        p.cls = PrimeClass::SPlus;
      } else if (p.kappa == p.k_inv) {
        p.cls = PrimeClass::SMinus;
      } else {
        p.cls = PrimeClass::SPrime;
      }
    } else {
      // q divides zeta * delta
      const bool in_delta = M.d % q == 0;
      if (in_z)
        p.cls = in_delta ? PrimeClass::Q1 : PrimeClass::Q2;
      else
        p.cls = in_delta ? PrimeClass::U1 : PrimeClass::U2;
    }
    part.primes.push_back(p);
  }
  return part;
}

bool prime_condition(const PrimeInfo& p, const Quintuple& q5) {
  const Int q = p.q;
  const Int t = mod(q5.t, q), a = mod(q5.a, q), u = mod(q5.u, q);
  const Int c = mod(q5.c, q), v = mod(q5.v, q);
  const Int kap = p.kappa;
  const Int kap_kinv = mulmod(kap, p.k_inv, q);
  const bool c_lam_a = c == mulmod(p.lambda, a, q);
  const bool v_mu_u = v == mulmod(p.mu, u, q);
  switch (p.cls) {
    case PrimeClass::P:
      return t == kap && a != 0;
    case PrimeClass::Q1:
    case PrimeClass::Q2:
      return t == 1 && a == 0 && u != 0;
    case PrimeClass::R:
    case PrimeClass::SPrime:
      return a != 0 && ((t == kap && c_lam_a) || (t == kap_kinv && c == 0));
    case PrimeClass::SPlus:
      return a != 0 && ((t == 1 && c == 0 && v == 0) || (t == kap && c_lam_a));
    case PrimeClass::SMinus:
      return a != 0 && ((t == kap && c_lam_a && v_mu_u) || (t == kap_kinv && c == 0));
    case PrimeClass::T:
      return a != 0 && ((t == kap && c_lam_a && v_mu_u) || (t == 1 && c == 0 && v == 0));
    case PrimeClass::U1:
    case PrimeClass::U2:
      return a == 0 && c == 0 && ((t == 1 && v != 0) || (t == p.k_inv && !v_mu_u));
  }
  return false;
}

bool quintuple_predicate(const Quintuple& q5, const PrimePartition& part) {
  return std::all_of(part.primes.begin(), part.primes.end(),
                     [&](const PrimeInfo& p) { return prime_condition(p, q5); });
}

Int tabulated_index(const PrimeInfo& p, const Quintuple& q5) {
  const Int q = p.q;
  const Int t = mod(q5.t, q);
  switch (p.cls) {
    case PrimeClass::P: return 1;
    case PrimeClass::Q1: return q - 1;
    case PrimeClass::Q2: return 1;
    case PrimeClass::R:
    case PrimeClass::SPrime: return q;
    case PrimeClass::SPlus: return t == 1 ? 1 : q;
    case PrimeClass::SMinus: return t == p.kappa ? 1 : q;
    case PrimeClass::T: return 1;
    case PrimeClass::U1: return q * (q - 1);
    case PrimeClass::U2: return q;
  }
  return 0;
}

Int tabulated_count(const PrimeInfo& p) {
  const Int q = p.q;
  switch (p.cls) {
    case PrimeClass::P: return q * (q - 1);
    case PrimeClass::Q1:
    case PrimeClass::Q2: return q - 1;
    case PrimeClass::R:
    case PrimeClass::SPrime: return 2 * q * q * (q - 1);
    case PrimeClass::SPlus:
    case PrimeClass::SMinus: return q * (q - 1) + q * q * (q - 1);
    case PrimeClass::T:
    case PrimeClass::U1:
    case PrimeClass::U2: return 2 * q * (q - 1);
  }
  return 0;
}

Int predicted_stabilizer_index(const PrimePartition& part, const Quintuple& q5) {
  Int index = 1;
  for (const auto& p : part.primes) index *= tabulated_index(p, q5);
  return index;
}

HolElement quintuple_x(const Holomorph& H, const Quintuple& q5) {
  return H.make(q5.a, 0, q5.c, 1);
}

HolElement quintuple_y(const Holomorph& H, const Quintuple& q5) {
  return H.make(q5.u, 1, q5.v, q5.t);
}

std::optional<std::string> adi_congruence_failure(const PrimePartition& part, const Quintuple& q5,
                                                  const std::vector<Int>& samples) {
  Holomorph H(part.A);
  const Int d = part.A.d, z = part.A.z();
  const Int common = std::gcd(part.M.d, part.A.e);
  for (Int i : samples) {
    const Int j = d * i;
    const Int aj = H.y_exponent(q5.u, q5.v, q5.t, j);
    for (const auto& p : part.primes) {
      const Int q = p.q;
      const Int value = mod(aj, q);
      const Int di = mod(j, q);
      const Int t = mod(q5.t, q);
      std::optional<Int> expected;
      const char* which = "";
      switch (p.cls) {
        case PrimeClass::Q1:
        case PrimeClass::Q2:
          expected = mulmod(q5.u, di, q);
          which = "(i)";
          break;
        case PrimeClass::U1:
        case PrimeClass::U2: {
          const Int inv_k1 = inverse_mod(p.k - 1, q);
          if (t == 1) {
            expected = mulmod(mulmod(mulmod(q5.v, z, q), inv_k1, q), di, q);
            which = "(ii)";
          } else if (t == p.k_inv) {
            Int coeff = mulmod(mulmod(z, p.k, q), inv_k1, q);
            Int diff = mod(mulmod(p.mu, q5.u, q) - q5.v, q);
            expected = mulmod(mulmod(coeff, diff, q), di, q);
            which = "(iii)";
          }
          break;
        }
        default:
          // q divides gamma
          if (mod(i, common) == 0) {
            expected = 0;
            which = "(iv)";
          }
          break;
      }
      if (expected && *expected != value)
        return std::string("congruence ") + which + " fails at q = " + std::to_string(q) +
               ", i = " + std::to_string(i) + ": A(di) = " + std::to_string(value) +
               ", expected " + std::to_string(*expected);
    }
  }
  return std::nullopt;
}

bool adi_congruence_check(const PrimePartition& part, const Quintuple& q5,
                          const std::vector<Int>& samples) {
  return !adi_congruence_failure(part, q5, samples).has_value();
}

}  // namespace sqfb

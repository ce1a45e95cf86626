#include "assemble.hpp"

#include "error.hpp"

namespace kbgq {

namespace {

void split_parity(const Betti& b, KPart& even, KPart& odd) {
  for (std::size_t k = 0; k < b.size(); ++k) {
    auto& part = (k % 2 == 0) ? even : odd;
    part.betti.push_back(b[k]);
    part.rational_rank += b[k];
  }
}

std::uint64_t parity_sum(const Betti& b, int parity) {
  std::uint64_t s = 0;
  for (std::size_t k = parity; k < b.size(); k += 2) s += b[k];
  return s;
}

void add_count(PrimeCounts& m, std::uint64_t p, std::uint64_t c) {
  if (c) m[p] += c;
}

KRationalResult finite_group(const PermGroup& g) {
  KRationalResult out;
  out.k0.rational_rank = 1;
  out.k0.betti = {1};
  auto r = rep_ring(g);
  for (auto p : prime_divisors(g.order_u64())) add_count(out.k0.p_adic, p, r_p(r, p).value);
  return out;
}

KRationalResult crystallographic(const CrystalSpec& s) {
  KRationalResult out;
  split_parity(betti_crystallographic(s), out.k0, out.k1);
  auto h = h1_and_fixed(s);
  const std::uint64_t classes = (s.p - 1) * to_u64(h.h1_order);
  const auto ext = exterior_betti(h.fixed_rank);
  add_count(out.k0.p_adic, s.p, classes * parity_sum(ext, 0));
  add_count(out.k1.p_adic, s.p, classes * parity_sum(ext, 1));
  if (h.fixed_rank == 0 && h.h1_order == Int(static_cast<unsigned long>(s.p)) && out.k0.rational_rank != 1) {
    out.notes.push_back(
        {"rational_part_discrepancy",
         "the closed form usually quoted for this family (H^1 cyclic of order p, A^{Z/p} = 0) has rational part "
         "Q, but averaging invariant exterior powers gives rational rank " +
             std::to_string(out.k0.rational_rank) + " in even degrees; the averaged value is reported"});
  }
  return out;
}

KRationalResult fuchsian(const FuchsianSpec& s) {
  auto d = betti_fuchsian(s);
  KRationalResult out;
  split_parity(d.betti, out.k0, out.k1);
  for (auto [p, c] : d.counts) add_count(out.k0.p_adic, p, c);
  return out;
}

KRationalResult one_relator(const OneRelatorSpec& s) {
  auto d = one_relator_analyze(s);
  KRationalResult out;
  split_parity(d.betti, out.k0, out.k1);
  for (auto [p, c] : d.counts) add_count(out.k0.p_adic, p, c);
  return out;
}

KRationalResult direct(const DirectDataSpec& s) {
  validate(s);
  KRationalResult out;
  split_parity(s.betti, out.k0, out.k1);
  for (const auto& [p, recs] : s.centralizers)
    for (const auto& rec : recs) {
      add_count(out.k0.p_adic, p, parity_sum(rec.betti, 0));
      add_count(out.k1.p_adic, p, parity_sum(rec.betti, 1));
    }
  return out;
}

bool weyl_full(const PermGroup& g) {
  for (const auto& c : g.classes()) {
    const auto o = c.element_order;
    if (o == 1 || prime_divisors(o).size() != 1) continue;
    const auto n = normalizer_of_cyclic(g, c.representative).order_u64();
    const auto z = centralizer(g, c.representative).order_u64();
    if (n / z != euler_phi(o)) return false;
  }
  return true;
}

const char* kIdempotentLaw = "(a,u)*(b,v) = (ab, a_0 v + b_0 u + uv), a_0 and b_0 the degree-0 components";
const char* kFiniteLaw = "(m,u)*(n,v) = (mn, (m v_p + n u_p + u_p v_p)_p), u_p and v_p in Q_p (x) I_p(G)";

}  // namespace

void validate(const DirectDataSpec& s) {
  if (s.notes.empty()) throw ValidationError("direct data must cite its source in notes");
  if (s.betti.empty()) throw ValidationError("direct data needs the Betti numbers of BG");
  for (const auto& [p, recs] : s.centralizers) {
    if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
    for (const auto& r : recs)
      if (r.betti.empty()) throw ValidationError("centralizer record '" + r.label + "' has no Betti numbers");
  }
}

const char* family_name(const GroupSpec& s) {
  static const char* names[] = {"finite_perm", "crystallographic", "fuchsian", "one_relator", "direct"};
  return names[s.index()];
}

KRationalResult k_rational(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> KRationalResult {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PermGroup>) return finite_group(s);
        else if constexpr (std::is_same_v<T, CrystalSpec>) return crystallographic(s);
        else if constexpr (std::is_same_v<T, FuchsianSpec>) return fuchsian(s);
        else if constexpr (std::is_same_v<T, OneRelatorSpec>) return one_relator(s);
        else return direct(s);
      },
      spec);
}

RingDescriptor ring_structure(const GroupSpec& spec) {
  RingDescriptor d;
  if (const auto* g = std::get_if<PermGroup>(&spec)) {
    d.present = true;
    d.kind = "augmentation_images";
    d.law = kFiniteLaw;
    auto r = rep_ring(*g);
    for (auto p : prime_divisors(g->order_u64())) d.per_prime.push_back(ring_structure_I_p(r, p));
    d.weyl_full = weyl_full(*g);
    return d;
  }
  if (const auto* s = std::get_if<DirectDataSpec>(&spec)) {
    if (!s->weyl_certified) {
      d.reason = "W_GC = aut(C) not certified";
      return d;
    }
    d.present = true;
    d.kind = "idempotent_splitting";
    d.law = kIdempotentLaw;
    d.factors = direct(*s).k0.p_adic;
    return d;
  }
  if (std::holds_alternative<CrystalSpec>(spec)) {
    d.reason = "W_GC = aut(C) fails: g and g^k lie in distinct conjugacy classes for k != 1 mod p";
    return d;
  }
  d.reason = "W_GC = aut(C) not certified";
  return d;
}

bool torsion_criterion(const KRationalResult& r) { return !r.k0.p_adic.empty() || !r.k1.p_adic.empty(); }

PadicRootResult padic_root_check(std::uint64_t l, std::uint64_t p, unsigned precision) {
  if (l == 0) throw ValidationError("l must be positive");
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (precision == 0) throw ValidationError("precision must be at least 1");
  Int modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, precision);
  if (modulus > 10000000) throw ResourceError("p^precision exceeds the exhaustive search limit 10^7");
  const auto& phi = cyclotomic_polynomial(l);
  std::vector<Int> dphi;
  for (std::size_t i = 1; i < phi.size(); ++i) dphi.push_back(phi[i] * static_cast<unsigned long>(i));
  auto eval = [](const std::vector<Int>& f, const Int& x, const Int& m) {
    Int acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
      acc = acc * x + *it;
      acc %= m;
    }
    if (acc < 0) acc += m;
    return acc;
  };
  PadicRootResult out;
  bool any_root = false;
  const Int pp = static_cast<unsigned long>(p);
  for (Int x = 0; x < modulus; ++x) {
    if (eval(phi, x, modulus) != 0) continue;
    any_root = true;
    if (eval(dphi, x, pp) != 0) {
      out.exists = true;
      break;
    }
  }
  out.decided = out.exists || !any_root;
  if (l % p != 0) out.teichmuller = (p - 1) % l == 0;
  return out;
}

}  // namespace kbgq

#include "repring.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace kbgq {

namespace {

// x with x * basis == target, over Q; nullopt when target is outside the span.
std::optional<RationalVector> solve_rational(const std::vector<RationalVector>& basis,
                                             const RationalVector& target) {
  const std::size_t m = basis.size(), n = target.size();
  // Columns of the system are basis vectors; augment with target.
  std::vector<RationalVector> a(n, RationalVector(m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = basis[j][i];
    a[i][m] = target[i];
  }
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j <= m; ++j) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a[i][m] != 0) return std::nullopt;
  RationalVector x(m, Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = a[i][m];
  return x;
}

RationalVector to_rational(const std::vector<Int>& v) {
  RationalVector out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Cyc cyc_determinant(std::vector<std::vector<Cyc>> a) {
  const std::size_t n = a.size();
  Cyc det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Cyc(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Cyc inv = a[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Cyc f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::string vec_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

}  // namespace

RepRing rep_ring(const CharacterTable& t) {
  RepRing r{t, MultTable(t.size()), {}};
  const auto k = t.size();
  for (auto d : t.degrees()) r.augmentation.emplace_back(static_cast<unsigned long>(d));
  // weight[l][c] = |c| conj(chi_l(c)) / |G|
  std::vector<ClassFunction> weight(k, ClassFunction(k));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t c = 0; c < k; ++c) {
      Rational frac(static_cast<unsigned long>(t.classes()[c].size), static_cast<unsigned long>(t.group_order()));
      frac.canonicalize();
      weight[l][c] = t.value(l, c).conj() * Cyc(frac);
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      ClassFunction prod(k);
      for (std::size_t c = 0; c < k; ++c) prod[c] = t.value(i, c) * t.value(j, c);
      for (std::size_t l = 0; l < k; ++l) {
        Cyc s;
        for (std::size_t c = 0; c < k; ++c) s += prod[c] * weight[l][c];
        auto v = s.to_integer();
        if (!v) throw InternalConsistencyError("non-integral representation-ring structure constant");
        if (*v < 0) throw InternalConsistencyError("negative representation-ring structure constant");
        r.mult.at(i, j, l) = *v;
        r.mult.at(j, i, l) = *v;
      }
    }
  return r;
}

RepRing rep_ring(const PermGroup& g) { return rep_ring(character_table(g)); }

IntMatrix augmentation_ideal(const RepRing& r) {
  IntMatrix col(r.rank(), 1);
  for (std::size_t i = 0; i < r.rank(); ++i) col(i, 0) = r.augmentation[i];
  return kernel(col);
}

Embedding embed(const CharacterTable& t_g, const PermGroup& sub) {
  auto fusion = class_fusion(sub, t_g.group());
  auto t_h = character_table(sub);
  auto res = restriction_matrix(t_g, t_h, fusion);
  auto ind = induction_matrix(t_h, t_g, fusion);
  return {sub, std::move(t_h), std::move(fusion), std::move(res), std::move(ind)};
}

IntMatrix restriction_image(const RepRing& r, const Embedding& e) {
  IntMatrix i_g = augmentation_ideal(r);
  if (i_g.rows() == 0) return IntMatrix(0, e.sub_table.size());
  IntMatrix img = hnf(i_g * e.res);
  IntMatrix col(e.sub_table.size(), 1);
  for (std::size_t i = 0; i < e.sub_table.size(); ++i)
    col(i, 0) = static_cast<unsigned long>(e.sub_table.degrees()[i]);
  if (!(img * col).is_zero())
    throw InternalConsistencyError("restriction of the augmentation ideal left the augmentation ideal");
  return img;
}

RpResult r_p(const RepRing& r, std::uint64_t p) {
  const auto& g = r.table.group();
  RpResult out;
  out.p = p;
  out.class_count = con_p(g, p).size();
  out.lattice_rank = restriction_image(r, embed(r.table, sylow(g, p))).rows();
  if (out.class_count != out.lattice_rank)
    throw InternalConsistencyError("r(p) routes disagree at p = " + std::to_string(p) + ": " +
                                   std::to_string(out.class_count) + " classes vs lattice rank " +
                                   std::to_string(out.lattice_rank));
  out.value = out.class_count;
  return out;
}

RpResult r_p(const PermGroup& g, std::uint64_t p) { return r_p(rep_ring(g), p); }

CyclicData cyclic_data(const PermGroup& c) {
  auto gen = cyclic_generator(c);
  if (!gen) throw ValidationError("group is not cyclic");
  CyclicData d{c, c.order_u64(), *gen, {}, std::nullopt, 0};
  for (const auto& x : c.elements())
    if (x.order() == d.order) d.generators.push_back(x);
  auto primes = prime_divisors(d.order);
  if (primes.size() == 1) {
    d.prime = primes[0];
    d.index_p_subgroup = subgroup(c, {gen->pow(static_cast<std::int64_t>(d.prime))});
  }
  return d;
}

RationalVector theta(const CharacterTable& t_c, const CyclicData& c) {
  RationalVector out;
  for (std::size_t i = 0; i < t_c.size(); ++i) {
    Cyc s;
    for (const auto& x : c.generators) s += t_c.value(i, t_c.group().class_of(x)).conj();
    auto v = (s * Cyc(Rational(1, static_cast<unsigned long>(c.order)))).to_rational();
    if (!v) throw InternalConsistencyError("theta coordinate is not rational");
    out.push_back(*v);
  }
  return out;
}

RationalVector rational_product(const MultTable& m, const RationalVector& x, const RationalVector& y) {
  const auto n = m.dim();
  RationalVector out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (m.at(i, j, k) != 0) out[k] += xy * m.at(i, j, k);
    }
  }
  return out;
}

std::vector<std::size_t> galois_twist_permutation(const CharacterTable& t, std::int64_t k) {
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < t.size(); ++i) {
    ClassFunction tw;
    for (const auto& v : t.irreducibles()[i]) tw.push_back(v.galois(k));
    auto it = std::find(t.irreducibles().begin(), t.irreducibles().end(), tw);
    if (it == t.irreducibles().end()) throw InternalConsistencyError("Galois twist of an irreducible is not irreducible");
    perm.push_back(static_cast<std::size_t>(it - t.irreducibles().begin()));
  }
  return perm;
}

TRankResult t_rank(const PermGroup& h) {
  TRankResult out;
  if (h.order() == 1) {
    out.rank = 1;
    out.witness = IntMatrix::identity(1);
    return out;
  }
  auto t = character_table(h);
  auto r = rep_ring(t);
  IntMatrix i_h = augmentation_ideal(r);
  auto subs = subgroup_class_representatives(h);
  const auto n = h.order_u64();
  for (auto p : prime_divisors(n)) {
    IntMatrix stack(t.size(), 0);
    for (const auto& s : subs) {
      auto so = s.order_u64();
      if (so == n || p_part(so, p) != so) continue;
      stack = hstack(stack, embed(t, s).res);
    }
    IntMatrix v = lattice_intersection(kernel(stack), i_h);
    std::size_t contribution = v.rows();
    if (p_part(n, p) != n) {
      IntMatrix ker_sylow = kernel(embed(t, sylow(h, p)).res);
      contribution -= lattice_intersection(v, ker_sylow).rows();
    }
    if (contribution > 0) {
      out.witness = v;
      out.prime = p;
    }
    out.rank += contribution;
  }
  if (out.witness.rows() == 0) out.witness = IntMatrix(0, t.size());
  return out;
}

Report verify_theta(const CyclicData& c) {
  Report rep{"theta", {}, {}};
  auto t = character_table(c.group);
  auto r = rep_ring(t);
  auto th = theta(t, c);
  if (rational_product(r.mult, th, th) != th) rep.fail("theta is not idempotent");
  for (std::uint64_t k = 1; k < std::max<std::uint64_t>(c.order, 2); ++k) {
    if (std::gcd(k, c.order) != 1) continue;
    auto perm = galois_twist_permutation(t, static_cast<std::int64_t>(k));
    RationalVector tw(th.size());
    for (std::size_t i = 0; i < th.size(); ++i) tw[perm[i]] = th[i];
    if (tw != th) rep.fail("theta is not fixed by the twist k = " + std::to_string(k));
  }
  // values: 1 on generators, 0 elsewhere
  for (std::size_t cl = 0; cl < t.size(); ++cl) {
    Cyc v;
    for (std::size_t i = 0; i < t.size(); ++i) v += Cyc(th[i]) * t.value(i, cl);
    bool is_gen = t.classes()[cl].element_order == c.order;
    if (v != Cyc(is_gen ? 1 : 0)) rep.fail("theta has value " + v.to_string() + " at class " + std::to_string(cl));
  }
  if (c.index_p_subgroup) {
    auto e = embed(t, *c.index_p_subgroup);
    RationalVector res(e.sub_table.size(), Rational(0));
    for (std::size_t i = 0; i < th.size(); ++i)
      for (std::size_t j = 0; j < res.size(); ++j) res[j] += th[i] * e.res(i, j);
    if (std::any_of(res.begin(), res.end(), [](const Rational& x) { return x != 0; }))
      rep.fail("theta does not restrict to zero on the index-p subgroup");
  }
  return rep;
}

Report verify_double_coset(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  Report rep{"double_coset", {}, {}};
  auto t_g = character_table(g);
  auto eh = embed(t_g, h);
  auto ek = embed(t_g, k);
  auto reps = double_coset_representatives(g, k, h);
  rep.note(std::to_string(reps.size()) + " double cosets");
  const auto& t_h = eh.sub_table;
  const auto& t_k = ek.sub_table;
  const auto& kels = k.elements();
  for (std::size_t chi = 0; chi < t_h.size(); ++chi) {
    auto lhs = row_times(row_times(IntMatrix::identity(t_h.size()).row(chi), eh.ind), ek.res);
    ClassFunction rhs(t_k.size());
    for (const auto& x : reps) {
      Perm xinv = x.inverse();
      // L = K ∩ x H x^-1
      std::vector<Perm> l_members;
      for (const auto& y : kels)
        if (h.contains(xinv * y * x)) l_members.push_back(y);
      const auto l_order = static_cast<unsigned long>(l_members.size());
      for (std::size_t kc = 0; kc < t_k.size(); ++kc) {
        const Perm& y = t_k.classes()[kc].representative;
        Cyc acc;
        for (const auto& z : kels) {
          Perm w = z.inverse() * y * z;
          Perm hw = xinv * w * x;
          if (!h.contains(hw)) continue;
          acc += t_h.value(chi, h.class_of(hw));
        }
        rhs[kc] += acc * Cyc(Rational(1, l_order));
      }
    }
    auto rhs_coords = decompose(t_k, rhs);
    if (rhs_coords != lhs)
      rep.fail("irreducible " + std::to_string(chi) + ": res ind gives " + vec_str(lhs) +
               ", Mackey sum gives " + vec_str(rhs_coords));
  }
  return rep;
}

Report verify_sylow_image(const PermGroup& g, std::uint64_t p) {
  Report rep{"sylow_image", {}, {}};
  auto t = character_table(g);
  auto e = embed(t, sylow(g, p));
  IntMatrix l1 = hnf(e.res);
  IntMatrix l2 = hnf(e.ind * e.res);
  if (!lattice_contains(l1, l2)) {
    rep.fail("image of res∘ind is not inside the image of res");
    return rep;
  }
  if (l1.rows() != l2.rows())
    rep.fail("ranks differ: " + std::to_string(l1.rows()) + " vs " + std::to_string(l2.rows()));
  auto idx = lattice_index(l1, l2);
  rep.note("rank " + std::to_string(l1.rows()) + ", index " + idx.to_string());
  if (!idx.finite) rep.fail("index is infinite");
  else if (idx.value % static_cast<unsigned long>(p) == 0)
    rep.fail("index " + idx.value.get_str() + " is divisible by p = " + std::to_string(p));
  return rep;
}

Report verify_sylow_double_cosets(const PermGroup& g, std::uint64_t p, std::uint64_t q) {
  Report rep{"sylow_double_cosets", {}, {}};
  if (p == q) throw ValidationError("the two primes must differ");
  auto t = character_table(g);
  auto gp = sylow(g, p);
  auto gq = sylow(g, q);
  auto ep = embed(t, gp);
  auto eq = embed(t, gq);
  auto count = double_coset_representatives(g, gq, gp).size();
  rep.note("|G_q\\G/G_p| = " + std::to_string(count));
  IntMatrix lhs = ep.ind * eq.res;
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      Int expect = Int(static_cast<unsigned long>(count)) *
                   static_cast<unsigned long>(ep.sub_table.degrees()[i]) *
                   static_cast<unsigned long>(eq.sub_table.degrees()[j]);
      if (lhs(i, j) != expect)
        rep.fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " + lhs(i, j).get_str() +
                 ", expected " + expect.get_str());
    }
  return rep;
}

std::vector<IntMatrix> augmentation_powers(const RepRing& r, unsigned n) {
  std::vector<IntMatrix> out;
  IntMatrix i = augmentation_ideal(r);
  if (n == 0) return out;
  out.push_back(i);
  for (unsigned m = 2; m <= n; ++m) out.push_back(product_lattice(out.back(), i, r.mult));
  return out;
}

Report verify_restriction_sequence(const PermGroup& g, unsigned depth) {
  Report rep{"restriction_sequence", {}, {}};
  if (depth == 0) throw ValidationError("depth must be at least 1");
  auto r = rep_ring(g);
  IntMatrix i_g = augmentation_ideal(r);
  IntMatrix stacked(r.rank(), 0);
  IntMatrix target(0, 0);
  std::size_t offset_total = 0;
  std::vector<IntMatrix> images;
  for (auto p : prime_divisors(g.order_u64())) {
    auto e = embed(r.table, sylow(g, p));
    stacked = hstack(stacked, e.res);
    images.push_back(restriction_image(r, e));
    offset_total += e.sub_table.size();
  }
  IntMatrix block(0, offset_total);
  std::size_t off = 0;
  for (const auto& im : images) {
    for (std::size_t row = 0; row < im.rows(); ++row) {
      std::vector<Int> v(offset_total, 0);
      for (std::size_t c = 0; c < im.cols(); ++c) v[off + c] = im(row, c);
      block.append_row(v);
    }
    off += im.cols();
  }
  if (i_g.rows() == 0) {
    rep.note("trivial group: nothing to check");
    return rep;
  }
  IntMatrix mapped = i_g * stacked;
  IntMatrix img = hnf(mapped);
  IntMatrix tgt = block.rows() ? hnf(block) : IntMatrix(0, offset_total);
  if (!(img == tgt)) rep.fail("I_G does not map onto the product of the Sylow restriction images");
  IntMatrix coeffs = kernel(mapped);
  IntMatrix ker = coeffs.rows() ? hnf(coeffs * i_g) : IntMatrix(0, r.rank());
  rep.note("kernel rank " + std::to_string(ker.rows()));
  auto powers = augmentation_powers(r, depth);
  for (unsigned m = 1; m <= depth; ++m)
    if (!lattice_contains(powers[m - 1], ker)) rep.fail("kernel is not contained in I^" + std::to_string(m));
  return rep;
}

Report verify_cyclic_evaluation(const CyclicData& c) {
  Report rep{"cyclic_evaluation", {}, {}};
  if (c.order < 2) throw ValidationError("cyclic group must be nontrivial");
  auto t = character_table(c.group);
  auto r = rep_ring(t);
  auto th = theta(t, c);
  const auto k = t.size();
  std::vector<RationalVector> basis;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector unit(k, Rational(0));
    unit[i] = 1;
    auto v = rational_product(r.mult, th, unit);
    auto trial = basis;
    trial.push_back(v);
    if (rational_rank(trial) == trial.size()) {
      basis = std::move(trial);
      chosen.push_back(i);
    }
  }
  const auto phi = euler_phi(c.order);
  if (basis.size() != phi)
    rep.fail("theta R(C) has rank " + std::to_string(basis.size()) + ", expected " + std::to_string(phi));
  std::vector<std::vector<Cyc>> eval;
  for (auto i : chosen) {
    std::vector<Cyc> row;
    for (const auto& x : c.generators) row.push_back(t.value(i, t.group().class_of(x)));
    eval.push_back(std::move(row));
  }
  if (eval.size() == c.generators.size()) {
    auto det = cyc_determinant(eval);
    rep.note("evaluation determinant " + det.to_string());
    if (det.is_zero()) rep.fail("evaluation matrix is singular");
  } else {
    rep.fail("evaluation matrix is not square");
  }
  for (std::uint64_t kk = 1; kk < std::max<std::uint64_t>(c.order, 2); ++kk) {
    if (std::gcd(kk, c.order) != 1) continue;
    auto perm = galois_twist_permutation(t, static_cast<std::int64_t>(kk));
    Rational trace = 0;
    for (std::size_t b = 0; b < chosen.size(); ++b) {
      RationalVector unit(k, Rational(0));
      unit[perm[chosen[b]]] = 1;
      auto image = rational_product(r.mult, th, unit);
      auto coords = solve_rational(basis, image);
      if (!coords) {
        rep.fail("twist k = " + std::to_string(kk) + " leaves theta R(C)");
        break;
      }
      trace += (*coords)[b];
    }
    Rational expect = kk == 1 ? Rational(static_cast<unsigned long>(phi)) : Rational(0);
    if (trace != expect)
      rep.fail("trace of k = " + std::to_string(kk) + " is " + trace.get_str() + ", expected " + expect.get_str());
  }
  if (c.index_p_subgroup) {
    // theta R(C) ⊗ Q equals ker(res to C') ⊗ Q
    auto e = embed(t, *c.index_p_subgroup);
    IntMatrix ker = kernel(e.res);
    std::vector<RationalVector> kr;
    for (std::size_t i = 0; i < ker.rows(); ++i) kr.push_back(to_rational(ker.row(i)));
    bool same = kr.size() == basis.size();
    for (const auto& b : basis)
      if (!solve_rational(kr, b)) same = false;
    if (!same) rep.fail("theta R(C) and ker(res to C') span different rational subspaces");
  }
  return rep;
}

RingStructure ring_structure_I_p(const RepRing& r, std::uint64_t p) {
  const auto& g = r.table.group();
  if (g.order_u64() % p != 0) throw ValidationError("p does not divide the group order");
  auto e = embed(r.table, sylow(g, p));
  auto r_sub = rep_ring(e.sub_table);
  RingStructure out;
  out.p = p;
  out.basis = restriction_image(r, e);
  // Orient each basis vector so its last nonzero coordinate is positive.
  for (std::size_t i = 0; i < out.basis.rows(); ++i) {
    std::size_t last = out.basis.cols();
    while (last > 0 && out.basis(i, last - 1) == 0) --last;
    if (last > 0 && out.basis(i, last - 1) < 0) out.basis.negate_row(i);
  }
  const auto n = out.basis.rows();
  out.constants = MultTable(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto prod = r_sub.mult.multiply(out.basis.row(a), out.basis.row(b));
      auto coords = coordinates_in(out.basis, prod);
      if (!coords) throw InternalConsistencyError("product of restriction-image basis elements left the lattice");
      for (std::size_t c = 0; c < n; ++c) out.constants.at(a, b, c) = (*coords)[c];
    }
  return out;
}

RingStructure ring_structure_I_p(const PermGroup& g, std::uint64_t p) {
  return ring_structure_I_p(rep_ring(g), p);
}

}  // namespace kbgq

#include <doctest.h>

#include "oracles.hpp"
#include "repring.hpp"

using namespace kbgq;

namespace {

IntMatrix M(std::vector<std::vector<long>> rows, std::size_t cols = 0) { return IntMatrix::from_rows(rows, cols); }

std::vector<PermGroup> corpus() {
  return {library::cyclic(2),    library::cyclic(3),     library::cyclic(4),   library::cyclic(5),
          library::cyclic(6),    library::klein_four(),  library::symmetric(3), library::dihedral(4),
          library::quaternion8(), library::alternating(4), library::symmetric(4)};
}

std::size_t brute_con_p(const PermGroup& g, std::uint64_t p) {
  std::vector<oracle::Images> gens;
  for (const auto& x : g.generators()) gens.emplace_back(x.images().begin(), x.images().end());
  return oracle::count_prime_power_classes(oracle::closure(g.degree(), gens), p);
}

}  // namespace

TEST_CASE("structure constants") {
  auto z2 = rep_ring(library::cyclic(2));
  CHECK(z2.mult.at(1, 1, 0) == 1);
  CHECK(z2.mult.at(1, 1, 1) == 0);

  auto s3 = rep_ring(library::symmetric(3));
  CHECK(s3.mult.multiply({0, 0, 1}, {0, 0, 1}) == std::vector<Int>{1, 1, 1});

  auto z3 = rep_ring(library::cyclic(3));
  for (std::size_t i = 1; i < 3; ++i) {
    auto sq = z3.mult.multiply(i == 1 ? std::vector<Int>{0, 1, 0} : std::vector<Int>{0, 0, 1},
                               i == 1 ? std::vector<Int>{0, 1, 0} : std::vector<Int>{0, 0, 1});
    CHECK(sq == (i == 1 ? std::vector<Int>{0, 0, 1} : std::vector<Int>{0, 1, 0}));
  }

  for (const auto& g : corpus()) {
    auto r = rep_ring(g);
    const auto n = r.rank();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Int dim = 0;
        for (std::size_t k = 0; k < n; ++k) {
          CHECK(r.mult.at(i, j, k) >= 0);
          CHECK(r.mult.at(i, j, k) == r.mult.at(j, i, k));
          CHECK(r.mult.at(0, j, k) == (j == k ? 1 : 0));
          dim += r.mult.at(i, j, k) * r.augmentation[k];
        }
        CHECK(dim == r.augmentation[i] * r.augmentation[j]);
        // value-wise check
        for (std::size_t c = 0; c < n; ++c) {
          Cyc lhs = r.table.value(i, c) * r.table.value(j, c);
          Cyc rhs(0L);
          for (std::size_t k = 0; k < n; ++k)
            rhs += Cyc(Rational(r.mult.at(i, j, k))) * r.table.value(k, c);
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("augmentation ideal") {
  auto z2 = rep_ring(library::cyclic(2));
  CHECK(augmentation_ideal(z2) == hnf(M({{-1, 1}})));
  auto s3 = rep_ring(library::symmetric(3));
  auto i = augmentation_ideal(s3);
  CHECK(i.rows() == 2);
  CHECK(i == hnf(M({{-1, 1, 0}, {-2, 0, 1}})));
  CHECK(augmentation_ideal(rep_ring(library::cyclic(1))).rows() == 0);
}

TEST_CASE("restriction images") {
  auto g = library::symmetric(3);
  auto r = rep_ring(g);
  auto e3 = embed(r.table, sylow(g, 3));
  CHECK(restriction_image(r, e3) == hnf(M({{-2, 1, 1}})));
  auto e2 = embed(r.table, sylow(g, 2));
  CHECK(restriction_image(r, e2) == hnf(M({{-1, 1}})));
  auto self = embed(r.table, g);
  CHECK(restriction_image(r, self) == augmentation_ideal(r));
}

TEST_CASE("r_p agrees with brute-force class counts") {
  CHECK(r_p(library::symmetric(3), 2).value == 1);
  CHECK(r_p(library::symmetric(3), 3).value == 1);
  CHECK(r_p(library::cyclic(4), 2).value == 3);
  for (std::uint64_t p : {2, 3, 5, 7}) CHECK(r_p(library::cyclic(p), p).value == p - 1);
  for (const auto& g : corpus())
    for (auto p : prime_divisors(g.order_u64())) {
      auto rp = r_p(g, p);
      CHECK(rp.class_count == rp.lattice_rank);
      CHECK(rp.value == brute_con_p(g, p));
    }
}

TEST_CASE("theta") {
  auto t2 = character_table(library::cyclic(2));
  auto th2 = theta(t2, cyclic_data(library::cyclic(2)));
  CHECK(th2 == RationalVector{Rational(1, 2), Rational(-1, 2)});

  auto t3 = character_table(library::cyclic(3));
  auto th3 = theta(t3, cyclic_data(library::cyclic(3)));
  CHECK(th3 == RationalVector{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)});

  for (std::size_t n : {2, 3, 4, 5, 8, 9}) {
    auto c = library::cyclic(n);
    auto cd = cyclic_data(c);
    CHECK(cd.generators.size() == oracle::phi(n));
    auto r = rep_ring(c);
    auto th = theta(r.table, cd);
    CHECK(rational_product(r.mult, th, th) == th);
    for (std::int64_t k = 1; k < static_cast<std::int64_t>(n); ++k) {
      if (std::gcd<std::int64_t>(k, n) != 1) continue;
      auto perm = galois_twist_permutation(r.table, k);
      RationalVector tw(th.size());
      for (std::size_t i = 0; i < th.size(); ++i) tw[perm[i]] = th[i];
      CHECK(tw == th);
    }
    // value 1 on generators, 0 elsewhere
    for (std::size_t cl = 0; cl < r.table.size(); ++cl) {
      Cyc v(0L);
      for (std::size_t i = 0; i < th.size(); ++i) v += Cyc(th[i]) * r.table.value(i, cl);
      CHECK(v == Cyc(r.table.classes()[cl].element_order == n ? 1L : 0L));
    }
    CHECK(verify_theta(cd).pass());
  }
}

TEST_CASE("t_rank") {
  CHECK(t_rank(library::symmetric(3)).rank == 0);
  CHECK(t_rank(library::cyclic(4)).rank == 2);
  CHECK(t_rank(library::cyclic(1)).rank == 1);
  CHECK(t_rank(library::cyclic(6)).rank == 0);
  CHECK(t_rank(library::klein_four()).rank == 0);
  CHECK(t_rank(library::quaternion8()).rank == 0);
  for (std::size_t n : {2, 3, 5, 8, 9}) CHECK(t_rank(library::cyclic(n)).rank == oracle::phi(n));

  // witness is ker(res to C') rationally
  auto c = library::cyclic(9);
  auto cd = cyclic_data(c);
  auto t = character_table(c);
  auto e = embed(t, *cd.index_p_subgroup);
  CHECK(saturation(t_rank(c).witness) == saturation(kernel(e.res)));
}

TEST_CASE("double coset formula") {
  auto s3 = library::symmetric(3);
  auto z2 = sylow(s3, 2);
  CHECK(verify_double_coset(s3, z2, z2).pass());
  CHECK(verify_double_coset(s3, s3, z2).pass());
  CHECK(verify_double_coset(s3, z2, s3).pass());
  auto a4 = library::alternating(4);
  CHECK(verify_double_coset(a4, sylow(a4, 2), sylow(a4, 3)).pass());
  for (const auto& g : {library::symmetric(3), library::dihedral(4), library::alternating(4)}) {
    auto subs = subgroup_class_representatives(g);
    for (const auto& h : subs)
      for (const auto& k : subs) CHECK(verify_double_coset(g, h, k).pass());
  }
}

TEST_CASE("sylow image comparison") {
  CHECK(verify_sylow_image(library::symmetric(3), 2).pass());
  CHECK(verify_sylow_image(library::symmetric(4), 3).pass());
  CHECK(verify_sylow_image(library::dihedral(4), 2).pass());
  for (const auto& g : corpus())
    for (auto p : prime_divisors(g.order_u64())) CHECK(verify_sylow_image(g, p).pass());
}

TEST_CASE("double cosets of two sylows") {
  CHECK(verify_sylow_double_cosets(library::symmetric(3), 2, 3).pass());
  CHECK(verify_sylow_double_cosets(library::symmetric(4), 2, 3).pass());
  CHECK(verify_sylow_double_cosets(library::cyclic(4), 2, 3).pass());
  CHECK(double_coset_representatives(library::symmetric(3), sylow(library::symmetric(3), 3),
                                     sylow(library::symmetric(3), 2))
            .size() == 1);
}

TEST_CASE("restriction sequence") {
  CHECK(verify_restriction_sequence(library::cyclic(2), 8).pass());
  CHECK(verify_restriction_sequence(library::symmetric(3), 8).pass());
  CHECK(verify_restriction_sequence(library::cyclic(6), 8).pass());

  // Z/6: the kernel of I -> prod_p im(res) has rank 2, the two order-6 classes
  auto g = library::cyclic(6);
  auto r = rep_ring(g);
  auto i = augmentation_ideal(r);
  IntMatrix stacked(r.rank(), 0);
  for (auto p : prime_divisors(6)) stacked = hstack(stacked, embed(r.table, sylow(g, p)).res);
  auto k = lattice_intersection(kernel(stacked), i);
  CHECK(k.rows() == 2);
}

TEST_CASE("cyclic evaluation") {
  for (std::size_t n : {2, 3, 4, 5, 8, 9}) CHECK(verify_cyclic_evaluation(cyclic_data(library::cyclic(n))).pass());
}

TEST_CASE("ring structure of the sylow images") {
  auto z2 = ring_structure_I_p(library::cyclic(2), 2);
  REQUIRE(z2.basis.rows() == 1);
  CHECK(z2.constants.at(0, 0, 0) == -2);

  auto s3 = library::symmetric(3);
  auto r3 = ring_structure_I_p(s3, 3);
  REQUIRE(r3.basis.rows() == 1);
  CHECK(r3.constants.at(0, 0, 0) == -3);
  auto r2 = ring_structure_I_p(s3, 2);
  REQUIRE(r2.basis.rows() == 1);
  CHECK(r2.constants.at(0, 0, 0) == -2);

  // products of basis vectors recomputed in R(G_p) land on the constants
  for (const auto& g : corpus())
    for (auto p : prime_divisors(g.order_u64())) {
      auto rs = ring_structure_I_p(g, p);
      auto sr = rep_ring(sylow(g, p));
      const auto n = rs.basis.rows();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          auto prod = sr.mult.multiply(rs.basis.row(a), rs.basis.row(b));
          std::vector<Int> comb(rs.basis.cols(), 0);
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t c = 0; c < comb.size(); ++c) comb[c] += rs.constants.at(a, b, k) * rs.basis(k, c);
          CHECK(prod == comb);
        }
    }
}

TEST_CASE("augmentation powers decrease") {
  auto r = rep_ring(library::symmetric(3));
  auto pw = augmentation_powers(r, 5);
  REQUIRE(pw.size() == 5);
  for (std::size_t i = 0; i + 1 < pw.size(); ++i) CHECK(lattice_contains(pw[i], pw[i + 1]));
}

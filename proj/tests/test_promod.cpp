#include <doctest.h>

#include "error.hpp"
#include "oracles.hpp"
#include "promod.hpp"

using namespace kbgq;

namespace {

IntMatrix scalar(long v) {
  IntMatrix m(1, 1);
  m(0, 0) = v;
  return m;
}

Tower constant_tower(const std::vector<Int>& inv, long map, std::size_t depth) {
  return Tower::constant(Subquotient::finite_abelian(inv), scalar(map), depth);
}

StrictMap constant_map(long v, std::size_t depth) { return {std::vector<IntMatrix>(depth + 1, scalar(v))}; }

/// [L : L'] from Gram determinants, for L' ⊆ L of equal rank.
mpz_class gram_index(const IntMatrix& l, const IntMatrix& sub) {
  auto gram = [](const IntMatrix& m) {
    auto g = m * m.transpose();
    return oracle::bareiss_det(g.to_rows());
  };
  mpz_class a = gram(sub), b = gram(l);
  mpz_class q = a / b, r;
  mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
  CHECK(r * r * b == a);
  return r;
}

Int order_of(const Subquotient& s) {
  auto st = s.structure();
  REQUIRE(st.free_rank == 0);
  Int n = 1;
  for (const auto& t : st.torsion) n *= t;
  return n;
}

}  // namespace

TEST_CASE("subquotients") {
  auto s = Subquotient::finite_abelian({2, 3});
  auto st = s.structure();
  CHECK(st.free_rank == 0);
  CHECK(st.torsion == std::vector<Int>{6});
  CHECK(Subquotient::zero(2).is_zero());
  CHECK(Subquotient::finite_abelian({0}).structure().free_rank == 1);
  CHECK_THROWS_AS(Subquotient(IntMatrix::from_rows(std::vector<std::vector<long>>{{2}}),
                              IntMatrix::from_rows(std::vector<std::vector<long>>{{1}})),
                  ValidationError);
}

TEST_CASE("towers of ideal powers") {
  auto z2 = tower_of_ideal_powers(rep_ring(library::cyclic(2)), 4);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(order_of(z2.term(n)) == Int(1) << n);

  auto triv = tower_of_ideal_powers(rep_ring(library::cyclic(1)), 3);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(triv.term(n).is_zero());

  auto r3 = rep_ring(library::cyclic(3));
  auto z3 = tower_of_ideal_powers(r3, 3);
  CHECK(order_of(z3.term(1)) == 3);
  CHECK(order_of(z3.term(2)) == 9);
  CHECK(order_of(z3.term(3)) == 27);
  auto pw = augmentation_powers(r3, 4);
  for (std::size_t n = 1; n <= 3; ++n) CHECK(gram_index(pw[0], pw[n]) == order_of(z3.term(n)));
}

TEST_CASE("pro-triviality") {
  auto zero_maps = constant_tower({2}, 0, 6);
  auto r = is_pro_trivial(zero_maps);
  CHECK(r.status == ProStatus::pass);
  for (std::size_t m = 1; m < r.witness.size(); ++m) CHECK(r.witness[m] == m + 1);

  CHECK(is_pro_trivial(constant_tower({2}, 1, 6)).status == ProStatus::inconclusive);
  CHECK(is_pro_trivial(constant_tower({0}, 2, 6)).status == ProStatus::inconclusive);
  CHECK(is_pro_trivial(constant_tower({0}, 2, 6)).failing_level == 1);
}

TEST_CASE("pro-isomorphisms") {
  auto t = constant_tower({4}, 1, 5);
  StrictMap id{std::vector<IntMatrix>(6, scalar(1))};
  auto r = pro_iso_check(id, t, t);
  CHECK(r.status == ProStatus::pass);
  for (std::size_t m = 1; m < r.witness.size(); ++m) CHECK(r.witness[m] == m);

  auto z = pro_iso_check(constant_map(0, 5), t, t);
  CHECK(z.status == ProStatus::inconclusive);

  // a map that fails to commute is rejected
  auto src = constant_tower({0}, 1, 3);
  auto dst = constant_tower({0}, 2, 3);
  CHECK_THROWS_AS(pro_iso_check(constant_map(1, 3), src, dst), ValidationError);
}

TEST_CASE("pro-iso witnesses are monotone") {
  auto c = verify_pro_iso_chain(library::cyclic(2), 6);
  CHECK(c.report.pass());
  for (const auto& [name, res] : c.steps) {
    CHECK(res.status == ProStatus::pass);
    for (std::size_t m = 2; m < res.witness.size(); ++m) CHECK(res.witness[m - 1] <= res.witness[m]);
  }
}

TEST_CASE("exponents") {
  auto z2 = find_exponents(library::cyclic(2), 2, 12);
  REQUIRE(z2.found());
  CHECK(*z2.a == 1);
  CHECK(*z2.b == 2);

  auto z3 = find_exponents(library::cyclic(3), 3, 12);
  REQUIRE(z3.found());
  CHECK(*z3.a == 1);

  auto z4 = find_exponents(library::cyclic(4), 2, 12);
  CHECK(z4.found());

  // iterating p^a I ⊆ I^2 gives p^{a m} I ⊆ I^{m+1}
  for (std::size_t n : {2, 3, 4, 8, 9}) {
    auto p = prime_divisors(n).front();
    auto e = find_exponents(library::cyclic(n), p, 16);
    REQUIRE(e.found());
    auto r = rep_ring(library::cyclic(n));
    auto pw = augmentation_powers(r, 4);
    for (std::size_t m = 1; m <= 3; ++m) {
      IntMatrix scaled = pw[0];
      Int f = 1;
      for (unsigned k = 0; k < *e.a * m; ++k) f *= p;
      for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= f;
      CHECK(oracle::z_span_contains(pw[m].to_rows(), scaled.to_rows()));
    }
  }
}

TEST_CASE("exponent b of a cyclic p-group equals its order") {
  // (x - 1)^(n-1) is congruent to the norm element modulo p, and the norm
  // element does not lie in p I; so b = n.
  for (std::size_t n : {2, 3, 4, 5, 7, 8, 9}) {
    auto e = find_exponents(library::cyclic(n), prime_divisors(n).front(), 16);
    REQUIRE(e.b);
    CHECK(*e.b == n);
  }
  auto bounded = find_exponents(library::cyclic(13), 13, 12);
  CHECK_FALSE(bounded.b.has_value());
}

TEST_CASE("pro-isomorphism chain") {
  for (const auto& g : {library::cyclic(2), library::cyclic(3), library::cyclic(4), library::symmetric(3)}) {
    auto c = verify_pro_iso_chain(g, 6);
    CHECK(c.report.pass());
    CHECK_FALSE(c.steps.empty());
  }
  CHECK(verify_pro_iso_chain(library::cyclic(1), 4).report.pass());
}

TEST_CASE("limits") {
  auto l = limits(constant_tower({0}, 1, 5));
  CHECK(l.stable);
  CHECK(l.lim.free_rank == 1);
  CHECK(l.lim1_zero);

  auto z = limits(constant_tower({2}, 0, 5));
  CHECK(z.stable);
  CHECK(z.lim.free_rank == 0);
  CHECK(z.lim.torsion.empty());
  CHECK(z.lim1_zero);

  auto four = limits(constant_tower({4}, 1, 5));
  CHECK(four.lim.torsion == std::vector<Int>{4});
}

TEST_CASE("six-term sequences") {
  const std::size_t d = 6;
  CHECK(six_term_check(constant_tower({2}, 1, d), constant_tower({4}, 1, d), constant_tower({2}, 1, d),
                       constant_map(2, d), constant_map(1, d))
            .pass());
  auto zero = Tower::constant(Subquotient::zero(1), IntMatrix::identity(1), d);
  CHECK(six_term_check(zero, constant_tower({2}, 0, d), zero, constant_map(0, d), constant_map(0, d)).pass());
  auto zt = constant_tower({0}, 1, d);
  CHECK(six_term_check(zero, zt, zt, constant_map(0, d), constant_map(1, d)).pass());

  // g o f != 0 is not a complex
  CHECK_FALSE(six_term_check(constant_tower({4}, 1, d), constant_tower({4}, 1, d), constant_tower({4}, 1, d),
                             constant_map(1, d), constant_map(1, d))
                  .pass());
}

TEST_CASE("ideal sequence is pro-exact") {
  for (const auto& g : {library::cyclic(2), library::cyclic(3), library::symmetric(3), library::klein_four()})
    CHECK(verify_ideal_sequence_pro_exact(g, 6).pass());
}

TEST_CASE("completed K0") {
  auto s3 = completed_k0(library::symmetric(3));
  CHECK(s3.free_rank == 1);
  CHECK(s3.p_adic == std::map<std::uint64_t, std::size_t>{{2, 1}, {3, 1}});
  CHECK(s3.k1_rank == 0);
  CHECK(completed_k0(library::cyclic(5)).p_adic == std::map<std::uint64_t, std::size_t>{{5, 4}});
  CHECK(completed_k0(library::quaternion8()).p_adic == std::map<std::uint64_t, std::size_t>{{2, 4}});

  for (const auto& g : {library::dihedral(4), library::alternating(4), library::symmetric(4), library::cyclic(6)}) {
    auto k = completed_k0(g);
    std::size_t total = 0, classes = 0;
    for (auto [p, r] : k.p_adic) total += r;
    for (auto p : prime_divisors(g.order_u64())) classes += con_p(g, p).size();
    CHECK(total == classes);
  }
  auto with = completed_k0(library::symmetric(3), true);
  CHECK(with.ring.size() == 2);
}

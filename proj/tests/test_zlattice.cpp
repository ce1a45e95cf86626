#include <doctest.h>

#include <functional>
#include <random>

#include "error.hpp"
#include "oracles.hpp"
#include "zlattice.hpp"

using namespace kbgq;

namespace {

IntMatrix M(std::vector<std::vector<long>> rows, std::size_t cols = 0) { return IntMatrix::from_rows(rows, cols); }

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  auto u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> q(-2, 2);
  for (int t = 0; t < 12; ++t) {
    auto a = pick(rng), b = pick(rng);
    if (a != b) u.add_row(a, b, q(rng));
    if (t % 5 == 0) u.swap_rows(a, b);
  }
  return u;
}

mpz_class gcd_of_maximal_minors(const IntMatrix& m, std::size_t r) {
  // r x r minors over all row and column choices, for small matrices.
  mpz_class g = 0;
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  auto choose = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
      if (depth == k) {
        out.push_back(idx);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        idx[depth] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
    return out;
  };
  for (const auto& rs : choose(m.rows(), r))
    for (const auto& cs : choose(m.cols(), r)) {
      std::vector<std::vector<mpz_class>> sub(r, std::vector<mpz_class>(r));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub[i][j] = m(rs[i], cs[j]);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), oracle::bareiss_det(sub).get_mpz_t());
    }
  return g;
}

}  // namespace

TEST_CASE("hnf examples") {
  CHECK(hnf(M({{2, 0}, {0, 2}, {1, 1}})) == M({{1, 1}, {0, 2}}));
  CHECK(hnf(IntMatrix(0, 2)).rows() == 0);
  CHECK(hnf(IntMatrix::identity(3)) == IntMatrix::identity(3));
}

TEST_CASE("hnf is canonical and idempotent") {
  std::mt19937_64 rng(42);
  for (std::size_t n = 2; n <= 6; ++n)
    for (int t = 0; t < 6; ++t) {
      auto m = random_matrix(rng, n + 1, n);
      auto h = hnf(m);
      CHECK(hnf(h) == h);
      auto u = random_unimodular(rng, m.rows());
      CHECK(hnf(u * m) == h);
      CHECK(h.rows() == oracle::rank_q(oracle::to_q(m.to_rows())));
      // pivots positive, entries above pivots reduced
      std::size_t col = 0;
      for (std::size_t i = 0; i < h.rows(); ++i) {
        while (h(i, col) == 0) ++col;
        CHECK(h(i, col) > 0);
        for (std::size_t k = 0; k < i; ++k) {
          CHECK(h(k, col) >= 0);
          CHECK(h(k, col) < h(i, col));
        }
      }
      // same span: containment both ways by an independent solver
      CHECK(oracle::z_span_contains(h.to_rows(), m.to_rows()));
    }
}

TEST_CASE("hnf transform") {
  std::mt19937_64 rng(9);
  auto m = random_matrix(rng, 5, 4);
  auto r = hnf_with_transform(m);
  CHECK(r.u * m == r.h);
  CHECK(abs(oracle::bareiss_det(r.u.to_rows())) == 1);
}

TEST_CASE("snf examples") {
  CHECK(snf(M({{2, 0}, {0, 3}})).diagonal == std::vector<Int>{1, 6});
  CHECK(snf(M({{0, 0}, {0, 0}})).diagonal.empty());
  CHECK(snf(M({{-1, -1}, {1, -2}})).diagonal == std::vector<Int>{1, 3});
}

TEST_CASE("snf witnesses and minors") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    std::size_t r = 2 + t % 3, c = 2 + (t / 3) % 3;
    auto m = random_matrix(rng, r, c);
    auto s = snf(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(s.u_inv * s.d * s.v_inv == m);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    const auto k = s.diagonal.size();
    CHECK(k == oracle::rank_q(oracle::to_q(m.to_rows())));
    if (k > 0) {
      Int prod = 1;
      for (const auto& d : s.diagonal) prod *= d;
      CHECK(prod == gcd_of_maximal_minors(m, k));
    }
  }
}

TEST_CASE("sum, intersection and index") {
  auto z2 = IntMatrix::identity(2);
  auto two = M({{2, 0}, {0, 2}});
  auto idx = lattice_index(z2, two);
  CHECK(idx.finite);
  CHECK(idx.value == 4);

  CHECK(lattice_intersection(M({{1, 0}}), M({{0, 1}})).rows() == 0);

  auto s = lattice_sum(two, M({{1, 1}}));
  CHECK(s == M({{1, 1}, {0, 2}}));
  CHECK(lattice_index(z2, s).value == 2);

  CHECK_FALSE(lattice_index(z2, M({{1, 0}})).finite);
  CHECK_THROWS_AS(lattice_index(two, z2), ValidationError);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    auto a = hnf(random_matrix(rng, 3, 3));
    auto b = hnf(random_matrix(rng, 3, 3));
    auto i = lattice_intersection(a, b);
    CHECK(lattice_contains(a, i));
    CHECK(lattice_contains(b, i));
    CHECK(oracle::z_span_contains(a.to_rows(), i.to_rows()));
    CHECK(oracle::z_span_contains(b.to_rows(), i.to_rows()));
    auto sum = lattice_sum(a, b);
    CHECK(lattice_contains(sum, a));
    CHECK(lattice_contains(sum, b));
    // multiplicativity along the chain L1 ⊇ 2 L1 ⊇ 6 L1
    if (a.rows() == 3) {
      IntMatrix a2 = a, a6 = a;
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
          a2(r, c) *= 2;
          a6(r, c) *= 6;
        }
      CHECK(lattice_index(a, a6).value == lattice_index(a, a2).value * lattice_index(a2, a6).value);
      CHECK(lattice_index(a, a6).value == 216);
    }
  }
}

TEST_CASE("kernel and cokernel") {
  CHECK(kernel(M({{2}})).rows() == 0);
  auto ck = cokernel_invariants(M({{2}}));
  CHECK(ck.free_rank == 0);
  CHECK(ck.torsion == std::vector<Int>{2});

  auto s = M({{-1, -1}, {1, -2}});
  CHECK(kernel(s).rows() == 0);
  auto c2 = cokernel_invariants(s);
  CHECK(c2.free_rank == 0);
  CHECK(c2.torsion == std::vector<Int>{3});

  CHECK(kernel(M({{0}})) == M({{1}}));
  CHECK(cokernel_invariants(M({{0}})).free_rank == 1);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    auto m = random_matrix(rng, 4, 2);
    auto k = kernel(m);
    CHECK((k * m).is_zero());
    CHECK(k.rows() == 4 - oracle::rank_q(oracle::to_q(m.to_rows())));
    CHECK(saturation(k) == k);
  }
}

TEST_CASE("product lattices") {
  // R(Z/2) on (1, s), s^2 = 1.
  MultTable t(2);
  t.at(0, 0, 0) = 1;
  t.at(0, 1, 1) = 1;
  t.at(1, 0, 1) = 1;
  t.at(1, 1, 0) = 1;
  auto i = hnf(M({{-1, 1}}));
  auto i2 = product_lattice(i, i, t);
  CHECK(i2 == hnf(M({{-2, 2}})));

  MultTable zero(2);
  CHECK(product_lattice(IntMatrix::identity(2), IntMatrix::identity(2), zero).rows() == 0);

  // R(Z/3) on (1, r, r^2).
  MultTable z3(3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) z3.at(a, b, (a + b) % 3) = 1;
  auto j = hnf(M({{-1, 1, 0}, {-1, 0, 1}}));
  auto j2 = product_lattice(j, j, z3);
  CHECK(lattice_index(j, j2).value == 3);

  auto j3 = product_lattice(j2, j, z3);
  CHECK(lattice_contains(j2, j3));
  CHECK(product_lattice(j, j2, z3) == j3);
}

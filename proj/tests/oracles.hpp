#pragma once

// Brute-force references, written without the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Images = std::vector<std::uint32_t>;

inline Images compose(const Images& a, const Images& b) {
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Images invert(const Images& a) {
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

/// Closure under multiplication by the generators.
inline std::set<Images> closure(std::size_t degree, const std::vector<Images>& gens) {
  Images id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return seen;
}

inline std::uint64_t order_of(const Images& a) {
  Images x = a;
  std::uint64_t n = 1;
  auto id = compose(a, invert(a));
  while (x != id) {
    x = compose(x, a);
    ++n;
  }
  return n;
}

struct BruteClass {
  std::uint64_t size;
  std::uint64_t order;
};

/// Orbits of conjugation, sorted by (order, size).
inline std::vector<BruteClass> classes(const std::set<Images>& g) {
  std::set<Images> done;
  std::vector<BruteClass> out;
  for (const auto& x : g) {
    if (done.count(x)) continue;
    std::set<Images> orbit;
    for (const auto& h : g) orbit.insert(compose(compose(invert(h), x), h));
    done.insert(orbit.begin(), orbit.end());
    out.push_back({orbit.size(), order_of(x)});
  }
  std::sort(out.begin(), out.end(), [](const BruteClass& a, const BruteClass& b) {
    return a.order != b.order ? a.order < b.order : a.size < b.size;
  });
  return out;
}

inline bool is_prime_power_of(std::uint64_t n, std::uint64_t p) {
  if (n < p) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

inline std::size_t count_prime_power_classes(const std::set<Images>& g, std::uint64_t p) {
  std::size_t n = 0;
  for (const auto& c : classes(g))
    if (is_prime_power_of(c.order, p)) ++n;
  return n;
}

inline std::uint64_t centralizer_size(const std::set<Images>& g, const Images& x) {
  std::uint64_t n = 0;
  for (const auto& h : g)
    if (compose(x, h) == compose(h, x)) ++n;
  return n;
}

using QMatrix = std::vector<std::vector<mpq_class>>;

/// Determinant by Bareiss fraction-free elimination.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Rank over Q by plain Gaussian elimination.
inline std::size_t rank_q(QMatrix a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline QMatrix to_q(const std::vector<std::vector<mpz_class>>& m) {
  QMatrix q;
  for (const auto& row : m) {
    std::vector<mpq_class> r;
    for (const auto& x : row) r.emplace_back(x);
    q.push_back(std::move(r));
  }
  return q;
}

/// Every vector of `sub` lies in the Z-span of `lat`, checked by solving over
/// Q against a full-rank selection of rows and testing integrality. Assumes
/// the rows of `lat` are independent.
inline bool z_span_contains(const std::vector<std::vector<mpz_class>>& lat,
                            const std::vector<std::vector<mpz_class>>& sub) {
  const std::size_t k = lat.size();
  if (k == 0) {
    for (const auto& v : sub)
      for (const auto& x : v)
        if (x != 0) return false;
    return true;
  }
  const std::size_t n = lat[0].size();
  for (const auto& v : sub) {
    // Solve c * lat = v: augmented system on the transpose.
    QMatrix a(n, std::vector<mpq_class>(k + 1));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < k; ++i) a[j][i] = lat[i][j];
      a[j][k] = v[j];
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < k && r < n; ++c) {
      std::size_t p = r;
      while (p < n && a[p][c] == 0) ++p;
      if (p == n) continue;
      std::swap(a[r], a[p]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r || a[i][c] == 0) continue;
        mpq_class f = a[i][c] / a[r][c];
        for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
      }
      pivots.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < n; ++i)
      if (a[i][k] != 0) return false;
    for (std::size_t i = 0; i < r; ++i) {
      mpq_class c = a[i][k] / a[i][pivots[i]];
      c.canonicalize();
      if (c.get_den() != 1) return false;
    }
  }
  return true;
}

/// Sum of the principal k x k minors: the trace of the k-th exterior power.
inline mpz_class exterior_trace(const std::vector<std::vector<mpz_class>>& m, std::size_t k) {
  const std::size_t n = m.size();
  if (k == 0) return 1;
  mpz_class total = 0;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[idx[i]][idx[j]];
    total += bareiss_det(sub);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

/// Residues x mod p^e whose multiplicative order is exactly l.
inline std::vector<std::uint64_t> exact_order_residues(std::uint64_t l, std::uint64_t p, unsigned e) {
  std::uint64_t mod = 1;
  for (unsigned i = 0; i < e; ++i) mod *= p;
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x < mod; ++x) {
    std::uint64_t y = x % mod;
    std::uint64_t ord = 0;
    for (std::uint64_t k = 1; k <= l; ++k) {
      if (y == 1 % mod) {
        ord = k;
        break;
      }
      y = y * x % mod;
    }
    if (ord == l) out.push_back(x);
  }
  return out;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

}  // namespace oracle

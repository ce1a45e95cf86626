#include "chartab.hpp"

#include <algorithm>
#include <random>

#include "error.hpp"

namespace kbgq {

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;  // row-major, rows x cols

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) { return powmod(a, q - 2, q); }

// Basis of {x : a x = 0} over GF(q).
std::vector<Vec> nullspace_mod(Mat a, std::size_t cols, std::uint64_t q) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    auto inv = inv_mod(a[r][c], q);
    for (auto& v : a[r]) v = mulmod(v, inv, q);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      auto f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + q - mulmod(f, a[r][j], q)) % q;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_col) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = (q - a[i][free]) % q;
    basis.push_back(std::move(x));
  }
  return basis;
}

Vec mat_vec(const Mat& m, const Vec& v, std::uint64_t q) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] && v[j]) s = (s + mulmod(m[i][j], v[j], q)) % q;
    out[i] = s;
  }
  return out;
}

// Splits a subspace (given by basis vectors) into eigenspaces of m.
std::vector<std::vector<Vec>> split(const Mat& m, const std::vector<Vec>& basis, std::uint64_t q) {
  const std::size_t k = m.size(), d = basis.size();
  std::vector<Vec> images;
  for (const auto& b : basis) images.push_back(mat_vec(m, b, q));
  std::vector<std::vector<Vec>> parts;
  std::size_t total = 0;
  for (std::uint64_t lambda = 0; lambda < q && total < d; ++lambda) {
    // (M - lambda) B, as a k x d matrix
    Mat a(k, Vec(d, 0));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < k; ++i)
        a[i][j] = (images[j][i] + q - mulmod(lambda, basis[j][i], q)) % q;
    auto null = nullspace_mod(std::move(a), d, q);
    if (null.empty()) continue;
    std::vector<Vec> part;
    for (const auto& x : null) {
      Vec v(k, 0);
      for (std::size_t j = 0; j < d; ++j)
        if (x[j])
          for (std::size_t i = 0; i < k; ++i) v[i] = (v[i] + mulmod(x[j], basis[j][i], q)) % q;
      part.push_back(std::move(v));
    }
    total += part.size();
    parts.push_back(std::move(part));
  }
  if (total != d) throw InternalConsistencyError("class matrix is not diagonalizable modulo q");
  return parts;
}

std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t order) {
  for (std::uint64_t q = e + 1;; q += e)
    if (is_prime(q) && q * q > 4 * order) return q;
}

}  // namespace

CharacterTable character_table(const PermGroup& g, std::uint64_t seed) {
  const auto& cls = g.classes();
  const std::size_t k = cls.size();
  const std::uint64_t n = g.order_u64();
  const std::uint64_t e = g.exponent();
  const std::uint64_t q = dixon_prime(e, n);
  const auto& els = g.elements();

  // N[i][j][l] = #{x in C_i : x^-1 z_l in C_j}, i.e. products in C_i * C_j equal to z_l.
  std::vector<std::uint64_t> N(k * k * k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    auto z = g.index_of(cls[l].representative);
    for (std::size_t x = 0; x < els.size(); ++x) {
      auto y = g.mul(g.inv(x), z);
      ++N[(g.class_of_index(x) * k + g.class_of_index(y)) * k + l];
    }
  }
  std::vector<Mat> class_mats(k, Mat(k, Vec(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) class_mats[i][j][l] = N[(i * k + j) * k + l] % q;

  std::vector<Vec> whole;
  for (std::size_t i = 0; i < k; ++i) {
    Vec v(k, 0);
    v[i] = 1;
    whole.push_back(std::move(v));
  }
  std::vector<std::vector<Vec>> spaces{whole};
  auto refine = [&](const Mat& m) {
    std::vector<std::vector<Vec>> next;
    for (const auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split(m, s, q)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  };
  auto all_split = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coef(0, q - 1);
  for (int round = 0; round < 3 && !all_split(); ++round) {
    Mat m(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      auto r = coef(rng);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) m[a][b] = (m[a][b] + mulmod(r, class_mats[i][a][b], q)) % q;
    }
    refine(m);
  }
  for (std::size_t i = 0; i < k && !all_split(); ++i) refine(class_mats[i]);
  if (!all_split() || spaces.size() != k)
    throw InternalConsistencyError("class matrices did not split into one-dimensional eigenspaces");

  const auto zq = powmod(primitive_root(q), (q - 1) / e, q);
  std::vector<std::size_t> inverse_class(k);
  for (std::size_t l = 0; l < k; ++l) inverse_class[l] = cls[l].power(-1);

  struct Row {
    std::uint64_t degree;
    ClassFunction values;
    Vec modular;
    bool trivial;
  };
  std::vector<Row> rows;
  for (const auto& s : spaces) {
    Vec w = s[0];
    if (w[0] == 0) throw InternalConsistencyError("eigenvector with vanishing identity coordinate");
    auto inv0 = inv_mod(w[0], q);
    for (auto& v : w) v = mulmod(v, inv0, q);
    // sum_l w_l w_l* / |C_l| = |G| / d^2
    std::uint64_t s_sum = 0;
    for (std::size_t l = 0; l < k; ++l)
      s_sum = (s_sum + mulmod(mulmod(w[l], w[inverse_class[l]], q), inv_mod(cls[l].size % q, q), q)) % q;
    auto d2 = mulmod(n % q, inv_mod(s_sum, q), q);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d)
      if ((d * d) % q == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw InternalConsistencyError("no character degree matches modulo q");
    Vec chi(k);
    for (std::size_t l = 0; l < k; ++l)
      chi[l] = mulmod(mulmod(w[l], degree % q, q), inv_mod(cls[l].size % q, q), q);

    ClassFunction values(k);
    for (std::size_t l = 0; l < k; ++l) {
      const auto o = cls[l].element_order;
      const auto step = e / o;
      const auto inv_o = inv_mod(o % q, q);
      std::vector<Rational> raw(e, Rational(0));
      for (std::uint64_t j = 0; j < o; ++j) {
        std::uint64_t mu = 0;
        for (std::uint64_t t = 0; t < o; ++t) {
          auto zpow = powmod(zq, (step * ((o - (j * t) % o) % o)) % e, q);
          mu = (mu + mulmod(chi[cls[l].power(static_cast<std::int64_t>(t))], zpow, q)) % q;
        }
        mu = mulmod(mu, inv_o, q);
        if (mu > degree) throw InternalConsistencyError("eigenvalue multiplicity exceeds the degree");
        raw[j * step] += static_cast<unsigned long>(mu);
      }
      values[l] = Cyc::normalize(e, raw);
    }
    bool trivial = std::all_of(values.begin(), values.end(), [](const Cyc& v) { return v == Cyc(1); });
    rows.push_back({degree, std::move(values), std::move(chi), trivial});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.trivial != b.trivial) return a.trivial;
    return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(), b.values.end());
  });

  CharacterTable t;
  t.group_ = g;
  t.exponent_ = e;
  t.order_ = n;
  t.modular_.q = q;
  t.modular_.z = zq;
  for (auto& r : rows) {
    t.degrees_.push_back(r.degree);
    t.irr_.push_back(std::move(r.values));
    t.modular_.values.push_back(std::move(r.modular));
  }
  auto report = verify_orthogonality(t);
  if (!report.pass)
    throw InternalConsistencyError("constructed character table fails orthogonality: " +
                                   report.failures.front().detail);
  return t;
}

CharacterTable CharacterTable::with_value(std::size_t chi, std::size_t cls, const Cyc& v) const {
  CharacterTable t = *this;
  t.irr_.at(chi).at(cls) = v;
  return t;
}

Cyc inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& h) {
  if (f.size() != t.size() || h.size() != t.size())
    throw ValidationError("class function length does not match the number of classes");
  Cyc s;
  for (std::size_t c = 0; c < t.size(); ++c)
    s += Cyc(Rational(static_cast<unsigned long>(t.classes()[c].size))) * f[c] * h[c].conj();
  return s * Cyc(Rational(1, static_cast<unsigned long>(t.group_order())));
}

std::vector<Int> decompose(const CharacterTable& t, const ClassFunction& f) {
  std::vector<Int> coords;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto v = inner_product(t, f, t.irreducibles()[i]).to_integer();
    if (!v) throw InternalConsistencyError("class function has a non-integral decomposition");
    coords.push_back(*v);
  }
  return coords;
}

ClassFunction values_of(const CharacterTable& t, const std::vector<Int>& coords) {
  if (coords.size() != t.size()) throw ValidationError("coordinate vector has the wrong length");
  ClassFunction f(t.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    Cyc c(Rational(coords[i]));
    for (std::size_t cl = 0; cl < t.size(); ++cl) f[cl] += c * t.value(i, cl);
  }
  return f;
}

ClassFunction restrict_values(const ClassFunction& f, const std::vector<std::size_t>& fusion) {
  ClassFunction out;
  for (auto c : fusion) {
    if (c >= f.size()) throw ValidationError("fusion map points outside the class list");
    out.push_back(f[c]);
  }
  return out;
}

ClassFunction induce_values(const CharacterTable& t_h, const CharacterTable& t_g,
                            const std::vector<std::size_t>& fusion, const ClassFunction& f) {
  if (fusion.size() != t_h.size() || f.size() != t_h.size())
    throw ValidationError("fusion map does not match the subgroup table");
  ClassFunction out(t_g.size());
  for (std::size_t c = 0; c < t_h.size(); ++c)
    out[fusion[c]] += f[c] * Cyc(Rational(1, static_cast<unsigned long>(t_h.classes()[c].centralizer_order)));
  for (std::size_t g = 0; g < t_g.size(); ++g) {
    out[g] *= Cyc(Rational(static_cast<unsigned long>(t_g.classes()[g].centralizer_order)));
    for (const auto& coef : out[g].coeffs())
      if (coef.get_den() != 1) throw InternalConsistencyError("induced class function value is not integral");
  }
  return out;
}

std::vector<Int> restrict_character(const CharacterTable& t_g, const CharacterTable& t_h,
                                    const std::vector<std::size_t>& fusion,
                                    const std::vector<Int>& coords) {
  return decompose(t_h, restrict_values(values_of(t_g, coords), fusion));
}

std::vector<Int> induce_character(const CharacterTable& t_h, const CharacterTable& t_g,
                                  const std::vector<std::size_t>& fusion,
                                  const std::vector<Int>& coords) {
  return decompose(t_g, induce_values(t_h, t_g, fusion, values_of(t_h, coords)));
}

namespace {

// w[i][c] = |c| conj(chi_i(c)) / |G|, so that <f, chi_i> = sum_c f(c) w[i][c].
std::vector<ClassFunction> inner_product_weights(const CharacterTable& t) {
  std::vector<ClassFunction> w(t.size(), ClassFunction(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t c = 0; c < t.size(); ++c) {
      Rational frac(static_cast<unsigned long>(t.classes()[c].size), static_cast<unsigned long>(t.group_order()));
      frac.canonicalize();
      w[i][c] = t.value(i, c).conj() * Cyc(frac);
    }
  return w;
}

std::vector<Int> decompose_weighted(const std::vector<ClassFunction>& w, const ClassFunction& f) {
  std::vector<Int> coords;
  for (const auto& wi : w) {
    Cyc s;
    for (std::size_t c = 0; c < f.size(); ++c)
      if (!f[c].is_zero()) s += f[c] * wi[c];
    auto v = s.to_integer();
    if (!v) throw InternalConsistencyError("class function has a non-integral decomposition");
    coords.push_back(*v);
  }
  return coords;
}

}  // namespace

IntMatrix restriction_matrix(const CharacterTable& t_g, const CharacterTable& t_h,
                             const std::vector<std::size_t>& fusion) {
  IntMatrix m(0, t_h.size());
  const auto w = inner_product_weights(t_h);
  for (std::size_t i = 0; i < t_g.size(); ++i)
    m.append_row(decompose_weighted(w, restrict_values(t_g.irreducibles()[i], fusion)));
  return m;
}

IntMatrix induction_matrix(const CharacterTable& t_h, const CharacterTable& t_g,
                           const std::vector<std::size_t>& fusion) {
  IntMatrix m(0, t_g.size());
  const auto w = inner_product_weights(t_g);
  for (std::size_t i = 0; i < t_h.size(); ++i)
    m.append_row(decompose_weighted(w, induce_values(t_h, t_g, fusion, t_h.irreducibles()[i])));
  return m;
}

OrthogonalityReport verify_orthogonality(const CharacterTable& t) {
  OrthogonalityReport rep;
  const auto k = t.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyc ip = inner_product(t, t.irreducibles()[i], t.irreducibles()[j]);
      if (ip != Cyc(i == j ? 1 : 0))
        rep.failures.push_back({OrthogonalityFailure::Kind::row, i, j,
                                "rows " + std::to_string(i) + " and " + std::to_string(j) +
                                    " have inner product " + ip.to_string()});
    }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Cyc s;
      for (std::size_t i = 0; i < k; ++i) s += t.value(i, a) * t.value(i, b).conj();
      Cyc expect = a == b ? Cyc(static_cast<long>(t.classes()[a].centralizer_order)) : Cyc(0);
      if (s != expect)
        rep.failures.push_back({OrthogonalityFailure::Kind::column, a, b,
                                "columns " + std::to_string(a) + " and " + std::to_string(b) +
                                    " have sum " + s.to_string()});
    }
  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace kbgq

#include "zlattice.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace kbgq {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ValidationError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  std::vector<std::vector<Int>> big;
  for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
  return from_rows(big, cols);
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::row_range(std::size_t begin, std::size_t end) const {
  IntMatrix m(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r - begin, c) = (*this)(r, c);
  return m;
}

void IntMatrix::append_row(const std::vector<Int>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw ValidationError("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix shapes do not match for product");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix shapes differ");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix shapes differ");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += q * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += q * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw ValidationError("vstack: column counts differ");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
  return m;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("hstack: row counts differ");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

std::vector<Int> row_times(const std::vector<Int>& x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw ValidationError("vector length does not match matrix rows");
  std::vector<Int> out(m.cols(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
  }
  return out;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

namespace {

// Row HNF in place; u is updated alongside when non-null.
std::size_t hnf_in_place(IntMatrix& h, IntMatrix* u) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (best == h.rows() || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      if (u) u->swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Int q = floor_div(h(i, c), h(r, c));
        h.add_row(i, r, -q);
        if (u) u->add_row(i, r, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      if (u) u->negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      h.add_row(i, r, -q);
      if (u) u->add_row(i, r, -q);
    }
    ++r;
  }
  return r;
}

}  // namespace

HnfResult hnf_with_transform(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.rows()), 0};
  res.rank = hnf_in_place(res.h, &res.u);
  return res;
}

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix h = m;
  const auto r = hnf_in_place(h, nullptr);
  if (r == 0) return IntMatrix(0, m.cols());
  return h.row_range(0, r);
}

std::size_t rank(const IntMatrix& m) { return hnf(m).rows(); }

SnfResult snf(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  SnfResult s{m, IntMatrix::identity(R), IntMatrix::identity(C), IntMatrix::identity(R),
              IntMatrix::identity(C), {}};
  IntMatrix& d = s.d;
  // Row op "row i += q row t" on d: u row i += q row t; u_inv col t -= q col i.
  auto row_add = [&](std::size_t i, std::size_t t, const Int& q) {
    d.add_row(i, t, q);
    s.u.add_row(i, t, q);
    s.u_inv.add_col(t, i, -q);
  };
  auto col_add = [&](std::size_t j, std::size_t t, const Int& q) {
    d.add_col(j, t, q);
    s.v.add_col(j, t, q);
    s.v_inv.add_row(t, j, -q);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    s.u.swap_rows(a, b);
    s.u_inv.swap_cols(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    s.v.swap_cols(a, b);
    s.v_inv.swap_rows(a, b);
  };

  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    while (true) {
      std::size_t bi = R, bj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (d(i, j) != 0 && (bi == R || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == R) break;
      row_swap(t, bi);
      col_swap(t, bj);
      bool done = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        row_add(i, t, -q);
        if (d(i, t) != 0) done = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        col_add(j, t, -q);
        if (d(t, j) != 0) done = false;
      }
      if (!done) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) == 0) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
      s.u_inv.negate_col(t);
    }
    s.diagonal.push_back(d(t, t));
  }
  return s;
}

IntMatrix kernel(const IntMatrix& m) {
  auto res = hnf_with_transform(m);
  IntMatrix k = res.u.row_range(res.rank, m.rows());
  if (k.rows() == 0) return IntMatrix(0, m.rows());
  return hnf(k);
}

CokernelInvariants cokernel_invariants(const IntMatrix& relations) {
  CokernelInvariants out;
  if (relations.rows() == 0) {
    out.free_rank = relations.cols();
    return out;
  }
  auto s = snf(relations);
  out.free_rank = relations.cols() - s.diagonal.size();
  for (const auto& v : s.diagonal)
    if (v > 1) out.torsion.push_back(v);
  return out;
}

IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) { return hnf(vstack(a, b)); }

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() == 0 || b.rows() == 0) return IntMatrix(0, std::max(a.cols(), b.cols()));
  IntMatrix neg_b = b;
  for (std::size_t r = 0; r < neg_b.rows(); ++r) neg_b.negate_row(r);
  IntMatrix k = kernel(vstack(a, neg_b));
  IntMatrix ys(k.rows(), a.rows());
  for (std::size_t r = 0; r < k.rows(); ++r)
    for (std::size_t c = 0; c < a.rows(); ++c) ys(r, c) = k(r, c);
  if (ys.rows() == 0) return IntMatrix(0, a.cols());
  return hnf(ys * a);
}

IntMatrix saturation(const IntMatrix& a) {
  const std::size_t n = a.cols();
  // Vectors orthogonal to the rows, then everything orthogonal to those.
  IntMatrix perp = kernel(a.transpose());
  if (perp.rows() == 0) return IntMatrix::identity(n);
  return kernel(perp.transpose());
}

std::optional<std::vector<Int>> coordinates_in(const IntMatrix& basis, const std::vector<Int>& v) {
  if (v.size() != basis.cols()) throw ValidationError("vector length does not match lattice");
  std::vector<Int> rest = v, coords(basis.rows(), 0);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::size_t p = 0;
    while (p < basis.cols() && basis(r, p) == 0) ++p;
    if (p == basis.cols()) throw ValidationError("lattice basis has a zero row");
    for (std::size_t q = 0; q < p; ++q)
      if (rest[q] != 0) return std::nullopt;
    if (rest[p] % basis(r, p) != 0) return std::nullopt;
    coords[r] = rest[p] / basis(r, p);
    for (std::size_t c = 0; c < basis.cols(); ++c) rest[c] -= coords[r] * basis(r, c);
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

bool lattice_contains(const IntMatrix& lattice, const IntMatrix& sub) {
  IntMatrix basis = hnf(lattice);
  for (std::size_t r = 0; r < sub.rows(); ++r)
    if (!coordinates_in(basis, sub.row(r))) return false;
  return true;
}

std::string LatticeIndex::to_string() const { return finite ? value.get_str() : "infinite"; }

LatticeIndex lattice_index(const IntMatrix& lattice, const IntMatrix& sub) {
  IntMatrix basis = hnf(lattice);
  IntMatrix sb = hnf(sub);
  IntMatrix coords(sb.rows(), basis.rows());
  for (std::size_t r = 0; r < sb.rows(); ++r) {
    auto c = coordinates_in(basis, sb.row(r));
    if (!c) throw ValidationError("sublattice is not contained in the lattice");
    for (std::size_t j = 0; j < c->size(); ++j) coords(r, j) = (*c)[j];
  }
  LatticeIndex out;
  if (sb.rows() != basis.rows()) {
    out.finite = false;
    return out;
  }
  IntMatrix h = hnf(coords);
  out.value = 1;
  for (std::size_t i = 0; i < h.rows(); ++i) out.value *= h(i, i);
  return out;
}

std::vector<Int> MultTable::multiply(const std::vector<Int>& x, const std::vector<Int>& y) const {
  if (x.size() != n_ || y.size() != n_) throw ValidationError("vector length does not match algebra");
  std::vector<Int> out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      Int xy = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k)
        if (at(i, j, k) != 0) out[k] += xy * at(i, j, k);
    }
  }
  return out;
}

IntMatrix product_lattice(const IntMatrix& a, const IntMatrix& b, const MultTable& table) {
  IntMatrix acc(0, table.dim());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    IntMatrix batch = acc;
    for (std::size_t j = 0; j < b.rows(); ++j) batch.append_row(table.multiply(a.row(i), b.row(j)));
    acc = hnf(batch);
  }
  return acc;
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows_in) {
  auto rows = rows_in;
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace kbgq

#include "cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace kbgq {

namespace {

struct Field {
  std::uint64_t e = 1;
  std::size_t phi = 1;
  std::vector<Int> poly;
  // reduce[m] = x^m mod Phi_e in the power basis, for 0 <= m < e.
  std::vector<std::vector<Int>> reduce;
};

std::mutex field_mutex;
std::map<std::uint64_t, std::shared_ptr<const Field>> field_cache;

std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Int> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    Int coef = num[i] / den[dn];
    q[i - dn] = coef;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= coef * den[j];
  }
  return q;
}

std::shared_ptr<const Field> field(std::uint64_t e);

std::vector<Int> compute_poly(std::uint64_t e) {
  std::vector<Int> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (auto d : divisors(e))
    if (d < e) num = poly_divide_exact(std::move(num), field(d)->poly);
  return num;
}

std::shared_ptr<const Field> field(std::uint64_t e) {
  if (e == 0) throw ValidationError("conductor must be positive");
  {
    std::lock_guard lock(field_mutex);
    auto it = field_cache.find(e);
    if (it != field_cache.end()) return it->second;
  }
  auto f = std::make_shared<Field>();
  f->e = e;
  f->poly = compute_poly(e);
  f->phi = f->poly.size() - 1;
  f->reduce.resize(e);
  std::vector<Int> cur(f->phi, 0);
  if (f->phi > 0) cur[0] = 1;
  for (std::uint64_t m = 0; m < e; ++m) {
    f->reduce[m] = cur;
    // multiply by x and reduce by the monic Phi_e
    Int top = cur[f->phi - 1];
    for (std::size_t i = f->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < f->phi; ++i) cur[i] -= top * f->poly[i];
  }
  std::lock_guard lock(field_mutex);
  return field_cache.emplace(e, f).first->second;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(std::uint64_t e) { return field(e)->poly; }

Cyc::Cyc() : e_(1), c_{Rational(0)} {}
Cyc::Cyc(long v) : e_(1), c_{Rational(v)} {}

Cyc::Cyc(const Rational& r, std::uint64_t conductor) : e_(conductor) {
  auto f = field(conductor);
  c_.assign(f->phi, Rational(0));
  c_[0] = r;
}

Cyc Cyc::zeta(std::uint64_t e, std::int64_t k) {
  auto f = field(e);
  auto m = static_cast<std::uint64_t>(((k % static_cast<std::int64_t>(e)) + static_cast<std::int64_t>(e)) %
                                      static_cast<std::int64_t>(e));
  Cyc z;
  z.e_ = e;
  z.c_.clear();
  for (const auto& v : f->reduce[m]) z.c_.emplace_back(v);
  return z;
}

Cyc Cyc::from_coeffs(std::uint64_t e, std::vector<Rational> coeffs) {
  auto f = field(e);
  if (coeffs.size() != f->phi)
    throw ValidationError("expected " + std::to_string(f->phi) + " coefficients for conductor " +
                          std::to_string(e));
  Cyc z;
  z.e_ = e;
  z.c_ = std::move(coeffs);
  return z;
}

bool Cyc::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

std::optional<Rational> Cyc::to_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

std::optional<Int> Cyc::to_integer() const {
  auto r = to_rational();
  if (!r || r->get_den() != 1) return std::nullopt;
  return Int(r->get_num());
}

namespace {

// Sum of coeffs[i] * zeta_e^(i * stride) reduced in Q(zeta_e).
std::vector<Rational> reduce_terms(const Field& f, const std::vector<std::pair<std::uint64_t, Rational>>& terms) {
  std::vector<Rational> out(f.phi, Rational(0));
  for (const auto& [m, v] : terms) {
    if (v == 0) continue;
    const auto& red = f.reduce[m % f.e];
    for (std::size_t i = 0; i < f.phi; ++i)
      if (red[i] != 0) out[i] += v * red[i];
  }
  return out;
}

}  // namespace

Cyc Cyc::normalize(std::uint64_t e, const std::vector<Rational>& raw) {
  auto f = field(e);
  std::vector<std::pair<std::uint64_t, Rational>> terms;
  for (std::size_t k = 0; k < raw.size(); ++k) terms.emplace_back(k, raw[k]);
  Cyc z;
  z.e_ = e;
  z.c_ = reduce_terms(*f, terms);
  return z;
}

Cyc Cyc::embed(std::uint64_t target) const {
  if (target % e_ != 0)
    throw ValidationError("cannot embed conductor " + std::to_string(e_) + " into " +
                          std::to_string(target));
  if (target == e_) return *this;
  auto f = field(target);
  const auto stride = target / e_;
  std::vector<std::pair<std::uint64_t, Rational>> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) terms.emplace_back(i * stride, c_[i]);
  Cyc z;
  z.e_ = target;
  z.c_ = reduce_terms(*f, terms);
  return z;
}

Cyc Cyc::galois(std::int64_t k) const {
  const auto e = static_cast<std::int64_t>(e_);
  std::int64_t km = ((k % e) + e) % e;
  if (std::gcd(km, e) != 1 && e_ > 1)
    throw ValidationError("Galois exponent " + std::to_string(k) + " is not a unit mod " +
                          std::to_string(e_));
  auto f = field(e_);
  std::vector<std::pair<std::uint64_t, Rational>> terms;
  for (std::size_t i = 0; i < c_.size(); ++i)
    terms.emplace_back(static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(km), c_[i]);
  Cyc z;
  z.e_ = e_;
  z.c_ = reduce_terms(*f, terms);
  return z;
}

Cyc Cyc::conj() const {
  if (e_ <= 2) return *this;
  return galois(static_cast<std::int64_t>(e_) - 1);
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw ValidationError("division by zero in a cyclotomic field");
  if (auto r = to_rational()) return Cyc(1 / *r, e_);
  // The product of the other conjugates gives a * b = N(a), a nonzero rational.
  Cyc b(Rational(1), e_);
  for (std::uint64_t k = 2; k < e_; ++k)
    if (std::gcd(k, e_) == 1) b *= galois(static_cast<std::int64_t>(k));
  auto n = (*this * b).to_rational();
  if (!n || *n == 0) throw InternalConsistencyError("field norm is not a nonzero rational");
  return b * Cyc(1 / *n, e_);
}

std::complex<double> Cyc::to_complex() const {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(e_);
    s += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string Cyc::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) out << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) out << "-";
    Rational a = abs(c_[i]);
    if (i == 0) out << a.get_str();
    else {
      if (a != 1) out << a.get_str() << "*";
      out << "z" << e_;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

namespace {

void common_field(Cyc& a, Cyc& b) {
  if (a.conductor() == b.conductor()) return;
  auto l = std::lcm(a.conductor(), b.conductor());
  a = a.embed(l);
  b = b.embed(l);
}

}  // namespace

Cyc& Cyc::operator+=(const Cyc& o) {
  Cyc b = o;
  common_field(*this, b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  Cyc b = o;
  common_field(*this, b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  Cyc b = o;
  common_field(*this, b);
  auto f = field(e_);
  std::vector<Rational> prod(2 * f->phi - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) prod[i + j] += c_[i] * b.c_[j];
  }
  std::vector<std::pair<std::uint64_t, Rational>> terms;
  for (std::size_t m = 0; m < prod.size(); ++m) terms.emplace_back(m, prod[m]);
  c_ = reduce_terms(*f, terms);
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc z = *this;
  for (auto& v : z.c_) v = -v;
  return z;
}

bool operator==(const Cyc& a, const Cyc& b) {
  Cyc x = a, y = b;
  common_field(x, y);
  return x.c_ == y.c_;
}

bool operator<(const Cyc& a, const Cyc& b) {
  Cyc x = a, y = b;
  common_field(x, y);
  return x.c_ < y.c_;
}

}  // namespace kbgq

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "numtheory.hpp"

namespace kbgq {

/// Element of the cyclotomic field Q(zeta_e), stored as rational coefficients
/// in the power basis 1, zeta, ..., zeta^(phi(e)-1). The conductor is the
/// ambient field, not necessarily the minimal one.
class Cyc {
 public:
  Cyc();
  Cyc(long v);  // NOLINT(google-explicit-constructor)
  explicit Cyc(const Rational& r, std::uint64_t conductor = 1);

  /// zeta_e^k.
  static Cyc zeta(std::uint64_t e, std::int64_t k = 1);
  /// Coefficients in the power basis; length must equal phi(e).
  static Cyc from_coeffs(std::uint64_t e, std::vector<Rational> coeffs);
  /// Sum of raw[k] * zeta_e^k for any k, reduced to the power basis.
  static Cyc normalize(std::uint64_t e, const std::vector<Rational>& raw);

  std::uint64_t conductor() const { return e_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  std::optional<Rational> to_rational() const;
  std::optional<Int> to_integer() const;

  /// Same element viewed in Q(zeta_target); requires conductor() | target.
  Cyc embed(std::uint64_t target) const;
  /// zeta -> zeta^k, gcd(k, e) = 1.
  Cyc galois(std::int64_t k) const;
  Cyc conj() const;
  Cyc inverse() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
  Cyc operator-() const;

  friend bool operator==(const Cyc& a, const Cyc& b);
  /// Lexicographic order on coefficients after embedding in a common field.
  friend bool operator<(const Cyc& a, const Cyc& b);

 private:
  std::uint64_t e_;
  std::vector<Rational> c_;
};

/// Integer coefficients of the cyclotomic polynomial Phi_e, constant term first.
const std::vector<Int>& cyclotomic_polynomial(std::uint64_t e);

}  // namespace kbgq

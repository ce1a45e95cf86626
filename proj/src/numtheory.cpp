#include "numtheory.hpp"

#include <numeric>
#include <string>

#include "error.hpp"

namespace kbgq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  return ipow(p, valuation(n, p));
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 r = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t mod) {
  Int r;
  Int aa(static_cast<unsigned long>(a)), mm(static_cast<unsigned long>(mod));
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw ValidationError("invmod: " + std::to_string(a) + " is not invertible modulo " +
                          std::to_string(mod));
  return r.get_ui();
}

std::uint64_t primitive_root(std::uint64_t q) {
  const auto factors = prime_divisors(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (auto f : factors) {
      if (powmod(g, (q - 1) / f, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // q == 2
}

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw ResourceError("integer " + v.get_str() + " exceeds 64 bits");
  return v.get_si();
}

std::uint64_t to_u64(const Int& v) {
  if (v < 0 || !v.fits_ulong_p())
    throw ResourceError("integer " + v.get_str() + " is not a 64-bit unsigned value");
  return v.get_ui();
}

}  // namespace kbgq

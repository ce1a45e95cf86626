#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace kbgq {

using Int = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
/// Exponent of p in n (n > 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t invmod(std::uint64_t a, std::uint64_t mod);
/// Least primitive root modulo the prime q.
std::uint64_t primitive_root(std::uint64_t q);

/// Converts after checking the value fits; throws ResourceError otherwise.
std::int64_t to_i64(const Int& v);
std::uint64_t to_u64(const Int& v);

}  // namespace kbgq

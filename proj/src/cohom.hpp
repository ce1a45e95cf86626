#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zlattice.hpp"

namespace kbgq {

using Betti = std::vector<std::uint64_t>;
/// prime -> rank
using PrimeCounts = std::map<std::uint64_t, std::uint64_t>;

/// Split extension Z^n ⋊ Z/p; the generator acts on row vectors by x -> x * sigma.
struct CrystalSpec {
  std::uint64_t p = 0;
  IntMatrix sigma;
};

/// Throws ValidationError unless p is prime, sigma is square with sigma^p = 1
/// and sigma != 1. The empty matrix (n = 0) is accepted.
void validate(const CrystalSpec& s);

/// b_k = dim (Λ^k Q^n)^{Z/p}, by averaging exterior-power traces.
Betti betti_crystallographic(const CrystalSpec& s);

struct H1Fixed {
  Int h1_order;            // |H^1(Z/p; A)|
  std::vector<Int> h1_invariants;
  std::size_t fixed_rank = 0;  // rank A^{Z/p}
};
H1Fixed h1_and_fixed(const CrystalSpec& s);
/// Number of conjugacy classes of elements of order p: (p - 1) |H^1|.
Int con_count_crystallographic(const CrystalSpec& s);

/// Traces of Λ^k M for k = 0..n, from Newton's identities.
std::vector<Rational> exterior_traces(const IntMatrix& m);

struct FuchsianSpec {
  std::uint64_t genus = 0;
  std::vector<std::uint64_t> periods;
};
void validate(const FuchsianSpec& s);

struct FuchsianData {
  Betti betti;         // (1, 2g, 1)
  PrimeCounts counts;  // sum over periods of p^{v_p(m_i)} - 1
};
FuchsianData betti_fuchsian(const FuchsianSpec& s);

/// Nontrivial classes of p-power order in Z/m, per prime p | m.
PrimeCounts cyclic_prime_counts(std::uint64_t m);

/// Words are letter lists: +(i+1) for generator i, -(i+1) for its inverse.
using Word = std::vector<int>;

struct OneRelatorSpec {
  std::vector<std::string> generators;
  std::string relator;
};

/// Parses products of generators with integer exponents and parenthesized
/// groups, e.g. "a*b*a^-1*b^-1" or "(a b)^2". Throws ParseError.
Word parse_word(const std::vector<std::string>& generators, const std::string& text);
std::string format_word(const std::vector<std::string>& generators, const Word& w);
Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);

struct RootData {
  Word root;
  std::uint64_t multiplicity = 1;
};
/// Shortest s with w = s^m (w nonempty).
RootData extract_root(const Word& w);

struct OneRelatorData {
  Word reduced;
  Word root;
  std::uint64_t m = 1;
  std::vector<Int> exponent_sums;
  Betti betti;
  PrimeCounts counts;
};
OneRelatorData one_relator_analyze(const OneRelatorSpec& s);

Betti exterior_betti(std::uint64_t d);

}  // namespace kbgq

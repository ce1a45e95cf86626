#pragma once

#include <cstdint>
#include <vector>

#include "chartab.hpp"
#include "report.hpp"
#include "zlattice.hpp"

namespace kbgq {

/// R(G) on the basis Irr(G), with chi_i * chi_j = sum_k c[i][j][k] chi_k.
struct RepRing {
  CharacterTable table;
  MultTable mult;
  std::vector<Int> augmentation;  // the degrees

  std::size_t rank() const { return augmentation.size(); }
};

RepRing rep_ring(const CharacterTable& t);
RepRing rep_ring(const PermGroup& g);

/// Kernel of the dimension map, as an HNF lattice.
IntMatrix augmentation_ideal(const RepRing& r);

/// A subgroup with its table and the restriction/induction matrices
/// (row convention: x -> x * res, y -> y * ind).
struct Embedding {
  PermGroup sub;
  CharacterTable sub_table;
  std::vector<std::size_t> fusion;
  IntMatrix res;
  IntMatrix ind;
};

Embedding embed(const CharacterTable& t_g, const PermGroup& sub);

/// res(I_G) inside R(H), in HNF.
IntMatrix restriction_image(const RepRing& r, const Embedding& e);

struct RpResult {
  std::uint64_t p = 0;
  std::size_t class_count = 0;
  std::size_t lattice_rank = 0;
  std::size_t value = 0;
};

/// Both |con_p(G)| and rank res(I_G) in R(G_p); throws
/// InternalConsistencyError when they differ.
RpResult r_p(const RepRing& r, std::uint64_t p);
RpResult r_p(const PermGroup& g, std::uint64_t p);

struct CyclicData {
  PermGroup group;
  std::uint64_t order = 1;
  Perm generator;
  std::vector<Perm> generators;  // Gen(C), sorted
  std::optional<PermGroup> index_p_subgroup;  // C' when |C| is a prime power > 1
  std::uint64_t prime = 0;                    // p when |C| = p^k, else 0
};

CyclicData cyclic_data(const PermGroup& c);

using RationalVector = std::vector<Rational>;

/// theta_C in rational coordinates over Irr(C): 1 on generators, 0 elsewhere.
RationalVector theta(const CharacterTable& t_c, const CyclicData& c);
RationalVector rational_product(const MultTable& m, const RationalVector& x, const RationalVector& y);
/// Permutation of Irr(C) induced by the twist chi -> chi(g^k).
std::vector<std::size_t> galois_twist_permutation(const CharacterTable& t, std::int64_t k);

struct TRankResult {
  std::size_t rank = 0;
  IntMatrix witness;  // the lattice of virtual characters killed by every proper restriction
  std::uint64_t prime = 0;
};

TRankResult t_rank(const PermGroup& h);

Report verify_theta(const CyclicData& c);
Report verify_double_coset(const PermGroup& g, const PermGroup& h, const PermGroup& k);
Report verify_sylow_image(const PermGroup& g, std::uint64_t p);
Report verify_sylow_double_cosets(const PermGroup& g, std::uint64_t p, std::uint64_t q);
Report verify_restriction_sequence(const PermGroup& g, unsigned depth);
Report verify_cyclic_evaluation(const CyclicData& c);

/// Z-basis of res(I_G) in R(G_p) with structure constants on that basis.
struct RingStructure {
  std::uint64_t p = 0;
  IntMatrix basis;  // rows in R(G_p) coordinates
  MultTable constants;
};

RingStructure ring_structure_I_p(const RepRing& r, std::uint64_t p);
RingStructure ring_structure_I_p(const PermGroup& g, std::uint64_t p);

/// Powers I^1..I^n of the augmentation ideal.
std::vector<IntMatrix> augmentation_powers(const RepRing& r, unsigned n);

}  // namespace kbgq

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"
#include "repring.hpp"
#include "zlattice.hpp"

namespace kbgq {

/// L / L' for lattices L' ⊆ L in a common ambient Z^k (both stored in HNF).
class Subquotient {
 public:
  Subquotient() = default;
  /// Throws ValidationError unless rels ⊆ gens.
  Subquotient(IntMatrix gens, IntMatrix rels);
  static Subquotient free(std::size_t rank);
  /// Z^r / diag(invariants); zero entries give free summands.
  static Subquotient finite_abelian(const std::vector<Int>& invariants);
  static Subquotient zero(std::size_t ambient = 0);

  std::size_t ambient() const { return gens_.cols(); }
  const IntMatrix& gens() const { return gens_; }
  const IntMatrix& rels() const { return rels_; }
  bool is_zero() const;
  CokernelInvariants structure() const;
  std::string describe() const;

 private:
  IntMatrix gens_, rels_;
};

/// Truncated inverse system M_0 <- M_1 <- ... <- M_N. maps[n] : M_n -> M_{n-1}
/// acts on ambient row vectors; maps[0] is unused.
class Tower {
 public:
  Tower() = default;
  /// Validates that every map carries gens into gens and rels into rels.
  Tower(std::vector<Subquotient> terms, std::vector<IntMatrix> maps);
  static Tower constant(const Subquotient& m, const IntMatrix& map, std::size_t depth);

  std::size_t depth() const { return terms_.size() - 1; }
  const Subquotient& term(std::size_t n) const { return terms_.at(n); }
  const IntMatrix& map(std::size_t n) const { return maps_.at(n); }
  /// alpha_n^m : M_n -> M_m for n >= m.
  IntMatrix composite(std::size_t n, std::size_t m) const;

 private:
  std::vector<Subquotient> terms_;
  std::vector<IntMatrix> maps_;
};

/// Levelwise maps f_n : S_n -> T_n commuting with the structure maps.
struct StrictMap {
  std::vector<IntMatrix> levels;
};

/// Throws ValidationError if some f_n is not well defined or a square fails
/// to commute.
void check_strict_map(const StrictMap& f, const Tower& source, const Tower& target);

/// Image lattice (containing the target relations) and preimage of the
/// target relations, for a map of subquotients.
IntMatrix image_lattice(const Subquotient& s, const IntMatrix& f, const Subquotient& t);
IntMatrix kernel_lattice(const Subquotient& s, const IntMatrix& f, const Subquotient& t);
bool is_zero_map(const Subquotient& s, const IntMatrix& f, const Subquotient& t);

enum class ProStatus { pass, inconclusive };
const char* to_string(ProStatus s);

struct ProResult {
  ProStatus status = ProStatus::pass;
  std::vector<std::size_t> witness;  // witness[m] for m = 1..checked; entry 0 unused
  std::size_t failing_level = 0;     // first m without a witness when inconclusive
  std::string describe() const;
};

/// For m = 1..max_level (default depth-1) finds the least n <= depth with
/// alpha_n^m = 0.
ProResult is_pro_trivial(const Tower& t, std::size_t max_level = 0);

/// For m = 1..max_level finds the least n with im(beta_n^m) ⊆ im(f_m) and
/// ker(f_n) ⊆ ker(alpha_n^m); the witness is the larger of the two.
ProResult pro_iso_check(const StrictMap& f, const Tower& source, const Tower& target,
                        std::size_t max_level = 0);

Tower kernel_tower(const StrictMap& f, const Tower& source, const Tower& target);
Tower cokernel_tower(const StrictMap& f, const Tower& source, const Tower& target);
/// ker(g) / im(f) at each level of source -f-> middle -g-> target.
Tower homology_tower(const StrictMap& f, const StrictMap& g, const Tower& source,
                     const Tower& middle, const Tower& target);

/// {I_G / I_G^{n+1}} for n = 0..depth.
Tower tower_of_ideal_powers(const RepRing& r, std::size_t depth);

struct Exponents {
  std::optional<unsigned> a, b, c;
  bool found() const { return a && b && c; }
};

/// Least a, b, c <= bound with p^a I ⊆ I^2, I^b ⊆ p I and I^c ⊆ res(I_G) I,
/// where I = I_{G_p}.
Exponents find_exponents(const PermGroup& g, std::uint64_t p, unsigned bound);

struct ChainReport {
  Report report;
  std::size_t horizon = 0;
  std::vector<std::pair<std::string, ProResult>> steps;
};

/// The chain of pro-isomorphisms from {I/I^{n+1}} to the product over p of
/// {im/p^n im}, certified for levels 1..depth, plus the splitting
/// {Z} ⊕ {I/I^n} ≅ {R/I^n}.
ChainReport verify_pro_iso_chain(const PermGroup& g, std::size_t depth, unsigned bound = 12);

struct LimitData {
  bool stable = false;
  std::size_t level = 0;          // stabilization level
  CokernelInvariants lim;         // valid when stable
  bool lim1_zero = false;
  IntMatrix stable_image;         // inside term(level)
};

/// Mittag-Leffler detection on a truncated tower.
LimitData limits(const Tower& t);

/// 0 -> A -f-> B -g-> C -> 0 with A, B, C towers: pro-exactness first, then
/// exactness of the lim / lim^1 sequence at the stable level.
Report six_term_check(const Tower& a, const Tower& b, const Tower& c, const StrictMap& f,
                      const StrictMap& g);

/// 0 -> {I/I^{n+1}} -> {R/I^n} -> {Z} -> 0 is pro-exact.
Report verify_ideal_sequence_pro_exact(const PermGroup& g, std::size_t depth);

struct KZeroDescriptor {
  std::size_t free_rank = 1;
  std::map<std::uint64_t, std::size_t> p_adic;
  std::map<std::uint64_t, RingStructure> ring;
  std::size_t k1_rank = 0;
};

KZeroDescriptor completed_k0(const PermGroup& g, bool with_ring = false);

}  // namespace kbgq

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cohom.hpp"
#include "permgroup.hpp"
#include "repring.hpp"

namespace kbgq {

struct CentralizerRecord {
  std::string label;
  Betti betti;  // of BC_G<g> over the p-adic rationals
};

/// Class and centralizer data supplied from the literature.
struct DirectDataSpec {
  Betti betti;
  std::map<std::uint64_t, std::vector<CentralizerRecord>> centralizers;
  bool weyl_certified = false;  // W_G C = aut(C) and trivial centralizer cohomology, asserted by the source
  std::vector<std::string> notes;
};
void validate(const DirectDataSpec& s);

using GroupSpec = std::variant<PermGroup, CrystalSpec, FuchsianSpec, OneRelatorSpec, DirectDataSpec>;
const char* family_name(const GroupSpec& s);

struct KPart {
  std::uint64_t rational_rank = 0;
  Betti betti;          // Betti numbers of the matching parity
  PrimeCounts p_adic;   // nonzero ranks only
};

struct Note {
  std::string code;
  std::string message;
};

struct KRationalResult {
  KPart k0, k1;
  std::vector<Note> notes;

  const KPart& k(long n) const { return (n % 2 == 0) ? k0 : k1; }
};

KRationalResult k_rational(const GroupSpec& spec);

struct RingDescriptor {
  bool present = false;
  std::string reason;  // when absent
  std::string kind;    // "augmentation_images" or "idempotent_splitting"
  std::string law;
  std::vector<RingStructure> per_prime;
  PrimeCounts factors;
  /// Finite groups: whether every p-power cyclic subgroup has W_G C = aut(C).
  std::optional<bool> weyl_full;
};

RingDescriptor ring_structure(const GroupSpec& spec);

bool torsion_criterion(const KRationalResult& r);

struct PadicRootResult {
  bool exists = false;
  bool decided = true;               // false when only non-simple roots were seen
  std::optional<bool> teichmuller;   // l | p - 1, when gcd(l, p) = 1
};

/// Primitive l-th root of unity in Z_p, by exhaustive search modulo
/// p^precision and Hensel's lemma.
PadicRootResult padic_root_check(std::uint64_t l, std::uint64_t p, unsigned precision = 2);

}  // namespace kbgq

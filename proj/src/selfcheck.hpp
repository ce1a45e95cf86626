#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repring.hpp"
#include "report.hpp"

namespace kbgq {

struct SelfcheckOptions {
  std::uint64_t max_order = 24;
  std::size_t depth = 6;
  std::uint64_t seed = kDefaultDixonSeed;
  unsigned threads = 0;  // 0: hardware concurrency
  /// Test hook: perturbs one ring structure constant before it is verified.
  bool corrupt_constant = false;
};

enum class SelfcheckOutcome { pass, fail, inconclusive };

struct SelfcheckResult {
  std::vector<Report> checks;
  SelfcheckOutcome outcome = SelfcheckOutcome::pass;
};

/// A failure whose every message starts with "inconclusive".
bool is_inconclusive(const Report& r);

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// Cyclic, dihedral, quaternion, alternating, symmetric and product groups of
/// order at most max_order.
std::vector<NamedGroup> selfcheck_corpus(std::uint64_t max_order);

/// Recomputes the products of the basis of res(I_G) in R(G_p) and compares
/// them with the stored constants.
Report verify_ring_constants(const RingStructure& rs, const RepRing& sylow_ring, const std::string& name);

SelfcheckResult selfcheck(const SelfcheckOptions& options);

}  // namespace kbgq

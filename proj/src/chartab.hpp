#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "permgroup.hpp"
#include "zlattice.hpp"

namespace kbgq {

using ClassFunction = std::vector<Cyc>;

/// Reduction data kept from the construction: the table modulo q with
/// zeta_e mapped to z.
struct ModularTable {
  std::uint64_t q = 0;
  std::uint64_t z = 0;
  std::vector<std::vector<std::uint64_t>> values;
};

class CharacterTable {
 public:
  const PermGroup& group() const { return group_; }
  const std::vector<ClassData>& classes() const { return group_.classes(); }
  std::size_t size() const { return irr_.size(); }
  std::uint64_t exponent() const { return exponent_; }
  std::uint64_t group_order() const { return order_; }
  const std::vector<ClassFunction>& irreducibles() const { return irr_; }
  const Cyc& value(std::size_t chi, std::size_t cls) const { return irr_[chi][cls]; }
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }
  const ModularTable& modular() const { return modular_; }

  /// Copy with one entry replaced; used to exercise the orthogonality checker.
  CharacterTable with_value(std::size_t chi, std::size_t cls, const Cyc& v) const;

 private:
  friend CharacterTable character_table(const PermGroup&, std::uint64_t);
  PermGroup group_;
  std::uint64_t exponent_ = 1;
  std::uint64_t order_ = 1;
  std::vector<ClassFunction> irr_;
  std::vector<std::uint64_t> degrees_;
  ModularTable modular_;
};

inline constexpr std::uint64_t kDefaultDixonSeed = 20240601;

CharacterTable character_table(const PermGroup& g, std::uint64_t seed = kDefaultDixonSeed);

/// (1/|G|) sum_c |c| f(c) conj(h(c)).
Cyc inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& h);

/// Integer coordinates over Irr(G); throws InternalConsistencyError when a
/// coordinate is not an integer.
std::vector<Int> decompose(const CharacterTable& t, const ClassFunction& f);
ClassFunction values_of(const CharacterTable& t, const std::vector<Int>& coords);

ClassFunction restrict_values(const ClassFunction& f, const std::vector<std::size_t>& fusion);
/// ind f(g) = |C_G(g)| * sum over H-classes c fusing to (g) of f(c) / |C_H(c)|.
ClassFunction induce_values(const CharacterTable& t_h, const CharacterTable& t_g,
                            const std::vector<std::size_t>& fusion, const ClassFunction& f);

std::vector<Int> restrict_character(const CharacterTable& t_g, const CharacterTable& t_h,
                                    const std::vector<std::size_t>& fusion,
                                    const std::vector<Int>& coords);
std::vector<Int> induce_character(const CharacterTable& t_h, const CharacterTable& t_g,
                                  const std::vector<std::size_t>& fusion,
                                  const std::vector<Int>& coords);

/// Row i is the restriction of chi_i, so x -> x * M restricts virtual characters.
IntMatrix restriction_matrix(const CharacterTable& t_g, const CharacterTable& t_h,
                             const std::vector<std::size_t>& fusion);
IntMatrix induction_matrix(const CharacterTable& t_h, const CharacterTable& t_g,
                           const std::vector<std::size_t>& fusion);

struct OrthogonalityFailure {
  enum class Kind { row, column } kind;
  std::size_t a = 0, b = 0;
  std::string detail;
};

struct OrthogonalityReport {
  bool pass = true;
  std::vector<OrthogonalityFailure> failures;
};

OrthogonalityReport verify_orthogonality(const CharacterTable& t);

}  // namespace kbgq

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "numtheory.hpp"

namespace kbgq {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// A permutation of {0, ..., degree-1} stored by images. Products compose
/// left to right: (a * b)(i) == b(a(i)).
class Perm {
 public:
  Perm() = default;

  static Perm identity(std::size_t degree);
  /// Throws ValidationError on out-of-range or repeated images.
  static Perm from_images(std::vector<std::uint32_t> images);
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const { return images_; }

  bool is_identity() const;
  /// First point not fixed, or degree() for the identity.
  std::size_t first_moved_point() const;
  Perm inverse() const;
  Perm pow(std::int64_t k) const;
  std::uint64_t order() const;
  std::string to_cycle_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  explicit Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {}
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// One conjugacy class. `power_map[k]` is the class of representative^k for
/// k = 0..element_order.
struct ClassData {
  Perm representative;
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::uint64_t centralizer_order = 0;
  std::vector<std::size_t> power_map;

  std::size_t power(std::int64_t k) const;
};

namespace detail {
struct GroupState;
}

/// A finite permutation group with its stabilizer chain. Values are
/// immutable; element enumeration and classes are computed once on first use
/// and shared between copies.
class PermGroup {
 public:
  std::size_t degree() const;
  const std::vector<Perm>& generators() const;
  const Int& order() const;
  /// Throws ResourceError when the order does not fit in 64 bits.
  std::uint64_t order_u64() const;
  std::uint64_t enumeration_cap() const;

  const std::vector<std::uint32_t>& base() const;
  std::vector<std::size_t> orbit_lengths() const;
  bool contains(const Perm& g) const;

  /// Sorted elements. Throws ResourceError above the enumeration cap.
  const std::vector<Perm>& elements() const;
  std::optional<std::size_t> find(const Perm& g) const;
  /// Throws MembershipError when g is not in the group.
  std::size_t index_of(const Perm& g) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;

  const std::vector<ClassData>& classes() const;
  std::size_t class_of(const Perm& g) const;
  std::size_t class_of_index(std::size_t element_index) const;
  std::uint64_t exponent() const;

 private:
  friend PermGroup group_from_generators(std::size_t, std::vector<Perm>, std::uint64_t);
  std::shared_ptr<const detail::GroupState> state_;
};

/// Builds the group generated by `gens` on `degree` points.
PermGroup group_from_generators(std::size_t degree, std::vector<Perm> gens,
                                std::uint64_t cap = kDefaultEnumerationCap);
/// Same, from raw image lists; a malformed list is reported by generator index.
PermGroup group_from_generators(std::size_t degree,
                                const std::vector<std::vector<std::int64_t>>& raw_gens,
                                std::uint64_t cap = kDefaultEnumerationCap);

const std::vector<Perm>& elements(const PermGroup& g);
const std::vector<ClassData>& conjugacy_classes(const PermGroup& g);

/// Classes whose elements have order p^d with d >= 1.
std::vector<std::size_t> con_p(const PermGroup& g, std::uint64_t p);

PermGroup centralizer(const PermGroup& g, const Perm& x);
PermGroup normalizer_of_cyclic(const PermGroup& g, const Perm& x);
PermGroup sylow(const PermGroup& g, std::uint64_t p);

/// Maps each class of `sub` to the class of `group` containing its
/// representative.
std::vector<std::size_t> class_fusion(const PermGroup& sub, const PermGroup& group);

/// Subgroup of `group` generated by `gens`; each must lie in `group`.
PermGroup subgroup(const PermGroup& group, std::vector<Perm> gens);
/// Subgroup spanned by a set of elements that is already closed.
PermGroup subgroup_from_elements(const PermGroup& group, const std::vector<Perm>& members);
PermGroup trivial_subgroup(const PermGroup& group);
bool is_subgroup(const PermGroup& sub, const PermGroup& group);
bool is_cyclic(const PermGroup& g);
/// A generator when the group is cyclic.
std::optional<Perm> cyclic_generator(const PermGroup& g);
bool is_p_group(const PermGroup& g, std::uint64_t p);

/// Every subgroup, sorted by (order, element set).
std::vector<PermGroup> all_subgroups(const PermGroup& g);
/// One subgroup per conjugacy class, same order as all_subgroups.
std::vector<PermGroup> subgroup_class_representatives(const PermGroup& g);

/// Minimal representatives of the double cosets K g H.
std::vector<Perm> double_coset_representatives(const PermGroup& g, const PermGroup& k,
                                               const PermGroup& h);

namespace library {
PermGroup cyclic(std::size_t n);
/// Dihedral group of order 2n acting on the vertices of an n-gon (n >= 3).
PermGroup dihedral(std::size_t n);
/// Quaternion group of order 8 in its regular representation.
PermGroup quaternion8();
PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
PermGroup klein_four();
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
}  // namespace library

}  // namespace kbgq

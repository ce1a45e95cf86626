#include "permgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "error.hpp"

namespace kbgq {

// ---------------------------------------------------------------- Perm

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  return Perm(std::move(im));
}

Perm Perm::from_images(std::vector<std::uint32_t> images) {
  std::vector<char> seen(images.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto v = images[i];
    if (v >= images.size())
      throw ValidationError("image " + std::to_string(v) + " of point " + std::to_string(i) +
                            " is out of range for degree " + std::to_string(images.size()));
    if (seen[v])
      throw ValidationError("image " + std::to_string(v) + " occurs twice");
    seen[v] = 1;
  }
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw ValidationError("cycle point out of range");
      if (used[c[i]]) throw ValidationError("cycles are not disjoint");
      used[c[i]] = 1;
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(im));
}

bool Perm::is_identity() const { return first_moved_point() == images_.size(); }

std::size_t Perm::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<std::uint32_t>(i);
  return Perm(std::move(im));
}

Perm Perm::pow(std::int64_t k) const {
  auto ord = static_cast<std::int64_t>(order());
  k %= ord;
  if (k < 0) k += ord;
  Perm result = identity(degree());
  Perm base = *this;
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (!first) out << ' ';
      out << j;
      first = false;
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw ValidationError("permutation degrees differ");
  std::vector<std::uint32_t> im(a.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = b.images_[a.images_[i]];
  return Perm(std::move(im));
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t ClassData::power(std::int64_t k) const {
  auto o = static_cast<std::int64_t>(element_order);
  k %= o;
  if (k < 0) k += o;
  return power_map[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------- state

namespace detail {

struct Level {
  std::uint32_t base_point = 0;
  std::vector<Perm> gens;
  std::vector<std::int32_t> orbit_index;
  std::vector<std::uint32_t> orbit;
  std::vector<Perm> transversal;
  std::vector<std::vector<char>> processed;
};

struct Enumeration {
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::size_t, PermHash> index;
  std::vector<std::uint32_t> table;  // empty when the group is large
  std::vector<std::size_t> inverse;
};

struct ClassCache {
  std::vector<ClassData> classes;
  std::vector<std::size_t> class_of;
  std::uint64_t exponent = 1;
};

struct GroupState {
  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::vector<Level> levels;
  std::vector<std::uint32_t> base;
  Int order;
  std::uint64_t cap = kDefaultEnumerationCap;

  mutable std::once_flag enum_once;
  mutable std::unique_ptr<Enumeration> enumeration;
  mutable std::once_flag class_once;
  mutable std::unique_ptr<ClassCache> class_cache;
};

namespace {

void extend_orbit(Level& lv) {
  for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
    for (std::size_t si = 0; si < lv.gens.size(); ++si) {
      auto c = lv.gens[si](lv.orbit[oi]);
      if (lv.orbit_index[c] < 0) {
        lv.orbit_index[c] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(c);
        lv.transversal.push_back(lv.transversal[oi] * lv.gens[si]);
      }
    }
  }
  lv.processed.resize(lv.orbit.size());
  for (auto& row : lv.processed) row.resize(lv.gens.size(), 0);
}

Level make_level(std::size_t degree, std::uint32_t point) {
  Level lv;
  lv.base_point = point;
  lv.orbit_index.assign(degree, -1);
  lv.orbit_index[point] = 0;
  lv.orbit.push_back(point);
  lv.transversal.push_back(Perm::identity(degree));
  return lv;
}

// Returns the residue and the level at which sifting stopped.
std::pair<Perm, std::size_t> sift(const std::vector<Level>& levels, Perm g, std::size_t start) {
  for (std::size_t i = start; i < levels.size(); ++i) {
    auto b = g(levels[i].base_point);
    auto idx = levels[i].orbit_index[b];
    if (idx < 0) return {std::move(g), i};
    g = g * levels[i].transversal[static_cast<std::size_t>(idx)].inverse();
  }
  return {std::move(g), levels.size()};
}

void schreier_sims(GroupState& st) {
  auto& levels = st.levels;
  for (const auto& g : st.gens) {
    if (g.is_identity()) continue;
    bool fixes_base = std::all_of(levels.begin(), levels.end(),
                                  [&](const Level& lv) { return g(lv.base_point) == lv.base_point; });
    if (fixes_base)
      levels.push_back(make_level(st.degree, static_cast<std::uint32_t>(g.first_moved_point())));
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (const auto& g : st.gens) {
      bool in_stab = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g(levels[j].base_point) != levels[j].base_point) in_stab = false;
      if (in_stab && !g.is_identity()) levels[i].gens.push_back(g);
    }
    extend_orbit(levels[i]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    auto li = static_cast<std::size_t>(i);
    bool added = false;
    for (std::size_t oi = 0; oi < levels[li].orbit.size() && !added; ++oi) {
      for (std::size_t si = 0; si < levels[li].gens.size() && !added; ++si) {
        if (levels[li].processed[oi][si]) continue;
        levels[li].processed[oi][si] = 1;
        const Level& lv = levels[li];
        auto c = lv.gens[si](lv.orbit[oi]);
        Perm h = lv.transversal[oi] * lv.gens[si] *
                 lv.transversal[static_cast<std::size_t>(lv.orbit_index[c])].inverse();
        auto [r, j] = sift(levels, std::move(h), li + 1);
        if (r.is_identity()) continue;
        if (j == levels.size())
          levels.push_back(make_level(st.degree, static_cast<std::uint32_t>(r.first_moved_point())));
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels[l].gens.push_back(r);
          extend_orbit(levels[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        added = true;
      }
    }
    if (!added) --i;
  }

  st.order = 1;
  for (const auto& lv : levels) {
    st.base.push_back(lv.base_point);
    st.order *= static_cast<unsigned long>(lv.orbit.size());
  }
}

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------- PermGroup

PermGroup group_from_generators(std::size_t degree, std::vector<Perm> gens, std::uint64_t cap) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].degree() != degree)
      throw ValidationError("generator " + std::to_string(i) + " has degree " +
                            std::to_string(gens[i].degree()) + ", expected " +
                            std::to_string(degree));
  auto st = std::make_shared<detail::GroupState>();
  st->degree = degree;
  st->gens = std::move(gens);
  st->cap = cap;
  detail::schreier_sims(*st);
  PermGroup g;
  g.state_ = std::move(st);
  return g;
}

PermGroup group_from_generators(std::size_t degree,
                                const std::vector<std::vector<std::int64_t>>& raw_gens,
                                std::uint64_t cap) {
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < raw_gens.size(); ++i) {
    const auto& raw = raw_gens[i];
    if (raw.size() != degree)
      throw ValidationError("generator " + std::to_string(i) + " has " +
                            std::to_string(raw.size()) + " images, expected " +
                            std::to_string(degree));
    std::vector<std::uint32_t> im;
    for (auto v : raw) {
      if (v < 0 || static_cast<std::uint64_t>(v) >= degree)
        throw ValidationError("generator " + std::to_string(i) + " has image " +
                              std::to_string(v) + " outside 0.." + std::to_string(degree - 1));
      im.push_back(static_cast<std::uint32_t>(v));
    }
    try {
      gens.push_back(Perm::from_images(std::move(im)));
    } catch (const ValidationError& e) {
      throw ValidationError("generator " + std::to_string(i) + " is not a permutation: " + e.what());
    }
  }
  return group_from_generators(degree, std::move(gens), cap);
}

std::size_t PermGroup::degree() const { return state_->degree; }
const std::vector<Perm>& PermGroup::generators() const { return state_->gens; }
const Int& PermGroup::order() const { return state_->order; }
std::uint64_t PermGroup::order_u64() const { return to_u64(state_->order); }
std::uint64_t PermGroup::enumeration_cap() const { return state_->cap; }
const std::vector<std::uint32_t>& PermGroup::base() const { return state_->base; }

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& lv : state_->levels) out.push_back(lv.orbit.size());
  return out;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != state_->degree) return false;
  auto [r, j] = detail::sift(state_->levels, g, 0);
  return j == state_->levels.size() && r.is_identity();
}

const std::vector<Perm>& PermGroup::elements() const {
  const auto& st = *state_;
  std::call_once(st.enum_once, [&st] {
    if (st.order > Int(static_cast<unsigned long>(st.cap)))
      throw ResourceError("group of order " + st.order.get_str() +
                          " exceeds the enumeration cap " + std::to_string(st.cap));
    auto e = std::make_unique<detail::Enumeration>();
    std::vector<Perm> cur{Perm::identity(st.degree)};
    for (auto it = st.levels.rbegin(); it != st.levels.rend(); ++it) {
      std::vector<Perm> next;
      next.reserve(cur.size() * it->transversal.size());
      for (const auto& x : cur)
        for (const auto& u : it->transversal) next.push_back(x * u);
      cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    e->elements = std::move(cur);
    const auto n = e->elements.size();
    e->index.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) e->index.emplace(e->elements[i], i);
    e->inverse.resize(n);
    for (std::size_t i = 0; i < n; ++i) e->inverse[i] = e->index.at(e->elements[i].inverse());
    if (n <= 1024) {
      e->table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          e->table[a * n + b] =
              static_cast<std::uint32_t>(e->index.at(e->elements[a] * e->elements[b]));
    }
    st.enumeration = std::move(e);
  });
  return st.enumeration->elements;
}

std::optional<std::size_t> PermGroup::find(const Perm& g) const {
  elements();
  const auto& idx = state_->enumeration->index;
  auto it = idx.find(g);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::index_of(const Perm& g) const {
  auto i = find(g);
  if (!i) throw MembershipError("permutation " + g.to_cycle_string() + " is not in the group");
  return *i;
}

std::size_t PermGroup::mul(std::size_t a, std::size_t b) const {
  const auto& els = elements();
  const auto& e = *state_->enumeration;
  if (!e.table.empty()) return e.table[a * els.size() + b];
  return e.index.at(els[a] * els[b]);
}

std::size_t PermGroup::inv(std::size_t a) const {
  elements();
  return state_->enumeration->inverse[a];
}

namespace {

std::size_t uf_find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

const std::vector<ClassData>& PermGroup::classes() const {
  const auto& st = *state_;
  const auto& els = elements();
  std::call_once(st.class_once, [&] {
    const auto n = els.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::size_t> gen_idx;
    for (const auto& g : st.gens) gen_idx.push_back(index_of(g));
    for (std::size_t x = 0; x < n; ++x) {
      for (auto s : gen_idx) {
        auto y = mul(mul(inv(s), x), s);
        auto rx = uf_find(parent, x), ry = uf_find(parent, y);
        if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
      }
    }
    // Roots are minimal indices, hence lexicographically least representatives.
    std::unordered_map<std::size_t, std::size_t> root_size;
    for (std::size_t x = 0; x < n; ++x) ++root_size[uf_find(parent, x)];
    std::vector<std::size_t> roots;
    for (const auto& [r, _] : root_size) roots.push_back(r);
    std::vector<std::uint64_t> root_order(n, 0);
    for (auto r : roots) root_order[r] = els[r].order();
    std::sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) {
      return std::tuple(root_order[a], root_size[a], a) < std::tuple(root_order[b], root_size[b], b);
    });
    auto cache = std::make_unique<detail::ClassCache>();
    std::unordered_map<std::size_t, std::size_t> root_to_class;
    for (std::size_t c = 0; c < roots.size(); ++c) root_to_class[roots[c]] = c;
    cache->class_of.resize(n);
    for (std::size_t x = 0; x < n; ++x) cache->class_of[x] = root_to_class[uf_find(parent, x)];
    for (auto r : roots) {
      ClassData cd;
      cd.representative = els[r];
      cd.size = root_size[r];
      cd.element_order = root_order[r];
      cd.centralizer_order = n / cd.size;
      std::size_t pw = index_of(Perm::identity(st.degree));
      for (std::uint64_t k = 0; k <= cd.element_order; ++k) {
        cd.power_map.push_back(cache->class_of[pw]);
        pw = mul(pw, r);
      }
      cache->exponent = std::lcm(cache->exponent, cd.element_order);
      cache->classes.push_back(std::move(cd));
    }
    st.class_cache = std::move(cache);
  });
  return st.class_cache->classes;
}

std::size_t PermGroup::class_of(const Perm& g) const { return class_of_index(index_of(g)); }

std::size_t PermGroup::class_of_index(std::size_t element_index) const {
  classes();
  return state_->class_cache->class_of[element_index];
}

std::uint64_t PermGroup::exponent() const {
  classes();
  return state_->class_cache->exponent;
}

// ---------------------------------------------------------------- free functions

const std::vector<Perm>& elements(const PermGroup& g) { return g.elements(); }
const std::vector<ClassData>& conjugacy_classes(const PermGroup& g) { return g.classes(); }

std::vector<std::size_t> con_p(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  std::vector<std::size_t> out;
  const auto& cls = g.classes();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    auto o = cls[i].element_order;
    if (o > 1 && p_part(o, p) == o) out.push_back(i);
  }
  return out;
}

PermGroup subgroup(const PermGroup& group, std::vector<Perm> gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!group.contains(gens[i]))
      throw MembershipError("generator " + std::to_string(i) + " (" + gens[i].to_cycle_string() +
                            ") is not in the ambient group");
  return group_from_generators(group.degree(), std::move(gens), group.enumeration_cap());
}

PermGroup subgroup_from_elements(const PermGroup& group, const std::vector<Perm>& members) {
  std::vector<Perm> gens;
  PermGroup h = group_from_generators(group.degree(), gens, group.enumeration_cap());
  for (const auto& x : members) {
    if (h.contains(x)) continue;
    gens.push_back(x);
    h = group_from_generators(group.degree(), gens, group.enumeration_cap());
  }
  if (h.order() != Int(static_cast<unsigned long>(members.size())))
    throw InternalConsistencyError("element set is not closed under multiplication");
  return h;
}

PermGroup trivial_subgroup(const PermGroup& group) {
  return group_from_generators(group.degree(), std::vector<Perm>{}, group.enumeration_cap());
}

bool is_subgroup(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree() != group.degree()) return false;
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Perm& g) { return group.contains(g); });
}

PermGroup centralizer(const PermGroup& g, const Perm& x) {
  g.index_of(x);
  std::vector<Perm> members;
  for (const auto& y : g.elements())
    if (x * y == y * x) members.push_back(y);
  return subgroup_from_elements(g, members);
}

PermGroup normalizer_of_cyclic(const PermGroup& g, const Perm& x) {
  g.index_of(x);
  std::set<Perm> powers;
  Perm p = Perm::identity(g.degree());
  do {
    powers.insert(p);
    p = p * x;
  } while (!p.is_identity());
  std::vector<Perm> members;
  for (const auto& y : g.elements())
    if (powers.count(y.inverse() * x * y)) members.push_back(y);
  return subgroup_from_elements(g, members);
}

PermGroup sylow(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  const auto target = p_part(g.order_u64(), p);
  std::vector<Perm> pgens;
  PermGroup P = trivial_subgroup(g);
  while (P.order_u64() < target) {
    bool grew = false;
    for (const auto& x : g.elements()) {
      bool normalizes = std::all_of(P.generators().begin(), P.generators().end(),
                                    [&](const Perm& s) { return P.contains(x.inverse() * s * x); });
      if (!normalizes) continue;
      auto o = x.order();
      Perm y = x.pow(static_cast<std::int64_t>(o / p_part(o, p)));
      if (P.contains(y)) continue;
      pgens.push_back(y);
      P = group_from_generators(g.degree(), pgens, g.enumeration_cap());
      grew = true;
      break;
    }
    if (!grew) throw InternalConsistencyError("Sylow search stalled below the full p-part");
  }
  return P;
}

std::vector<std::size_t> class_fusion(const PermGroup& sub, const PermGroup& group) {
  for (std::size_t i = 0; i < sub.generators().size(); ++i)
    if (!group.contains(sub.generators()[i]))
      throw MembershipError("subgroup generator " + std::to_string(i) +
                            " is not in the ambient group");
  std::vector<std::size_t> out;
  for (const auto& c : sub.classes()) out.push_back(group.class_of(c.representative));
  return out;
}

std::optional<Perm> cyclic_generator(const PermGroup& g) {
  if (g.order() == 1) return Perm::identity(g.degree());
  auto n = g.order_u64();
  for (const auto& c : g.classes())
    if (c.element_order == n) return c.representative;
  return std::nullopt;
}

bool is_cyclic(const PermGroup& g) { return cyclic_generator(g).has_value(); }

bool is_p_group(const PermGroup& g, std::uint64_t p) {
  auto n = g.order_u64();
  return p_part(n, p) == n;
}

// ---------------------------------------------------------------- subgroup lattice

namespace {

using Bits = std::vector<std::uint64_t>;

struct SubRec {
  Bits bits;
  std::vector<std::size_t> gens;
  std::size_t size = 0;
};

bool test_bit(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

SubRec closure(const PermGroup& g, std::vector<std::size_t> gens) {
  const auto n = g.elements().size();
  SubRec rec;
  rec.bits.assign((n + 63) / 64, 0);
  rec.gens = std::move(gens);
  auto id = g.index_of(Perm::identity(g.degree()));
  std::vector<std::size_t> list{id};
  set_bit(rec.bits, id);
  for (std::size_t k = 0; k < list.size(); ++k)
    for (auto s : rec.gens) {
      auto y = g.mul(list[k], s);
      if (!test_bit(rec.bits, y)) {
        set_bit(rec.bits, y);
        list.push_back(y);
      }
    }
  rec.size = list.size();
  return rec;
}

constexpr std::uint64_t kLatticeLimit = 2048;

std::vector<SubRec> subgroup_records(const PermGroup& g) {
  if (g.order() > Int(static_cast<unsigned long>(kLatticeLimit)))
    throw ResourceError("subgroup lattice is only computed for groups of order at most " +
                        std::to_string(kLatticeLimit));
  const auto n = g.elements().size();
  std::map<Bits, SubRec> found;
  std::vector<SubRec> cyclic;
  for (std::size_t x = 0; x < n; ++x) {
    auto rec = closure(g, {x});
    if (found.emplace(rec.bits, rec).second) cyclic.push_back(rec);
  }
  std::vector<Bits> frontier;
  for (const auto& [b, _] : found) frontier.push_back(b);
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const auto& b : frontier) {
      const SubRec a = found.at(b);
      for (const auto& c : cyclic) {
        if (test_bit(a.bits, c.gens[0])) continue;
        auto gens = a.gens;
        gens.push_back(c.gens[0]);
        auto rec = closure(g, std::move(gens));
        if (found.emplace(rec.bits, rec).second) next.push_back(rec.bits);
      }
    }
    frontier = std::move(next);
  }
  std::vector<SubRec> out;
  for (auto& [_, r] : found) out.push_back(std::move(r));
  auto members = [&](const SubRec& r) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < n; ++i)
      if (test_bit(r.bits, i)) m.push_back(i);
    return m;
  };
  std::sort(out.begin(), out.end(), [&](const SubRec& a, const SubRec& b) {
    if (a.size != b.size) return a.size < b.size;
    return members(a) < members(b);
  });
  return out;
}

PermGroup from_record(const PermGroup& g, const SubRec& r) {
  std::vector<Perm> gens;
  for (auto i : r.gens) gens.push_back(g.elements()[i]);
  return group_from_generators(g.degree(), std::move(gens), g.enumeration_cap());
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
  std::vector<PermGroup> out;
  for (const auto& r : subgroup_records(g)) out.push_back(from_record(g, r));
  return out;
}

std::vector<PermGroup> subgroup_class_representatives(const PermGroup& g) {
  auto recs = subgroup_records(g);
  const auto n = g.elements().size();
  std::map<Bits, std::size_t> where;
  for (std::size_t i = 0; i < recs.size(); ++i) where[recs[i].bits] = i;
  std::vector<char> covered(recs.size(), 0);
  std::vector<PermGroup> out;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (covered[i]) continue;
    out.push_back(from_record(g, recs[i]));
    for (std::size_t x = 0; x < n; ++x) {
      Bits conj(recs[i].bits.size(), 0);
      for (std::size_t h = 0; h < n; ++h)
        if (test_bit(recs[i].bits, h)) set_bit(conj, g.mul(g.mul(g.inv(x), h), x));
      covered[where.at(conj)] = 1;
    }
  }
  return out;
}

std::vector<Perm> double_coset_representatives(const PermGroup& g, const PermGroup& k,
                                               const PermGroup& h) {
  if (!is_subgroup(k, g) || !is_subgroup(h, g))
    throw MembershipError("double coset factors must be subgroups of the ambient group");
  const auto& els = g.elements();
  std::vector<std::size_t> kidx, hidx;
  for (const auto& x : k.elements()) kidx.push_back(g.index_of(x));
  for (const auto& x : h.elements()) hidx.push_back(g.index_of(x));
  std::vector<char> seen(els.size(), 0);
  std::vector<Perm> reps;
  for (std::size_t x = 0; x < els.size(); ++x) {
    if (seen[x]) continue;
    reps.push_back(els[x]);
    for (auto a : kidx)
      for (auto b : hidx) seen[g.mul(g.mul(a, x), b)] = 1;
  }
  return reps;
}

// ---------------------------------------------------------------- library

namespace library {

namespace {
std::vector<std::uint32_t> range(std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> v;
  for (auto i = from; i < to; ++i) v.push_back(i);
  return v;
}
}  // namespace

PermGroup cyclic(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  if (n == 1) return group_from_generators(1, std::vector<Perm>{});
  return group_from_generators(n, {Perm::from_cycles(n, {range(0, static_cast<std::uint32_t>(n))})});
}

PermGroup dihedral(std::size_t n) {
  if (n < 3) throw ValidationError("dihedral group needs at least 3 vertices");
  auto rot = Perm::from_cycles(n, {range(0, static_cast<std::uint32_t>(n))});
  std::vector<std::uint32_t> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<std::uint32_t>((n - i) % n);
  return group_from_generators(n, {rot, Perm::from_images(refl)});
}

PermGroup quaternion8() {
  // Elements 0..7 = 1, -1, i, -i, j, -j, k, -k; generators act by right multiplication.
  auto i_mul = Perm::from_cycles(8, {{0, 2, 1, 3}, {4, 7, 5, 6}});
  auto j_mul = Perm::from_cycles(8, {{0, 4, 1, 5}, {2, 6, 3, 7}});
  return group_from_generators(8, {i_mul, j_mul});
}

PermGroup symmetric(std::size_t n) {
  if (n == 0) throw ValidationError("symmetric group degree must be positive");
  if (n == 1) return group_from_generators(1, std::vector<Perm>{});
  if (n == 2) return group_from_generators(2, {Perm::from_cycles(2, {{0, 1}})});
  return group_from_generators(
      n, {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {range(0, static_cast<std::uint32_t>(n))})});
}

PermGroup alternating(std::size_t n) {
  if (n == 0) throw ValidationError("alternating group degree must be positive");
  std::vector<Perm> gens;
  for (std::uint32_t i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return group_from_generators(n, std::move(gens));
}

PermGroup klein_four() {
  return group_from_generators(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                                   Perm::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const auto da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<std::uint32_t> im(da + db);
    for (std::size_t i = 0; i < da; ++i) im[i] = g(static_cast<std::uint32_t>(i));
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<std::uint32_t>(da + i);
    gens.push_back(Perm::from_images(im));
  }
  for (const auto& g : b.generators()) {
    std::vector<std::uint32_t> im(da + db);
    for (std::size_t i = 0; i < da; ++i) im[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < db; ++i)
      im[da + i] = static_cast<std::uint32_t>(da + g(static_cast<std::uint32_t>(i)));
    gens.push_back(Perm::from_images(im));
  }
  return group_from_generators(da + db, std::move(gens), std::min(a.enumeration_cap(), b.enumeration_cap()));
}

}  // namespace library

}  // namespace kbgq

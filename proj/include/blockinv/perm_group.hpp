#pragma once

#include "blockinv/bigint.hpp"
#include "blockinv/group_spec.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace blockinv {

inline constexpr std::size_t kDefaultBruteCap = 200000;

/// Permutation of {0, ..., n-1} stored as its image array.
using Perm = std::vector<std::uint16_t>;

Perm identity_perm(std::size_t degree);
/// Apply f, then g.
Perm compose(const Perm& f, const Perm& g);
Perm inverse(const Perm& f);
/// g^{-1} x g.
Perm conjugate(const Perm& x, const Perm& g);
bool is_permutation(const Perm& f);

/// Flat table of distinct permutations of a fixed degree with hashed lookup.
class ElementSet {
 public:
  explicit ElementSet(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return count_; }
  std::span<const std::uint16_t> at(std::size_t i) const { return {data_.data() + i * degree_, degree_}; }
  Perm perm(std::size_t i) const { auto s = at(i); return Perm(s.begin(), s.end()); }

  std::optional<std::size_t> find(std::span<const std::uint16_t> p) const;
  /// Returns the index of p and whether it was newly added.
  std::pair<std::size_t, bool> insert(std::span<const std::uint16_t> p);

 private:
  std::uint64_t hash(std::span<const std::uint16_t> p) const;
  void grow();

  std::size_t degree_;
  std::size_t count_ = 0;
  std::vector<std::uint16_t> data_;
  std::vector<std::uint32_t> slots_;  // index + 1, 0 marks an empty slot
};

/// Permutation group given by generators. The element table is built lazily
/// on first use and then shared; an instance must not be enumerated from two
/// threads at once.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  /// Throws CapExceeded once the closure exceeds cap elements.
  const ElementSet& elements(std::size_t cap = kDefaultBruteCap) const;
  std::size_t order(std::size_t cap = kDefaultBruteCap) const { return elements(cap).size(); }

 private:
  friend PermGroup derived_subgroup(const PermGroup&, std::size_t);

  std::size_t degree_;
  std::vector<Perm> generators_;
  mutable std::shared_ptr<const ElementSet> elements_;
};

/// Faithful permutation representation of spec: C_n on n points, SD_{2^{t+2}}
/// on 2^{t+1} points, G wr C_p on p * deg(G) points, products on disjoint
/// unions. Throws CapExceeded if group_order(spec) > order_cap.
PermGroup realize(const GroupSpec& spec, const Nat& order_cap = Nat(static_cast<unsigned long>(kDefaultBruteCap)));

/// Number of conjugacy classes by union-find over the conjugation action of
/// the generators.
Nat brute_class_count(const PermGroup& g, std::size_t cap = kDefaultBruteCap);

/// Normal closure of the generator commutators.
PermGroup derived_subgroup(const PermGroup& g, std::size_t cap = kDefaultBruteCap);

}  // namespace blockinv

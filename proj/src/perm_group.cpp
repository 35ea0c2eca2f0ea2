#include "blockinv/perm_group.hpp"

#include "blockinv/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace blockinv {

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return p;
}

Perm compose(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}

Perm inverse(const Perm& f) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<std::uint16_t>(i);
  return r;
}

Perm conjugate(const Perm& x, const Perm& g) { return compose(compose(inverse(g), x), g); }

bool is_permutation(const Perm& f) {
  std::vector<bool> seen(f.size(), false);
  for (auto v : f) {
    if (v >= f.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// --- ElementSet --------------------------------------------------------------

std::uint64_t ElementSet::hash(std::span<const std::uint16_t> p) const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h ^ (h >> 29);
}

std::optional<std::size_t> ElementSet::find(std::span<const std::uint16_t> p) const {
  if (slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(p) & mask;; s = (s + 1) & mask) {
    const std::uint32_t v = slots_[s];
    if (v == 0) return std::nullopt;
    if (std::equal(p.begin(), p.end(), data_.begin() + (v - 1) * degree_)) return v - 1;
  }
}

void ElementSet::grow() {
  std::vector<std::uint32_t> fresh(slots_.empty() ? 64 : slots_.size() * 2, 0);
  const std::size_t mask = fresh.size() - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    std::size_t s = hash(at(i)) & mask;
    while (fresh[s] != 0) s = (s + 1) & mask;
    fresh[s] = static_cast<std::uint32_t>(i + 1);
  }
  slots_ = std::move(fresh);
}

std::pair<std::size_t, bool> ElementSet::insert(std::span<const std::uint16_t> p) {
  if (p.size() != degree_) throw InternalError("permutation degree mismatch");
  if (2 * (count_ + 1) > slots_.size()) grow();
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(p) & mask;
  for (;; s = (s + 1) & mask) {
    const std::uint32_t v = slots_[s];
    if (v == 0) break;
    if (std::equal(p.begin(), p.end(), data_.begin() + (v - 1) * degree_)) return {v - 1, false};
  }
  if (count_ >= std::numeric_limits<std::uint32_t>::max() - 1) throw CapExceeded("element table full");
  data_.insert(data_.end(), p.begin(), p.end());
  slots_[s] = static_cast<std::uint32_t>(count_ + 1);
  return {count_++, true};
}

// --- PermGroup ---------------------------------------------------------------

namespace {

std::shared_ptr<const ElementSet> closure(std::size_t degree, const std::vector<Perm>& gens, std::size_t cap) {
  auto set = std::make_shared<ElementSet>(degree);
  set->insert(identity_perm(degree));
  Perm buf(degree);
  for (std::size_t i = 0; i < set->size(); ++i) {
    for (const Perm& g : gens) {
      auto x = set->at(i);
      for (std::size_t k = 0; k < degree; ++k) buf[k] = g[x[k]];
      if (set->insert(buf).second && set->size() > cap)
        throw CapExceeded("group closure exceeds " + std::to_string(cap) + " elements");
    }
  }
  return set;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree == 0 || degree > std::numeric_limits<std::uint16_t>::max())
    throw DomainError("permutation degree out of range");
  for (const Perm& g : generators_)
    if (g.size() != degree || !is_permutation(g)) throw DomainError("generator is not a permutation of the right degree");
}

const ElementSet& PermGroup::elements(std::size_t cap) const {
  if (!elements_) elements_ = closure(degree_, generators_, cap);
  if (elements_->size() > cap) throw CapExceeded("group order exceeds " + std::to_string(cap));
  return *elements_;
}

// --- realize -----------------------------------------------------------------

namespace {

struct Rep {
  std::size_t degree;
  std::vector<Perm> gens;
};

Rep realize_rep(const GroupSpec& spec);

Rep realize_cyclic(unsigned long n) {
  Perm g(n);
  for (unsigned long i = 0; i < n; ++i) g[i] = static_cast<std::uint16_t>((i + 1) % n);
  return {n, {g}};
}

Rep realize_semidihedral(unsigned long order) {
  // Z/N with N = order / 2: y = +1, x = multiplication by N/2 - 1.
  const unsigned long n = order / 2;
  Perm y(n), x(n);
  for (unsigned long i = 0; i < n; ++i) {
    y[i] = static_cast<std::uint16_t>((i + 1) % n);
    x[i] = static_cast<std::uint16_t>((i * (n / 2 - 1)) % n);
  }
  return {n, {x, y}};
}

Rep realize_wreath(const GroupSpec::Wreath& w) {
  const Rep base = realize_rep(*w.base);
  const std::size_t m = base.degree, deg = m * w.p;
  Rep out{deg, {}};
  for (const Perm& g : base.gens) {
    Perm h = identity_perm(deg);
    for (std::size_t i = 0; i < m; ++i) h[i] = g[i];
    out.gens.push_back(std::move(h));
  }
  Perm shift(deg);
  for (std::size_t b = 0; b < w.p; ++b)
    for (std::size_t i = 0; i < m; ++i) shift[b * m + i] = static_cast<std::uint16_t>(((b + 1) % w.p) * m + i);
  out.gens.push_back(std::move(shift));
  return out;
}

Rep realize_product(const GroupSpec::Product& p) {
  std::vector<Rep> blocks;
  std::size_t deg = 0;
  for (const auto& f : p.factors) {
    Rep r = realize_rep(*f.spec);
    for (unsigned k = 0; k < f.multiplicity; ++k) {
      deg += r.degree;
      blocks.push_back(r);
    }
  }
  if (deg > std::numeric_limits<std::uint16_t>::max()) throw CapExceeded("permutation degree too large");
  Rep out{deg, {}};
  std::size_t offset = 0;
  for (const Rep& r : blocks) {
    for (const Perm& g : r.gens) {
      Perm h = identity_perm(deg);
      for (std::size_t i = 0; i < r.degree; ++i) h[offset + i] = static_cast<std::uint16_t>(offset + g[i]);
      out.gens.push_back(std::move(h));
    }
    offset += r.degree;
  }
  return out;
}

Rep realize_rep(const GroupSpec& spec) {
  struct Visitor {
    Rep operator()(const GroupSpec::Cyclic& c) const {
      if (c.n > std::numeric_limits<std::uint16_t>::max()) throw CapExceeded("permutation degree too large");
      return realize_cyclic(c.n);
    }
    Rep operator()(const GroupSpec::SemiDihedral& s) const { return realize_semidihedral(s.order); }
    Rep operator()(const GroupSpec::Wreath& w) const {
      Rep r = realize_wreath(w);
      if (r.degree > std::numeric_limits<std::uint16_t>::max()) throw CapExceeded("permutation degree too large");
      return r;
    }
    Rep operator()(const GroupSpec::Product& p) const { return realize_product(p); }
  };
  return std::visit(Visitor{}, spec.node());
}

}  // namespace

PermGroup realize(const GroupSpec& spec, const Nat& order_cap) {
  const Nat order = group_order(spec);
  if (order > order_cap)
    throw CapExceeded("group order " + to_string(order) + " exceeds cap " + to_string(order_cap));
  Rep r = realize_rep(spec);
  return PermGroup(r.degree, std::move(r.gens));
}

// --- class counting and derived subgroups ------------------------------------

Nat brute_class_count(const PermGroup& g, std::size_t cap) {
  const ElementSet& els = g.elements(cap);
  const std::size_t n = els.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<Perm> inv;
  for (const Perm& s : g.generators()) inv.push_back(inverse(s));
  Perm buf(g.degree());
  std::size_t classes = n;
  for (std::size_t i = 0; i < n; ++i) {
    auto x = els.at(i);
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      const Perm& s = g.generators()[k];
      const Perm& si = inv[k];
      // s^{-1} x s, applied left to right
      for (std::size_t p = 0; p < buf.size(); ++p) buf[p] = s[x[si[p]]];
      auto j = els.find(buf);
      if (!j) throw InternalError("conjugate left the group");
      std::uint32_t ri = find(static_cast<std::uint32_t>(i)), rj = find(static_cast<std::uint32_t>(*j));
      if (ri != rj) {
        parent[ri] = rj;
        --classes;
      }
    }
  }
  return Nat(static_cast<unsigned long>(classes));
}

PermGroup derived_subgroup(const PermGroup& g, std::size_t cap) {
  g.elements(cap);
  const auto& gens = g.generators();
  std::vector<Perm> sub;
  auto add = [&](Perm p, const ElementSet* current) {
    if (is_identity(p)) return false;
    if (current && current->find(p)) return false;
    sub.push_back(std::move(p));
    return true;
  };
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      add(compose(compose(inverse(gens[i]), inverse(gens[j])), compose(gens[i], gens[j])), nullptr);

  auto elements = closure(g.degree(), sub, cap);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < sub.size() && !changed; ++k) {
      for (const Perm& s : gens) {
        if (add(conjugate(sub[k], s), elements.get())) {
          elements = closure(g.degree(), sub, cap);
          changed = true;
          break;
        }
      }
    }
  }
  PermGroup out(g.degree(), sub);
  out.elements_ = elements;
  return out;
}

}  // namespace blockinv

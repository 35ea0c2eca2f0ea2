#pragma once

#include "blockinv/bigint.hpp"
#include "blockinv/block.hpp"
#include "blockinv/group_spec.hpp"
#include "blockinv/perm_group.hpp"

#include <string>

namespace blockinv {

enum class CountSource { Exact, LowerBound };

const char* source_name(CountSource s);

/// A class count that is either exact or a certified lower bound.
struct SourcedCount {
  Nat value;
  CountSource source = CountSource::Exact;
  std::string detail;
};

/// k(G') by brute force, cached per canonical spec string. Thread-safe; the
/// same spec is only enumerated once even under concurrent requests.
Nat brute_derived_class_count(const GroupSpec& spec, std::size_t cap = kDefaultBruteCap);

/// Exact k(G') when |G| <= cap (brute force), otherwise the product over
/// factors of the best available bound. For G wr C_p the derived subgroup
/// contains {(g_1..g_p) : g_1...g_p in G'} with index |G : G'| in G^p, giving
/// k((G wr C_p)') >= k(G)^p / |G : G'|.
SourcedCount derived_class_count_lower(const GroupSpec& spec, std::size_t cap = kDefaultBruteCap);

/// Rational form of the index bound k(G)^p / |G : G'| for spec = G wr C_p.
Rat wreath_derived_index_bound(const GroupSpec& spec);

/// k(D) from the class-count formula (always exact).
SourcedCount k_D(const BlockParams& params);

/// k(D') exact where brute force fits under cap, else a lower bound.
SourcedCount k_D_prime(const BlockParams& params, std::size_t cap = kDefaultBruteCap);

/// Defect group D~ of the unipotent block of GL_w(eps q) covering the SL block.
GroupSpec sl_tilde_defect(unsigned a, unsigned w);

/// ceil(k(D~) / 3^{a+m}) <= k(Dbar).
SourcedCount sl_k_Dbar_lower(unsigned a, unsigned w);

/// ceil(k(D~') / 3^{m+delta}) <= k(Dbar'), with k(D~') itself possibly only
/// bounded from below.
SourcedCount sl_k_Dbar_prime_lower(unsigned a, unsigned w, std::size_t cap = kDefaultBruteCap);

}  // namespace blockinv

#include "blockinv/defect.hpp"

#include "blockinv/error.hpp"

#include <future>
#include <map>
#include <mutex>

namespace blockinv {

const char* source_name(CountSource s) { return s == CountSource::Exact ? "exact" : "lower_bound"; }

namespace {

std::mutex g_brute_mutex;
std::map<std::string, std::shared_future<Nat>> g_brute_cache;

Nat compute_brute_derived(const GroupSpec& spec, std::size_t cap) {
  PermGroup g = realize(spec, Nat(static_cast<unsigned long>(cap)));
  return brute_class_count(derived_subgroup(g, cap), cap);
}

struct Lower {
  Nat value;
  bool exact = true;
  std::string detail;
};

void merge_detail(std::string& into, const std::string& part) {
  if (part.empty()) return;
  if (into.find(part) != std::string::npos) return;
  if (!into.empty()) into += "; ";
  into += part;
}

Lower derived_lower(const GroupSpec& spec, std::size_t cap) {
  if (group_order(spec) <= cap) return {brute_derived_class_count(spec, cap), true, "brute force"};
  struct Visitor {
    std::size_t cap;
    Lower operator()(const GroupSpec::Cyclic&) const { return {Nat(1), true, "abelian"}; }
    Lower operator()(const GroupSpec::SemiDihedral& s) const {
      // SD' = <y^2> is cyclic of order 2^t; only reached for huge caps.
      return {Nat(s.order / 4), true, "cyclic derived subgroup"};
    }
    Lower operator()(const GroupSpec::Wreath&) const {
      throw InternalError("unreachable");
    }
    Lower operator()(const GroupSpec::Product& p) const {
      Lower out{Nat(1), true, ""};
      for (const auto& f : p.factors) {
        Lower part = derived_lower(*f.spec, cap);
        out.value *= pow_nat(part.value, f.multiplicity);
        out.exact = out.exact && part.exact;
        merge_detail(out.detail, part.detail);
      }
      return out;
    }
  };
  if (std::holds_alternative<GroupSpec::Wreath>(spec.node()))
    return {ceil_rat(wreath_derived_index_bound(spec)), false, "index bound k(G)^p/|G:G'|"};
  return std::visit(Visitor{cap}, spec.node());
}

}  // namespace

Nat brute_derived_class_count(const GroupSpec& spec, std::size_t cap) {
  const std::string key = spec.to_string() + "#" + std::to_string(cap);
  std::promise<Nat> promise;
  std::shared_future<Nat> fut;
  bool owner = false;
  {
    std::lock_guard lock(g_brute_mutex);
    auto it = g_brute_cache.find(key);
    if (it != g_brute_cache.end()) {
      fut = it->second;
    } else {
      fut = promise.get_future().share();
      g_brute_cache.emplace(key, fut);
      owner = true;
    }
  }
  if (owner) {
    try {
      promise.set_value(compute_brute_derived(spec, cap));
    } catch (...) {
      promise.set_exception(std::current_exception());
      std::lock_guard lock(g_brute_mutex);
      g_brute_cache.erase(key);
    }
  }
  return fut.get();
}

Rat wreath_derived_index_bound(const GroupSpec& spec) {
  const auto* w = std::get_if<GroupSpec::Wreath>(&spec.node());
  if (!w) throw DomainError("index bound needs a wreath product");
  Rat r(pow_nat(class_count(*w->base), w->p), abelianization_order(*w->base));
  r.canonicalize();
  return r;
}

SourcedCount derived_class_count_lower(const GroupSpec& spec, std::size_t cap) {
  Lower l = derived_lower(spec, cap);
  return {l.value, l.exact ? CountSource::Exact : CountSource::LowerBound, l.detail};
}

SourcedCount k_D(const BlockParams& params) {
  return {class_count(defect_group_spec(params)), CountSource::Exact, "class-count formula"};
}

SourcedCount k_D_prime(const BlockParams& params, std::size_t cap) {
  return derived_class_count_lower(defect_group_spec(params), cap);
}

GroupSpec sl_tilde_defect(unsigned a, unsigned w) { return defect_group_spec(BlockParams::gl3(a, 1, w)); }

SourcedCount sl_k_Dbar_lower(unsigned a, unsigned w) {
  const SLParams sp = sl_params(a, w);
  Rat r(class_count(sl_tilde_defect(a, w)), pow_ui(3, a + sp.m));
  r.canonicalize();
  return {ceil_rat(r), CountSource::LowerBound, "k(D~)/3^(a+m)"};
}

SourcedCount sl_k_Dbar_prime_lower(unsigned a, unsigned w, std::size_t cap) {
  const SLParams sp = sl_params(a, w);
  SourcedCount tilde = derived_class_count_lower(sl_tilde_defect(a, w), cap);
  Rat r(tilde.value, pow_ui(3, sp.m + sp.delta));
  r.canonicalize();
  std::string detail = "k(D~')/3^(m+delta), k(D~') " + tilde.detail;
  return {ceil_rat(r), CountSource::LowerBound, detail};
}

}  // namespace blockinv

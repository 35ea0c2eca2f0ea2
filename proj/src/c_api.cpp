#include "blockinv/blockinv.h"

#include "blockinv/block.hpp"
#include "blockinv/conjecture.hpp"
#include "blockinv/defect.hpp"
#include "blockinv/error.hpp"
#include "blockinv/grid.hpp"
#include "blockinv/group_spec.hpp"
#include "blockinv/ledger.hpp"
#include "blockinv/perm_group.hpp"
#include "blockinv/report.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace blockinv;

struct blockinv_params {
  BlockParams p;
};
struct blockinv_reports {
  std::vector<ConjectureReport> r;
};
struct blockinv_ledger {
  std::vector<InequalityReport> r;
};

namespace {

thread_local std::string g_error;
thread_local std::size_t g_offset = static_cast<std::size_t>(-1);

blockinv_status fail(blockinv_status s, const std::string& msg, std::size_t offset = static_cast<std::size_t>(-1)) {
  g_error = msg;
  g_offset = offset;
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
blockinv_status guard(F&& f) {
  g_error.clear();
  g_offset = static_cast<std::size_t>(-1);
  try {
    f();
    return BLOCKINV_OK;
  } catch (const ParseError& e) {
    return fail(BLOCKINV_PARSE, e.what(), e.offset());
  } catch (const Error& e) {
    return fail(static_cast<blockinv_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BLOCKINV_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BLOCKINV_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

std::size_t cap_or_default(std::size_t cap) { return cap ? cap : kDefaultBruteCap; }

}  // namespace

extern "C" {

const char* blockinv_last_error(void) { return g_error.c_str(); }

size_t blockinv_last_error_offset(void) { return g_offset; }

const char* blockinv_status_name(blockinv_status s) {
  switch (s) {
    case BLOCKINV_OK: return "ok";
    case BLOCKINV_INVALID_ARGUMENT: return "invalid_argument";
    case BLOCKINV_DOMAIN: return "domain";
    case BLOCKINV_CAP_EXCEEDED: return "cap_exceeded";
    case BLOCKINV_PARSE: return "parse";
    case BLOCKINV_UNKNOWN_LEMMA: return "unknown_lemma";
    case BLOCKINV_IO: return "io";
    case BLOCKINV_INTERNAL: return "internal";
  }
  return "unknown";
}

void blockinv_string_free(char* s) { std::free(s); }

blockinv_status blockinv_params_gl3(unsigned a, unsigned d, unsigned w, blockinv_params** out) {
  return guard([&] {
    need(out, "out");
    *out = new blockinv_params{BlockParams::gl3(a, d, w)};
  });
}

blockinv_status blockinv_params_gl2(blockinv_case c, unsigned a, unsigned w, blockinv_params** out) {
  return guard([&] {
    need(out, "out");
    if (c == BLOCKINV_CASE_1MOD4) *out = new blockinv_params{BlockParams::gl2_one_plus_four(a, w)};
    else if (c == BLOCKINV_CASE_3MOD4) *out = new blockinv_params{BlockParams::gl2_three_mod_four(a, w)};
    else throw Error(ErrorCode::InvalidArgument, "unknown case");
  });
}

void blockinv_params_free(blockinv_params* p) { delete p; }

blockinv_status blockinv_params_invariants(const blockinv_params* p, char** kB, char** k0B, char** lB) {
  return guard([&] {
    need(p, "params");
    const std::string a = to_string(k_B(p->p)), b = to_string(k0_B(p->p)), c = to_string(l_B_lower(p->p));
    if (kB) *kB = dup(a);
    if (k0B) *k0B = dup(b);
    if (lB) *lB = dup(c);
  });
}

blockinv_status blockinv_check(const blockinv_params* p, size_t cap, blockinv_reports** out) {
  return guard([&] {
    need(p, "params");
    need(out, "out");
    *out = new blockinv_reports{{check_conjecture(p->p, cap_or_default(cap))}};
  });
}

blockinv_status blockinv_check_sl(unsigned a, unsigned w, size_t cap, blockinv_reports** out) {
  return guard([&] {
    need(out, "out");
    *out = new blockinv_reports{{check_conjecture_sl(a, w, cap_or_default(cap))}};
  });
}

blockinv_status blockinv_sweep(const char* grid, unsigned workers, size_t cap, blockinv_reports** out) {
  return guard([&] {
    need(grid, "grid");
    need(out, "out");
    SweepGrid g = SweepGrid::from(load_grid(grid));
    if (cap) g.cap = cap;
    *out = new blockinv_reports{sweep(g, workers ? workers : 1)};
  });
}

size_t blockinv_reports_count(const blockinv_reports* r) { return r ? r->r.size() : 0; }

blockinv_status blockinv_reports_field(const blockinv_reports* r, size_t index, const char* field, char** out) {
  return guard([&] {
    need(r, "reports");
    need(field, "field");
    need(out, "out");
    if (index >= r->r.size()) throw Error(ErrorCode::InvalidArgument, "report index out of range");
    const ConjectureReport& x = r->r[index];
    const std::string f = field;
    std::string v;
    if (f == "kB") v = to_string(x.kB.value);
    else if (f == "k0B") v = to_string(x.k0B.value);
    else if (f == "lB") v = to_string(x.lB.value);
    else if (f == "kD") v = to_string(x.kD.value);
    else if (f == "kDprime") v = to_string(x.kDprime.value);
    else if (f == "c1") v = conj_verdict_name(x.c1);
    else if (f == "c2") v = conj_verdict_name(x.c2);
    else if (f == "label") v = x.label();
    else throw Error(ErrorCode::InvalidArgument, "unknown report field '" + f + "'");
    *out = dup(v);
  });
}

blockinv_status blockinv_reports_emit(const blockinv_reports* r, const char* format, char** out) {
  return guard([&] {
    need(r, "reports");
    need(format, "format");
    need(out, "out");
    *out = dup(emit_report(r->r, parse_report_format(format)));
  });
}

int blockinv_reports_exit_code(const blockinv_reports* r) { return r ? exit_code(r->r) : 1; }

void blockinv_reports_free(blockinv_reports* r) { delete r; }

blockinv_status blockinv_lemma_list(char** out) {
  return guard([&] {
    need(out, "out");
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& l : list_lemmas())
      arr.push_back({{"id", l.id}, {"statement", l.statement}, {"grid", l.default_grid}, {"exceptions", l.exceptions}});
    *out = dup(arr.dump(2) + "\n");
  });
}

blockinv_status blockinv_bounds_check(const char* lemma, const char* overrides, size_t cap, blockinv_ledger** out) {
  return guard([&] {
    need(lemma, "lemma");
    need(out, "out");
    const KeyValueGrid g = overrides && *overrides ? load_grid(overrides) : KeyValueGrid{};
    *out = new blockinv_ledger{check_lemma(lemma, g, cap_or_default(cap))};
  });
}

size_t blockinv_ledger_count(const blockinv_ledger* l) { return l ? l->r.size() : 0; }

blockinv_status blockinv_ledger_emit(const blockinv_ledger* l, const char* format, char** out) {
  return guard([&] {
    need(l, "ledger");
    need(format, "format");
    need(out, "out");
    *out = dup(emit_ledger(l->r, format));
  });
}

int blockinv_ledger_exit_code(const blockinv_ledger* l) { return l ? ledger_exit_code(l->r) : 1; }

void blockinv_ledger_free(blockinv_ledger* l) { delete l; }

blockinv_status blockinv_group_query(const char* spec, const char* op, size_t cap, char** out, int* exact) {
  return guard([&] {
    need(spec, "spec");
    need(op, "op");
    need(out, "out");
    const GroupSpec g = parse_group_spec(spec);
    const std::string o = op;
    const std::size_t c = cap_or_default(cap);
    bool is_exact = true;
    Nat v;
    if (o == "order") {
      v = group_order(g);
    } else if (o == "classes") {
      v = class_count(g);
    } else if (o == "brute-classes") {
      v = brute_class_count(realize(g, Nat(static_cast<unsigned long>(c))), c);
    } else if (o == "derived-classes") {
      const SourcedCount s = derived_class_count_lower(g, c);
      v = s.value;
      is_exact = s.source == CountSource::Exact;
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  "unknown op '" + o + "' (order, classes, brute-classes, derived-classes)");
    }
    *out = dup(to_string(v));
    if (exact) *exact = is_exact ? 1 : 0;
  });
}

}  // extern "C"

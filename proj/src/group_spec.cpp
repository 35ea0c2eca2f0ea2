#include "blockinv/group_spec.hpp"

#include "blockinv/error.hpp"

#include <cctype>
#include <limits>

namespace blockinv {

namespace {

bool valid_sd_order(unsigned long order) { return order >= 16 && (order & (order - 1)) == 0; }

}  // namespace

GroupSpec GroupSpec::cyclic(unsigned long n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  return GroupSpec(Cyclic{n});
}

GroupSpec GroupSpec::semidihedral(unsigned long order) {
  if (!valid_sd_order(order)) throw DomainError("semidihedral order must be 2^{t+2} with t >= 2");
  return GroupSpec(SemiDihedral{order});
}

GroupSpec GroupSpec::wreath(GroupSpec base, unsigned p) {
  if (p != 2 && p != 3) throw DomainError("wreath top group must be C_2 or C_3");
  return GroupSpec(Wreath{std::make_shared<const GroupSpec>(std::move(base)), p});
}

GroupSpec GroupSpec::product(std::vector<std::pair<GroupSpec, unsigned>> factors) {
  if (factors.empty()) throw DomainError("empty direct product");
  Product prod;
  for (auto& [spec, mult] : factors) {
    if (mult < 1) throw DomainError("multiplicity must be positive");
    prod.factors.push_back(Factor{std::make_shared<const GroupSpec>(std::move(spec)), mult});
  }
  return GroupSpec(std::move(prod));
}

std::string GroupSpec::to_string() const {
  struct Visitor {
    std::string operator()(const Cyclic& c) const { return "c(" + std::to_string(c.n) + ")"; }
    std::string operator()(const SemiDihedral& s) const { return "sd(" + std::to_string(s.order) + ")"; }
    std::string operator()(const Wreath& w) const {
      return "wr(" + w.base->to_string() + "," + std::to_string(w.p) + ")";
    }
    std::string operator()(const Product& p) const {
      std::string out = "prod(";
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out += ",";
        out += p.factors[i].spec->to_string();
        if (p.factors[i].multiplicity != 1) out += "^" + std::to_string(p.factors[i].multiplicity);
      }
      return out + ")";
    }
  };
  return std::visit(Visitor{}, node_);
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse_spec() {
    std::vector<std::pair<GroupSpec, unsigned>> terms;
    terms.emplace_back(parse_term(), 1);
    while (peek() == ',') {
      ++pos_;
      terms.emplace_back(parse_term(), 1);
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    if (terms.size() == 1) return std::move(terms.front().first);
    return GroupSpec::product(std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  unsigned long parse_int(std::size_t& at) {
    skip_ws();
    at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      unsigned digit = static_cast<unsigned>(text_[pos_] - '0');
      if (v > (std::numeric_limits<unsigned long>::max() - digit) / 10) fail_at("integer too large", at);
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  std::string parse_word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  GroupSpec parse_term() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string word = parse_word();
    std::size_t at = 0;
    if (word == "c") {
      expect('(');
      unsigned long n = parse_int(at);
      if (n < 1) fail_at("cyclic order must be positive", at);
      expect(')');
      return GroupSpec::cyclic(n);
    }
    if (word == "sd") {
      expect('(');
      unsigned long order = parse_int(at);
      if (!valid_sd_order(order)) fail_at("semidihedral order must be 2^{t+2} with t >= 2", at);
      expect(')');
      return GroupSpec::semidihedral(order);
    }
    if (word == "wr") {
      expect('(');
      GroupSpec base = parse_term();
      expect(',');
      unsigned long p = parse_int(at);
      if (p != 2 && p != 3) fail_at("wreath prime must be 2 or 3", at);
      expect(')');
      return GroupSpec::wreath(std::move(base), static_cast<unsigned>(p));
    }
    if (word == "prod") {
      expect('(');
      std::vector<std::pair<GroupSpec, unsigned>> factors;
      for (;;) {
        GroupSpec t = parse_term();
        unsigned long mult = 1;
        if (peek() == '^') {
          ++pos_;
          mult = parse_int(at);
          if (mult < 1 || mult > std::numeric_limits<unsigned>::max()) fail_at("multiplicity must be positive", at);
        }
        factors.emplace_back(std::move(t), static_cast<unsigned>(mult));
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
      expect(')');
      return GroupSpec::product(std::move(factors));
    }
    fail_at(word.empty() ? "expected a group term" : "unknown constructor '" + word + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse_spec(); }

Nat group_order(const GroupSpec& spec) {
  struct Visitor {
    Nat operator()(const GroupSpec::Cyclic& c) const { return Nat(c.n); }
    Nat operator()(const GroupSpec::SemiDihedral& s) const { return Nat(s.order); }
    Nat operator()(const GroupSpec::Wreath& w) const { return pow_nat(group_order(*w.base), w.p) * w.p; }
    Nat operator()(const GroupSpec::Product& p) const {
      Nat r = 1;
      for (const auto& f : p.factors) r *= pow_nat(group_order(*f.spec), f.multiplicity);
      return r;
    }
  };
  return std::visit(Visitor{}, spec.node());
}

Nat class_count(const GroupSpec& spec) {
  struct Visitor {
    Nat operator()(const GroupSpec::Cyclic& c) const { return Nat(c.n); }
    Nat operator()(const GroupSpec::SemiDihedral& s) const { return Nat(s.order / 4 + 3); }
    Nat operator()(const GroupSpec::Wreath& w) const {
      const Nat k = class_count(*w.base);
      Nat orbits = pow_nat(k, w.p) - k;
      if (!mpz_divisible_ui_p(orbits.get_mpz_t(), w.p)) throw InternalError("wreath class count not integral");
      return orbits / w.p + w.p * k;
    }
    Nat operator()(const GroupSpec::Product& p) const {
      Nat r = 1;
      for (const auto& f : p.factors) r *= pow_nat(class_count(*f.spec), f.multiplicity);
      return r;
    }
  };
  return std::visit(Visitor{}, spec.node());
}

Nat abelianization_order(const GroupSpec& spec) {
  struct Visitor {
    Nat operator()(const GroupSpec::Cyclic& c) const { return Nat(c.n); }
    Nat operator()(const GroupSpec::SemiDihedral&) const { return Nat(4); }
    Nat operator()(const GroupSpec::Wreath& w) const { return abelianization_order(*w.base) * w.p; }
    Nat operator()(const GroupSpec::Product& p) const {
      Nat r = 1;
      for (const auto& f : p.factors) r *= pow_nat(abelianization_order(*f.spec), f.multiplicity);
      return r;
    }
  };
  return std::visit(Visitor{}, spec.node());
}

GroupSpec iterated_wreath(unsigned ell, unsigned a, unsigned i) {
  GroupSpec g = GroupSpec::cyclic(pow_ui(ell, a).get_ui());
  for (unsigned k = 0; k < i; ++k) g = GroupSpec::wreath(std::move(g), ell);
  return g;
}

GroupSpec sylow_3mod4(unsigned atilde, unsigned i) {
  if (i == 0) return GroupSpec::cyclic(2);
  GroupSpec g = GroupSpec::semidihedral(pow_ui(2, atilde + 2).get_ui());
  for (unsigned k = 1; k < i; ++k) g = GroupSpec::wreath(std::move(g), 2);
  return g;
}

GroupSpec defect_factor(const BlockParams& params, unsigned i) {
  if (params.ell == 2 && params.case2 == Case2::ThreeMod4) return sylow_3mod4(*params.atilde, i);
  return iterated_wreath(params.ell, params.a, i);
}

GroupSpec defect_group_spec(const BlockParams& params) {
  params.validate();
  std::vector<std::pair<GroupSpec, unsigned>> factors;
  for (unsigned i = 0; i < params.digits.size(); ++i)
    if (params.digits[i] != 0) factors.emplace_back(defect_factor(params, i), params.digits[i]);
  if (factors.size() == 1 && factors.front().second == 1) return std::move(factors.front().first);
  return GroupSpec::product(std::move(factors));
}

}  // namespace blockinv

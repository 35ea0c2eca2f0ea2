#include "blockinv/bigint.hpp"

#include "blockinv/error.hpp"

#include <cctype>

namespace blockinv {

Nat pow_ui(unsigned long base, unsigned long exp) {
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Nat pow_nat(const Nat& base, unsigned long exp) {
  Nat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat pow_rat(const Rat& base, long exp) {
  if (exp >= 0) {
    Rat r(pow_nat(base.get_num(), static_cast<unsigned long>(exp)),
          pow_nat(base.get_den(), static_cast<unsigned long>(exp)));
    r.canonicalize();
    return r;
  }
  if (base == 0) throw DomainError("0 raised to a negative power");
  Rat r(pow_nat(base.get_den(), static_cast<unsigned long>(-exp)),
        pow_nat(base.get_num(), static_cast<unsigned long>(-exp)));
  r.canonicalize();
  return r;
}

unsigned long valuation(const Nat& n, unsigned long p) {
  if (n == 0) throw DomainError("valuation of zero");
  Nat m = abs(n);
  unsigned long e = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++e;
  }
  return e;
}

bool is_power_of(unsigned long n, unsigned long p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

Nat floor_rat(const Rat& x) {
  Nat r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Nat ceil_rat(const Rat& x) {
  Nat r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

std::string to_string(const Nat& n) { return n.get_str(); }

std::string to_string(const Rat& x) { return x.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return ParseError("not a rational number: '" + s + "'", 0); };
  if (s.empty()) throw bad();
  std::size_t pos = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  if (body.empty()) throw bad();
  Rat r;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    for (char c : num + den)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    Nat d(den);
    if (d == 0) throw bad();
    r = Rat(Nat(num), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw bad();
    for (char c : ip + fp)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    Nat num((ip.empty() ? "0" : ip) + fp);
    r = Rat(num, pow_ui(10, fp.size()));
  } else {
    for (char c : body)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    r = Rat(Nat(body));
  }
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

double approx(const Rat& x) { return x.get_d(); }

}  // namespace blockinv

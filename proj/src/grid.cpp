#include "blockinv/grid.hpp"

#include "blockinv/error.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace blockinv {

namespace {

constexpr std::size_t kMaxRangeItems = 1000000;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Trims [b, e) in place, keeping offsets meaningful.
void trim(std::string_view text, std::size_t& b, std::size_t& e) {
  while (b < e && is_space(text[b])) ++b;
  while (e > b && is_space(text[e - 1])) --e;
}

long parse_long(const KeyValueGrid::Item& item, std::string_view s, std::size_t rel) {
  long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError("expected an integer in '" + item.text + "'", item.offset + rel);
  return v;
}

}  // namespace

bool KeyValueGrid::has(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return true;
  return false;
}

const std::vector<KeyValueGrid::Item>& KeyValueGrid::items(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  throw DomainError("grid has no key '" + key + "'");
}

std::vector<std::string> KeyValueGrid::strings(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& it : items(key)) out.push_back(it.text);
  return out;
}

std::vector<long> KeyValueGrid::ints(const std::string& key) const {
  std::vector<long> out;
  for (const Item& it : items(key)) {
    std::string_view s = it.text;
    const auto dots = s.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_long(it, s, 0));
      continue;
    }
    std::string_view hi_part = s.substr(dots + 2);
    long step = 1;
    std::size_t step_rel = 0;
    if (auto colon = hi_part.find(':'); colon != std::string_view::npos) {
      step_rel = dots + 2 + colon + 1;
      step = parse_long(it, hi_part.substr(colon + 1), step_rel);
      hi_part = hi_part.substr(0, colon);
      if (step <= 0) throw ParseError("range step must be positive", it.offset + step_rel);
    }
    const long lo = parse_long(it, s.substr(0, dots), 0);
    const long hi = parse_long(it, hi_part, dots + 2);
    if (hi >= lo && static_cast<std::size_t>((hi - lo) / step) + 1 > kMaxRangeItems)
      throw ParseError("range too large", it.offset);
    for (long v = lo; v <= hi; v += step) out.push_back(v);
  }
  return out;
}

void KeyValueGrid::set(const std::string& key, std::vector<Item> items) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(items);
      return;
    }
  }
  entries_.emplace_back(key, std::move(items));
}

void KeyValueGrid::override_with(const KeyValueGrid& other) {
  for (const auto& [k, v] : other.entries_) set(k, v);
}

KeyValueGrid parse_grid(std::string_view text) {
  KeyValueGrid grid;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = pos;
    while (end < text.size() && text[end] != ';' && text[end] != '\n') ++end;
    std::size_t seg_end = end;
    if (auto hash = text.substr(pos, end - pos).find('#'); hash != std::string_view::npos) seg_end = pos + hash;
    std::size_t b = pos, e = seg_end;
    trim(text, b, e);
    if (b < e) {
      const auto eq = text.substr(b, e - b).find('=');
      if (eq == std::string_view::npos) throw ParseError("expected key=value", b);
      std::size_t kb = b, ke = b + eq;
      trim(text, kb, ke);
      if (kb == ke) throw ParseError("empty key", b);
      for (std::size_t i = kb; i < ke; ++i) {
        const char c = text[i];
        if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
          throw ParseError("bad character in key", i);
      }
      std::vector<KeyValueGrid::Item> items;
      std::size_t vb = b + eq + 1;
      while (vb <= e) {
        std::size_t ve = vb;
        while (ve < e && text[ve] != ',') ++ve;
        std::size_t ib = vb, ie = ve;
        trim(text, ib, ie);
        if (ib < ie) {
          items.push_back({std::string(text.substr(ib, ie - ib)), ib});
        } else if (ve < e) {
          throw ParseError("empty list item", vb);
        }
        vb = ve + 1;
      }
      grid.set(std::string(text.substr(kb, ke - kb)), std::move(items));
    }
    pos = end + 1;
  }
  return grid;
}

KeyValueGrid load_grid(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.find('=') == std::string::npos && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read grid file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_grid(ss.str());
  }
  if (!arg.empty() && arg.find('=') == std::string::npos)
    throw Error(ErrorCode::Io, "grid file '" + arg + "' not found");
  return parse_grid(arg);
}

const char* mode_name(Mode m) { return m == Mode::GL ? "gl" : "sl"; }

SweepGrid::SweepGrid() {
  for (unsigned v = 1; v <= 30; ++v) w.push_back(v);
}

namespace {

std::vector<unsigned> unsigned_list(const KeyValueGrid& g, const std::string& key, long min) {
  std::vector<unsigned> out;
  for (long v : g.ints(key)) {
    if (v < min || v > 1000000)
      throw DomainError("grid value " + key + "=" + std::to_string(v) + " out of range");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

}  // namespace

SweepGrid SweepGrid::from(const KeyValueGrid& g) {
  static const std::set<std::string> known{"mode", "ell", "case", "a", "atilde", "d", "w", "cap"};
  for (const auto& [k, v] : g.entries()) {
    if (!known.count(k)) {
      const std::size_t off = v.empty() ? 0 : v.front().offset;
      throw ParseError("unknown grid key '" + k + "'", off);
    }
  }
  SweepGrid s;
  if (g.has("mode")) {
    const auto& items = g.items("mode");
    if (items.size() != 1) throw DomainError("mode takes exactly one value");
    if (items[0].text == "gl") s.mode = Mode::GL;
    else if (items[0].text == "sl") s.mode = Mode::SL;
    else throw ParseError("mode must be gl or sl", items[0].offset);
  }
  if (g.has("ell")) {
    s.ells = unsigned_list(g, "ell", 2);
    for (unsigned e : s.ells)
      if (e != 2 && e != 3) throw DomainError("ell must be 2 or 3");
  }
  if (g.has("case")) {
    s.cases.clear();
    for (const auto& it : g.items("case")) {
      if (it.text == "1mod4") s.cases.push_back(Case2::OnePlusFour);
      else if (it.text == "3mod4") s.cases.push_back(Case2::ThreeMod4);
      else throw ParseError("case must be 1mod4 or 3mod4", it.offset);
    }
  }
  if (g.has("a")) s.a = unsigned_list(g, "a", 1);
  if (g.has("atilde")) s.atilde = unsigned_list(g, "atilde", 1);
  if (g.has("d")) {
    s.d = unsigned_list(g, "d", 1);
    for (unsigned v : s.d)
      if (v != 1 && v != 2) throw DomainError("d must be 1 or 2");
  }
  if (g.has("w")) s.w = unsigned_list(g, "w", 1);
  if (g.has("cap")) {
    auto caps = g.ints("cap");
    if (caps.size() != 1 || caps[0] < 1) throw DomainError("cap takes one positive value");
    s.cap = static_cast<std::size_t>(caps[0]);
  }
  if (s.mode == Mode::SL) {
    if (g.has("ell") && (s.ells.size() != 1 || s.ells[0] != 3)) throw DomainError("mode sl requires ell=3");
    s.ells = {3};
    s.d = {1};
  }
  return s;
}

std::vector<GridPoint> SweepGrid::points() const {
  std::vector<GridPoint> out;
  for (unsigned ell : ells) {
    if (ell == 3) {
      for (unsigned av : a)
        for (unsigned dv : (mode == Mode::SL ? std::vector<unsigned>{1} : d))
          for (unsigned wv : w) out.push_back({mode, BlockParams::gl3(av, dv, wv)});
      continue;
    }
    for (Case2 c : cases) {
      const auto& firsts = c == Case2::OnePlusFour ? a : atilde;
      for (unsigned v : firsts) {
        if (v < 2) continue;
        for (unsigned wv : w)
          out.push_back({mode, c == Case2::OnePlusFour ? BlockParams::gl2_one_plus_four(v, wv)
                                                       : BlockParams::gl2_three_mod_four(v, wv)});
      }
    }
  }
  return out;
}

}  // namespace blockinv

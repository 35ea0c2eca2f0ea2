#pragma once

#include "blockinv/block.hpp"
#include "blockinv/perm_group.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace blockinv {

/// Flat key=value grid text. Entries are separated by ';' or newlines, '#'
/// starts a comment. A value is a comma list of items; integer items may be
/// ranges "2..6" or stepped ranges "6..60:3". An empty value is an empty list.
///
///   mode=gl; ell=3; a=1..3; d=1,2; w=1..30
class KeyValueGrid {
 public:
  struct Item {
    std::string text;
    std::size_t offset = 0;  // byte offset in the source text
  };

  bool has(const std::string& key) const;
  const std::vector<Item>& items(const std::string& key) const;
  std::vector<std::string> strings(const std::string& key) const;
  /// Expanded integers in the order written. Throws ParseError on bad items.
  std::vector<long> ints(const std::string& key) const;

  void set(const std::string& key, std::vector<Item> items);
  /// Keys of other replace keys of this grid.
  void override_with(const KeyValueGrid& other);

  const std::vector<std::pair<std::string, std::vector<Item>>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, std::vector<Item>>> entries_;
};

KeyValueGrid parse_grid(std::string_view text);

/// Reads the file if arg names a readable regular file, else parses arg.
KeyValueGrid load_grid(const std::string& arg);

enum class Mode { GL, SL };

const char* mode_name(Mode m);

/// One verifier input. SL points carry gl3(a, 1, w).
struct GridPoint {
  Mode mode = Mode::GL;
  BlockParams params;
};

/// Sweep ranges. Defaults: mode=gl, ell=3, case=1mod4,3mod4, a=1..3,
/// atilde=2..6, d=1,2, w=1..30, cap=200000. For ell=2 the 1mod4 points take
/// a from "a" (values < 2 dropped) and the 3mod4 points take "atilde"
/// (values < 2 dropped). SL forces ell=3, d=1.
struct SweepGrid {
  Mode mode = Mode::GL;
  std::vector<unsigned> ells{3};
  std::vector<Case2> cases{Case2::OnePlusFour, Case2::ThreeMod4};
  std::vector<unsigned> a{1, 2, 3};
  std::vector<unsigned> atilde{2, 3, 4, 5, 6};
  std::vector<unsigned> d{1, 2};
  std::vector<unsigned> w;
  std::size_t cap = kDefaultBruteCap;

  SweepGrid();
  static SweepGrid from(const KeyValueGrid& g);

  /// Deterministic order: ell, case, a or atilde, d, w.
  std::vector<GridPoint> points() const;
};

}  // namespace blockinv

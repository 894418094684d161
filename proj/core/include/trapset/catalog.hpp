#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "trapset/canonical.hpp"

namespace trapset {

/// One (d_l, g, a, b) class of elementary trapping sets; g is the Tanner girth.
struct ClassSpec {
  int dl = 0;
  int g = 0;
  int a = 0;
  int b = 0;

  /// Throws InvalidArgument unless d_l in [3,6], g in {6,8}, a in [4,10], b in [0,10].
  void validate() const;
  /// Normal-graph edge count (a·d_l − b)/2; only meaningful when the parity works out.
  int edge_count() const noexcept { return (a * dl - b) / 2; }
  std::string to_string() const;

  friend auto operator<=>(const ClassSpec&, const ClassSpec&) = default;
};

/// LSS_x (x = Tanner cycle length), NA, or not yet computed.
class LssLabel {
 public:
  enum class State { kUnset, kCycle, kNa };

  LssLabel() = default;
  static LssLabel unset() { return {}; }
  static LssLabel na() { return LssLabel(State::kNa, 0); }
  static LssLabel cycle(int tanner_length) { return LssLabel(State::kCycle, tanner_length); }

  State state() const noexcept { return state_; }
  bool is_set() const noexcept { return state_ != State::kUnset; }
  bool is_na() const noexcept { return state_ == State::kNa; }
  bool is_cycle() const noexcept { return state_ == State::kCycle; }
  int length() const noexcept { return length_; }

  /// "8", "NA" or "-".
  std::string to_string() const;
  /// "g+2", "g", "NA" or "-" relative to girth g.
  std::string to_relative_string(int g) const;
  /// Inverse of to_string. Throws InvalidArgument.
  static LssLabel parse(std::string_view text);

  /// Unset < cycle lengths ascending < NA.
  friend bool operator==(const LssLabel&, const LssLabel&) = default;
  friend std::strong_ordering operator<=>(const LssLabel& x, const LssLabel& y) noexcept {
    if (auto c = x.state_ <=> y.state_; c != 0) return c;
    return x.length_ <=> y.length_;
  }

 private:
  LssLabel(State s, int len) : state_(s), length_(len) {}
  State state_ = State::kUnset;
  int length_ = 0;
};

using LabelHistogram = std::map<LssLabel, std::size_t>;

/// "{6:8, 8:3}" (absolute lengths); "{}" when empty.
std::string histogram_to_string(const LabelHistogram& h);
/// "{g:8, g+2:3}".
std::string histogram_to_relative_string(const LabelHistogram& h, int g);

struct CatalogEntry {
  CanonicalForm form;
  ClassSpec spec;
  bool absorbing = false;
  LssLabel lss;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

struct Catalog {
  ClassSpec spec;
  /// Sorted by form, pairwise non-isomorphic.
  std::vector<CatalogEntry> entries;

  std::size_t absorbing_count() const;
  bool fully_labeled() const;
  LabelHistogram histogram(bool absorbing_only = false) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

/// "# dl g a b" header, then one "hexform\tabsorbing\tlss" line per entry.
std::string write_catalog(const Catalog& c);
/// Throws ParseError naming the offending line.
Catalog parse_catalog(std::string_view text);

}  // namespace trapset

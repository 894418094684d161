#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "trapset/catalog.hpp"

namespace trapset {

/// Published label multiplicities of one (d_l, g, a, b) class. An empty
/// histogram is a "-" (no structure). `as` is absent for d_l = 3, where every
/// ETS in T is absorbing and no separate row exists.
struct ReferenceCell {
  LabelHistogram ts;
  std::optional<LabelHistogram> as;

  std::size_t ts_total() const;
  std::size_t as_total() const;
  /// The absorbing row, falling back to the TS row when there is none.
  const LabelHistogram& as_or_ts() const { return as ? *as : ts; }
};

class ReferenceTables {
 public:
  /// The shipped tables; verifies the pinned checksum on first use.
  static const ReferenceTables& builtin();

  /// Parses the line format "dl g a b TS AS" (offsets relative to g).
  static ReferenceTables parse(std::string_view text);

  /// d_l in [3,6], g in {6,8}, a in [4,9], b in [0, max_b(d_l)].
  static bool in_scope(const ClassSpec& spec);
  static int max_b(int dl);
  static constexpr int kMinA = 4;
  static constexpr int kMaxA = 9;

  /// Throws InvalidArgument when the spec is outside the table scope.
  const ReferenceCell& lookup(const ClassSpec& spec) const;

  /// FNV-1a 64 of the shipped data.
  static std::uint64_t checksum();
  static std::uint64_t pinned_checksum();
  static std::string_view raw_data();

 private:
  std::map<ClassSpec, ReferenceCell> cells_;
  ReferenceCell empty_{{}, LabelHistogram{}};
  ReferenceCell empty_d3_;
};

}  // namespace trapset

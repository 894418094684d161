#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trapset/catalog.hpp"
#include "trapset/tanner_graph.hpp"

namespace trapset {

enum class Guarantee {
  /// Every structure of the class is LSS_x with x <= max_len.
  kGuaranteed,
  /// Some structures are covered, others are NA or need longer cycles.
  kGuaranteedPartial,
  /// The class has structures but none is covered at this max_len.
  kNotGuaranteed,
  /// The class has no structure at all.
  kNonexistent,
  /// No reference data applies (girth, degree or (a,b) outside the tables).
  kUncharacterized,
};

const char* to_string(Guarantee g) noexcept;

/// Verdict from the reference TS row of the class. Throws InvalidArgument
/// when the spec is outside the table scope.
Guarantee coverage_query(const ClassSpec& spec, int max_len);

struct ClassTally {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t count = 0;
  Guarantee guarantee = Guarantee::kUncharacterized;
};

inline constexpr std::size_t kMaxSearchSize = 12;

struct SearchParams {
  std::size_t k = 8;
  int max_len = 0;
  int threads = 1;
  std::string code_id;
};

struct SearchReport {
  std::string code_id;
  int dl = 0;
  int g = 0;
  std::size_t k = 0;
  int max_len = 0;
  std::size_t seed_count = 0;
  /// Sorted by (a, b). Contains every class that was found plus every
  /// in-scope class with a <= k that has reference structures.
  std::vector<ClassTally> classes;
  /// Sorted by (a, b, members).
  std::vector<TrappingSetRecord> sets;
};

/// Enumerates cycles up to max_len, keeps those whose variable sets are ETSs
/// in T and of size <= k, and expands them with the layered search. Throws
/// InvalidArgument for k outside [1, 12] or max_len outside [girth, girth + 12]
/// (any max_len >= 6 is accepted for acyclic graphs).
SearchReport find_etss(const TannerGraph& g, const SearchParams& params);

/// JSON: { code, dl, g, k, max_len, classes: [{a, b, count, guarantee}], sets?: [...] }.
std::string report_to_json(const SearchReport& r, bool include_sets);
std::string report_to_text(const SearchReport& r);

}  // namespace trapset

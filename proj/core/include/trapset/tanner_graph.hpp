#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trapset {

using VarId = std::uint32_t;
using CheckId = std::uint32_t;

/// Girth of a graph without cycles.
inline constexpr int kAcyclic = std::numeric_limits<int>::max();

inline constexpr int kMinLeftDegree = 3;
inline constexpr int kMinGirth = 6;

class TannerGraph;

/// A set of variable nodes of one TannerGraph. The sorted member list is the
/// identity used for ordering and deduplication.
class VarSet {
 public:
  VarSet() = default;

  std::span<const VarId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::uint64_t graph_id() const noexcept { return graph_id_; }
  bool contains(VarId v) const noexcept;

  /// Copy of this set with `v` added (no-op when already present).
  VarSet with(VarId v) const;

  /// "3,4,6" style rendering.
  std::string to_string() const;

  friend bool operator==(const VarSet& x, const VarSet& y) noexcept {
    return x.members_ == y.members_;
  }
  friend std::strong_ordering operator<=>(const VarSet& x, const VarSet& y) noexcept {
    return x.members_ <=> y.members_;
  }

 private:
  friend class TannerGraph;
  VarSet(std::uint64_t graph_id, std::vector<VarId> sorted_members)
      : graph_id_(graph_id), members_(std::move(sorted_members)) {}

  std::uint64_t graph_id_ = 0;
  std::vector<VarId> members_;
};

/// Left-regular bipartite graph of a concrete code. Immutable once built; the
/// constructor enforces left-regularity with d_l >= 3, the absence of parallel
/// edges, and girth >= 6.
class TannerGraph {
 public:
  /// `var_adjacency[v]` lists the check nodes of variable node v.
  /// Throws InvalidArgument on any invariant violation.
  TannerGraph(std::size_t num_checks, std::vector<std::vector<CheckId>> var_adjacency);

  std::size_t num_vars() const noexcept { return var_adj_.size(); }
  std::size_t num_checks() const noexcept { return chk_adj_.size(); }
  int left_degree() const noexcept { return left_degree_; }
  int max_check_degree() const noexcept { return max_check_degree_; }
  /// Cached shortest cycle length, or kAcyclic.
  int girth() const noexcept { return girth_; }
  std::size_t edge_count() const noexcept { return num_vars() * static_cast<std::size_t>(left_degree_); }

  std::span<const CheckId> checks_of(VarId v) const { return var_adj_.at(v); }
  std::span<const VarId> vars_of(CheckId c) const { return chk_adj_.at(c); }

  /// Identifier stamped on every VarSet made from this graph (shared by copies).
  std::uint64_t id() const noexcept { return id_; }

  /// Sorts and deduplicates `members`; throws InvalidArgument for ids
  /// outside [0, num_vars).
  VarSet make_set(std::vector<VarId> members) const;
  VarSet all_vars() const;

  /// Throws InvalidArgument unless `s` is non-empty and bound to this graph.
  void check_bound(const VarSet& s) const;

 private:
  std::vector<std::vector<CheckId>> var_adj_;
  std::vector<std::vector<VarId>> chk_adj_;
  int left_degree_ = 0;
  int max_check_degree_ = 0;
  int girth_ = kAcyclic;
  std::uint64_t id_ = 0;
};

/// Shortest cycle length by breadth-first search from every variable node.
int compute_girth(const TannerGraph& g);
int compute_girth(std::size_t num_checks, const std::vector<std::vector<CheckId>>& var_adjacency);

/// Partition of the check neighbours of a set by degree parity in G(S).
struct GammaSplit {
  std::vector<CheckId> odd;
  std::vector<CheckId> even;
};

GammaSplit gamma_split(const TannerGraph& g, const VarSet& s);

struct TrappingSetRecord {
  VarSet members;
  std::size_t a = 0;
  std::size_t b = 0;
  bool elementary = false;
  bool in_t = false;
  bool absorbing = false;

  bool is_ets_in_t() const noexcept { return elementary && in_t; }
};

/// (a,b) class and the elementary / membership-in-T / absorbing predicates.
TrappingSetRecord classify(const TannerGraph& g, const VarSet& s);

/// Parses the alist interchange format. Errors are ParseError with the
/// offending 1-based line number.
TannerGraph parse_alist(std::string_view text);
TannerGraph read_alist_file(const std::filesystem::path& path);

/// Emits alist with zero padding to the maximum degree on every list.
std::string to_alist(const TannerGraph& g);

}  // namespace trapset

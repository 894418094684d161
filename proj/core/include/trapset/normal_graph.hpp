#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trapset/tanner_graph.hpp"

namespace trapset {

inline constexpr int kMaxNormalNodes = 32;

struct NormalEdge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const NormalEdge&, const NormalEdge&) = default;
};

/// Simple undirected graph on the variable nodes of an elementary trapping
/// set: degree-2 checks become edges, degree-1 checks are dropped.
class NormalGraph {
 public:
  NormalGraph() = default;
  /// Edges are normalised to u < v and sorted. Throws InvalidArgument on
  /// self-loops, repeated pairs, or endpoints outside [0, n).
  NormalGraph(int n, std::vector<NormalEdge> edges);

  static NormalGraph from_adjacency(int n, std::span<const std::uint32_t> adjacency);

  int node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<NormalEdge>& edges() const noexcept { return edges_; }

  std::uint32_t neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const;
  bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1u; }
  int min_degree() const;
  int max_degree() const;
  bool is_connected() const;
  /// Shortest cycle length in edges of this graph (not the Tanner length);
  /// kAcyclic when the graph is a forest.
  int girth() const;

  /// Graph with node v renamed to perm[v].
  NormalGraph relabeled(std::span<const int> perm) const;

  friend bool operator==(const NormalGraph& x, const NormalGraph& y) noexcept {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  int n_ = 0;
  std::vector<NormalEdge> edges_;
  std::vector<std::uint32_t> adj_;
};

/// Normal graph of an elementary set in T; node i is the i-th smallest member.
/// Throws InvalidArgument when the set is not elementary or not in T.
NormalGraph to_normal(const TannerGraph& g, const VarSet& s);

/// Inverse of to_normal: each edge becomes a degree-2 check (in edge order),
/// then every node v receives left_degree - deg(v) degree-1 checks (in node
/// order). Throws InvalidArgument when a node degree exceeds left_degree.
TannerGraph from_normal(const NormalGraph& n, int left_degree);

/// Number of unsatisfied checks of the set the graph represents:
/// sum over nodes of (left_degree - deg(v)).
int normal_b(const NormalGraph& n, int left_degree);

struct NormalCycle {
  /// Length in the Tanner graph: twice the number of normal edges.
  int tanner_length = 0;
  std::uint32_t node_mask = 0;
  /// Nodes in traversal order, starting from the smallest.
  std::vector<int> nodes;
};

/// Every simple cycle of the graph exactly once, optionally restricted to
/// cycles of at most `max_normal_length` edges. Ordered by length, then by
/// traversal sequence.
std::vector<NormalCycle> normal_cycles(const NormalGraph& n, int max_normal_length = kMaxNormalNodes);

/// Cycles of exactly `normal_length` edges.
std::vector<NormalCycle> normal_cycles_of_length(const NormalGraph& n, int normal_length);

/// Multiset of Tanner cycle lengths, with the cycles themselves per length.
struct CycleCensus {
  std::map<int, std::vector<NormalCycle>> by_length;
  std::vector<int> lengths() const;
  std::size_t count(int tanner_length) const;
};

CycleCensus normal_cycle_lengths(const NormalGraph& n);

/// "n m" followed by m lines "i j" with i < j.
std::string to_text(const NormalGraph& n);
NormalGraph parse_normal_text(std::string_view text);

/// graph6 interchange format (nauty / networkx compatible).
std::string to_graph6(const NormalGraph& n);
/// Throws ParseError on malformed input.
NormalGraph from_graph6(std::string_view text);

}  // namespace trapset

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trapset/catalog.hpp"
#include "trapset/detail/canon_kernel.hpp"

namespace trapset {

struct Feasibility {
  bool feasible = true;
  /// Empty when feasible ("possibly feasible"); otherwise the reason.
  std::string reason;
};

/// Counting arguments only: parity of a·d_l − b, b ≤ a(d_l − 2) (every node
/// keeps at least two satisfied checks), and the simple-graph edge cap.
Feasibility class_feasible(const ClassSpec& spec);

/// Family of connected simple graphs used by the generator.
struct GraphFamily {
  int nodes = 0;
  int min_degree = 2;
  int max_degree = 0;
  /// Shortest allowed cycle length in normal edges: 3 for Tanner girth 6,
  /// 4 for girth 8, 5 for girth 10.
  int min_girth = 3;
};

struct GenerationStats {
  /// Non-isomorphic intermediate graphs kept per edge count.
  std::vector<std::size_t> level_sizes;
  std::size_t canonicalizations = 0;
};

/// Every connected graph of the family (one per isomorphism class) for each
/// requested edge count, as canonical forms in sorted order. Deterministic for
/// any thread count.
std::map<int, std::vector<CanonicalForm>> generate_connected_graphs(const GraphFamily& family,
                                                                   const std::vector<int>& edge_counts,
                                                                   int threads = 1,
                                                                   GenerationStats* stats = nullptr);

/// Non-isomorphic normal structures of the class, annotated with the
/// absorbing flag; LSS labels are left unset.
Catalog generate_structures(const ClassSpec& spec, int threads = 1);

/// All feasible b for one (d_l, g, a) from a single generation pass.
std::map<int, Catalog> generate_structures_batch(int dl, int g, int a, const std::vector<int>& bs,
                                                 int threads = 1);

/// Sets the absorbing flag: every node degree strictly above d_l / 2.
CatalogEntry annotate_absorbing(CatalogEntry entry);

/// Empty string when the entry decodes to a connected simple graph with the
/// class's node and edge counts, degrees in [2, d_l] and the girth constraint;
/// otherwise a description of the first violation.
std::string validate_entry(const CatalogEntry& entry);

}  // namespace trapset

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "trapset/catalog.hpp"
#include "trapset/tanner_graph.hpp"

namespace trapset {

/// Layers of the expansion: by_size[i] holds the deduplicated, sorted ETSs in
/// T of size i that were reached.
struct ExpansionFrontier {
  std::map<std::size_t, std::vector<VarSet>> by_size;

  std::size_t total() const;
  bool contains(const VarSet& s) const;
  /// All sets, ordered by size then members.
  std::vector<VarSet> all() const;
};

struct ExpansionStats {
  /// Distinct outside variables reached through unsatisfied checks.
  std::size_t candidates = 0;
  /// b·(d_r − 1): the most candidates the scan can reach.
  std::size_t candidate_bound = 0;
};

/// Every ETS in T of size |s| + 1 that contains s: s plus a variable with at
/// least two checks in the odd part of Γ(s) and none in the even part.
/// Throws InvalidArgument unless s is an ETS in T.
std::vector<VarSet> one_expansion(const TannerGraph& g, const VarSet& s, ExpansionStats* stats = nullptr);

/// Grows the seeds layer by layer, smallest size first, up to size k. Seeds
/// larger than k are ignored. Throws InvalidSeed (with the seed's index) when
/// a seed is not an ETS in T.
ExpansionFrontier expand_to_k(const TannerGraph& g, const std::vector<VarSet>& seeds, std::size_t k,
                              int threads = 1);

/// Whether `target` is reachable from `seed` through a chain of ETSs in T.
bool is_layered_superset(const TannerGraph& g, const VarSet& seed, const VarSet& target);

inline constexpr int kMaxCycleOffset = 12;

/// Distinct variable sets of the cycles of each even length in [girth, max_len].
/// Acyclic graphs give an empty map. Throws InvalidArgument when max_len is
/// below the girth or above girth + kMaxCycleOffset.
std::map<int, std::vector<VarSet>> enumerate_tanner_cycles(const TannerGraph& g, int max_len);

/// Smallest Tanner cycle length x such that the structure is a layered
/// superset of one of its length-x cycles; NA when no cycle length works.
LssLabel classify_lss(const CatalogEntry& entry);

/// Whether the structure is a layered superset of some cycle of Tanner length x.
bool is_lss_of_cycle_length(const CatalogEntry& entry, int x);

/// Labels every entry (only unset ones unless `force`).
void label_catalog(Catalog& catalog, bool force = false, int threads = 1);

/// "a\tb\tmembers" per set, sorted by size then members.
std::string frontier_to_text(const TannerGraph& g, const ExpansionFrontier& f);

}  // namespace trapset

#include "trapset/structgen.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>

#include "trapset/error.hpp"

namespace trapset {

using detail::Code128;
using detail::kMaxCanonNodes;

Feasibility class_feasible(const ClassSpec& spec) {
  const int a = spec.a;
  const int dl = spec.dl;
  const int b = spec.b;
  if (b > a * (dl - 2)) {
    return {false, "b = " + std::to_string(b) + " > a(d_l - 2) = " + std::to_string(a * (dl - 2)) +
                       ": too many unsatisfied checks for every node to keep two satisfied ones"};
  }
  if ((a * dl - b) % 2) {
    return {false, "a*d_l - b = " + std::to_string(a * dl - b) + " is odd (parity)"};
  }
  const int edges = (a * dl - b) / 2;
  if (edges > a * (a - 1) / 2) {
    return {false, std::to_string(edges) + " satisfied checks exceed the simple-graph cap a(a-1)/2 = " +
                       std::to_string(a * (a - 1) / 2)};
  }
  return {};
}

namespace {

struct PairTable {
  explicit PairTable(int n) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
    }
  }
  std::vector<std::array<std::uint8_t, 2>> pairs;
};

using Adjacency = std::array<std::uint16_t, kMaxCanonNodes>;

Adjacency decode_code(Code128 code, const PairTable& table) {
  Adjacency adj{};
  for (std::size_t t = 0; t < table.pairs.size(); ++t) {
    if ((code >> (127 - t)) & 1u) {
      const auto [i, j] = table.pairs[t];
      adj[i] |= static_cast<std::uint16_t>(1u << j);
      adj[j] |= static_cast<std::uint16_t>(1u << i);
    }
  }
  return adj;
}

bool connected(const Adjacency& adj, int n) {
  if (n == 0) return true;
  std::uint32_t seen = 1u, frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

class LevelExpander {
 public:
  LevelExpander(const GraphFamily& family, int max_edges, const PairTable& table)
      : f_(family), max_edges_(max_edges), table_(table) {}

  // Canonical codes of all admissible one-edge extensions of `parents`.
  std::vector<Code128> expand(const std::vector<Code128>& parents, int level, std::size_t& canon_calls) const {
    std::vector<Code128> out;
    const int n = f_.nodes;
    const int remaining_after = max_edges_ - (level + 1);
    for (Code128 parent : parents) {
      Adjacency adj = decode_code(parent, table_);
      std::array<int, kMaxCanonNodes> deg{};
      int deficit = 0;
      for (int v = 0; v < n; ++v) {
        deg[v] = std::popcount(adj[v]);
        deficit += std::max(0, f_.min_degree - deg[v]);
      }
      for (int i = 0; i < n; ++i) {
        if (deg[i] >= f_.max_degree) continue;
        // Nodes within min_girth - 2 steps of i; joining any of them would
        // close a cycle shorter than min_girth.
        std::uint32_t near = 1u << i;
        for (int step = 0; step < f_.min_girth - 2; ++step) {
          std::uint32_t grown = near;
          for (std::uint32_t m = near; m; m &= m - 1) grown |= adj[std::countr_zero(m)];
          near = grown;
        }
        for (int j = i + 1; j < n; ++j) {
          if (deg[j] >= f_.max_degree || ((near >> j) & 1u)) continue;
          const int new_deficit = deficit - (deg[i] < f_.min_degree) - (deg[j] < f_.min_degree);
          if (new_deficit > 2 * remaining_after) continue;
          adj[i] |= static_cast<std::uint16_t>(1u << j);
          adj[j] |= static_cast<std::uint16_t>(1u << i);
          out.push_back(detail::canonical_code(n, adj.data()).code);
          ++canon_calls;
          adj[i] &= static_cast<std::uint16_t>(~(1u << j));
          adj[j] &= static_cast<std::uint16_t>(~(1u << i));
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  const GraphFamily& f_;
  int max_edges_;
  const PairTable& table_;
};

std::vector<Code128> expand_level(const LevelExpander& expander, const std::vector<Code128>& parents, int level,
                                  int threads, std::size_t& canon_calls) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), std::max<std::size_t>(parents.size(), 1));
  if (workers <= 1) return expander.expand(parents, level, canon_calls);

  std::vector<std::vector<Code128>> partial(workers);
  std::vector<std::size_t> calls(workers, 0);
  std::vector<std::thread> pool;
  const std::size_t chunk = (parents.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = std::min(parents.size(), w * chunk);
      const std::size_t hi = std::min(parents.size(), lo + chunk);
      std::vector<Code128> slice(parents.begin() + static_cast<std::ptrdiff_t>(lo),
                                 parents.begin() + static_cast<std::ptrdiff_t>(hi));
      partial[w] = expander.expand(slice, level, calls[w]);
    });
  }
  for (auto& t : pool) t.join();
  std::vector<Code128> merged;
  for (std::size_t w = 0; w < workers; ++w) {
    merged.insert(merged.end(), partial[w].begin(), partial[w].end());
    canon_calls += calls[w];
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

}  // namespace

std::map<int, std::vector<CanonicalForm>> generate_connected_graphs(const GraphFamily& family,
                                                                   const std::vector<int>& edge_counts, int threads,
                                                                   GenerationStats* stats) {
  if (family.nodes < 1 || family.nodes > kMaxCanonNodes) {
    throw InvalidArgument("generator node count " + std::to_string(family.nodes) + " outside [1, " +
                          std::to_string(kMaxCanonNodes) + "]");
  }
  if (family.min_girth < 3) throw InvalidArgument("minimum normal girth must be at least 3");
  std::map<int, std::vector<CanonicalForm>> result;
  for (int e : edge_counts) result[e];
  if (edge_counts.empty()) return result;

  const int n = family.nodes;
  const PairTable table(n);
  const int max_edges = std::min(*std::max_element(edge_counts.begin(), edge_counts.end()),
                                 static_cast<int>(table.pairs.size()));
  LevelExpander expander(family, max_edges, table);

  auto harvest = [&](int edges, const std::vector<Code128>& level) {
    auto it = result.find(edges);
    if (it == result.end()) return;
    for (Code128 code : level) {
      const Adjacency adj = decode_code(code, table);
      bool ok = connected(adj, n);
      for (int v = 0; v < n && ok; ++v) ok = std::popcount(adj[v]) >= family.min_degree;
      if (ok) it->second.push_back(detail::form_from_code(n, code));
    }
  };

  std::vector<Code128> level{Code128{0}};
  std::size_t canon_calls = 0;
  if (stats) stats->level_sizes.assign(1, 1);
  harvest(0, level);
  for (int k = 0; k < max_edges && !level.empty(); ++k) {
    level = expand_level(expander, level, k, threads, canon_calls);
    if (stats) stats->level_sizes.push_back(level.size());
    harvest(k + 1, level);
  }
  if (stats) stats->canonicalizations = canon_calls;
  for (auto& [e, forms] : result) std::sort(forms.begin(), forms.end());
  return result;
}

CatalogEntry annotate_absorbing(CatalogEntry entry) {
  const NormalGraph n = entry.form.decode();
  bool absorbing = n.node_count() > 0;
  for (int v = 0; v < n.node_count(); ++v) {
    if (2 * n.degree(v) <= entry.spec.dl) absorbing = false;
  }
  entry.absorbing = absorbing;
  return entry;
}

std::map<int, Catalog> generate_structures_batch(int dl, int g, int a, const std::vector<int>& bs, int threads) {
  std::map<int, Catalog> out;
  std::vector<int> edge_counts;
  for (int b : bs) {
    ClassSpec spec{dl, g, a, b};
    spec.validate();
    out[b].spec = spec;
    if (class_feasible(spec).feasible) edge_counts.push_back(spec.edge_count());
  }
  if (edge_counts.empty()) return out;
  GraphFamily family{a, 2, dl, g == 8 ? 4 : 3};
  const auto graphs = generate_connected_graphs(family, edge_counts, threads);
  for (auto& [b, catalog] : out) {
    if (!class_feasible(catalog.spec).feasible) continue;
    for (const auto& form : graphs.at(catalog.spec.edge_count())) {
      CatalogEntry entry{form, catalog.spec, false, LssLabel::unset()};
      catalog.entries.push_back(annotate_absorbing(std::move(entry)));
    }
  }
  return out;
}

Catalog generate_structures(const ClassSpec& spec, int threads) {
  return generate_structures_batch(spec.dl, spec.g, spec.a, {spec.b}, threads).at(spec.b);
}

std::string validate_entry(const CatalogEntry& entry) {
  const ClassSpec& spec = entry.spec;
  const NormalGraph n = entry.form.decode();
  if (n.node_count() != spec.a) return "node count " + std::to_string(n.node_count()) + " != a";
  if ((spec.a * spec.dl - spec.b) % 2 || static_cast<int>(n.edge_count()) != spec.edge_count()) {
    return "edge count " + std::to_string(n.edge_count()) + " != (a*d_l - b)/2";
  }
  if (!n.is_connected()) return "disconnected";
  if (n.min_degree() < 2) return "node degree below 2";
  if (n.max_degree() > spec.dl) return "node degree above d_l";
  if (spec.g >= 8 && n.girth() < spec.g / 2) return "normal girth " + std::to_string(n.girth()) + " too small";
  return {};
}

}  // namespace trapset

#include "trapset/lss.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <sstream>
#include <thread>

#include "trapset/error.hpp"
#include "trapset/normal_graph.hpp"

namespace trapset {

std::size_t ExpansionFrontier::total() const {
  std::size_t n = 0;
  for (const auto& [size, sets] : by_size) n += sets.size();
  return n;
}

bool ExpansionFrontier::contains(const VarSet& s) const {
  auto it = by_size.find(s.size());
  return it != by_size.end() && std::binary_search(it->second.begin(), it->second.end(), s);
}

std::vector<VarSet> ExpansionFrontier::all() const {
  std::vector<VarSet> out;
  for (const auto& [size, sets] : by_size) out.insert(out.end(), sets.begin(), sets.end());
  return out;
}

std::vector<VarSet> one_expansion(const TannerGraph& g, const VarSet& s, ExpansionStats* stats) {
  const auto rec = classify(g, s);
  if (!rec.is_ets_in_t()) {
    throw InvalidArgument("one_expansion: {" + s.to_string() + "} is not an elementary trapping set in T");
  }
  const GammaSplit split = gamma_split(g, s);

  std::vector<VarId> reached;
  for (CheckId c : split.odd) {
    for (VarId v : g.vars_of(c)) {
      if (!s.contains(v)) reached.push_back(v);
    }
  }
  std::sort(reached.begin(), reached.end());

  std::vector<VarSet> out;
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < reached.size();) {
    std::size_t j = i;
    while (j < reached.size() && reached[j] == reached[i]) ++j;
    ++distinct;
    const VarId v = reached[i];
    // Each hit comes from a different odd check (no parallel edges).
    if (j - i >= 2) {
      bool touches_even = false;
      for (CheckId c : g.checks_of(v)) {
        if (std::binary_search(split.even.begin(), split.even.end(), c)) {
          touches_even = true;
          break;
        }
      }
      if (!touches_even) out.push_back(s.with(v));
    }
    i = j;
  }
  if (stats) {
    stats->candidates = distinct;
    stats->candidate_bound = split.odd.size() * static_cast<std::size_t>(std::max(g.max_check_degree() - 1, 0));
  }
  return out;
}

namespace {

void sort_unique(std::vector<VarSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<VarSet> expand_layer(const TannerGraph& g, const std::vector<VarSet>& layer, int threads) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), std::max<std::size_t>(layer.size(), 1));
  std::vector<std::vector<VarSet>> partial(workers);
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < layer.size(); i += workers) {
      auto grown = one_expansion(g, layer[i]);
      partial[w].insert(partial[w].end(), std::make_move_iterator(grown.begin()),
                        std::make_move_iterator(grown.end()));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<VarSet> merged;
  for (auto& p : partial) merged.insert(merged.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  sort_unique(merged);
  return merged;
}

}  // namespace

ExpansionFrontier expand_to_k(const TannerGraph& g, const std::vector<VarSet>& seeds, std::size_t k, int threads) {
  ExpansionFrontier f;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const VarSet& seed = seeds[i];
    bool ok = false;
    try {
      ok = classify(g, seed).is_ets_in_t();
    } catch (const InvalidArgument& e) {
      throw InvalidSeed(i, "seed " + std::to_string(i) + ": " + e.what());
    }
    if (!ok) {
      throw InvalidSeed(i, "seed " + std::to_string(i) + " {" + seed.to_string() +
                               "} is not an elementary trapping set in T");
    }
    if (seed.size() <= k) f.by_size[seed.size()].push_back(seed);
  }
  if (f.by_size.empty()) return f;
  for (auto& [size, sets] : f.by_size) sort_unique(sets);

  for (std::size_t size = f.by_size.begin()->first; size < k; ++size) {
    auto it = f.by_size.find(size);
    if (it == f.by_size.end()) continue;
    auto grown = expand_layer(g, it->second, threads);
    if (grown.empty()) continue;
    auto& next = f.by_size[size + 1];
    next.insert(next.end(), std::make_move_iterator(grown.begin()), std::make_move_iterator(grown.end()));
    sort_unique(next);
  }
  return f;
}

bool is_layered_superset(const TannerGraph& g, const VarSet& seed, const VarSet& target) {
  if (!std::includes(target.members().begin(), target.members().end(), seed.members().begin(),
                     seed.members().end())) {
    return false;
  }
  if (!classify(g, seed).is_ets_in_t()) return false;
  // Only sets inside the target can lie on a chain to it.
  std::vector<VarSet> layer{seed};
  while (!layer.empty() && layer.front().size() < target.size()) {
    std::vector<VarSet> next;
    for (const auto& s : layer) {
      for (auto& t : one_expansion(g, s)) {
        if (std::includes(target.members().begin(), target.members().end(), t.members().begin(),
                          t.members().end())) {
          next.push_back(std::move(t));
        }
      }
    }
    sort_unique(next);
    layer = std::move(next);
  }
  return std::binary_search(layer.begin(), layer.end(), target);
}

namespace {

class TannerCycleWalker {
 public:
  TannerCycleWalker(const TannerGraph& g, int max_len) : g_(g), max_len_(max_len) {
    n_ = g.num_vars();
    on_var_.assign(n_, 0);
    on_chk_.assign(g.num_checks(), 0);
    dist_.assign(n_ + g.num_checks(), kFar);
  }

  std::map<int, std::vector<VarSet>> run() {
    for (VarId s = 0; s < n_; ++s) {
      start_ = s;
      distances_from(s);
      path_.assign(1, s);
      on_var_[s] = 1;
      walk(s);
      on_var_[s] = 0;
    }
    std::map<int, std::vector<VarSet>> out;
    for (auto& [len, sets] : found_) {
      auto& dst = out[len];
      for (auto& members : sets) dst.push_back(g_.make_set(members));
      sort_unique(dst);
    }
    return out;
  }

 private:
  static constexpr int kFar = 1 << 20;

  // BFS distances to the start inside the subgraph of variables >= start.
  void distances_from(VarId s) {
    std::fill(dist_.begin(), dist_.end(), kFar);
    std::queue<std::size_t> q;
    dist_[s] = 0;
    q.push(s);
    const int horizon = max_len_;
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      if (dist_[x] >= horizon) continue;
      if (x < n_) {
        for (CheckId c : g_.checks_of(static_cast<VarId>(x))) {
          if (dist_[n_ + c] == kFar) {
            dist_[n_ + c] = dist_[x] + 1;
            q.push(n_ + c);
          }
        }
      } else {
        for (VarId v : g_.vars_of(static_cast<CheckId>(x - n_))) {
          if (v >= s && dist_[v] == kFar) {
            dist_[v] = dist_[x] + 1;
            q.push(v);
          }
        }
      }
    }
  }

  void walk(VarId u) {
    const int m = static_cast<int>(path_.size());
    for (CheckId c : g_.checks_of(u)) {
      if (on_chk_[c]) continue;
      if (m == 1) first_ = c;
      on_chk_[c] = 1;
      const auto vars = g_.vars_of(c);
      if (m >= 2 && c > first_ && std::binary_search(vars.begin(), vars.end(), start_)) {
        std::vector<VarId> members = path_;
        std::sort(members.begin(), members.end());
        found_[2 * m].insert(std::move(members));
      }
      for (VarId w : vars) {
        if (w <= start_ || on_var_[w]) continue;
        if (2 * m + dist_[w] > max_len_) continue;
        on_var_[w] = 1;
        path_.push_back(w);
        walk(w);
        path_.pop_back();
        on_var_[w] = 0;
      }
      on_chk_[c] = 0;
    }
  }

  const TannerGraph& g_;
  int max_len_;
  std::size_t n_ = 0;
  VarId start_ = 0;
  CheckId first_ = 0;
  std::vector<char> on_var_;
  std::vector<char> on_chk_;
  std::vector<int> dist_;
  std::vector<VarId> path_;
  std::map<int, std::set<std::vector<VarId>>> found_;
};

}  // namespace

std::map<int, std::vector<VarSet>> enumerate_tanner_cycles(const TannerGraph& g, int max_len) {
  if (g.girth() == kAcyclic) return {};
  if (max_len < g.girth()) {
    throw InvalidArgument("max cycle length " + std::to_string(max_len) + " is below the girth " +
                          std::to_string(g.girth()));
  }
  if (max_len > g.girth() + kMaxCycleOffset) {
    throw InvalidArgument("max cycle length " + std::to_string(max_len) + " exceeds girth + " +
                          std::to_string(kMaxCycleOffset));
  }
  return TannerCycleWalker(g, max_len).run();
}

namespace {

// Variable sets of the structure's cycles keyed by Tanner length; node i of
// the normal graph is variable i of from_normal.
std::map<int, std::vector<VarSet>> structure_cycles(const NormalGraph& n, const TannerGraph& t) {
  std::map<int, std::set<std::uint32_t>> masks;
  for (const auto& c : normal_cycles(n)) masks[c.tanner_length].insert(c.node_mask);
  std::map<int, std::vector<VarSet>> out;
  for (const auto& [len, set] : masks) {
    auto& dst = out[len];
    for (std::uint32_t m : set) {
      std::vector<VarId> members;
      for (; m; m &= m - 1) members.push_back(static_cast<VarId>(std::countr_zero(m)));
      dst.push_back(t.make_set(std::move(members)));
    }
  }
  return out;
}

bool reaches_whole(const TannerGraph& t, const std::vector<VarSet>& seeds) {
  return expand_to_k(t, seeds, t.num_vars()).contains(t.all_vars());
}

}  // namespace

LssLabel classify_lss(const CatalogEntry& entry) {
  const NormalGraph n = entry.form.decode();
  const TannerGraph t = from_normal(n, entry.spec.dl);
  for (const auto& [len, seeds] : structure_cycles(n, t)) {
    if (reaches_whole(t, seeds)) return LssLabel::cycle(len);
  }
  return LssLabel::na();
}

bool is_lss_of_cycle_length(const CatalogEntry& entry, int x) {
  const NormalGraph n = entry.form.decode();
  const TannerGraph t = from_normal(n, entry.spec.dl);
  const auto cycles = structure_cycles(n, t);
  auto it = cycles.find(x);
  return it != cycles.end() && reaches_whole(t, it->second);
}

void label_catalog(Catalog& catalog, bool force, int threads) {
  auto& entries = catalog.entries;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), std::max<std::size_t>(entries.size(), 1));
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < entries.size(); i += workers) {
      if (force || !entries[i].lss.is_set()) entries[i].lss = classify_lss(entries[i]);
    }
  };
  if (workers == 1) {
    work(0);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  for (auto& t : pool) t.join();
}

std::string frontier_to_text(const TannerGraph& g, const ExpansionFrontier& f) {
  std::ostringstream os;
  for (const auto& s : f.all()) {
    const auto rec = classify(g, s);
    os << rec.a << '\t' << rec.b << '\t' << s.to_string() << '\n';
  }
  return os.str();
}

}  // namespace trapset

#include "trapset/normal_graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <queue>
#include <sstream>

#include "trapset/error.hpp"

namespace trapset {

NormalGraph::NormalGraph(int n, std::vector<NormalEdge> edges)
    : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxNormalNodes) {
    throw InvalidArgument("normal graph node count " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxNormalNodes) + "]");
  }
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range");
    }
    if (e.u == e.v) throw InvalidArgument("self-loop at node " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end()) {
    throw InvalidArgument("repeated edge {" + std::to_string(it->u) + "," + std::to_string(it->v) + "}");
  }
  for (const auto& e : edges_) {
    adj_[e.u] |= 1u << e.v;
    adj_[e.v] |= 1u << e.u;
  }
}

NormalGraph NormalGraph::from_adjacency(int n, std::span<const std::uint32_t> adjacency) {
  std::vector<NormalEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((adjacency[u] >> v) & 1u) edges.push_back({u, v});
    }
  }
  return NormalGraph(n, std::move(edges));
}

int NormalGraph::degree(int v) const { return std::popcount(neighbors(v)); }

int NormalGraph::min_degree() const {
  int d = n_ ? kMaxNormalNodes : 0;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int NormalGraph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool NormalGraph::is_connected() const {
  if (n_ == 0) return true;
  std::uint32_t seen = 1u, frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n_;
}

int NormalGraph::girth() const {
  int best = kAcyclic;
  std::vector<int> dist(static_cast<std::size_t>(n_));
  std::vector<int> parent(static_cast<std::size_t>(n_));
  for (int root = 0; root < n_; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[root] = 0;
    parent[root] = -1;
    q.push(root);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (std::uint32_t m = adj_[x]; m; m &= m - 1) {
        const int y = std::countr_zero(m);
        if (y == parent[x]) continue;
        if (dist[y] >= 0) {
          best = std::min(best, dist[x] + dist[y] + 1);
        } else {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        }
      }
    }
  }
  return best;
}

NormalGraph NormalGraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidArgument("permutation size mismatch");
  std::vector<NormalEdge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back({perm[e.u], perm[e.v]});
  return NormalGraph(n_, std::move(edges));
}

NormalGraph to_normal(const TannerGraph& g, const VarSet& s) {
  const auto rec = classify(g, s);
  if (!rec.elementary) throw InvalidArgument("to_normal: set {" + s.to_string() + "} is not elementary");
  if (!rec.in_t) throw InvalidArgument("to_normal: set {" + s.to_string() + "} is not in T (disconnected or under-satisfied)");
  if (static_cast<int>(s.size()) > kMaxNormalNodes) throw InvalidArgument("to_normal: set too large");

  std::vector<std::pair<CheckId, int>> inc;
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (CheckId c : g.checks_of(members[i])) inc.emplace_back(c, static_cast<int>(i));
  }
  std::sort(inc.begin(), inc.end());
  std::vector<NormalEdge> edges;
  for (std::size_t i = 0; i + 1 < inc.size(); ++i) {
    if (inc[i].first == inc[i + 1].first) edges.push_back({inc[i].second, inc[i + 1].second});
  }
  return NormalGraph(static_cast<int>(s.size()), std::move(edges));
}

TannerGraph from_normal(const NormalGraph& n, int left_degree) {
  const int nodes = n.node_count();
  std::vector<std::vector<CheckId>> var_adj(static_cast<std::size_t>(nodes));
  CheckId next = 0;
  for (const auto& e : n.edges()) {
    var_adj[e.u].push_back(next);
    var_adj[e.v].push_back(next);
    ++next;
  }
  for (int v = 0; v < nodes; ++v) {
    const int d = n.degree(v);
    if (d > left_degree) {
      throw InvalidArgument("from_normal: node " + std::to_string(v) + " has degree " + std::to_string(d) +
                            " > left degree " + std::to_string(left_degree));
    }
    for (int i = d; i < left_degree; ++i) var_adj[v].push_back(next++);
  }
  return TannerGraph(next, std::move(var_adj));
}

int normal_b(const NormalGraph& n, int left_degree) {
  return n.node_count() * left_degree - 2 * static_cast<int>(n.edge_count());
}

namespace {

class CycleWalker {
 public:
  CycleWalker(const NormalGraph& g, int min_len, int max_len, std::vector<NormalCycle>& out)
      : g_(g), min_len_(min_len), max_len_(max_len), out_(out) {}

  void run() {
    for (int s = 0; s < g_.node_count(); ++s) {
      start_ = s;
      path_.assign(1, s);
      extend(s, 1u << s);
    }
  }

 private:
  void extend(int u, std::uint32_t on_path) {
    const int len = static_cast<int>(path_.size());
    const std::uint32_t nbrs = g_.neighbors(u);
    // Close the cycle; each cycle is walked in both directions, keep the one
    // whose second node is smaller than its last.
    if (len >= 3 && len >= min_len_ && ((nbrs >> start_) & 1u) && path_[1] < path_.back()) {
      out_.push_back({2 * len, on_path, path_});
    }
    if (len >= max_len_) return;
    const std::uint32_t higher = ~((2u << start_) - 1u);
    for (std::uint32_t m = nbrs & higher & ~on_path; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      path_.push_back(w);
      extend(w, on_path | (1u << w));
      path_.pop_back();
    }
  }

  const NormalGraph& g_;
  int min_len_;
  int max_len_;
  std::vector<NormalCycle>& out_;
  int start_ = 0;
  std::vector<int> path_;
};

void sort_cycles(std::vector<NormalCycle>& cycles) {
  std::sort(cycles.begin(), cycles.end(), [](const NormalCycle& x, const NormalCycle& y) {
    if (x.tanner_length != y.tanner_length) return x.tanner_length < y.tanner_length;
    return x.nodes < y.nodes;
  });
}

}  // namespace

std::vector<NormalCycle> normal_cycles(const NormalGraph& n, int max_normal_length) {
  std::vector<NormalCycle> out;
  CycleWalker(n, 3, max_normal_length, out).run();
  sort_cycles(out);
  return out;
}

std::vector<NormalCycle> normal_cycles_of_length(const NormalGraph& n, int normal_length) {
  std::vector<NormalCycle> out;
  if (normal_length < 3) return out;
  CycleWalker(n, normal_length, normal_length, out).run();
  sort_cycles(out);
  return out;
}

std::vector<int> CycleCensus::lengths() const {
  std::vector<int> out;
  for (const auto& [len, cycles] : by_length) out.insert(out.end(), cycles.size(), len);
  return out;
}

std::size_t CycleCensus::count(int tanner_length) const {
  auto it = by_length.find(tanner_length);
  return it == by_length.end() ? 0 : it->second.size();
}

CycleCensus normal_cycle_lengths(const NormalGraph& n) {
  CycleCensus census;
  for (auto& c : normal_cycles(n)) census.by_length[c.tanner_length].push_back(std::move(c));
  return census;
}

std::string to_text(const NormalGraph& n) {
  std::ostringstream os;
  os << n.node_count() << ' ' << n.edge_count() << '\n';
  for (const auto& e : n.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

NormalGraph parse_normal_text(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<int>>> lines;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::vector<int> values;
    std::string tok;
    while (ls >> tok) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(ParseError::Kind::kBadToken, number, "bad integer '" + tok + "'");
      }
      values.push_back(v);
    }
    if (!values.empty()) lines.emplace_back(number, std::move(values));
  }
  if (lines.empty()) throw ParseError(ParseError::Kind::kTruncated, 1, "empty normal-graph text");
  const auto& header = lines.front();
  if (header.second.size() != 2) throw ParseError(ParseError::Kind::kMalformedHeader, header.first, "expected 'n m'");
  const int n = header.second[0];
  const int m = header.second[1];
  if (static_cast<int>(lines.size()) - 1 < m) {
    throw ParseError(ParseError::Kind::kTruncated, number + 1, "expected " + std::to_string(m) + " edge lines");
  }
  std::vector<NormalEdge> edges;
  for (int k = 1; k <= m; ++k) {
    const auto& [ln, vals] = lines[k];
    if (vals.size() != 2 || vals[0] < 0 || vals[0] >= vals[1] || vals[1] >= n) {
      throw ParseError(ParseError::Kind::kMalformedRecord, ln, "expected 'i j' with 0 <= i < j < n");
    }
    edges.push_back({vals[0], vals[1]});
  }
  try {
    return NormalGraph(n, std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(ParseError::Kind::kMalformedRecord, 0, e.what());
  }
}

}  // namespace trapset

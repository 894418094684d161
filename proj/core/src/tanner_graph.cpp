#include "trapset/tanner_graph.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <queue>
#include <sstream>
#include <utility>

#include "trapset/error.hpp"

namespace trapset {

namespace {

std::atomic<std::uint64_t> next_graph_id{1};

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

bool VarSet::contains(VarId v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VarSet VarSet::with(VarId v) const {
  VarSet out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
  if (it == out.members_.end() || *it != v) out.members_.insert(it, v);
  return out;
}

std::string VarSet::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ',';
    os << members_[i];
  }
  return os.str();
}

TannerGraph::TannerGraph(std::size_t num_checks, std::vector<std::vector<CheckId>> var_adjacency)
    : var_adj_(std::move(var_adjacency)), chk_adj_(num_checks), id_(next_graph_id++) {
  if (var_adj_.empty()) throw InvalidArgument("Tanner graph has no variable nodes");
  left_degree_ = static_cast<int>(var_adj_.front().size());
  for (std::size_t v = 0; v < var_adj_.size(); ++v) {
    auto& checks = var_adj_[v];
    if (static_cast<int>(checks.size()) != left_degree_) {
      throw InvalidArgument("variable node " + std::to_string(v) + " has degree " +
                            std::to_string(checks.size()) + ", expected " +
                            std::to_string(left_degree_) + " (graph must be left-regular)");
    }
    std::sort(checks.begin(), checks.end());
    if (std::adjacent_find(checks.begin(), checks.end()) != checks.end()) {
      throw InvalidArgument("parallel edge at variable node " + std::to_string(v));
    }
    for (CheckId c : checks) {
      if (c >= num_checks) {
        throw InvalidArgument("check id " + std::to_string(c) + " out of range at variable node " +
                              std::to_string(v));
      }
      chk_adj_[c].push_back(static_cast<VarId>(v));
    }
  }
  if (left_degree_ < kMinLeftDegree) {
    throw InvalidArgument("left degree " + std::to_string(left_degree_) + " is below the minimum " +
                          std::to_string(kMinLeftDegree));
  }
  for (const auto& vars : chk_adj_) {
    max_check_degree_ = std::max(max_check_degree_, static_cast<int>(vars.size()));
  }
  girth_ = compute_girth(num_checks, var_adj_);
  if (girth_ < kMinGirth) {
    throw InvalidArgument("girth " + std::to_string(girth_) + " is below the minimum " +
                          std::to_string(kMinGirth));
  }
}

VarSet TannerGraph::make_set(std::vector<VarId> members) const {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.back() >= num_vars()) {
    throw InvalidArgument("variable id " + std::to_string(members.back()) + " out of range [0, " +
                          std::to_string(num_vars()) + ")");
  }
  return VarSet(id_, std::move(members));
}

VarSet TannerGraph::all_vars() const {
  std::vector<VarId> ids(num_vars());
  std::iota(ids.begin(), ids.end(), VarId{0});
  return VarSet(id_, std::move(ids));
}

void TannerGraph::check_bound(const VarSet& s) const {
  if (s.empty()) throw InvalidArgument("variable set is empty");
  if (s.graph_id() != id_) throw InvalidArgument("variable set is not bound to this Tanner graph");
  if (s.members().back() >= num_vars()) throw InvalidArgument("variable set member out of range");
}

int compute_girth(std::size_t num_checks, const std::vector<std::vector<CheckId>>& var_adjacency) {
  const std::size_t n = var_adjacency.size();
  std::vector<std::vector<VarId>> chk(num_checks);
  for (std::size_t v = 0; v < n; ++v) {
    for (CheckId c : var_adjacency[v]) chk.at(c).push_back(static_cast<VarId>(v));
  }
  // Node ids: variables [0, n), checks [n, n + m).
  const std::size_t total = n + num_checks;
  std::vector<int> dist(total, -1);
  std::vector<std::size_t> parent(total);
  std::vector<std::size_t> touched;
  int best = kAcyclic;
  for (std::size_t root = 0; root < n; ++root) {
    for (std::size_t x : touched) dist[x] = -1;
    touched.clear();
    std::queue<std::size_t> q;
    dist[root] = 0;
    parent[root] = root;
    touched.push_back(root);
    q.push(root);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      if (best != kAcyclic && 2 * dist[x] + 1 >= best) break;
      auto visit = [&](std::size_t y) {
        if (y == parent[x]) return;
        if (dist[y] >= 0) {
          best = std::min(best, dist[x] + dist[y] + 1);
          return;
        }
        dist[y] = dist[x] + 1;
        parent[y] = x;
        touched.push_back(y);
        q.push(y);
      };
      if (x < n) {
        for (CheckId c : var_adjacency[x]) visit(n + c);
      } else {
        for (VarId v : chk[x - n]) visit(v);
      }
    }
  }
  return best;
}

int compute_girth(const TannerGraph& g) {
  std::vector<std::vector<CheckId>> adj(g.num_vars());
  for (VarId v = 0; v < g.num_vars(); ++v) {
    auto checks = g.checks_of(v);
    adj[v].assign(checks.begin(), checks.end());
  }
  return compute_girth(g.num_checks(), adj);
}

namespace {

// (check, member index) incidences of G(S), sorted by check.
std::vector<std::pair<CheckId, std::size_t>> incidences(const TannerGraph& g, const VarSet& s) {
  std::vector<std::pair<CheckId, std::size_t>> inc;
  inc.reserve(s.size() * static_cast<std::size_t>(g.left_degree()));
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (CheckId c : g.checks_of(members[i])) inc.emplace_back(c, i);
  }
  std::sort(inc.begin(), inc.end());
  return inc;
}

}  // namespace

GammaSplit gamma_split(const TannerGraph& g, const VarSet& s) {
  g.check_bound(s);
  const auto inc = incidences(g, s);
  GammaSplit split;
  for (std::size_t i = 0; i < inc.size();) {
    std::size_t j = i;
    while (j < inc.size() && inc[j].first == inc[i].first) ++j;
    ((j - i) % 2 ? split.odd : split.even).push_back(inc[i].first);
    i = j;
  }
  return split;
}

TrappingSetRecord classify(const TannerGraph& g, const VarSet& s) {
  g.check_bound(s);
  const auto inc = incidences(g, s);
  const std::size_t a = s.size();

  TrappingSetRecord rec;
  rec.members = s;
  rec.a = a;
  rec.elementary = true;

  std::vector<int> satisfied(a, 0);
  std::vector<int> unsatisfied(a, 0);
  DisjointSets components(a);
  std::size_t merges = 0;
  for (std::size_t i = 0; i < inc.size();) {
    std::size_t j = i;
    while (j < inc.size() && inc[j].first == inc[i].first) ++j;
    const std::size_t degree = j - i;
    if (degree > 2) rec.elementary = false;
    const bool odd = degree % 2 == 1;
    if (odd) ++rec.b;
    for (std::size_t t = i; t < j; ++t) {
      (odd ? unsatisfied : satisfied)[inc[t].second]++;
      if (t > i && components.unite(inc[i].second, inc[t].second)) ++merges;
    }
    i = j;
  }
  const bool connected = merges + 1 == a;
  rec.in_t = connected;
  rec.absorbing = true;
  for (std::size_t i = 0; i < a; ++i) {
    if (satisfied[i] < 2) rec.in_t = false;
    if (satisfied[i] <= unsatisfied[i]) rec.absorbing = false;
  }
  return rec;
}

}  // namespace trapset

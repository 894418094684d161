#include "trapset/random_code.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "trapset/error.hpp"

namespace trapset {

namespace {

// Bounded draw that does not depend on the standard library's distributions,
// so outputs are identical across implementations.
std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

void shuffle(std::vector<CheckId>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

struct Builder {
  Builder(const RandomCodeParams& p, std::mt19937_64& rng)
      : p_(p), rng_(rng), var_adj_(p.num_vars), chk_adj_(p.num_checks) {}

  bool shares_check(VarId v, CheckId c) const {
    // Adding (v, c) closes a 4-cycle if some neighbour of c already shares a check with v.
    for (VarId w : chk_adj_[c]) {
      for (CheckId d : var_adj_[w]) {
        if (std::find(var_adj_[v].begin(), var_adj_[v].end(), d) != var_adj_[v].end()) return true;
      }
    }
    return false;
  }

  bool connect(VarId v, CheckId c) {
    if (std::find(var_adj_[v].begin(), var_adj_[v].end(), c) != var_adj_[v].end()) return false;
    var_adj_[v].push_back(c);
    chk_adj_[c].push_back(v);
    return true;
  }

  // Candidate checks of lowest degree among `pool`, one picked at random.
  CheckId lowest_degree(const std::vector<CheckId>& pool) {
    std::size_t best = SIZE_MAX;
    std::vector<CheckId> ties;
    for (CheckId c : pool) {
      if (chk_adj_[c].size() < best) {
        best = chk_adj_[c].size();
        ties.clear();
      }
      if (chk_adj_[c].size() == best) ties.push_back(c);
    }
    return ties[draw(rng_, ties.size())];
  }

  bool build_shuffled() {
    for (VarId v = 0; v < p_.num_vars; ++v) {
      std::vector<CheckId> order(p_.num_checks);
      std::iota(order.begin(), order.end(), CheckId{0});
      shuffle(order, rng_);
      std::stable_sort(order.begin(), order.end(),
                       [&](CheckId x, CheckId y) { return chk_adj_[x].size() < chk_adj_[y].size(); });
      for (CheckId c : order) {
        if (static_cast<int>(var_adj_[v].size()) == p_.dl) break;
        if (!shares_check(v, c)) connect(v, c);
      }
      if (static_cast<int>(var_adj_[v].size()) != p_.dl) return false;
    }
    return true;
  }

  bool build_peg() {
    const std::size_t n = p_.num_vars;
    for (VarId v = 0; v < n; ++v) {
      for (int e = 0; e < p_.dl; ++e) {
        std::vector<CheckId> pool;
        if (e == 0) {
          pool.resize(p_.num_checks);
          std::iota(pool.begin(), pool.end(), CheckId{0});
        } else {
          // Breadth-first layers of checks reachable from v.
          std::vector<int> seen(p_.num_checks, 0);
          std::vector<CheckId> layer(var_adj_[v].begin(), var_adj_[v].end());
          for (CheckId c : layer) seen[c] = 1;
          std::vector<char> var_seen(n, 0);
          var_seen[v] = 1;
          std::size_t reached = layer.size();
          while (true) {
            std::vector<CheckId> next;
            for (CheckId c : layer) {
              for (VarId w : chk_adj_[c]) {
                if (var_seen[w]) continue;
                var_seen[w] = 1;
                for (CheckId d : var_adj_[w]) {
                  if (!seen[d]) {
                    seen[d] = 1;
                    next.push_back(d);
                  }
                }
              }
            }
            if (next.empty() || reached + next.size() == p_.num_checks) {
              if (reached + next.size() < p_.num_checks) {
                for (CheckId c = 0; c < p_.num_checks; ++c) if (!seen[c]) pool.push_back(c);
              } else {
                pool = next.empty() ? layer : next;
              }
              break;
            }
            reached += next.size();
            layer = std::move(next);
          }
          pool.erase(std::remove_if(pool.begin(), pool.end(),
                                    [&](CheckId c) {
                                      return std::find(var_adj_[v].begin(), var_adj_[v].end(), c) !=
                                             var_adj_[v].end();
                                    }),
                     pool.end());
        }
        if (pool.empty()) return false;
        connect(v, lowest_degree(pool));
      }
    }
    return true;
  }

  const RandomCodeParams& p_;
  std::mt19937_64& rng_;
  std::vector<std::vector<CheckId>> var_adj_;
  std::vector<std::vector<VarId>> chk_adj_;
};

}  // namespace

TannerGraph random_code(const RandomCodeParams& params) {
  if (params.num_vars == 0 || params.num_checks < static_cast<std::size_t>(params.dl) || params.dl < kMinLeftDegree) {
    throw InvalidArgument("random_code: need num_vars > 0, d_l >= 3 and at least d_l checks");
  }
  std::mt19937_64 rng(params.seed);
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    Builder b(params, rng);
    const bool ok = params.mode == RandomCodeParams::Mode::kPeg ? b.build_peg() : b.build_shuffled();
    if (!ok) continue;
    if (compute_girth(params.num_checks, b.var_adj_) < std::max(params.min_girth, kMinGirth)) continue;
    return TannerGraph(params.num_checks, std::move(b.var_adj_));
  }
  throw Error("random_code: no code with girth >= " + std::to_string(params.min_girth) + " after " +
              std::to_string(params.max_attempts) + " attempts");
}

}  // namespace trapset

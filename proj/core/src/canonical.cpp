#include "trapset/canonical.hpp"

#include <algorithm>
#include <bit>

#include "trapset/detail/canon_kernel.hpp"
#include "trapset/error.hpp"

namespace trapset {

namespace detail {

namespace {

// Ordered partition of the vertex set: lab holds vertices by position and bit
// p of `starts` marks the first position of a cell.
struct Partition {
  std::array<std::uint8_t, kMaxCanonNodes> lab{};
  std::uint32_t starts = 0;
};

class Canonizer {
 public:
  Canonizer(int n, const std::uint16_t* adj) : n_(n), adj_(adj) {}

  CanonResult run() {
    Partition p;
    for (int i = 0; i < n_; ++i) p.lab[i] = static_cast<std::uint8_t>(i);
    p.starts = n_ ? 1u : 0u;
    search(p);
    return best_;
  }

 private:
  int cell_end(std::uint32_t starts, int s) const {
    const std::uint32_t later = starts & ~((2u << s) - 1u);
    return later ? std::countr_zero(later) : n_;
  }

  // Splits cells by neighbour counts into every cell until stable. Subcells
  // are ordered by their count vectors, so the result commutes with relabeling.
  void refine(Partition& p) const {
    const std::uint32_t all = (n_ >= 32) ? ~0u : ((1u << n_) - 1u);
    bool changed = true;
    while (changed && p.starts != all) {
      changed = false;
      std::array<std::uint16_t, kMaxCanonNodes> masks{};
      int cells = 0;
      for (int s = 0; s < n_; s = cell_end(p.starts, s)) {
        std::uint16_t m = 0;
        for (int i = s, e = cell_end(p.starts, s); i < e; ++i) m |= static_cast<std::uint16_t>(1u << p.lab[i]);
        masks[cells++] = m;
      }
      std::uint32_t new_starts = p.starts;
      for (int s = 0; s < n_;) {
        const int e = cell_end(p.starts, s);
        if (e - s > 1) {
          std::array<std::uint64_t, kMaxCanonNodes> key{};
          for (int i = s; i < e; ++i) {
            std::uint64_t k = 0;
            const std::uint16_t row = adj_[p.lab[i]];
            for (int c = 0; c < cells; ++c) {
              k |= static_cast<std::uint64_t>(std::popcount(static_cast<std::uint16_t>(row & masks[c]))) << (4 * c);
            }
            key[i] = k;
          }
          // Insertion sort of positions [s, e) by key (cells are tiny).
          for (int i = s + 1; i < e; ++i) {
            const std::uint64_t k = key[i];
            const std::uint8_t v = p.lab[i];
            int j = i;
            while (j > s && key[j - 1] > k) {
              key[j] = key[j - 1];
              p.lab[j] = p.lab[j - 1];
              --j;
            }
            key[j] = k;
            p.lab[j] = v;
          }
          for (int i = s + 1; i < e; ++i) {
            if (key[i] != key[i - 1]) {
              new_starts |= 1u << i;
              changed = true;
            }
          }
        }
        s = e;
      }
      p.starts = new_starts;
    }
  }

  Code128 leaf_code(const Partition& p) const {
    Code128 code = 0;
    int t = 0;
    for (int i = 0; i < n_; ++i) {
      const std::uint16_t row = adj_[p.lab[i]];
      for (int j = i + 1; j < n_; ++j, ++t) {
        if ((row >> p.lab[j]) & 1u) code |= Code128{1} << (127 - t);
      }
    }
    return code;
  }

  void search(Partition p) {
    refine(p);
    const std::uint32_t all = (1u << n_) - 1u;
    if (p.starts == all || n_ <= 1) {
      const Code128 code = leaf_code(p);
      if (!have_best_ || code < best_.code) {
        have_best_ = true;
        best_.code = code;
        best_.order = p.lab;
      }
      return;
    }
    int s = 0;
    while (cell_end(p.starts, s) - s == 1) s = cell_end(p.starts, s);
    const int e = cell_end(p.starts, s);
    std::array<std::uint8_t, kMaxCanonNodes> cell{};
    const int size = e - s;
    std::copy(p.lab.begin() + s, p.lab.begin() + e, cell.begin());
    for (int idx = 0; idx < size; ++idx) {
      const int v = cell[idx];
      // A transposition of twins is an automorphism fixing every individualized
      // vertex, so a twin of an explored vertex yields the same leaves.
      bool redundant = false;
      for (int prev = 0; prev < idx && !redundant; ++prev) {
        const int u = cell[prev];
        const std::uint16_t nu = adj_[u] & static_cast<std::uint16_t>(~(1u << v));
        const std::uint16_t nv = adj_[v] & static_cast<std::uint16_t>(~(1u << u));
        redundant = nu == nv;
      }
      if (redundant) continue;
      Partition child = p;
      int pos = s;
      child.lab[pos++] = static_cast<std::uint8_t>(v);
      for (int i = 0; i < size; ++i) {
        if (cell[i] != v) child.lab[pos++] = cell[i];
      }
      child.starts |= 1u << s;
      if (s + 1 < n_) child.starts |= 1u << (s + 1);
      search(child);
    }
  }

  int n_;
  const std::uint16_t* adj_;
  bool have_best_ = false;
  CanonResult best_;
};

}  // namespace

CanonResult canonical_code(int n, const std::uint16_t* adj) {
  if (n < 0 || n > kMaxCanonNodes) throw InvalidArgument("canonical_code: node count out of range");
  return Canonizer(n, adj).run();
}

}  // namespace detail

namespace {

std::size_t bitmap_bytes(int n) { return (static_cast<std::size_t>(detail::pair_count(n)) + 7) / 8; }

}  // namespace

CanonicalForm::CanonicalForm(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
  if (bytes_.empty()) throw InvalidArgument("canonical form: no bytes");
  const int n = bytes_[0];
  if (n > kMaxCanonicalNodes) throw InvalidArgument("canonical form: node count " + std::to_string(n) + " exceeds cap");
  if (bytes_.size() != 1 + bitmap_bytes(n)) throw InvalidArgument("canonical form: byte count inconsistent with node count");
}

NormalGraph CanonicalForm::decode() const {
  const int n = node_count();
  std::vector<NormalEdge> edges;
  int t = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++t) {
      if ((bytes_[1 + t / 8] >> (7 - t % 8)) & 1u) edges.push_back({i, j});
    }
  }
  return NormalGraph(n, std::move(edges));
}

std::string CanonicalForm::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

CanonicalForm CanonicalForm::from_hex(std::string_view hex) {
  if (hex.size() % 2) throw InvalidArgument("canonical form: odd hex length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw InvalidArgument(std::string("canonical form: bad hex digit '") + c + "'");
  };
  std::vector<std::uint8_t> bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    bytes.push_back(static_cast<std::uint8_t>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  }
  return CanonicalForm(std::move(bytes));
}

namespace {

detail::CanonResult canon_of(const NormalGraph& n) {
  if (n.node_count() > kMaxCanonicalNodes) {
    throw InvalidArgument("canonical form: " + std::to_string(n.node_count()) + " nodes exceeds the cap of " +
                          std::to_string(kMaxCanonicalNodes));
  }
  std::array<std::uint16_t, detail::kMaxCanonNodes> adj{};
  for (int v = 0; v < n.node_count(); ++v) adj[v] = static_cast<std::uint16_t>(n.neighbors(v));
  return detail::canonical_code(n.node_count(), adj.data());
}

}  // namespace

CanonicalForm detail::form_from_code(int n, Code128 code) {
  std::vector<std::uint8_t> bytes(1 + bitmap_bytes(n), 0);
  bytes[0] = static_cast<std::uint8_t>(n);
  for (std::size_t i = 1; i < bytes.size(); ++i) {
    bytes[i] = static_cast<std::uint8_t>(code >> (128 - 8 * i));
  }
  return CanonicalForm(std::move(bytes));
}

CanonicalForm canonical_form(const NormalGraph& n) {
  return detail::form_from_code(n.node_count(), canon_of(n).code);
}

std::vector<int> canonical_labeling(const NormalGraph& n) {
  const auto res = canon_of(n);
  std::vector<int> perm(static_cast<std::size_t>(n.node_count()));
  for (int p = 0; p < n.node_count(); ++p) perm[res.order[p]] = p;
  return perm;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const NormalGraph& x, const NormalGraph& y)
      : x_(x), y_(y), map_(static_cast<std::size_t>(x.node_count()), -1), used_(0) {}

  bool run() { return extend(0); }

 private:
  bool extend(int v) {
    if (v == x_.node_count()) return true;
    for (int w = 0; w < y_.node_count(); ++w) {
      if ((used_ >> w) & 1u) continue;
      if (x_.degree(v) != y_.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = x_.adjacent(u, v) == y_.adjacent(map_[u], w);
      if (!ok) continue;
      map_[v] = w;
      used_ |= 1u << w;
      if (extend(v + 1)) return true;
      used_ &= ~(1u << w);
      map_[v] = -1;
    }
    return false;
  }

  const NormalGraph& x_;
  const NormalGraph& y_;
  std::vector<int> map_;
  std::uint32_t used_;
};

}  // namespace

bool are_isomorphic_oracle(const NormalGraph& x, const NormalGraph& y) {
  if (x.node_count() != y.node_count() || x.edge_count() != y.edge_count()) return false;
  std::vector<int> dx, dy;
  for (int v = 0; v < x.node_count(); ++v) {
    dx.push_back(x.degree(v));
    dy.push_back(y.degree(v));
  }
  std::sort(dx.begin(), dx.end());
  std::sort(dy.begin(), dy.end());
  if (dx != dy) return false;
  return IsoSearch(x, y).run();
}

}  // namespace trapset

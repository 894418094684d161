#pragma once

#include <array>
#include <cstdint>

namespace trapset::detail {

inline constexpr int kMaxCanonNodes = 16;

/// Upper-triangle adjacency bitmap, row-major; pair index t occupies bit 127 - t
/// so that numeric order equals lexicographic order of the bit string.
__extension__ typedef unsigned __int128 Code128;

struct CanonResult {
  Code128 code = 0;
  /// order[p] = original vertex placed at canonical position p.
  std::array<std::uint8_t, kMaxCanonNodes> order{};
};

/// Canonical code of the graph with adjacency rows `adj[0..n)` (bit j of
/// adj[i] set iff i ~ j). Requires n <= kMaxCanonNodes.
CanonResult canonical_code(int n, const std::uint16_t* adj);

/// Number of pair slots of an n-node upper triangle.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

}  // namespace trapset::detail

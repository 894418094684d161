#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trapset/detail/canon_kernel.hpp"
#include "trapset/normal_graph.hpp"

namespace trapset {

/// Relabeling-invariant byte encoding of a NormalGraph: one byte holding the
/// node count, then the upper-triangle adjacency bitmap of the canonically
/// relabeled graph (row-major, most significant bit first, zero padded).
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::vector<std::uint8_t> bytes);

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  int node_count() const noexcept { return bytes_.empty() ? 0 : bytes_[0]; }

  /// The canonically labeled graph itself.
  NormalGraph decode() const;

  std::string to_hex() const;
  /// Throws InvalidArgument on odd length, non-hex digits or a byte count
  /// inconsistent with the node count.
  static CanonicalForm from_hex(std::string_view hex);

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& x, const CanonicalForm& y) noexcept {
    return x.bytes_ <=> y.bytes_;
  }

 private:
  std::vector<std::uint8_t> bytes_;
};

inline constexpr int kMaxCanonicalNodes = 16;

/// Throws InvalidArgument when the graph has more than kMaxCanonicalNodes nodes.
CanonicalForm canonical_form(const NormalGraph& n);

/// perm with n.relabeled(perm) == canonical_form(n).decode().
std::vector<int> canonical_labeling(const NormalGraph& n);

/// Exhaustive permutation search with degree pruning; independent of
/// canonical_form and intended as a test oracle.
bool are_isomorphic_oracle(const NormalGraph& x, const NormalGraph& y);

namespace detail {
/// CanonicalForm carrying an already canonical code of an n-node graph.
CanonicalForm form_from_code(int n, Code128 code);
}  // namespace detail

}  // namespace trapset

#include <string>

#include "trapset/error.hpp"
#include "trapset/normal_graph.hpp"

namespace trapset {

std::string to_graph6(const NormalGraph& n) {
  const int nodes = n.node_count();
  std::string out;
  out.push_back(static_cast<char>(nodes + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < nodes; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (n.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

NormalGraph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(ParseError::Kind::kTruncated, 1, "graph6: empty string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw ParseError(ParseError::Kind::kBadToken, 1, "graph6: invalid character");
  }
  std::size_t pos = 0;
  int nodes = 0;
  if (text[0] != 126) {
    nodes = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError(ParseError::Kind::kMalformedHeader, 1, "graph6: unsupported node count encoding");
    nodes = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (nodes > kMaxNormalNodes) throw ParseError(ParseError::Kind::kOutOfRange, 1, "graph6: too many nodes (" + std::to_string(nodes) + ")");
  const std::size_t bits = static_cast<std::size_t>(nodes) * (nodes - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars) throw ParseError(ParseError::Kind::kTruncated, 1, "graph6: wrong length for " + std::to_string(nodes) + " nodes");
  std::vector<NormalEdge> edges;
  std::size_t t = 0;
  for (int j = 1; j < nodes; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      const int word = text[pos + t / 6] - 63;
      if ((word >> (5 - t % 6)) & 1) edges.push_back({i, j});
    }
  }
  return NormalGraph(nodes, std::move(edges));
}

}  // namespace trapset

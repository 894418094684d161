#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "trapset/error.hpp"
#include "trapset/tanner_graph.hpp"

namespace trapset {

namespace {

using Kind = ParseError::Kind;

struct Line {
  std::size_t number;
  std::vector<long long> values;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      long long value = 0;
      auto [ptr, ec] = std::from_chars(raw.data() + i, raw.data() + j, value);
      if (ec != std::errc() || ptr != raw.data() + j || value < 0) {
        throw ParseError(Kind::kBadToken, number,
                         "expected a non-negative integer, got '" + std::string(raw.substr(i, j - i)) + "'");
      }
      line.values.push_back(value);
      i = j;
    }
    if (!line.values.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

class LineCursor {
 public:
  explicit LineCursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& next(const char* what) {
    if (index_ >= lines_.size()) {
      const std::size_t last = lines_.empty() ? 0 : lines_.back().number;
      throw ParseError(Kind::kTruncated, last + 1, std::string("missing ") + what);
    }
    return lines_[index_++];
  }

 private:
  std::vector<Line> lines_;
  std::size_t index_ = 0;
};

// Reads one neighbour list; zero entries are padding.
std::vector<std::uint32_t> read_list(const Line& line, long long degree, long long bound, const char* side) {
  std::vector<std::uint32_t> out;
  for (long long x : line.values) {
    if (x == 0) continue;
    if (x > bound) {
      throw ParseError(Kind::kOutOfRange, line.number,
                       std::string(side) + " index " + std::to_string(x) + " exceeds " + std::to_string(bound));
    }
    out.push_back(static_cast<std::uint32_t>(x - 1));
  }
  if (static_cast<long long>(out.size()) != degree) {
    throw ParseError(Kind::kDegreeListMismatch, line.number,
                     "neighbor list has " + std::to_string(out.size()) + " entries but degree list says " +
                         std::to_string(degree));
  }
  std::vector<std::uint32_t> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw ParseError(Kind::kParallelEdge, line.number,
                     "parallel edge: " + std::string(side) + " " + std::to_string(*dup + 1) + " listed twice");
  }
  return sorted;
}

}  // namespace

TannerGraph parse_alist(std::string_view text) {
  LineCursor cursor(tokenize(text));

  const Line& dims = cursor.next("header line 'n m'");
  if (dims.values.size() != 2 || dims.values[0] == 0) {
    throw ParseError(Kind::kMalformedHeader, dims.number, "expected 'n m' with n > 0");
  }
  const long long n = dims.values[0];
  const long long m = dims.values[1];

  const Line& maxima = cursor.next("maximum degree line");
  if (maxima.values.size() != 2) {
    throw ParseError(Kind::kMalformedHeader, maxima.number, "expected 'max_var_degree max_check_degree'");
  }

  const Line& var_deg_line = cursor.next("variable degree list");
  if (static_cast<long long>(var_deg_line.values.size()) != n) {
    throw ParseError(Kind::kMalformedHeader, var_deg_line.number,
                     "expected " + std::to_string(n) + " variable degrees, got " +
                         std::to_string(var_deg_line.values.size()));
  }
  const Line& chk_deg_line = cursor.next("check degree list");
  if (static_cast<long long>(chk_deg_line.values.size()) != m) {
    throw ParseError(Kind::kMalformedHeader, chk_deg_line.number,
                     "expected " + std::to_string(m) + " check degrees, got " +
                         std::to_string(chk_deg_line.values.size()));
  }
  for (long long d : var_deg_line.values) {
    if (d > maxima.values[0]) {
      throw ParseError(Kind::kDegreeListMismatch, var_deg_line.number, "variable degree exceeds declared maximum");
    }
  }
  for (long long d : chk_deg_line.values) {
    if (d > maxima.values[1]) {
      throw ParseError(Kind::kDegreeListMismatch, chk_deg_line.number, "check degree exceeds declared maximum");
    }
  }

  std::vector<std::vector<CheckId>> var_adj(static_cast<std::size_t>(n));
  std::vector<std::size_t> var_line(static_cast<std::size_t>(n));
  for (long long v = 0; v < n; ++v) {
    const Line& line = cursor.next("variable neighbor list");
    var_adj[v] = read_list(line, var_deg_line.values[v], m, "check");
    var_line[v] = line.number;
  }
  std::vector<std::vector<VarId>> from_checks(static_cast<std::size_t>(m));
  std::vector<std::size_t> chk_line(static_cast<std::size_t>(m));
  for (long long c = 0; c < m; ++c) {
    const Line& line = cursor.next("check neighbor list");
    from_checks[c] = read_list(line, chk_deg_line.values[c], n, "variable");
    chk_line[c] = line.number;
  }

  // Both halves must describe the same edge set.
  std::vector<std::vector<VarId>> implied(static_cast<std::size_t>(m));
  for (std::size_t v = 0; v < var_adj.size(); ++v) {
    for (CheckId c : var_adj[v]) implied[c].push_back(static_cast<VarId>(v));
  }
  for (std::size_t c = 0; c < implied.size(); ++c) {
    if (implied[c] != from_checks[c]) {
      throw ParseError(Kind::kDegreeListMismatch, chk_line[c],
                       "check " + std::to_string(c + 1) + " neighbor list disagrees with variable lists");
    }
  }

  const long long dl = var_deg_line.values.front();
  for (long long v = 0; v < n; ++v) {
    if (var_deg_line.values[v] != dl) {
      throw ParseError(Kind::kNonUniformDegree, var_deg_line.number,
                       "variable " + std::to_string(v + 1) + " has degree " +
                           std::to_string(var_deg_line.values[v]) + ", variable 1 has " + std::to_string(dl));
    }
  }
  if (dl < kMinLeftDegree) {
    throw ParseError(Kind::kLeftDegreeTooSmall, var_deg_line.number,
                     "left degree " + std::to_string(dl) + " is below the minimum " + std::to_string(kMinLeftDegree));
  }

  // Girth < 6 in a bipartite graph means two variables share two checks.
  for (std::size_t c = 0; c < from_checks.size(); ++c) {
    const auto& vars = from_checks[c];
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        const auto& x = var_adj[vars[i]];
        const auto& y = var_adj[vars[j]];
        std::vector<CheckId> common;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
        if (common.size() >= 2) {
          throw ParseError(Kind::kGirthTooSmall, var_line[vars[j]],
                           "girth 4: variables " + std::to_string(vars[i] + 1) + " and " +
                               std::to_string(vars[j] + 1) + " share checks " + std::to_string(common[0] + 1) +
                               " and " + std::to_string(common[1] + 1));
        }
      }
    }
  }

  try {
    return TannerGraph(static_cast<std::size_t>(m), std::move(var_adj));
  } catch (const InvalidArgument& e) {
    throw ParseError(Kind::kMalformedRecord, 0, e.what());
  }
}

TannerGraph read_alist_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_alist(buf.str());
  } catch (const ParseError& e) {
    throw e.in_context(path.string());
  }
}

std::string to_alist(const TannerGraph& g) {
  std::ostringstream os;
  os << g.num_vars() << ' ' << g.num_checks() << '\n';
  os << g.left_degree() << ' ' << g.max_check_degree() << '\n';
  for (VarId v = 0; v < g.num_vars(); ++v) os << (v ? " " : "") << g.left_degree();
  os << '\n';
  for (CheckId c = 0; c < g.num_checks(); ++c) os << (c ? " " : "") << g.vars_of(c).size();
  os << '\n';
  for (VarId v = 0; v < g.num_vars(); ++v) {
    auto checks = g.checks_of(v);
    for (std::size_t i = 0; i < checks.size(); ++i) os << (i ? " " : "") << checks[i] + 1;
    os << '\n';
  }
  for (CheckId c = 0; c < g.num_checks(); ++c) {
    auto vars = g.vars_of(c);
    for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? " " : "") << vars[i] + 1;
    for (int i = static_cast<int>(vars.size()); i < g.max_check_degree(); ++i) os << (i ? " " : "") << 0;
    os << '\n';
  }
  return os.str();
}

}  // namespace trapset

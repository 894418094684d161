#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "trapset/error.hpp"
#include "trapset/tanner_graph.hpp"

namespace trapset {
namespace {

// Three variables of degree 3 on 9 checks: a 6-cycle through checks 0,1,2
// plus one private check per variable.
TannerGraph hexagon_graph() { return TannerGraph(6, {{0, 2, 3}, {0, 1, 4}, {1, 2, 5}}); }

TEST(TannerGraph, BasicShape) {
  const TannerGraph g = hexagon_graph();
  EXPECT_EQ(g.num_vars(), 3u);
  EXPECT_EQ(g.num_checks(), 6u);
  EXPECT_EQ(g.left_degree(), 3);
  EXPECT_EQ(g.max_check_degree(), 2);
  EXPECT_EQ(g.girth(), 6);
  EXPECT_EQ(g.edge_count(), 9u);
}

TEST(TannerGraph, RejectsInvariantViolations) {
  EXPECT_THROW(TannerGraph(3, {}), InvalidArgument);
  EXPECT_THROW(TannerGraph(4, {{0, 1, 2}, {0, 1}}), InvalidArgument);
  EXPECT_THROW(TannerGraph(4, {{0, 0, 1}}), InvalidArgument);
  EXPECT_THROW(TannerGraph(2, {{0, 1, 2}}), InvalidArgument);
  EXPECT_THROW(TannerGraph(4, {{0, 1}, {2, 3}}), InvalidArgument);
  // Two variables sharing two checks form a 4-cycle.
  EXPECT_THROW(TannerGraph(4, {{0, 1, 2}, {0, 1, 3}}), InvalidArgument);
}

TEST(TannerGraph, AcyclicGirth) {
  const TannerGraph g(5, {{0, 1, 2}, {2, 3, 4}});
  EXPECT_EQ(g.girth(), kAcyclic);
}

TEST(TannerGraph, MakeSetSortsAndBinds) {
  const TannerGraph g = hexagon_graph();
  const VarSet s = g.make_set({2, 0, 2});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.to_string(), "0,2");
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.with(1).to_string(), "0,1,2");
  EXPECT_THROW(g.make_set({3}), InvalidArgument);
  const TannerGraph other = hexagon_graph();
  EXPECT_THROW(other.check_bound(s), InvalidArgument);
  EXPECT_NO_THROW(g.check_bound(s));
}

TEST(TannerGraph, ClassifyHexagon) {
  const TannerGraph g = hexagon_graph();
  const auto r = classify(g, g.all_vars());
  EXPECT_EQ(r.a, 3u);
  EXPECT_EQ(r.b, 3u);
  EXPECT_TRUE(r.elementary);
  EXPECT_TRUE(r.in_t);
  EXPECT_TRUE(r.absorbing);
  const auto single = classify(g, g.make_set({0}));
  EXPECT_EQ(single.b, 3u);
  EXPECT_FALSE(single.in_t);
}

TEST(TannerGraph, DisconnectedSetIsNotInT) {
  // Two disjoint hexagons: every variable has two satisfied checks.
  const TannerGraph g(12, {{0, 2, 3}, {0, 1, 4}, {1, 2, 5}, {6, 8, 9}, {6, 7, 10}, {7, 8, 11}});
  const auto r = classify(g, g.all_vars());
  EXPECT_TRUE(r.elementary);
  EXPECT_FALSE(r.in_t);
  EXPECT_FALSE(oracle::naive_classify(g, {0, 1, 2, 3, 4, 5}).in_t);
  EXPECT_TRUE(oracle::naive_classify(g, {0, 1, 2}).in_t);
}

TEST(TannerGraph, NonElementarySet) {
  // Check 0 is shared by three variables.
  const TannerGraph g(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
  const auto r = classify(g, g.all_vars());
  EXPECT_FALSE(r.elementary);
  EXPECT_EQ(r.b, 7u);
}

TEST(TannerGraph, GammaSplitAndClassifyMatchNaiveCounting) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int dl = 3 + static_cast<int>(seed % 2);
    const TannerGraph g = oracle::small_code(18, static_cast<std::size_t>(6 * dl), dl, seed);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<VarId> m;
      const std::size_t size = 1 + rng() % 7;
      while (m.size() < size) {
        const VarId v = static_cast<VarId>(rng() % g.num_vars());
        if (std::find(m.begin(), m.end(), v) == m.end()) m.push_back(v);
      }
      const VarSet s = g.make_set(m);
      const auto naive_deg = oracle::check_degrees(g, m);
      const GammaSplit split = gamma_split(g, s);
      std::vector<CheckId> odd;
      std::vector<CheckId> even;
      for (const auto& [c, d] : naive_deg) (d % 2 ? odd : even).push_back(c);
      EXPECT_EQ(split.odd, odd);
      EXPECT_EQ(split.even, even);

      const auto r = classify(g, s);
      const auto n = oracle::naive_classify(g, m);
      EXPECT_EQ(r.a, n.a);
      EXPECT_EQ(r.b, n.b);
      EXPECT_EQ(r.elementary, n.elementary);
      EXPECT_EQ(r.in_t, n.in_t);
      EXPECT_EQ(r.absorbing, n.absorbing);
    }
  }
}

TEST(TannerGraph, GirthMatchesCycleOracle) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TannerGraph g = oracle::small_code(16, 12, 3, seed);
    const auto cycles = oracle::brute_tanner_cycles(g, 10);
    const int brute = cycles.empty() ? kAcyclic : cycles.begin()->first;
    if (brute != kAcyclic) EXPECT_EQ(g.girth(), brute) << "seed " << seed;
  }
}

TEST(Alist, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const TannerGraph g = oracle::small_code(20, 15, 3, seed);
    const TannerGraph h = parse_alist(to_alist(g));
    ASSERT_EQ(h.num_vars(), g.num_vars());
    ASSERT_EQ(h.num_checks(), g.num_checks());
    for (VarId v = 0; v < g.num_vars(); ++v) {
      EXPECT_TRUE(std::equal(g.checks_of(v).begin(), g.checks_of(v).end(), h.checks_of(v).begin(),
                             h.checks_of(v).end()));
    }
    EXPECT_EQ(to_alist(h), to_alist(g));
  }
}

TEST(Alist, HandWrittenFile) {
  const char* text =
      "3 6\n"
      "3 2\n"
      "3 3 3\n"
      "2 2 2 1 1 1\n"
      "1 3 4\n"
      "1 2 5\n"
      "2 3 6\n"
      "1 2\n"
      "2 3\n"
      "1 3\n"
      "1 0\n"
      "2 0\n"
      "3 0\n";
  const TannerGraph g = parse_alist(text);
  EXPECT_EQ(g.num_vars(), 3u);
  EXPECT_EQ(g.girth(), 6);
  const auto r = classify(g, g.all_vars());
  EXPECT_EQ(r.b, 3u);
}

ParseError::Kind parse_kind(const std::string& text, std::size_t* line = nullptr) {
  try {
    parse_alist(text);
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError::Kind::kMalformedRecord;
}

TEST(Alist, ErrorKindsAndLines) {
  using K = ParseError::Kind;
  std::size_t line = 0;
  EXPECT_EQ(parse_kind("", &line), K::kTruncated);
  EXPECT_EQ(parse_kind("x 6\n", &line), K::kBadToken);
  EXPECT_EQ(line, 1u);
  EXPECT_EQ(parse_kind("0 6\n3 2\n", &line), K::kMalformedHeader);
  EXPECT_EQ(parse_kind("3 6\n3 2\n3 3 3\n2 2 2 1 1 1\n1 3 9\n1 2 5\n2 3 6\n", &line), K::kOutOfRange);
  EXPECT_EQ(line, 5u);
  EXPECT_EQ(parse_kind("3 6\n3 2\n3 3 3\n2 2 2 1 1 1\n1 3 4\n1 2 5\n"), K::kTruncated);
  EXPECT_EQ(parse_kind("3 6\n3 2\n3 3 3\n2 2 2 1 1 1\n1 1 4\n1 2 5\n2 3 6\n1 2\n2 3\n1 3\n1 0\n2 0\n3 0\n", &line),
            K::kParallelEdge);
  EXPECT_EQ(line, 5u);
  EXPECT_EQ(parse_kind("2 4\n2 2\n2 2\n2 2 0 0\n1 2\n1 2\n1 2\n1 2\n0 0\n0 0\n"), K::kLeftDegreeTooSmall);
  EXPECT_EQ(parse_kind("3 6\n3 2\n3 3 2\n2 2 2 1 1 0\n1 3 4\n1 2 5\n2 3 0\n1 2\n2 3\n1 3\n1 0\n2 0\n0 0\n"),
            K::kNonUniformDegree);
  EXPECT_EQ(parse_kind("2 2\n2 2\n2 2\n2 2\n1 2\n1 2\n1 2\n1 2\n"), K::kLeftDegreeTooSmall);
  // Two degree-3 variables sharing two checks: a 4-cycle.
  EXPECT_EQ(parse_kind("2 4\n3 2\n3 3\n2 2 1 1\n1 2 3\n1 2 4\n1 2\n1 2\n1 0\n2 0\n", &line), K::kGirthTooSmall);
  // Check lists disagree with variable lists.
  EXPECT_EQ(parse_kind("3 6\n3 2\n3 3 3\n2 2 2 1 1 1\n1 3 4\n1 2 5\n2 3 6\n1 2\n2 3\n1 2\n1 0\n2 0\n3 0\n"),
            K::kDegreeListMismatch);
}

TEST(Alist, LeftDegreeTooSmall) {
  EXPECT_EQ(parse_kind("2 3\n2 2\n2 2\n1 2 1\n1 2\n2 3\n1 0\n1 2\n2 0\n"), ParseError::Kind::kLeftDegreeTooSmall);
}

TEST(Alist, FileErrorsCarryPath) {
  const auto dir = std::filesystem::temp_directory_path() / "trapset_alist_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "bad.alist";
  {
    std::ofstream out(path);
    out << "3 6\nfoo\n";
  }
  try {
    read_alist_file(path);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find(path.string()), std::string::npos) << what;
    EXPECT_EQ(what.find("line 2: line 2"), std::string::npos) << what;
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(read_alist_file(dir / "missing.alist"), Error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace trapset

#include <gtest/gtest.h>

#include <json.hpp>
#include <set>

#include "oracles.hpp"
#include "trapset/error.hpp"
#include "trapset/lss.hpp"
#include "trapset/search.hpp"
#include "trapset/structgen.hpp"

namespace trapset {
namespace {

std::set<std::vector<VarId>> found_in_class(const SearchReport& r, std::size_t a, std::size_t b) {
  std::set<std::vector<VarId>> out;
  for (const auto& s : r.sets) {
    if (s.a == a && s.b == b) out.insert({s.members.members().begin(), s.members.members().end()});
  }
  return out;
}

TEST(Coverage, Verdicts) {
  EXPECT_EQ(coverage_query({3, 6, 8, 2}, 14), Guarantee::kGuaranteedPartial);
  EXPECT_EQ(coverage_query({4, 8, 8, 0}, 8), Guarantee::kGuaranteed);
  EXPECT_EQ(coverage_query({6, 8, 9, 10}, 20), Guarantee::kNonexistent);
  EXPECT_EQ(coverage_query({3, 6, 4, 4}, 8), Guarantee::kGuaranteed);
  EXPECT_EQ(coverage_query({3, 6, 4, 4}, 6), Guarantee::kNotGuaranteed);
  EXPECT_EQ(coverage_query({3, 6, 6, 4}, 10), Guarantee::kGuaranteedPartial);
  EXPECT_THROW(coverage_query({3, 6, 10, 0}, 10), InvalidArgument);
  EXPECT_STREQ(to_string(Guarantee::kGuaranteedPartial), "guaranteed-partial");
}

TEST(FindEtss, FindsWholeStructure) {
  for (const auto& e : generate_structures({4, 6, 6, 2}).entries) {
    const TannerGraph t = from_normal(e.form.decode(), 4);
    const SearchReport r = find_etss(t, {6, 6, 1, "fragment"});
    bool has_full = false;
    for (const auto& s : r.sets) has_full = has_full || s.members == t.all_vars();
    EXPECT_TRUE(has_full);
  }
}

TEST(FindEtss, FindsFiveFourFragment) {
  const Catalog c = generate_structures({4, 6, 5, 4});
  ASSERT_EQ(c.entries.size(), 2u);
  for (const auto& e : c.entries) {
    const TannerGraph t = from_normal(e.form.decode(), 4);
    const SearchReport r = find_etss(t, {5, 6, 1, ""});
    EXPECT_EQ(found_in_class(r, 5, 4).size(), 1u);
  }
}

TEST(FindEtss, TreeGivesEmptyReport) {
  const TannerGraph tree(5, {{0, 1, 2}, {2, 3, 4}});
  const SearchReport r = find_etss(tree, {8, 6, 1, "tree"});
  EXPECT_TRUE(r.sets.empty());
  EXPECT_EQ(r.seed_count, 0u);
  EXPECT_EQ(r.g, 0);
  for (const auto& c : r.classes) EXPECT_EQ(c.count, 0u);
}

TEST(FindEtss, ParameterValidation) {
  const TannerGraph g = oracle::small_code(20, 15, 3, 1);
  EXPECT_THROW(find_etss(g, {0, 6, 1, ""}), InvalidArgument);
  EXPECT_THROW(find_etss(g, {13, 6, 1, ""}), InvalidArgument);
  EXPECT_THROW(find_etss(g, {6, g.girth() - 2, 1, ""}), InvalidArgument);
  EXPECT_THROW(find_etss(g, {6, g.girth() + 14, 1, ""}), InvalidArgument);
}

TEST(FindEtss, SmallKOnGirthEightCode) {
  RandomCodeParams p;
  p.num_vars = 40;
  p.num_checks = 40;
  p.min_girth = 8;
  p.mode = RandomCodeParams::Mode::kPeg;
  const TannerGraph g = random_code(p);
  ASSERT_GE(g.girth(), 8);
  const SearchReport r = find_etss(g, {3, g.girth(), 1, ""});
  EXPECT_TRUE(r.sets.empty());
}

TEST(FindEtss, ReportInvariants) {
  const TannerGraph g = oracle::small_code(24, 18, 3, 7);
  const SearchReport r = find_etss(g, {7, g.girth() + 2, 1, "r"});
  std::set<VarSet> unique;
  for (const auto& s : r.sets) {
    EXPECT_TRUE(unique.insert(s.members).second);
    const auto rec = classify(g, s.members);
    EXPECT_TRUE(rec.is_ets_in_t());
    EXPECT_EQ(rec.a, s.a);
    EXPECT_EQ(rec.b, s.b);
  }
  for (const auto& c : r.classes) EXPECT_EQ(c.count, found_in_class(r, c.a, c.b).size());
  EXPECT_TRUE(std::is_sorted(r.classes.begin(), r.classes.end(),
                             [](const auto& x, const auto& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); }));
}

TEST(FindEtss, MonotoneInMaxLen) {
  const TannerGraph g = oracle::small_code(22, 16, 3, 3);
  std::set<VarSet> previous;
  for (int len = g.girth(); len <= g.girth() + 6; len += 2) {
    const SearchReport r = find_etss(g, {7, len, 1, ""});
    std::set<VarSet> now;
    for (const auto& s : r.sets) now.insert(s.members);
    EXPECT_TRUE(std::includes(now.begin(), now.end(), previous.begin(), previous.end())) << len;
    previous = std::move(now);
  }
}

TEST(FindEtss, GuaranteedClassesMatchExhaustiveSearch) {
  std::size_t compared = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t vars = 18 + seed % 7;
    const TannerGraph g = oracle::small_code(vars, vars * 3 / 4, 3, seed);
    if (g.girth() != 6 && g.girth() != 8) continue;
    const std::size_t k = 6;
    const SearchReport r = find_etss(g, {k, g.girth() + 4, 2, ""});
    std::map<std::pair<std::size_t, std::size_t>, std::set<std::vector<VarId>>> brute;
    for (const auto& m : oracle::all_ets_in_t(g, k)) {
      const auto rec = oracle::naive_classify(g, m);
      brute[{rec.a, rec.b}].insert(m);
    }
    for (const auto& c : r.classes) {
      if (c.guarantee != Guarantee::kGuaranteed) continue;
      EXPECT_EQ(found_in_class(r, c.a, c.b), brute[std::pair(c.a, c.b)]) << "seed " << seed << " (" << c.a << "," << c.b << ")";
      ++compared;
    }
  }
  EXPECT_GT(compared, 20u);
}

TEST(FindEtss, ThreadCountDoesNotChangeReport) {
  const TannerGraph g = oracle::small_code(24, 18, 3, 5);
  const auto one = report_to_json(find_etss(g, {7, g.girth() + 4, 1, "x"}), true);
  const auto three = report_to_json(find_etss(g, {7, g.girth() + 4, 3, "x"}), true);
  EXPECT_EQ(one, three);
}

TEST(Report, JsonSchema) {
  const TannerGraph g = oracle::small_code(20, 15, 3, 2);
  const SearchReport r = find_etss(g, {6, g.girth() + 2, 1, "code-2"});
  const auto j = nlohmann::json::parse(report_to_json(r, true));
  EXPECT_EQ(j.at("code"), "code-2");
  EXPECT_EQ(j.at("dl"), 3);
  EXPECT_EQ(j.at("g"), g.girth());
  EXPECT_EQ(j.at("k"), 6);
  EXPECT_EQ(j.at("max_len"), g.girth() + 2);
  ASSERT_TRUE(j.at("classes").is_array());
  for (const auto& c : j.at("classes")) {
    EXPECT_TRUE(c.contains("a") && c.contains("b") && c.contains("count") && c.contains("guarantee"));
  }
  EXPECT_EQ(j.at("sets").size(), r.sets.size());
  EXPECT_FALSE(nlohmann::json::parse(report_to_json(r, false)).contains("sets"));
  const std::string text = report_to_text(r);
  EXPECT_NE(text.find("code-2"), std::string::npos);
  EXPECT_NE(text.find("guarantee"), std::string::npos);
}

}  // namespace
}  // namespace trapset

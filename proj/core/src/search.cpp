#include "trapset/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "trapset/error.hpp"
#include "trapset/lss.hpp"
#include "trapset/reference_tables.hpp"

namespace trapset {

const char* to_string(Guarantee g) noexcept {
  switch (g) {
    case Guarantee::kGuaranteed: return "guaranteed";
    case Guarantee::kGuaranteedPartial: return "guaranteed-partial";
    case Guarantee::kNotGuaranteed: return "not-guaranteed";
    case Guarantee::kNonexistent: return "nonexistent";
    case Guarantee::kUncharacterized: return "uncharacterized";
  }
  return "unknown";
}

Guarantee coverage_query(const ClassSpec& spec, int max_len) {
  const ReferenceCell& cell = ReferenceTables::builtin().lookup(spec);
  if (cell.ts.empty()) return Guarantee::kNonexistent;
  bool all = true;
  bool some = false;
  for (const auto& [label, count] : cell.ts) {
    const bool covered = label.is_cycle() && label.length() <= max_len;
    all = all && covered;
    some = some || covered;
  }
  if (all) return Guarantee::kGuaranteed;
  return some ? Guarantee::kGuaranteedPartial : Guarantee::kNotGuaranteed;
}

namespace {

Guarantee class_guarantee(int dl, int g, std::size_t a, std::size_t b, int max_len) {
  const ClassSpec spec{dl, g, static_cast<int>(a), static_cast<int>(b)};
  if (!ReferenceTables::in_scope(spec)) return Guarantee::kUncharacterized;
  return coverage_query(spec, max_len);
}

}  // namespace

SearchReport find_etss(const TannerGraph& g, const SearchParams& params) {
  if (params.k < 1 || params.k > kMaxSearchSize) {
    throw InvalidArgument("k = " + std::to_string(params.k) + " outside [1, " + std::to_string(kMaxSearchSize) + "]");
  }
  const bool acyclic = g.girth() == kAcyclic;
  if (acyclic ? params.max_len < kMinGirth
              : (params.max_len < g.girth() || params.max_len > g.girth() + kMaxCycleOffset)) {
    throw InvalidArgument("max cycle length " + std::to_string(params.max_len) + " outside [girth, girth + " +
                          std::to_string(kMaxCycleOffset) + "]");
  }

  SearchReport r;
  r.code_id = params.code_id;
  r.dl = g.left_degree();
  r.g = acyclic ? 0 : g.girth();
  r.k = params.k;
  r.max_len = params.max_len;

  std::vector<VarSet> seeds;
  if (!acyclic) {
    for (auto& [len, sets] : enumerate_tanner_cycles(g, params.max_len)) {
      for (auto& s : sets) {
        if (s.size() <= params.k && classify(g, s).is_ets_in_t()) seeds.push_back(std::move(s));
      }
    }
  }
  r.seed_count = seeds.size();
  const ExpansionFrontier frontier = expand_to_k(g, seeds, params.k, params.threads);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> tally;
  for (const auto& s : frontier.all()) {
    auto rec = classify(g, s);
    ++tally[{rec.a, rec.b}];
    r.sets.push_back(std::move(rec));
  }
  std::sort(r.sets.begin(), r.sets.end(), [](const TrappingSetRecord& x, const TrappingSetRecord& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.members < y.members;
  });

  const bool tables_apply = !acyclic && (r.g == 6 || r.g == 8) && r.dl >= 3 && r.dl <= 6;
  if (tables_apply) {
    const int top_a = static_cast<int>(std::min<std::size_t>(params.k, ReferenceTables::kMaxA));
    for (int a = ReferenceTables::kMinA; a <= top_a; ++a) {
      for (int b = 0; b <= ReferenceTables::max_b(r.dl); ++b) {
        const ClassSpec spec{r.dl, r.g, a, b};
        if (!ReferenceTables::builtin().lookup(spec).ts.empty()) tally.try_emplace({a, b}, 0);
      }
    }
  }
  for (const auto& [key, count] : tally) {
    ClassTally t{key.first, key.second, count, Guarantee::kUncharacterized};
    if (tables_apply) t.guarantee = class_guarantee(r.dl, r.g, key.first, key.second, params.max_len);
    r.classes.push_back(t);
  }
  return r;
}

std::string report_to_json(const SearchReport& r, bool include_sets) {
  nlohmann::ordered_json j;
  j["code"] = r.code_id;
  j["dl"] = r.dl;
  j["g"] = r.g;
  j["k"] = r.k;
  j["max_len"] = r.max_len;
  j["seeds"] = r.seed_count;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"a", c.a}, {"b", c.b}, {"count", c.count}, {"guarantee", to_string(c.guarantee)}});
  }
  j["classes"] = std::move(classes);
  if (include_sets) {
    auto sets = nlohmann::ordered_json::array();
    for (const auto& s : r.sets) {
      auto members = s.members.members();
      sets.push_back({{"a", s.a}, {"b", s.b}, {"members", std::vector<VarId>(members.begin(), members.end())}});
    }
    j["sets"] = std::move(sets);
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const SearchReport& r) {
  std::ostringstream os;
  os << "code " << (r.code_id.empty() ? "-" : r.code_id) << ": dl=" << r.dl << " g=";
  if (r.g) {
    os << r.g;
  } else {
    os << "inf";
  }
  os << " k=" << r.k << " max_len=" << r.max_len;
  if (r.g) os << " (g+" << r.max_len - r.g << ")";
  os << " seeds=" << r.seed_count << '\n';
  os << "  a   b   count  guarantee\n";
  for (const auto& c : r.classes) {
    char line[96];
    std::snprintf(line, sizeof line, "%3zu %3zu %7zu  %s\n", c.a, c.b, c.count, to_string(c.guarantee));
    os << line;
  }
  return os.str();
}

}  // namespace trapset

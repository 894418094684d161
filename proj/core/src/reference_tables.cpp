#include "trapset/reference_tables.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "trapset/error.hpp"

namespace trapset {

namespace {

// One non-empty class per line: "dl g a b TS AS". Labels are "offset:count"
// with the offset relative to g, or "NA:count"; "-" is an empty row and "="
// marks classes without a separate absorbing row. Classes in scope that are
// not listed have no structures.
constexpr std::string_view kTableData = R"TXT(3 6 4 0 0:1 =
3 6 6 0 2:2 =
3 6 8 0 4:3,6:2 =
3 6 5 1 0:1 =
3 6 7 1 2:3,4:1 =
3 6 9 1 4:9,6:7,8:2,NA:1 =
3 6 4 2 0:1 =
3 6 6 2 2:3,4:1 =
3 6 8 2 4:9,6:7,8:1,NA:2 =
3 6 5 3 2:2 =
3 6 7 3 4:6,6:3,NA:1 =
3 6 9 3 6:31,8:18,10:14,NA:10 =
3 6 4 4 2:1 =
3 6 6 4 4:2,6:1,NA:1 =
3 6 8 4 6:12,8:6,10:2,NA:5 =
3 6 5 5 4:1 =
3 6 7 5 6:3,8:1,NA:2 =
3 6 9 5 8:19,10:13,12:3,NA:17 =
3 6 6 6 6:1 =
3 6 8 6 8:3,NA:7 =
3 6 7 7 8:1 =
3 6 9 7 10:4,12:2,NA:7 =
3 6 8 8 10:1 =
3 8 6 0 0:1 =
3 8 8 0 2:1,4:1 =
3 8 7 1 0:1 =
3 8 9 1 2:3,4:1 =
3 8 6 2 0:1 =
3 8 8 2 2:3,4:2 =
3 8 5 3 0:1 =
3 8 7 3 2:2,4:1 =
3 8 9 3 4:13,6:4 =
3 8 4 4 0:1 =
3 8 6 4 2:1,4:1 =
3 8 8 4 4:6,6:2,8:2 =
3 8 5 5 2:1 =
3 8 7 5 4:2,6:1 =
3 8 9 5 6:10,8:7,10:3,NA:1 =
3 8 6 6 4:1 =
3 8 8 6 6:2,8:2,NA:2 =
3 8 7 7 6:1 =
3 8 9 7 8:3,10:2,NA:3 =
3 8 8 8 8:1 =
4 6 5 0 0:1 0:1
4 6 6 0 0:1 0:1
4 6 7 0 0:2 0:2
4 6 8 0 0:4,2:2 0:4,2:2
4 6 9 0 0:10,2:6 0:10,2:6
4 6 5 2 0:1 0:1
4 6 6 2 0:3 0:2
4 6 7 2 0:9 0:7
4 6 8 2 0:32,2:3 0:25,2:3
4 6 9 2 0:127,2:24,4:3 0:102,2:21,4:3
4 6 4 4 0:1 0:1
4 6 5 4 0:2 0:1
4 6 6 4 0:7 0:3
4 6 7 4 0:25,2:2,4:1 0:9,2:2
4 6 8 4 0:101,2:18,4:3,6:1,NA:1 0:34,2:15,4:1
4 6 9 4 0:460,2:165,4:26,6:7,NA:5 0:154,2:110,4:16,6:3,NA:2
4 6 4 6 0:1 -
4 6 5 6 0:3 -
4 6 6 6 0:8,2:3 2:2
4 6 7 6 0:28,2:12,4:3,NA:1 2:3,4:1
4 6 8 6 0:116,2:81,4:21,6:6,NA:7 2:22,4:4,6:1,NA:1
4 6 9 6 0:523,2:617,4:149,6:51,8:6,NA:33 2:131,4:32,6:10,8:1,NA:3
4 6 4 8 2:1 -
4 6 5 8 2:2,NA:1 -
4 6 6 8 2:8,4:1,NA:1 -
4 6 7 8 2:29,4:9,6:1,NA:5 -
4 6 8 8 2:144,4:63,6:21,8:1,10:1,NA:20 4:3,6:2
4 6 9 8 2:855,4:446,6:173,8:30,10:5,NA:104 4:18,6:6,8:1,NA:2
4 8 8 0 0:1 0:1
4 8 8 2 0:1 0:1
4 8 9 2 0:2 0:1
4 8 7 4 0:1 0:1
4 8 8 4 0:2 0:1
4 8 9 4 0:7 0:3
4 8 6 6 0:1 0:1
4 8 7 6 0:1 -
4 8 8 6 0:5 0:2
4 8 9 6 0:18,2:1 0:5
4 8 4 8 0:1 -
4 8 5 8 0:1 -
4 8 6 8 0:2 -
4 8 7 8 0:3 -
4 8 8 8 0:10,2:2,4:2 2:1,4:1
4 8 9 8 0:36,2:10,4:4 0:3
5 6 6 0 0:1 0:1
5 6 8 0 0:3 0:3
5 6 7 1 0:1 0:1
5 6 9 1 0:28 0:28
5 6 6 2 0:1 0:1
5 6 8 2 0:16 0:16
5 6 7 3 0:6 0:5
5 6 9 3 0:289 0:276
5 6 6 4 0:2 0:2
5 6 8 4 0:75 0:68
5 6 5 5 0:1 0:1
5 6 7 5 0:18 0:14
5 6 9 5 0:1355,2:2 0:1149,2:2
5 6 6 6 0:5 0:4
5 6 8 6 0:222,4:1 0:165
5 6 5 7 0:1 0:1
5 6 7 7 0:37 0:23
5 6 9 7 0:3768,2:9,4:6,6:1,NA:3 0:2533,2:7,4:1
5 6 4 8 0:1 0:1
5 6 6 8 0:8 0:5
5 6 8 8 0:453,2:5,4:2,NA:1 0:249,2:3
5 6 5 9 0:2 0:1
5 6 7 9 0:61,2:1 0:25
5 6 9 9 0:6957,2:66,4:43,6:7,NA:19 0:3243,2:33,4:7,NA:1
5 8 8 8 0:1 0:1
5 8 9 5 0:1 0:1
5 8 9 7 0:1 0:1
5 8 9 9 0:3 0:2
6 6 7 0 0:1 0:1
6 6 8 0 0:1 0:1
6 6 9 0 0:4 0:4
6 6 7 2 0:1 0:1
6 6 8 2 0:3 0:3
6 6 9 2 0:25 0:25
6 6 7 4 0:2 0:2
6 6 8 4 0:15 0:15
6 6 9 4 0:162 0:162
6 6 6 6 0:1 0:1
6 6 7 6 0:5 0:5
6 6 8 6 0:48 0:48
6 6 9 6 0:726 0:726
6 6 6 8 0:1 0:1
6 6 7 8 0:10 0:10
6 6 8 8 0:120 0:120
6 6 9 8 0:2273,4:1 0:1157
6 6 5 10 0:1 0:1
6 6 6 10 0:2 0:2
6 6 7 10 0:20 0:20
6 6 8 10 0:260 0:260
6 6 9 10 0:5406,2:2,4:2,NA:1 0:1620
)TXT";

constexpr std::uint64_t kPinnedChecksum = 0x6da22c350cc51febULL;

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int to_int(std::string_view s, std::size_t line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(ParseError::Kind::kBadToken, line, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

LabelHistogram parse_row(std::string_view text, int g, std::size_t line) {
  LabelHistogram h;
  if (text == "-") return h;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(ParseError::Kind::kMalformedRecord, line, "expected 'label:count'");
    }
    const std::string_view key = item.substr(0, colon);
    const int count = to_int(item.substr(colon + 1), line);
    const LssLabel label = key == "NA" ? LssLabel::na() : LssLabel::cycle(g + to_int(key, line));
    h[label] += static_cast<std::size_t>(count);
    pos = comma + 1;
  }
  return h;
}

std::size_t total(const LabelHistogram& h) {
  std::size_t n = 0;
  for (const auto& [label, count] : h) n += count;
  return n;
}

}  // namespace

std::size_t ReferenceCell::ts_total() const { return total(ts); }
std::size_t ReferenceCell::as_total() const { return total(as_or_ts()); }

ReferenceTables ReferenceTables::parse(std::string_view text) {
  ReferenceTables t;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string s; ls >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    if (tok.size() != 6) throw ParseError(ParseError::Kind::kMalformedRecord, number, "expected 6 fields");
    ClassSpec spec{to_int(tok[0], number), to_int(tok[1], number), to_int(tok[2], number), to_int(tok[3], number)};
    if (!in_scope(spec)) throw ParseError(ParseError::Kind::kOutOfRange, number, "class outside table scope");
    ReferenceCell cell;
    cell.ts = parse_row(tok[4], spec.g, number);
    if (tok[5] != "=") cell.as = parse_row(tok[5], spec.g, number);
    if (!t.cells_.emplace(spec, std::move(cell)).second) {
      throw ParseError(ParseError::Kind::kMalformedRecord, number, "duplicate class " + spec.to_string());
    }
  }
  return t;
}

const ReferenceTables& ReferenceTables::builtin() {
  static const ReferenceTables tables = [] {
    if (checksum() != kPinnedChecksum) throw Error("reference table data does not match its pinned checksum");
    return parse(kTableData);
  }();
  return tables;
}

int ReferenceTables::max_b(int dl) {
  switch (dl) {
    case 3:
    case 4:
      return 8;
    case 5:
      return 9;
    case 6:
      return 10;
    default:
      return -1;
  }
}

bool ReferenceTables::in_scope(const ClassSpec& spec) {
  return spec.dl >= 3 && spec.dl <= 6 && (spec.g == 6 || spec.g == 8) && spec.a >= kMinA && spec.a <= kMaxA &&
         spec.b >= 0 && spec.b <= max_b(spec.dl);
}

const ReferenceCell& ReferenceTables::lookup(const ClassSpec& spec) const {
  if (!in_scope(spec)) throw InvalidArgument("class " + spec.to_string() + " is outside the reference table scope");
  auto it = cells_.find(spec);
  if (it != cells_.end()) return it->second;
  return spec.dl == 3 ? empty_d3_ : empty_;
}

std::uint64_t ReferenceTables::checksum() { return fnv1a(kTableData); }
std::uint64_t ReferenceTables::pinned_checksum() { return kPinnedChecksum; }
std::string_view ReferenceTables::raw_data() { return kTableData; }

}  // namespace trapset

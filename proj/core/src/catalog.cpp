#include "trapset/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "trapset/error.hpp"

namespace trapset {

void ClassSpec::validate() const {
  if (dl < 3 || dl > 6) throw InvalidArgument("left degree " + std::to_string(dl) + " outside [3, 6]");
  if (g != 6 && g != 8) throw InvalidArgument("girth " + std::to_string(g) + " must be 6 or 8");
  if (a < 4 || a > 10) throw InvalidArgument("a = " + std::to_string(a) + " outside [4, 10]");
  if (b < 0 || b > 10) throw InvalidArgument("b = " + std::to_string(b) + " outside [0, 10]");
}

std::string ClassSpec::to_string() const {
  return "dl=" + std::to_string(dl) + " g=" + std::to_string(g) + " (" + std::to_string(a) + "," +
         std::to_string(b) + ")";
}

std::string LssLabel::to_string() const {
  switch (state_) {
    case State::kUnset:
      return "-";
    case State::kNa:
      return "NA";
    case State::kCycle:
      break;
  }
  return std::to_string(length_);
}

std::string LssLabel::to_relative_string(int g) const {
  if (!is_cycle()) return to_string();
  if (length_ == g) return "g";
  const int d = length_ - g;
  return d > 0 ? "g+" + std::to_string(d) : "g" + std::to_string(d);
}

LssLabel LssLabel::parse(std::string_view text) {
  if (text == "-") return unset();
  if (text == "NA") return na();
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 6 || v % 2) {
    throw InvalidArgument("bad LSS label '" + std::string(text) + "'");
  }
  return cycle(v);
}

namespace {

template <class Render>
std::string render_histogram(const LabelHistogram& h, Render render) {
  std::string out = "{";
  bool first = true;
  for (const auto& [label, count] : h) {
    if (!first) out += ", ";
    first = false;
    out += render(label) + ":" + std::to_string(count);
  }
  return out + "}";
}

}  // namespace

std::string histogram_to_string(const LabelHistogram& h) {
  return render_histogram(h, [](const LssLabel& l) { return l.to_string(); });
}

std::string histogram_to_relative_string(const LabelHistogram& h, int g) {
  return render_histogram(h, [g](const LssLabel& l) { return l.to_relative_string(g); });
}

std::size_t Catalog::absorbing_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const CatalogEntry& e) { return e.absorbing; }));
}

bool Catalog::fully_labeled() const {
  return std::all_of(entries.begin(), entries.end(), [](const CatalogEntry& e) { return e.lss.is_set(); });
}

LabelHistogram Catalog::histogram(bool absorbing_only) const {
  LabelHistogram h;
  for (const auto& e : entries) {
    if (absorbing_only && !e.absorbing) continue;
    ++h[e.lss];
  }
  return h;
}

std::string write_catalog(const Catalog& c) {
  std::ostringstream os;
  os << "# " << c.spec.dl << ' ' << c.spec.g << ' ' << c.spec.a << ' ' << c.spec.b << '\n';
  for (const auto& e : c.entries) {
    os << e.form.to_hex() << '\t' << (e.absorbing ? 1 : 0) << '\t' << e.lss.to_string() << '\n';
  }
  return os.str();
}

Catalog parse_catalog(std::string_view text) {
  using Kind = ParseError::Kind;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  Catalog cat;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string hash;
      ClassSpec spec;
      std::string extra;
      if (!(hs >> hash >> spec.dl >> spec.g >> spec.a >> spec.b) || hash != "#" || (hs >> extra)) {
        throw ParseError(Kind::kMalformedHeader, number, "expected '# dl g a b'");
      }
      try {
        spec.validate();
      } catch (const InvalidArgument& e) {
        throw ParseError(Kind::kOutOfRange, number, e.what());
      }
      cat.spec = spec;
      have_header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      const std::size_t tab = line.find('\t', pos);
      fields.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (fields.size() != 3 || (fields[1] != "0" && fields[1] != "1")) {
      throw ParseError(Kind::kMalformedRecord, number, "expected 'hexform<TAB>0|1<TAB>label'");
    }
    CatalogEntry entry;
    try {
      entry.form = CanonicalForm::from_hex(fields[0]);
      entry.lss = LssLabel::parse(fields[2]);
    } catch (const InvalidArgument& e) {
      throw ParseError(Kind::kMalformedRecord, number, e.what());
    }
    if (entry.form.node_count() != cat.spec.a) {
      throw ParseError(Kind::kMalformedRecord, number, "form has " + std::to_string(entry.form.node_count()) +
                                                           " nodes, header says a = " + std::to_string(cat.spec.a));
    }
    entry.spec = cat.spec;
    entry.absorbing = fields[1] == "1";
    cat.entries.push_back(std::move(entry));
  }
  if (!have_header) throw ParseError(Kind::kMalformedHeader, number + 1, "missing '# dl g a b' header");
  std::sort(cat.entries.begin(), cat.entries.end(),
            [](const CatalogEntry& x, const CatalogEntry& y) { return x.form < y.form; });
  return cat;
}

}  // namespace trapset

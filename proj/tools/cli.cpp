#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "trapset/catalog.hpp"
#include "trapset/error.hpp"
#include "trapset/lss.hpp"
#include "trapset/random_code.hpp"
#include "trapset/reference_tables.hpp"
#include "trapset/search.hpp"
#include "trapset/structgen.hpp"

namespace trapset::cli {

namespace {

constexpr std::size_t kExtendedThreshold = 1000;

struct UsageError : Error {
  using Error::Error;
};

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << data;
  if (!out) throw Error("write failed: " + path);
}

std::string summary_line(const Catalog& c) {
  if (c.entries.empty()) return "total=0 (class infeasible or empty)";
  std::string s = "total=" + std::to_string(c.entries.size()) + " absorbing=" + std::to_string(c.absorbing_count());
  s += " lss=" + histogram_to_string(c.histogram());
  return s;
}

std::string relative_line(const Catalog& c) {
  return "TS " + histogram_to_relative_string(c.histogram(), c.spec.g) + " AS " +
         histogram_to_relative_string(c.histogram(true), c.spec.g);
}

// Large cells need an explicit opt-in; cells beyond the tables (a = 10) are
// treated as large because their size is unknown.
bool needs_extended(const ClassSpec& spec) {
  if (!ReferenceTables::in_scope(spec)) return spec.a > ReferenceTables::kMaxA;
  return ReferenceTables::builtin().lookup(spec).ts_total() > kExtendedThreshold;
}

struct GenOptions {
  ClassSpec spec;
  std::string out;
  bool extended = false;
  bool no_classify = false;
  int threads = default_threads();
};

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  o.spec.validate();
  if (needs_extended(o.spec) && !o.extended) {
    throw UsageError("class " + o.spec.to_string() + " is large; pass --extended to generate it");
  }
  const Feasibility f = class_feasible(o.spec);
  Catalog c = generate_structures(o.spec, o.threads);
  if (!o.no_classify) label_catalog(c, true, o.threads);
  if (!o.out.empty()) write_file(o.out, write_catalog(c));
  out << summary_line(c) << '\n';
  if (!c.entries.empty()) {
    out << relative_line(c) << '\n';
  } else if (!f.feasible) {
    err << "infeasible: " << f.reason << '\n';
  }
  return kSuccess;
}

struct ClassifyOptions {
  std::string path;
  std::string out;
  bool force = false;
  int threads = default_threads();
};

int cmd_classify(const ClassifyOptions& o, std::ostream& out) {
  Catalog c = parse_catalog(read_file(o.path));
  for (const auto& e : c.entries) {
    if (auto problem = validate_entry(e); !problem.empty()) {
      throw ParseError(ParseError::Kind::kMalformedRecord, 0, "entry " + e.form.to_hex() + ": " + problem);
    }
  }
  label_catalog(c, o.force, o.threads);
  write_file(o.out.empty() ? o.path : o.out, write_catalog(c));
  out << "TS " << histogram_to_string(c.histogram()) << '\n';
  out << "AS " << histogram_to_string(c.histogram(true)) << '\n';
  return kSuccess;
}

struct SearchOptions {
  std::string path;
  std::size_t k = 8;
  int max_len = 0;
  std::string out;
  bool json = false;
  bool sets = false;
  int threads = default_threads();
};

int cmd_search(const SearchOptions& o, std::ostream& out) {
  const TannerGraph g = read_alist_file(o.path);
  SearchParams p;
  p.k = o.k;
  p.max_len = o.max_len ? o.max_len : (g.girth() == kAcyclic ? kMinGirth : g.girth());
  p.threads = o.threads;
  p.code_id = std::filesystem::path(o.path).filename().string();
  const SearchReport r = find_etss(g, p);
  if (!o.out.empty()) write_file(o.out, report_to_json(r, o.sets));
  out << (o.json ? report_to_json(r, o.sets) : report_to_text(r));
  return kSuccess;
}

struct VerifyOptions {
  int dl = 0;
  std::vector<int> girths;
  int max_a = 8;
  bool extended = false;
  int threads = default_threads();
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.dl < 3 || o.dl > 6) throw UsageError("--dl must be in [3, 6]");
  if (o.max_a < ReferenceTables::kMinA || o.max_a > ReferenceTables::kMaxA) {
    throw UsageError("--max-a must be in [4, 9]");
  }
  std::vector<int> girths = o.girths.empty() ? std::vector<int>{6, 8} : o.girths;
  for (int g : girths) {
    if (g != 6 && g != 8) throw UsageError("--girth must be 6 or 8");
  }
  if (!o.extended) {
    for (int g : girths) {
      for (int a = ReferenceTables::kMinA; a <= o.max_a; ++a) {
        for (int b = 0; b <= ReferenceTables::max_b(o.dl); ++b) {
          if (needs_extended({o.dl, g, a, b})) {
            throw UsageError("cell " + ClassSpec{o.dl, g, a, b}.to_string() +
                             " has more than 1000 structures; pass --extended");
          }
        }
      }
    }
  }
  const auto& tables = ReferenceTables::builtin();
  std::size_t cells = 0;
  std::size_t diffs = 0;
  for (int g : girths) {
    for (int a = ReferenceTables::kMinA; a <= o.max_a; ++a) {
      std::vector<int> bs;
      for (int b = 0; b <= ReferenceTables::max_b(o.dl); ++b) bs.push_back(b);
      auto catalogs = generate_structures_batch(o.dl, g, a, bs, o.threads);
      for (auto& [b, c] : catalogs) {
        label_catalog(c, true, o.threads);
        const ReferenceCell& ref = tables.lookup(c.spec);
        ++cells;
        const auto ts = c.histogram();
        const auto as = c.histogram(true);
        if (ts != ref.ts) {
          ++diffs;
          out << "DIFF " << c.spec.to_string() << " TS got " << histogram_to_relative_string(ts, g) << " expected "
              << histogram_to_relative_string(ref.ts, g) << '\n';
        }
        if (as != ref.as_or_ts()) {
          ++diffs;
          out << "DIFF " << c.spec.to_string() << " AS got " << histogram_to_relative_string(as, g) << " expected "
              << histogram_to_relative_string(ref.as_or_ts(), g) << '\n';
        }
      }
    }
  }
  out << "cells=" << cells << " diffs=" << diffs << '\n';
  return diffs ? kMismatch : kSuccess;
}

struct RandomOptions {
  RandomCodeParams params;
  std::string mode = "shuffled";
  std::string out;
};

int cmd_random(RandomOptions o, std::ostream& out) {
  if (o.mode == "peg") {
    o.params.mode = RandomCodeParams::Mode::kPeg;
  } else if (o.mode == "shuffled") {
    o.params.mode = RandomCodeParams::Mode::kShuffled;
  } else {
    throw UsageError("--mode must be 'peg' or 'shuffled'");
  }
  const TannerGraph g = random_code(o.params);
  const std::string text = to_alist(g);
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
    out << "vars=" << g.num_vars() << " checks=" << g.num_checks() << " dl=" << g.left_degree()
        << " girth=" << g.girth() << '\n';
  }
  return kSuccess;
}

int cmd_show(const std::string& path, std::ostream& out) {
  const Catalog c = parse_catalog(read_file(path));
  out << "# " << c.spec.to_string() << " entries=" << c.entries.size() << '\n';
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& e = c.entries[i];
    const NormalGraph n = e.form.decode();
    out << i << '\t' << e.form.to_hex() << '\t' << to_graph6(n) << '\t' << (e.absorbing ? "AS" : "TS") << '\t'
        << e.lss.to_string() << '\t';
    for (std::size_t k = 0; k < n.edges().size(); ++k) {
      out << (k ? " " : "") << n.edges()[k].u << '-' << n.edges()[k].v;
    }
    out << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elementary trapping set enumeration and search for left-regular LDPC codes", "trapset"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate the non-isomorphic structures of one (dl, g, a, b) class");
  gen_cmd->add_option("dl,--dl", gen.spec.dl, "Left degree")->required();
  gen_cmd->add_option("girth,--girth", gen.spec.g, "Tanner girth (6 or 8)")->required();
  gen_cmd->add_option("a,--a", gen.spec.a, "Set size")->required();
  gen_cmd->add_option("b,--b", gen.spec.b, "Unsatisfied checks")->required();
  gen_cmd->add_option("--out", gen.out, "Catalog output path");
  gen_cmd->add_flag("--extended", gen.extended, "Allow classes with more than 1000 structures");
  gen_cmd->add_flag("--no-classify", gen.no_classify, "Skip LSS labeling");
  gen_cmd->add_option("--threads", gen.threads, "Worker cap")->check(CLI::PositiveNumber);

  ClassifyOptions cls;
  auto* cls_cmd = app.add_subcommand("classify", "Label every catalog entry with its LSS class");
  cls_cmd->add_option("catalog,--catalog", cls.path, "Catalog file")->required();
  cls_cmd->add_option("--out", cls.out, "Output path (default: rewrite in place)");
  cls_cmd->add_flag("--force", cls.force, "Recompute labels that are already set");
  cls_cmd->add_option("--threads", cls.threads, "Worker cap")->check(CLI::PositiveNumber);

  SearchOptions srch;
  auto* srch_cmd = app.add_subcommand("search", "Find the LSS-reachable ETSs of a code given as alist");
  srch_cmd->add_option("alist,--alist", srch.path, "alist file")->required();
  srch_cmd->add_option("--k", srch.k, "Largest set size")->check(CLI::Range(1, 12));
  srch_cmd->add_option("--max-cycle-len", srch.max_len, "Longest seed cycle (default: the girth)");
  srch_cmd->add_option("--out", srch.out, "JSON report path");
  srch_cmd->add_flag("--json", srch.json, "Print JSON instead of the table");
  srch_cmd->add_flag("--sets", srch.sets, "Include the sets themselves in JSON");
  srch_cmd->add_option("--threads", srch.threads, "Worker cap")->check(CLI::PositiveNumber);

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify-tables", "Regenerate the reference tables and diff them");
  ver_cmd->alias("verify");
  ver_cmd->add_option("dl,--dl", ver.dl, "Left degree")->required();
  ver_cmd->add_option("girth,--girth", ver.girths, "Tanner girth(s); default both 6 and 8");
  ver_cmd->add_option("--max-a", ver.max_a, "Largest a to check (4..9)");
  ver_cmd->add_flag("--extended", ver.extended, "Allow cells with more than 1000 structures");
  ver_cmd->add_option("--threads", ver.threads, "Worker cap")->check(CLI::PositiveNumber);

  RandomOptions rnd;
  auto* rnd_cmd = app.add_subcommand("random-code", "Write a random left-regular code as alist");
  rnd_cmd->add_option("--vars", rnd.params.num_vars, "Variable nodes");
  rnd_cmd->add_option("--checks", rnd.params.num_checks, "Check nodes");
  rnd_cmd->add_option("--dl", rnd.params.dl, "Left degree");
  rnd_cmd->add_option("--girth", rnd.params.min_girth, "Minimum girth");
  rnd_cmd->add_option("--seed", rnd.params.seed, "Random seed");
  rnd_cmd->add_option("--mode", rnd.mode, "peg or shuffled");
  rnd_cmd->add_option("--out", rnd.out, "Output path (default: stdout)");

  std::string show_path;
  auto* show_cmd = app.add_subcommand("show", "Print the entries of a catalog");
  show_cmd->add_option("catalog,--catalog", show_path, "Catalog file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kSuccess : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*cls_cmd) return cmd_classify(cls, out);
    if (*srch_cmd) return cmd_search(srch, out);
    if (*ver_cmd) return cmd_verify(ver, out);
    if (*rnd_cmd) return cmd_random(rnd, out);
    if (*show_cmd) return cmd_show(show_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace trapset::cli

// shiftlab -- command-line front end over the shiftlab library.
//
// Exit codes: 0 definitive verdict, 1 input error, 2 inconclusive,
// 3 consistency check failed.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/analysis.hpp"
#include "shiftlab/codes.hpp"
#include "shiftlab/core.hpp"
#include "shiftlab/covers.hpp"
#include "shiftlab/oracle.hpp"

#ifndef SHIFTLAB_CORPUS_DIR
#define SHIFTLAB_CORPUS_DIR "corpus"
#endif

namespace {

using namespace shiftlab;

enum class Format { report, tsv };

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitDisagree = 3;

/// Line-oriented output: `report <name>` followed by `key value` lines, or
/// the same pairs tab-separated.
class Report {
 public:
  explicit Report(std::string name) : name_(std::move(name)) {}

  void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  /// Splits a preformatted `key rest...` line.
  void add_line(const std::string& line) {
    const auto sp = line.find(' ');
    if (sp == std::string::npos)
      add(line, "");
    else
      add(line.substr(0, sp), line.substr(sp + 1));
  }

  std::string render(Format f) const {
    std::string out = f == Format::report ? "report " + name_ + "\n" : "report\t" + name_ + "\n";
    for (const auto& [k, v] : lines_) {
      if (f == Format::report)
        out += v.empty() ? k + "\n" : k + " " + v + "\n";
      else
        out += k + "\t" + v + "\n";
    }
    return out;
  }

 private:
  std::string name_;
  std::vector<std::pair<std::string, std::string>> lines_;
};

struct Bounds {
  std::size_t max_len = 8;
  std::size_t anticipation = 4;
  std::size_t horizon = 8;
  std::optional<std::size_t> word_bound;
  std::size_t delay = 6;
  Format format = Format::report;

  SearchBounds search() const {
    SearchBounds b;
    b.max_len = max_len;
    b.max_anticipation = anticipation;
    b.horizon = horizon;
    b.word_bound = word_bound;
    b.delay_bound = delay;
    return b;
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string horizon_text(std::size_t h) { return h == kUnbounded ? "unbounded" : std::to_string(h); }

std::string graph_output(const LabeledGraph& g, Format f) {
  if (f == Format::report) return format_graph(g);
  std::string out;
  for (const auto& e : g.edges())
    out += g.vertex_name(e.source) + "\t" + g.vertex_name(e.target) + "\t" + g.alphabet().name(e.label) + "\n";
  return out;
}

/// `left|center|right[@origin]`; left and right are the periods.
Point parse_point(const Alphabet& a, const std::string& text) {
  std::string body = text;
  std::int64_t origin = 0;
  if (const auto at = body.find('@'); at != std::string::npos) {
    try {
      origin = std::stoll(body.substr(at + 1));
    } catch (const std::exception&) {
      throw Error(Error::Kind::parse, "bad point origin in '" + text + "'");
    }
    body.resize(at);
  }
  const auto p1 = body.find('|');
  const auto p2 = p1 == std::string::npos ? std::string::npos : body.find('|', p1 + 1);
  if (p2 == std::string::npos) throw Error(Error::Kind::parse, "point must look like left|center|right[@origin]");
  auto part = [&](std::size_t from, std::size_t to) {
    const std::string s = body.substr(from, to - from);
    return s == "ε" ? Block{} : a.parse(s);
  };
  return make_point(part(0, p1), part(p1 + 1, p2), part(p2 + 1, body.size()), origin);
}

std::string format_point(const Alphabet& a, const Point& p) {
  return a.format(p.left_period) + "|" + a.format(p.center) + "|" + a.format(p.right_period) + "@" +
         std::to_string(p.origin);
}

int status_exit(ConsistencyReport::Status s) {
  switch (s) {
    case ConsistencyReport::Status::agree_positive:
    case ConsistencyReport::Status::agree_negative:
      return kExitOk;
    case ConsistencyReport::Status::inconclusive:
      return kExitInconclusive;
    case ConsistencyReport::Status::disagree:
      return kExitDisagree;
  }
  return kExitInconclusive;
}

int emit_consistency(const std::string& name, const ConsistencyReport& r, Format f) {
  Report out(name);
  out.add("status", status_name(r.status));
  for (const auto& line : r.details) out.add_line(line);
  std::cout << out.render(f);
  return status_exit(r.status);
}

std::size_t parse_count(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Error::Kind::parse, "expected a non-negative integer, got '" + s + "'");
}

// ---------------------------------------------------------------------------
// corpus run-all

struct Suite {
  Report report{"corpus"};
  bool all_pass = true;

  void criterion(int id, bool pass, const std::string& detail) {
    report.add("criterion", std::to_string(id) + " " + (pass ? "pass" : "fail") + " " + detail);
    all_pass = all_pass && pass;
  }
};

int run_all(const std::string& dir, const Bounds& bounds) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  auto graph = [&](const std::string& name) { return load_graph((root / "graphs" / name).string()); };
  auto map = [&](const std::string& name) { return load_factor_map((root / "maps" / name).string()); };
  Suite suite;
  const SearchBounds sb = bounds.search();

  {
    const LabeledGraph golden = graph("golden.graph");
    std::string counts;
    bool ok = true;
    const std::uint64_t expected[] = {2, 3, 5, 8, 13, 21};
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto c = count_blocks(golden, n);
      ok = ok && c == expected[n - 1] && c == blocks_of_length(golden, n).size();
      counts += (n > 1 ? "," : "") + std::to_string(c);
    }
    suite.criterion(1, ok, "golden counts " + counts);
  }
  {
    const LabeledGraph cover = fischer_cover(graph("even4.graph"));
    bool idempotent = true;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(root / "graphs"))
      if (entry.path().extension() == ".graph") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
      const LabeledGraph f = fischer_cover(load_graph(p.string()));
      idempotent = idempotent && canonical_form(fischer_cover(f)) == canonical_form(f);
    }
    suite.criterion(2, cover.vertex_count() == 2 && idempotent,
                    "even4 cover vertices " + std::to_string(cover.vertex_count()) + " idempotent " +
                        yes_no(idempotent) + " graphs " + std::to_string(files.size()));
  }
  {
    const LabeledGraph golden = graph("golden.graph");
    const LabeledGraph even = graph("even.graph");
    const auto g = find_synchronizing_word(golden, bounds.max_len);
    const auto e = find_synchronizing_word(even, bounds.max_len);
    const SyncVerdict zero = is_synchronizing(even, even.alphabet().parse("0"), 8);
    const bool ok = g && golden.alphabet().format(*g) == "1" && e && even.alphabet().format(*e) == "1" &&
                    zero.status == SyncVerdict::Status::not_synchronizing && zero.witness;
    std::string detail = "golden " + (g ? golden.alphabet().format(*g) : std::string("none")) + " even " +
                         (e ? even.alphabet().format(*e) : std::string("none"));
    if (zero.witness)
      detail += " even-0-witness " + even.alphabet().format(zero.witness->first) + "," +
                even.alphabet().format(zero.witness->second);
    suite.criterion(3, ok, detail);
  }
  {
    const FactorMap f = map("evenmap.code");
    const auto closing = right_closing_ae(f, sb.delay_bound);
    const auto d = degree(f, default_word_bound(f));
    const auto cert = find_decoder_block(f, sb.max_len, sb.max_anticipation);
    const bool verified = cert && verify_decoder_block(f, cert->block, cert->anticipation, 10);
    const auto t42 = check_decoder_equivalence(f, sb);
    const bool ok = closing.delay == 0u && d.degree == 1u && cert && f.codomain.alphabet().format(cert->block) == "1" &&
                    cert->anticipation == 0 && verified &&
                    t42.status == ConsistencyReport::Status::agree_positive;
    suite.criterion(4, ok,
                    "evenmap " + (cert ? format_certificate(f.codomain.alphabet(), *cert) : "decoder-block none") +
                        " status " + status_name(t42.status));
  }
  {
    const FactorMap f = map("xor.code");
    const auto d = degree(f, default_word_bound(f));
    const bool one = is_one_to_one_ae(f, default_word_bound(f));
    const auto cert = find_decoder_block(f, 8, 4);
    const auto t42 = check_decoder_equivalence(f, sb);
    const bool ok = d.degree == 2u && d.exact && !one && !cert &&
                    t42.status == ConsistencyReport::Status::agree_negative;
    suite.criterion(5, ok, "xor degree " + std::to_string(d.degree.value_or(0)) + " status " + status_name(t42.status));
  }
  {
    const FactorMap x = map("xor.code");
    const FactorMap e = map("evenmap.code");
    const auto cx = find_hyperbolic_certificate(x, sb.max_len, sb.max_anticipation, sb.extension_bound);
    const auto ce = find_hyperbolic_certificate(e, sb.max_len, sb.max_anticipation, sb.extension_bound);
    const bool ok = cx && cx->d == 2 && ce && ce->d == 1;
    suite.criterion(6, ok,
                    "xor d " + (cx ? std::to_string(cx->d) : std::string("none")) + " evenmap d " +
                        (ce ? std::to_string(ce->d) : std::string("none")));
  }
  {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(root / "maps"))
      if (entry.path().extension() == ".code") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    bool ok = true;
    std::string detail;
    for (const auto& p : files) {
      const FactorMap f = load_factor_map(p.string());
      if (!f.onto()) continue;
      const auto r = check_half_sync_lifting(f, sb);
      detail += (detail.empty() ? "" : " ") + p.stem().string() + "=" + status_name(r.status);
      ok = ok && r.status != ConsistencyReport::Status::disagree;
    }
    suite.criterion(7, ok, detail);
  }
  {
    const FactorMap id = map("identity_full2.code");
    const FactorMap x = map("xor.code");
    const auto r = check_common_extension(id, x, x, id, sb);
    const FiberProduct fp = fiber_product(x, x);
    bool commute = true;
    const FactorMap& r1 = fp.first;
    const FactorMap& r2 = fp.second;
    for (std::size_t n = 1; n <= 8 && commute; ++n)
      for (const Block& b : blocks_of_length(fp.presentation, n))
        if (apply_block(r1.code, apply_block(fp.projection1, b)) != apply_block(r2.code, apply_block(fp.projection2, b))) {
          commute = false;
          break;
        }
    suite.criterion(8, r.status == ConsistencyReport::Status::agree_positive && commute,
                    "status " + status_name(r.status) + " commute " + yes_no(commute));
  }
  {
    const ShiftOracle d = ShiftOracle::dyck({{"(", ")"}, {"[", "]"}});
    const Alphabet& a = d.alphabet();
    const bool reject = !oracle_admissible(d, a.parse("(]"));
    const bool accept = oracle_admissible(d, a.parse(")("));
    std::vector<Block> ctx;
    for (std::size_t len = 0; len <= 6; ++len)
      for (Block b(len, 0);;) {
        if (d.admits(b)) ctx.push_back(b);
        std::size_t i = len;
        while (i > 0 && ++b[i - 1] == a.size()) b[--i] = 0;
        if (i == 0) break;
      }
    // Follower equality is an equivalence, so each context is compared with
    // the first context of its signature class.
    bool implied = true;
    std::map<Block, Block> representative;
    for (const Block& u : ctx) {
      const auto [it, fresh] = representative.emplace(dyck_follower_signature(d, u), u);
      if (!fresh) implied = implied && oracle_follower_equal(d, it->second, u, 4);
    }
    const auto half = is_half_synchronizing(d, a.parse("()"), 6);
    suite.criterion(9, reject && accept && implied && half.status == HalfSyncVerdict::Status::holds_at_horizon,
                    "reject " + yes_no(reject) + " accept " + yes_no(accept) + " signature " + yes_no(implied) +
                        " half " + yes_no(half.status == HalfSyncVerdict::Status::holds_at_horizon));
  }
  suite.report.add("summary", suite.all_pass ? "pass" : "fail");
  std::cout << suite.report.render(bounds.format);
  return suite.all_pass ? kExitOk : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shiftlab: sofic shifts, covers, block codes and factor-map analysis"};
  app.require_subcommand(1);
  Bounds bounds;
  std::string format = "report";
  app.option_defaults()->always_capture_default();
  app.add_option("--max-len", bounds.max_len, "longest candidate word")->check(CLI::PositiveNumber);
  app.add_option("--anticipation", bounds.anticipation, "largest decoder anticipation")->check(CLI::PositiveNumber);
  app.add_option("--horizon", bounds.horizon, "follower-set horizon")->check(CLI::PositiveNumber);
  app.add_option("--delay", bounds.delay, "largest right-closing delay")->check(CLI::PositiveNumber);
  app.add_option("--word-bound", bounds.word_bound, "degree word bound (default computed)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "report or tsv")->check(CLI::IsMember({"report", "tsv"}));

  std::vector<std::string> args;
  std::function<int()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::size_t nargs,
                  std::function<int()> fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("args", args, "inputs")->expected(static_cast<int>(nargs))->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto out_format = [&] { return format == "tsv" ? Format::tsv : Format::report; };
  auto arg = [&](std::size_t i) -> const std::string& { return args.at(i); };

  auto* lang = group("lang", "block languages");
  leaf(lang, "blocks", "list B_n: <graph> <n>", 2, [&] {
    const LabeledGraph g = load_graph(arg(0));
    const auto blocks = blocks_of_length(g, parse_count(arg(1)));
    Report r("blocks");
    r.add("length", arg(1));
    r.add("count", std::to_string(blocks.size()));
    for (const auto& b : blocks) r.add("block", g.alphabet().format(b));
    std::cout << r.render(out_format());
    return kExitOk;
  });
  leaf(lang, "count", "|B_n|: <graph> <n>", 2, [&] {
    const LabeledGraph g = load_graph(arg(0));
    Report r("count");
    r.add("length", arg(1));
    r.add("count", std::to_string(count_blocks(g, parse_count(arg(1)))));
    std::cout << r.render(out_format());
    return kExitOk;
  });

  auto* cover = group("cover", "right-resolving covers");
  leaf(cover, "subset", "subset cover: <graph>", 1, [&] {
    std::cout << graph_output(subset_cover(load_graph(arg(0))), out_format());
    return kExitOk;
  });
  leaf(cover, "fischer", "Fischer cover: <graph>", 1, [&] {
    std::cout << graph_output(fischer_cover(load_graph(arg(0))), out_format());
    return kExitOk;
  });
  leaf(cover, "resolving", "right-resolving test: <graph>", 1, [&] {
    Report r("right-resolving");
    r.add("verdict", yes_no(is_right_resolving(load_graph(arg(0)))));
    std::cout << r.render(out_format());
    return kExitOk;
  });

  auto* sync = group("sync", "synchronizing blocks");
  leaf(sync, "find", "least synchronizing word: <graph>", 1, [&] {
    const LabeledGraph g = load_graph(arg(0));
    const auto w = find_synchronizing_word(g, bounds.max_len);
    Report r("sync-find");
    r.add("word", w ? g.alphabet().format(*w) : "none");
    std::cout << r.render(out_format());
    return w ? kExitOk : kExitInconclusive;
  });
  leaf(sync, "check", "synchronizing test: <graph> <block>", 2, [&] {
    const LabeledGraph g = load_graph(arg(0));
    const SyncVerdict v = is_synchronizing(g, g.alphabet().parse(arg(1)), bounds.max_len);
    Report r("sync-check");
    r.add("block", arg(1));
    r.add("verdict", v.status == SyncVerdict::Status::synchronizing ? "synchronizing" : "not-synchronizing");
    if (v.witness)
      r.add("witness", g.alphabet().format(v.witness->first) + " " + g.alphabet().format(v.witness->second));
    std::cout << r.render(out_format());
    return kExitOk;
  });
  leaf(sync, "half", "half-synchronizing test: <oracle-or-graph> <block>", 2, [&] {
    const ShiftOracle o = load_oracle(arg(0));
    const HalfSyncVerdict v = is_half_synchronizing(o, o.alphabet().parse(arg(1)), bounds.horizon);
    Report r("sync-half");
    r.add("block", o.alphabet().format(v.block));
    r.add("horizon", std::to_string(v.horizon));
    r.add("verdict", v.status == HalfSyncVerdict::Status::holds_at_horizon ? "holds-at-horizon" : "refuted");
    if (v.transitive_ray_prefix) r.add("context", o.alphabet().format(*v.transitive_ray_prefix));
    if (v.refutation) r.add("refutation", o.alphabet().format(*v.refutation));
    r.add("exact", yes_no(v.exact));
    std::cout << r.render(out_format());
    return kExitOk;
  });

  auto* code = group("code", "sliding block codes");
  leaf(code, "apply", "apply to a block or a point left|center|right[@origin]: <code> <input>", 2, [&] {
    const FactorMap f = load_factor_map(arg(0));
    Report r("apply");
    if (arg(1).find('|') != std::string::npos) {
      const Point p = parse_point(f.code.domain_alphabet(), arg(1));
      r.add("point", format_point(f.code.codomain_alphabet(), apply_code(f.code, p)));
    } else {
      const Block b = f.code.domain_alphabet().parse(arg(1));
      r.add("block", f.code.codomain_alphabet().format(apply_block(f.code, b)));
    }
    std::cout << r.render(out_format());
    return kExitOk;
  });
  leaf(code, "compose", "outer after inner: <outer-code> <inner-code>", 2, [&] {
    const FactorMap outer = load_factor_map(arg(0));
    const FactorMap inner = load_factor_map(arg(1));
    if (!language_contained(inner.codomain, outer.domain) || !language_contained(outer.domain, inner.codomain))
      throw Error(Error::Kind::codomain_mismatch, "inner codomain differs from outer domain");
    std::cout << format_code(restrict_to(compose(outer.code, inner.code), inner.domain));
    return kExitOk;
  });
  leaf(code, "recode", "1-block recoding: <code>", 1, [&] {
    const FactorMap r = recode_to_one_block(load_factor_map(arg(0)));
    std::cout << graph_output(r.domain, out_format()) << format_code(r.code);
    return kExitOk;
  });
  leaf(code, "image", "image presentation: <code>", 1, [&] {
    std::cout << graph_output(image_presentation(recode_to_one_block(load_factor_map(arg(0)))), out_format());
    return kExitOk;
  });

  auto* mapc = group("map", "factor-map analysis");
  leaf(mapc, "degree", "degree and magic word: <code>", 1, [&] {
    const FactorMap f = load_factor_map(arg(0));
    Report r("degree");
    try {
      const DegreeReport d = degree(f, bounds.word_bound.value_or(default_word_bound(f)));
      r.add("finite-to-one", "yes");
      r.add("degree", std::to_string(*d.degree));
      r.add("exact", yes_no(d.exact));
      r.add("exactness-bound", std::to_string(d.exactness_bound));
      r.add("magic-word", f.codomain.alphabet().format(*d.magic_word));
      std::string counts;
      for (auto c : d.details) counts += (counts.empty() ? "" : " ") + std::to_string(c);
      r.add("preimage-counts", counts);
      std::cout << r.render(out_format());
      return d.exact ? kExitOk : kExitInconclusive;
    } catch (const Error& e) {
      if (e.kind() != Error::Kind::not_finite_to_one) throw;
      r.add("finite-to-one", "no");
      std::cout << r.render(out_format());
      return kExitOk;
    }
  });
  leaf(mapc, "closing", "right-closing a.e.: <code>", 1, [&] {
    const FactorMap f = load_factor_map(arg(0));
    const ClosingReport c = right_closing_ae(f, bounds.delay);
    Report r("closing");
    r.add("right-closing", yes_no(c.right_closing_ae));
    if (c.delay) r.add("delay", std::to_string(*c.delay));
    if (c.beyond_bound) r.add("delay", "beyond-bound");
    if (c.witness) {
      const FactorMap recoded = recode_to_one_block(f);
      const Alphabet& a = recoded.domain.alphabet();
      r.add("witness-context", a.format(c.witness->context));
      r.add("witness-first", a.format(c.witness->first));
      r.add("witness-second", a.format(c.witness->second));
    }
    std::cout << r.render(out_format());
    return c.beyond_bound ? kExitInconclusive : kExitOk;
  });
  leaf(mapc, "onetoone", "1-1 a.e.: <code>", 1, [&] {
    const FactorMap f = load_factor_map(arg(0));
    Report r("one-to-one");
    bool exact = true;
    std::string verdict;
    try {
      const DegreeReport d = degree(f, bounds.word_bound.value_or(default_word_bound(f)));
      exact = d.exact;
      verdict = yes_no(d.degree == 1u);
    } catch (const Error& e) {
      if (e.kind() != Error::Kind::not_finite_to_one) throw;
      verdict = "no";
    }
    r.add("one-to-one-ae", exact ? verdict : "unknown");
    std::cout << r.render(out_format());
    return exact ? kExitOk : kExitInconclusive;
  });
  leaf(mapc, "decoder", "decoder-block search: <code>", 1, [&] {
    const FactorMap f = load_factor_map(arg(0));
    const auto cert = find_decoder_block(f, bounds.max_len, bounds.anticipation);
    Report r("decoder");
    if (cert) {
      r.add_line(format_certificate(f.codomain.alphabet(), *cert));
      r.add("verified-horizon", horizon_text(cert->verified_horizon));
    } else {
      r.add("decoder-block", "none");
    }
    std::cout << r.render(out_format());
    return cert ? kExitOk : kExitInconclusive;
  });
  leaf(mapc, "hyperbolic", "hyperbolicity certificate: <code>", 1, [&] {
    const FactorMap f = load_factor_map(arg(0));
    const auto cert = find_hyperbolic_certificate(f, bounds.max_len, bounds.anticipation, 10);
    Report r("hyperbolic");
    if (cert) {
      r.add_line(format_certificate(recode_to_one_block(f).domain.alphabet(), f.codomain.alphabet(), *cert));
      r.add("extension-horizon", horizon_text(cert->extension_horizon));
    } else {
      r.add("hyperbolic", "none");
    }
    std::cout << r.render(out_format());
    return cert ? kExitOk : kExitInconclusive;
  });

  auto* fiber = group("fiber", "fiber products");
  leaf(fiber, "build", "fiber product: <code1> <code2>", 2, [&] {
    const FiberProduct fp = fiber_product(load_factor_map(arg(0)), load_factor_map(arg(1)));
    Report r("fiber");
    r.add("vertices", std::to_string(fp.presentation.vertex_count()));
    r.add("edges", std::to_string(fp.presentation.edge_count()));
    for (std::size_t i = 0; i < fp.components.size(); ++i) {
      const auto& c = fp.components[i];
      std::string names;
      for (const auto& v : c.graph.vertex_names()) names += " " + v;
      r.add("component", std::to_string(i) + " both-onto " + yes_no(c.both_onto) + " vertices" + names);
    }
    std::cout << r.render(out_format());
    return kExitOk;
  });

  auto* check = group("check", "consistency harnesses");
  leaf(check, "t42", "right-closing a.e. and 1-1 a.e. versus decoder blocks: <code>", 1, [&] {
    return emit_consistency("t42", check_decoder_equivalence(load_factor_map(arg(0)), bounds.search()), out_format());
  });
  leaf(check, "t33", "half-synchronized lifting under a hyperbolic map: <code>", 1, [&] {
    return emit_consistency("t33", check_half_sync_lifting(load_factor_map(arg(0)), bounds.search()), out_format());
  });
  leaf(check, "t34", "common hyperbolic extensions: <f_XV> <f_YV> <f_YW> <f_ZW>", 4, [&] {
    const auto r = check_common_extension(load_factor_map(arg(0)), load_factor_map(arg(1)), load_factor_map(arg(2)),
                                          load_factor_map(arg(3)), bounds.search());
    return emit_consistency("t34", r, out_format());
  });

  auto* corpus = group("corpus", "bundled corpus");
  auto* run = corpus->add_subcommand("run-all", "run every corpus check: [dir]");
  run->fallthrough();
  run->add_option("dir", args, "corpus directory")->expected(0, 1);
  run->callback([&] {
    action = [&] { return run_all(args.empty() ? std::string(SHIFTLAB_CORPUS_DIR) : args.front(), bounds); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  bounds.format = out_format();
  try {
    return action ? action() : kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

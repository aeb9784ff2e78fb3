#include "shiftlab/codes.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include "shiftlab/covers.hpp"

namespace shiftlab {

namespace {

std::string block_text(const Alphabet& a, const Block& b) { return a.format(b); }

std::size_t surjectivity_horizon_of(const LabeledGraph& image, const LabeledGraph& codomain) {
  const bool onto = is_irreducible(image) && is_irreducible(codomain)
                        ? same_irreducible_shift(image, codomain)
                        : language_contained(codomain, image);
  if (onto) return kUnbounded;
  std::size_t n = 0;
  while (n < 16 && blocks_of_length(image, n + 1) == blocks_of_length(codomain, n + 1)) ++n;
  return n;
}

}  // namespace

BlockCode::BlockCode(Alphabet domain, Alphabet codomain, std::size_t memory, std::size_t anticipation,
                     std::map<Block, Symbol> window_map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      memory_(memory),
      anticipation_(anticipation),
      map_(std::move(window_map)) {
  for (const auto& [w, s] : map_) {
    if (w.size() != window_length() || !domain_.contains(w))
      throw Error(Error::Kind::invalid_argument, "malformed window in block code");
    if (s >= codomain_.size()) throw Error(Error::Kind::invalid_argument, "image symbol outside codomain alphabet");
  }
}

std::optional<Symbol> BlockCode::lookup(const Block& window) const {
  auto it = map_.find(window);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

BlockCode identity_code(const LabeledGraph& g) {
  std::map<Block, Symbol> m;
  for (const auto& b : blocks_of_length(g, 1)) m.emplace(b, b.front());
  return BlockCode(g.alphabet(), g.alphabet(), 0, 0, std::move(m));
}

BlockCode symbol_code(const Alphabet& domain, const Alphabet& codomain, const std::vector<Symbol>& table) {
  std::map<Block, Symbol> m;
  for (std::size_t s = 0; s < table.size(); ++s) m.emplace(Block{static_cast<Symbol>(s)}, table[s]);
  return BlockCode(domain, codomain, 0, 0, std::move(m));
}

Block apply_block(const BlockCode& c, const Block& w) {
  const std::size_t len = c.window_length();
  if (w.size() < len)
    throw Error(Error::Kind::block_too_short, "block of length " + std::to_string(w.size()) +
                                                  " is shorter than the window length " + std::to_string(len));
  Block out;
  out.reserve(w.size() - len + 1);
  Block window(len);
  for (std::size_t i = 0; i + len <= w.size(); ++i) {
    std::copy(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + len),
              window.begin());
    auto s = c.lookup(window);
    if (!s)
      throw Error(Error::Kind::inadmissible_block,
                  "window " + block_text(c.domain_alphabet(), window) + " at offset " + std::to_string(i) +
                      " is not mapped");
    out.push_back(*s);
  }
  return out;
}

Point apply_code(const BlockCode& c, const Point& p) {
  const auto m = static_cast<std::int64_t>(c.memory());
  const auto n = static_cast<std::int64_t>(c.anticipation());
  // Work in center coordinates: j = i + origin.
  auto image_at = [&](std::int64_t j) {
    Block window;
    for (std::int64_t t = j - m; t <= j + n; ++t) window.push_back(p.at(t - p.origin));
    auto s = c.lookup(window);
    if (!s)
      throw Error(Error::Kind::inadmissible_block,
                  "window " + block_text(c.domain_alphabet(), window) + " at coordinate " +
                      std::to_string(j - p.origin) + " is not mapped");
    return *s;
  };
  // Left of `lo` the windows see only the left period, right of `hi` only
  // the right period, so the image is periodic there with the same periods.
  const std::int64_t lo = -n;
  const std::int64_t hi = static_cast<std::int64_t>(p.center.size()) + m;
  Point out;
  for (std::int64_t j = lo - static_cast<std::int64_t>(p.left_period.size()); j < lo; ++j)
    out.left_period.push_back(image_at(j));
  for (std::int64_t j = lo; j < hi; ++j) out.center.push_back(image_at(j));
  for (std::int64_t j = hi; j < hi + static_cast<std::int64_t>(p.right_period.size()); ++j)
    out.right_period.push_back(image_at(j));
  out.origin = p.origin - lo;
  return out;
}

BlockCode compose(const BlockCode& c2, const BlockCode& c1) {
  if (!(c1.codomain_alphabet() == c2.domain_alphabet()))
    throw Error(Error::Kind::alphabet_mismatch, "codomain of the inner code differs from domain of the outer code");
  const std::size_t l1 = c1.window_length();
  const std::size_t l2 = c2.window_length();
  const std::size_t len = l1 + l2 - 1;

  std::map<Block, std::vector<Symbol>> next;  // (l1-1)-prefix -> continuations
  for (const auto& [w, s] : c1.window_map()) next[Block(w.begin(), w.end() - 1)].push_back(w.back());

  std::map<Block, Symbol> out;
  std::vector<Block> frontier;
  for (const auto& [w, s] : c1.window_map()) frontier.push_back(w);
  for (std::size_t have = l1; have < len; ++have) {
    std::vector<Block> grown;
    for (const auto& b : frontier) {
      auto it = next.find(Block(b.end() - static_cast<std::ptrdiff_t>(l1 - 1), b.end()));
      if (it == next.end()) continue;
      for (Symbol s : it->second) {
        Block nb = b;
        nb.push_back(s);
        grown.push_back(std::move(nb));
      }
    }
    frontier = std::move(grown);
  }
  for (const auto& b : frontier) {
    const Block mid = apply_block(c1, b);
    if (auto s = c2.lookup(mid)) out.emplace(b, *s);
  }
  return BlockCode(c1.domain_alphabet(), c2.codomain_alphabet(), c1.memory() + c2.memory(),
                   c1.anticipation() + c2.anticipation(), std::move(out));
}

BlockCode restrict_to(const BlockCode& c, const LabeledGraph& domain) {
  if (!(c.domain_alphabet() == domain.alphabet()))
    throw Error(Error::Kind::alphabet_mismatch, "code and domain alphabets differ");
  std::map<Block, Symbol> out;
  for (const auto& w : blocks_of_length(domain, c.window_length())) {
    auto s = c.lookup(w);
    if (!s)
      throw Error(Error::Kind::invalid_argument,
                  "admissible window " + block_text(c.domain_alphabet(), w) + " is not mapped");
    out.emplace(w, *s);
  }
  return BlockCode(c.domain_alphabet(), c.codomain_alphabet(), c.memory(), c.anticipation(), std::move(out));
}

HigherBlock higher_block(const LabeledGraph& g, std::size_t n) {
  if (n == 0) throw Error(Error::Kind::invalid_argument, "higher block order must be at least 1");
  if (n == 1) return {g, identity_code(g), identity_code(g)};

  const auto words = blocks_of_length(g, n);
  std::vector<std::string> names;
  std::map<Block, Symbol> word_id;
  for (const auto& w : words) {
    word_id.emplace(w, static_cast<Symbol>(names.size()));
    names.push_back(g.alphabet().format(w));
  }
  Alphabet hb_alphabet(names);

  // Vertices are paths of n-1 edges, edges are paths of n edges.
  std::vector<std::vector<std::size_t>> paths;
  std::function<void(std::vector<std::size_t>&)> extend = [&](std::vector<std::size_t>& path) {
    if (path.size() == n - 1) {
      paths.push_back(path);
      return;
    }
    for (std::size_t ei : g.out_edges(g.edge(path.back()).target)) {
      path.push_back(ei);
      extend(path);
      path.pop_back();
    }
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (std::size_t ei : g.out_edges(static_cast<VertexId>(v))) {
      std::vector<std::size_t> path{ei};
      extend(path);
    }
  std::sort(paths.begin(), paths.end());
  std::map<std::vector<std::size_t>, VertexId> path_id;
  std::vector<std::string> vertex_names;
  for (const auto& p : paths) {
    std::string name = g.vertex_name(g.edge(p.front()).source);
    for (std::size_t ei : p) name += "|" + g.alphabet().name(g.edge(ei).label) + "|" + g.vertex_name(g.edge(ei).target);
    path_id.emplace(p, static_cast<VertexId>(vertex_names.size()));
    vertex_names.push_back(std::move(name));
  }
  std::vector<Edge> edges;
  for (const auto& p : paths) {
    for (std::size_t ei : g.out_edges(g.edge(p.back()).target)) {
      std::vector<std::size_t> full = p;
      full.push_back(ei);
      Block label;
      for (std::size_t e : full) label.push_back(g.edge(e).label);
      const std::vector<std::size_t> tail(full.begin() + 1, full.end());
      edges.push_back({path_id.at(p), path_id.at(tail), word_id.at(label)});
    }
  }
  LabeledGraph graph = trim_to_essential(LabeledGraph(hb_alphabet, std::move(vertex_names), std::move(edges)));

  std::vector<Symbol> first(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) first[i] = words[i].front();
  BlockCode projection = symbol_code(hb_alphabet, g.alphabet(), first);
  BlockCode encoder(g.alphabet(), hb_alphabet, 0, n - 1, word_id);
  return {std::move(graph), std::move(projection), std::move(encoder)};
}

LabeledGraph image_presentation(const FactorMap& f) {
  if (!f.code.one_block()) throw Error(Error::Kind::invalid_argument, "image_presentation needs a 1-block map");
  std::vector<Symbol> table(f.domain.alphabet().size(), 0);
  for (const auto& [w, s] : f.code.window_map()) table[w.front()] = s;
  return relabel(f.domain, f.code.codomain_alphabet(), table);
}

FactorMap recode_to_one_block(const FactorMap& f) {
  if (f.code.one_block()) return f;
  const HigherBlock hb = higher_block(f.domain, f.code.window_length());
  const Alphabet& alphabet = hb.graph.alphabet();
  std::vector<Symbol> table(alphabet.size());
  for (std::size_t s = 0; s < alphabet.size(); ++s) {
    auto img = f.code.lookup(f.domain.alphabet().parse(alphabet.name(static_cast<Symbol>(s))));
    if (!img) throw Error(Error::Kind::invalid_argument, "code does not map an admissible window");
    table[s] = *img;
  }
  return FactorMap{symbol_code(alphabet, f.code.codomain_alphabet(), table), hb.graph, f.codomain,
                   f.surjectivity_horizon};
}

BlockCode recoding_conjugacy(const FactorMap& f) {
  const HigherBlock hb = higher_block(f.domain, f.code.window_length());
  return BlockCode(f.domain.alphabet(), hb.graph.alphabet(), f.code.memory(), f.code.anticipation(),
                   hb.encoder.window_map());
}

FactorMap make_factor_map(BlockCode code, LabeledGraph domain, LabeledGraph codomain) {
  if (!(code.domain_alphabet() == domain.alphabet()))
    throw Error(Error::Kind::alphabet_mismatch, "code and domain alphabets differ");
  if (!(code.codomain_alphabet() == codomain.alphabet()))
    throw Error(Error::Kind::alphabet_mismatch, "code and codomain alphabets differ");
  if (trim_to_essential(domain).vertex_count() != domain.vertex_count() ||
      trim_to_essential(codomain).vertex_count() != codomain.vertex_count())
    throw Error(Error::Kind::invalid_argument, "factor map presentations must be essential");

  const auto windows = blocks_of_length(domain, code.window_length());
  const std::set<Block> admissible(windows.begin(), windows.end());
  for (const auto& [w, s] : code.window_map())
    if (!admissible.count(w))
      throw Error(Error::Kind::invalid_argument,
                  "window " + domain.alphabet().format(w) + " is not admissible in the domain");
  for (const auto& w : windows)
    if (!code.lookup(w))
      throw Error(Error::Kind::invalid_argument, "admissible window " + domain.alphabet().format(w) + " is not mapped");

  FactorMap f{std::move(code), std::move(domain), std::move(codomain), 0};
  const LabeledGraph image = image_presentation(recode_to_one_block(f));
  if (!language_contained(image, f.codomain))
    throw Error(Error::Kind::invalid_argument, "image of the code is not contained in the codomain");
  f.surjectivity_horizon = surjectivity_horizon_of(image, f.codomain);
  return f;
}

FactorMap identity_map(const LabeledGraph& g) { return make_factor_map(identity_code(g), g, g); }

BlockCode parse_code(std::string_view text, const LabeledGraph& domain, const LabeledGraph& codomain) {
  std::optional<std::pair<std::size_t, std::size_t>> shape;
  std::map<Block, Symbol> map;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(Error::Kind::parse, "line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "domain" || tok[0] == "codomain") {
      if (tok.size() != 2) fail("expected: " + tok[0] + " <graph-file>");
    } else if (tok[0] == "code") {
      if (shape) fail("code header declared twice");
      if (tok.size() != 5 || tok[1] != "memory" || tok[3] != "anticipation")
        fail("expected: code memory <m> anticipation <n>");
      try {
        shape.emplace(std::stoul(tok[2]), std::stoul(tok[4]));
      } catch (const std::exception&) {
        fail("memory and anticipation must be non-negative integers");
      }
    } else if (tok[0] == "map") {
      if (!shape) fail("map before code header");
      if (tok.size() != 3) fail("expected: map <window> <symbol>");
      Block w;
      try {
        w = domain.alphabet().parse(tok[1]);
      } catch (const Error& e) {
        fail(e.what());
      }
      if (w.size() != shape->first + shape->second + 1)
        fail("window " + tok[1] + " has the wrong length");
      if (!is_admissible(domain, w)) fail("window " + tok[1] + " is not admissible in the domain");
      auto s = codomain.alphabet().find(tok[2]);
      if (!s) fail("undeclared codomain symbol '" + tok[2] + "'");
      if (!map.emplace(w, *s).second) fail("window " + tok[1] + " mapped twice");
    } else {
      fail("unknown keyword '" + tok[0] + "'");
    }
  }
  if (!shape) throw Error(Error::Kind::parse, "missing code header");
  for (const auto& w : blocks_of_length(domain, shape->first + shape->second + 1))
    if (!map.count(w))
      throw Error(Error::Kind::parse, "admissible window " + domain.alphabet().format(w) + " is not mapped");
  return BlockCode(domain.alphabet(), codomain.alphabet(), shape->first, shape->second, std::move(map));
}

FactorMap load_factor_map(const std::string& path) {
  const std::string text = read_file(path);
  std::optional<std::string> domain_path, codomain_path;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string kw, arg;
      ls >> kw >> arg;
      const auto base = std::filesystem::path(path).parent_path();
      auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        return (fp.is_relative() ? base / fp : fp).string();
      };
      if (kw == "domain" && !arg.empty()) domain_path = resolve(arg);
      if (kw == "codomain" && !arg.empty()) codomain_path = resolve(arg);
    }
  }
  if (!domain_path || !codomain_path)
    throw Error(Error::Kind::parse, path + ": code file must name its domain and codomain graphs");
  LabeledGraph domain = load_graph(*domain_path);
  LabeledGraph codomain = load_graph(*codomain_path);
  try {
    BlockCode code = parse_code(text, domain, codomain);
    return make_factor_map(std::move(code), std::move(domain), std::move(codomain));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string format_code(const BlockCode& c) {
  std::string out = "code memory " + std::to_string(c.memory()) + " anticipation " +
                    std::to_string(c.anticipation()) + "\n";
  for (const auto& [w, s] : c.window_map())
    out += "map " + c.domain_alphabet().format(w) + " " + c.codomain_alphabet().name(s) + "\n";
  return out;
}

}  // namespace shiftlab

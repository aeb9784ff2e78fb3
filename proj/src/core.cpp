#include "shiftlab/core.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "shiftlab/kernels.hpp"

namespace shiftlab {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw Error(Error::Kind::parse, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> symbols) : names_(std::move(symbols)) {
  if (names_.empty()) throw Error(Error::Kind::invalid_argument, "alphabet must be non-empty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || std::any_of(n.begin(), n.end(), [](unsigned char c) { return std::isspace(c); }))
      throw Error(Error::Kind::invalid_argument, "invalid symbol name '" + n + "'");
    if (!index_.emplace(n, static_cast<Symbol>(i)).second)
      throw Error(Error::Kind::invalid_argument, "duplicate symbol '" + n + "'");
    if (n.size() != 1) compact_ = false;
  }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::symbol(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw Error(Error::Kind::invalid_argument, "unknown symbol '" + std::string(name) + "'");
}

std::string Alphabet::format(const Block& block) const {
  if (block.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0 && !compact_) out += '.';
    out += name(block[i]);
  }
  return out;
}

Block Alphabet::parse(std::string_view text) const {
  Block out;
  if (text.empty() || text == "ε") return out;
  if (text.find('.') != std::string_view::npos && !find(".")) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t dot = text.find('.', pos);
      const auto piece = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
      out.push_back(symbol(piece));
      if (dot == std::string_view::npos) break;
      pos = dot + 1;
    }
    return out;
  }
  if (compact_) {
    for (char c : text) out.push_back(symbol(std::string_view(&c, 1)));
    return out;
  }
  // Greedy longest match for multi-character names.
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::optional<Symbol> best;
    std::size_t best_len = 0;
    for (std::size_t s = 0; s < names_.size(); ++s) {
      const auto& n = names_[s];
      if (n.size() > best_len && text.substr(pos, n.size()) == n) {
        best = static_cast<Symbol>(s);
        best_len = n.size();
      }
    }
    if (!best)
      throw Error(Error::Kind::invalid_argument, "cannot tokenize block '" + std::string(text) + "'");
    out.push_back(*best);
    pos += best_len;
  }
  return out;
}

bool Alphabet::contains(const Block& block) const noexcept {
  return std::all_of(block.begin(), block.end(), [&](Symbol s) { return s < names_.size(); });
}

// ---------------------------------------------------------------------------
// Points

Point make_point(Block left_period, Block center, Block right_period, std::int64_t origin) {
  if (left_period.empty() || right_period.empty())
    throw Error(Error::Kind::invalid_argument, "point periods must be non-empty");
  return Point{std::move(left_period), std::move(center), std::move(right_period), origin};
}

Symbol Point::at(std::int64_t i) const {
  const std::int64_t j = i + origin;
  const auto c = static_cast<std::int64_t>(center.size());
  if (j < 0) {
    const auto l = static_cast<std::int64_t>(left_period.size());
    return left_period[static_cast<std::size_t>(floor_mod(j, l))];
  }
  if (j < c) return center[static_cast<std::size_t>(j)];
  const auto r = static_cast<std::int64_t>(right_period.size());
  return right_period[static_cast<std::size_t>((j - c) % r)];
}

Point shift(const Point& p, std::int64_t k) {
  Point q = p;
  q.origin += k;
  return q;
}

Block point_window(const Point& p, std::int64_t i, std::int64_t j) {
  if (i > j) throw Error(Error::Kind::invalid_argument, "point_window requires i <= j");
  Block out;
  out.reserve(static_cast<std::size_t>(j - i + 1));
  for (std::int64_t t = i; t <= j; ++t) out.push_back(p.at(t));
  return out;
}

bool same_sequence(const Point& a, const Point& b) {
  // Below `lo` both sequences are purely left-periodic and above `hi` purely
  // right-periodic, so one common period on each side settles equality.
  const std::int64_t lo = std::min(-a.origin, -b.origin);
  const std::int64_t hi = std::max(static_cast<std::int64_t>(a.center.size()) - a.origin,
                                   static_cast<std::int64_t>(b.center.size()) - b.origin);
  const auto left = std::lcm(static_cast<std::int64_t>(a.left_period.size()),
                             static_cast<std::int64_t>(b.left_period.size()));
  const auto right = std::lcm(static_cast<std::int64_t>(a.right_period.size()),
                              static_cast<std::int64_t>(b.right_period.size()));
  for (std::int64_t i = lo - left; i <= hi + right; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// LabeledGraph

LabeledGraph::LabeledGraph(Alphabet alphabet, std::vector<std::string> vertices, std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string> seen_names;
  for (const auto& v : vertices_) {
    if (v.empty() || !seen_names.insert(v).second)
      throw Error(Error::Kind::invalid_argument, "duplicate or empty vertex name '" + v + "'");
  }
  std::set<Edge> seen_edges;
  for (const auto& e : edges_) {
    if (e.source >= vertices_.size() || e.target >= vertices_.size())
      throw Error(Error::Kind::invalid_argument, "edge endpoint is not a declared vertex");
    if (e.label >= alphabet_.size())
      throw Error(Error::Kind::invalid_argument, "edge label is not in the alphabet");
    if (!seen_edges.insert(e).second)
      throw Error(Error::Kind::invalid_argument,
                  "duplicate edge " + vertices_[e.source] + " " + vertices_[e.target] + " " +
                      alphabet_.name(e.label));
  }
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_[edges_[i].source].push_back(i);
    in_[edges_[i].target].push_back(i);
  }
  for (auto& list : out_) {
    std::sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) {
      return std::tie(edges_[x].label, edges_[x].target) < std::tie(edges_[y].label, edges_[y].target);
    });
  }
}

std::optional<VertexId> LabeledGraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return static_cast<VertexId>(i);
  return std::nullopt;
}

VertexSet all_vertices(const LabeledGraph& g) {
  VertexSet out(g.vertex_count());
  std::iota(out.begin(), out.end(), VertexId{0});
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const VertexSet& keep) {
  std::vector<std::int64_t> remap(g.vertex_count(), -1);
  std::vector<std::string> names;
  for (VertexId v : keep) {
    remap[v] = static_cast<std::int64_t>(names.size());
    names.push_back(g.vertex_name(v));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (remap[e.source] >= 0 && remap[e.target] >= 0)
      edges.push_back({static_cast<VertexId>(remap[e.source]), static_cast<VertexId>(remap[e.target]), e.label});
  }
  return LabeledGraph(g.alphabet(), std::move(names), std::move(edges));
}

LabeledGraph trim_to_essential(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  for (const auto& e : g.edges()) {
    ++outdeg[e.source];
    ++indeg[e.target];
  }
  std::vector<VertexId> work;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0 || outdeg[v] == 0) work.push_back(static_cast<VertexId>(v));
  while (!work.empty()) {
    const VertexId v = work.back();
    work.pop_back();
    if (!alive[v]) continue;
    alive[v] = false;
    for (std::size_t ei : g.out_edges(v)) {
      const VertexId t = g.edge(ei).target;
      if (alive[t] && --indeg[t] == 0) work.push_back(t);
    }
    for (std::size_t ei : g.in_edges(v)) {
      const VertexId s = g.edge(ei).source;
      if (alive[s] && --outdeg[s] == 0) work.push_back(s);
    }
  }
  VertexSet keep;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) keep.push_back(static_cast<VertexId>(v));
  return induced_subgraph(g, keep);
}

LabeledGraph relabel(const LabeledGraph& g, const Alphabet& alphabet, const std::vector<Symbol>& label_map) {
  std::set<Edge> edges;
  for (const auto& e : g.edges()) edges.insert({e.source, e.target, label_map.at(e.label)});
  std::vector<Edge> ordered(edges.begin(), edges.end());
  return LabeledGraph(alphabet, g.vertex_names(), std::move(ordered));
}

// Tarjan, iterative.
std::vector<VertexSet> nontrivial_components(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<VertexSet> comps;
  std::int64_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<VertexId, std::size_t>> call{{static_cast<VertexId>(root), 0}};
    index[root] = low[root] = counter++;
    stack.push_back(static_cast<VertexId>(root));
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      const auto& out = g.out_edges(v);
      if (next < out.size()) {
        const VertexId w = g.edge(out[next++]).target;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        VertexSet comp;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        bool has_edge = false;
        for (VertexId u : comp)
          for (std::size_t ei : g.out_edges(u))
            if (std::binary_search(comp.begin(), comp.end(), g.edge(ei).target)) has_edge = true;
        if (has_edge) comps.push_back(std::move(comp));
      }
      const VertexId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

bool is_irreducible(const LabeledGraph& g) {
  if (g.empty()) return false;
  const auto comps = nontrivial_components(g);
  return comps.size() == 1 && comps.front().size() == g.vertex_count();
}

VertexSet step_set(const LabeledGraph& g, const VertexSet& from, Symbol a) {
  VertexSet out;
  for (VertexId v : from)
    for (std::size_t ei : g.out_edges(v))
      if (g.edge(ei).label == a) out.push_back(g.edge(ei).target);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet image_set(const LabeledGraph& g, const Block& w, const VertexSet& start) {
  VertexSet cur = start;
  for (Symbol a : w) {
    if (cur.empty()) break;
    cur = step_set(g, cur, a);
  }
  return cur;
}

bool is_admissible(const LabeledGraph& g, const Block& w) {
  if (g.empty()) return false;
  return !image_set(g, w, all_vertices(g)).empty();
}

std::int32_t SubsetAutomaton::run(std::int32_t from, const Block& w) const {
  std::int32_t s = from;
  for (Symbol a : w) {
    if (s < 0) return s;
    s = transitions[static_cast<std::size_t>(s)][a];
  }
  return s;
}

SubsetAutomaton determinize(const LabeledGraph& g) {
  SubsetAutomaton a;
  if (g.empty()) return a;
  std::map<VertexSet, std::int32_t> ids;
  a.states.push_back(all_vertices(g));
  ids.emplace(a.states.front(), 0);
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    std::vector<std::int32_t> row(g.alphabet().size(), -1);
    for (std::size_t sym = 0; sym < g.alphabet().size(); ++sym) {
      VertexSet next = step_set(g, a.states[s], static_cast<Symbol>(sym));
      if (next.empty()) continue;
      auto [it, inserted] = ids.emplace(next, static_cast<std::int32_t>(a.states.size()));
      if (inserted) a.states.push_back(std::move(next));
      row[sym] = it->second;
    }
    a.transitions.push_back(std::move(row));
  }
  return a;
}

std::vector<Block> blocks_of_length(const LabeledGraph& g, std::size_t n) {
  if (g.empty()) return {};
  const SubsetAutomaton a = determinize(g);
  return kernels::enumerate_words(a, 0, n, g.alphabet().size());
}

std::uint64_t count_blocks(const LabeledGraph& g, std::size_t n) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& out = g.out_edges(static_cast<VertexId>(v));
    for (std::size_t i = 1; i < out.size(); ++i)
      if (g.edge(out[i]).label == g.edge(out[i - 1]).label)
        throw Error(Error::Kind::not_right_resolving,
                    "count_blocks requires a right-resolving graph (vertex " +
                        g.vertex_name(static_cast<VertexId>(v)) + ")");
  }
  if (g.empty()) return 0;
  // Transfer vector over the determinized presentation started from the
  // full vertex set: each word is counted along its unique run.
  const SubsetAutomaton a = determinize(g);
  std::vector<std::uint64_t> weight(a.states.size(), 0);
  weight[0] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::uint64_t> next(a.states.size(), 0);
    for (std::size_t s = 0; s < a.states.size(); ++s) {
      if (weight[s] == 0) continue;
      for (std::int32_t t : a.transitions[s]) {
        if (t < 0) continue;
        auto& slot = next[static_cast<std::size_t>(t)];
        if (__builtin_add_overflow(slot, weight[s], &slot))
          throw Error(Error::Kind::overflow, "block count exceeds 64 bits");
      }
    }
    weight = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : weight)
    if (__builtin_add_overflow(total, w, &total)) throw Error(Error::Kind::overflow, "block count exceeds 64 bits");
  return total;
}

// ---------------------------------------------------------------------------
// Text format

LabeledGraph parse_graph(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<std::string> vertices;
  std::map<std::string, VertexId, std::less<>> vertex_ids;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;

    const std::string& kw = tok[0];
    if (kw == "alphabet") {
      if (alphabet) parse_error(line_no, "alphabet declared twice");
      if (tok.size() < 2) parse_error(line_no, "alphabet needs at least one symbol");
      try {
        alphabet.emplace(std::vector<std::string>(tok.begin() + 1, tok.end()));
      } catch (const Error& e) {
        parse_error(line_no, e.what());
      }
    } else if (kw == "vertex") {
      if (tok.size() != 2) parse_error(line_no, "expected: vertex <name>");
      if (!vertex_ids.emplace(tok[1], static_cast<VertexId>(vertices.size())).second)
        parse_error(line_no, "duplicate vertex '" + tok[1] + "'");
      vertices.push_back(tok[1]);
    } else if (kw == "edge") {
      if (tok.size() != 4) parse_error(line_no, "expected: edge <source> <target> <label>");
      if (!alphabet) parse_error(line_no, "edge before alphabet declaration");
      auto s = vertex_ids.find(tok[1]);
      auto t = vertex_ids.find(tok[2]);
      if (s == vertex_ids.end()) parse_error(line_no, "undeclared vertex '" + tok[1] + "'");
      if (t == vertex_ids.end()) parse_error(line_no, "undeclared vertex '" + tok[2] + "'");
      auto label = alphabet->find(tok[3]);
      if (!label) parse_error(line_no, "undeclared symbol '" + tok[3] + "'");
      Edge e{s->second, t->second, *label};
      if (!seen.insert(e).second) parse_error(line_no, "duplicate edge");
      edges.push_back(e);
    } else {
      parse_error(line_no, "unknown keyword '" + kw + "'");
    }
  }
  if (!alphabet) throw Error(Error::Kind::parse, "missing alphabet declaration");
  return LabeledGraph(std::move(*alphabet), std::move(vertices), std::move(edges));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Kind::parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LabeledGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string format_graph(const LabeledGraph& g) {
  std::string out = "alphabet";
  for (const auto& s : g.alphabet().names()) out += " " + s;
  out += '\n';
  for (const auto& v : g.vertex_names()) out += "vertex " + v + '\n';
  for (const auto& e : g.edges())
    out += "edge " + g.vertex_name(e.source) + " " + g.vertex_name(e.target) + " " +
           g.alphabet().name(e.label) + '\n';
  return out;
}

}  // namespace shiftlab

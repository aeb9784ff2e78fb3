#include "shiftlab/oracle.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

namespace shiftlab {

namespace {

struct SearchNode {
  std::size_t parent;
  Symbol symbol;
};

Block trace_path(const std::vector<SearchNode>& nodes, std::size_t at) {
  Block out;
  while (at != 0) {
    out.push_back(nodes[at].symbol);
    at = nodes[at].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

ShiftOracle ShiftOracle::sofic(LabeledGraph graph, std::size_t budget) {
  ShiftOracle o;
  o.kind_ = OracleKind::sofic;
  o.alphabet_ = graph.alphabet();
  o.budget_ = budget;
  o.graph_ = std::move(graph);
  return o;
}

ShiftOracle ShiftOracle::dyck(std::size_t pairs, std::size_t budget) {
  std::vector<std::pair<std::string, std::string>> brackets;
  for (std::size_t i = 1; i <= pairs; ++i)
    brackets.emplace_back("(" + std::to_string(i), ")" + std::to_string(i));
  return dyck(brackets, budget);
}

ShiftOracle ShiftOracle::dyck(const std::vector<std::pair<std::string, std::string>>& brackets,
                              std::size_t budget) {
  if (brackets.empty()) throw Error(Error::Kind::invalid_argument, "dyck oracle needs at least one bracket pair");
  std::vector<std::string> names;
  for (const auto& [open, close] : brackets) {
    names.push_back(open);
    names.push_back(close);
  }
  ShiftOracle o;
  o.kind_ = OracleKind::dyck;
  o.alphabet_ = Alphabet(std::move(names));
  o.budget_ = budget;
  return o;
}

ShiftOracle ShiftOracle::code_list(Alphabet alphabet, std::vector<Block> generators, std::size_t budget) {
  if (generators.empty()) throw Error(Error::Kind::invalid_argument, "code list must be non-empty");
  ShiftOracle o;
  o.kind_ = OracleKind::code_list;
  o.alphabet_ = std::move(alphabet);
  o.budget_ = budget;
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].empty()) throw Error(Error::Kind::invalid_argument, "generator blocks must be non-empty");
    if (!o.alphabet_.contains(generators[g]))
      throw Error(Error::Kind::invalid_argument, "generator uses a symbol outside the alphabet");
    for (std::size_t off = 0; off < generators[g].size(); ++off) {
      if (off == 0) o.boundary_positions_.push_back(static_cast<std::uint32_t>(o.positions_.size()));
      o.positions_.emplace_back(g, off);
    }
  }
  o.generators_ = std::move(generators);
  return o;
}

const LabeledGraph& ShiftOracle::graph() const {
  if (!graph_) throw Error(Error::Kind::kind_mismatch, "oracle is not sofic");
  return *graph_;
}

OracleState ShiftOracle::start() const {
  switch (kind_) {
    case OracleKind::sofic: {
      const auto all = all_vertices(*graph_);
      return OracleState(all.begin(), all.end());
    }
    case OracleKind::dyck:
      return {};
    case OracleKind::code_list: {
      OracleState s(positions_.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<std::uint32_t>(i);
      return s;
    }
  }
  return {};
}

std::optional<OracleState> ShiftOracle::advance(const OracleState& state, Symbol a) const {
  switch (kind_) {
    case OracleKind::sofic: {
      if (state.empty()) return std::nullopt;
      VertexSet next = step_set(*graph_, VertexSet(state.begin(), state.end()), a);
      if (next.empty()) return std::nullopt;
      return OracleState(next.begin(), next.end());
    }
    case OracleKind::dyck: {
      const std::uint32_t pair = a / 2;
      OracleState next = state;
      if (a % 2 == 0) {
        next.push_back(pair);
      } else if (!next.empty()) {
        if (next.back() != pair) return std::nullopt;
        next.pop_back();
      }
      // An unmatched closer on an empty stack matches the unseen past.
      return next;
    }
    case OracleKind::code_list: {
      std::set<std::uint32_t> next;
      for (std::uint32_t p : state) {
        const auto [g, off] = positions_[p];
        if (generators_[g][off] != a) continue;
        if (off + 1 == generators_[g].size()) {
          next.insert(boundary_positions_.begin(), boundary_positions_.end());
        } else {
          next.insert(p + 1);
        }
      }
      if (next.empty()) return std::nullopt;
      return OracleState(next.begin(), next.end());
    }
  }
  return std::nullopt;
}

std::optional<OracleState> ShiftOracle::run(const OracleState& state, const Block& w) const {
  std::optional<OracleState> cur = state;
  for (Symbol a : w) {
    cur = advance(*cur, a);
    if (!cur) return std::nullopt;
  }
  return cur;
}

std::optional<Block> ShiftOracle::distinguishing_word(const OracleState& a, const OracleState& b,
                                                      std::size_t horizon) const {
  std::vector<SearchNode> nodes{{0, 0}};
  std::deque<std::tuple<std::size_t, OracleState, OracleState, std::size_t>> queue;
  std::set<std::pair<OracleState, OracleState>> seen{{a, b}};
  queue.emplace_back(0, a, b, 0);
  while (!queue.empty()) {
    auto [node, sa, sb, depth] = std::move(queue.front());
    queue.pop_front();
    if (depth == horizon) continue;
    for (std::size_t x = 0; x < alphabet_.size(); ++x) {
      const auto sym = static_cast<Symbol>(x);
      auto na = advance(sa, sym);
      auto nb = advance(sb, sym);
      if (na.has_value() != nb.has_value()) {
        nodes.push_back({node, sym});
        return trace_path(nodes, nodes.size() - 1);
      }
      if (!na) continue;
      if (!seen.emplace(*na, *nb).second) continue;
      nodes.push_back({node, sym});
      queue.emplace_back(nodes.size() - 1, std::move(*na), std::move(*nb), depth + 1);
    }
  }
  return std::nullopt;
}

bool ShiftOracle::follower_equal_exact(const OracleState& a, const OracleState& b) const {
  if (kind_ == OracleKind::dyck)
    throw Error(Error::Kind::kind_mismatch, "exact follower comparison needs a finite-state oracle");
  // Finite state space: an unbounded search terminates.
  return !distinguishing_word(a, b, std::numeric_limits<std::size_t>::max()).has_value();
}

std::optional<Block> ShiftOracle::connector(const OracleState& from, const Block& next) const {
  if (run(from, next)) return Block{};
  // Dyck states are unbounded; a connector never needs more symbols than
  // `next` has closers.
  const std::size_t cap =
      kind_ == OracleKind::dyck ? next.size() + 1 : std::numeric_limits<std::size_t>::max();
  std::vector<SearchNode> nodes{{0, 0}};
  std::deque<std::tuple<std::size_t, OracleState, std::size_t>> queue;
  std::set<OracleState> seen{from};
  queue.emplace_back(0, from, 0);
  while (!queue.empty()) {
    auto [node, s, depth] = std::move(queue.front());
    queue.pop_front();
    if (depth == cap) continue;
    for (std::size_t x = 0; x < alphabet_.size(); ++x) {
      auto ns = advance(s, static_cast<Symbol>(x));
      if (!ns || !seen.insert(*ns).second) continue;
      nodes.push_back({node, static_cast<Symbol>(x)});
      if (run(*ns, next)) return trace_path(nodes, nodes.size() - 1);
      queue.emplace_back(nodes.size() - 1, std::move(*ns), depth + 1);
    }
  }
  return std::nullopt;
}

std::optional<Block> ShiftOracle::closing_connector(const OracleState& from, const Block& m,
                                                    std::size_t horizon) const {
  const auto target = run(start(), m);
  if (!target) return std::nullopt;
  auto good = [&](const OracleState& s) {
    auto r = run(s, m);
    return r && follower_equal_states(*r, *target, horizon);
  };
  if (kind_ == OracleKind::dyck) {
    Block t;
    for (auto it = from.rbegin(); it != from.rend(); ++it) t.push_back(static_cast<Symbol>(2 * *it + 1));
    auto closed = run(from, t);
    if (closed && good(*closed)) return t;
    return std::nullopt;
  }
  if (good(from)) return Block{};
  std::vector<SearchNode> nodes{{0, 0}};
  std::deque<std::pair<std::size_t, OracleState>> queue;
  std::set<OracleState> seen{from};
  queue.emplace_back(0, from);
  while (!queue.empty()) {
    auto [node, s] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t x = 0; x < alphabet_.size(); ++x) {
      auto ns = advance(s, static_cast<Symbol>(x));
      if (!ns || !seen.insert(*ns).second) continue;
      nodes.push_back({node, static_cast<Symbol>(x)});
      if (good(*ns)) return trace_path(nodes, nodes.size() - 1);
      queue.emplace_back(nodes.size() - 1, std::move(*ns));
    }
  }
  return std::nullopt;
}

bool oracle_admissible(const ShiftOracle& o, const Block& w) {
  if (!o.alphabet().contains(w)) throw Error(Error::Kind::invalid_argument, "block uses unknown symbols");
  if (o.kind() == OracleKind::code_list && w.size() > o.horizon_budget())
    throw Error(Error::Kind::budget_exceeded, "block length " + std::to_string(w.size()) +
                                                  " exceeds the horizon budget " +
                                                  std::to_string(o.horizon_budget()));
  return o.admits(w);
}

bool oracle_follower_equal(const ShiftOracle& o, const Block& u, const Block& v, std::size_t horizon) {
  if (horizon > o.horizon_budget())
    throw Error(Error::Kind::budget_exceeded, "horizon " + std::to_string(horizon) +
                                                  " exceeds the horizon budget " +
                                                  std::to_string(o.horizon_budget()));
  auto su = o.run(o.start(), u);
  auto sv = o.run(o.start(), v);
  if (!su || !sv) throw Error(Error::Kind::inadmissible_block, "follower comparison of an inadmissible block");
  return o.follower_equal_states(*su, *sv, horizon);
}

Block dyck_follower_signature(const ShiftOracle& o, const Block& u) {
  if (o.kind() != OracleKind::dyck) throw Error(Error::Kind::kind_mismatch, "not a dyck oracle");
  auto s = o.run(o.start(), u);
  if (!s) throw Error(Error::Kind::inadmissible_block, "signature of an inadmissible block");
  Block out;
  for (auto pair : *s) out.push_back(static_cast<Symbol>(2 * pair));
  return out;
}

ShiftOracle load_oracle(const std::string& path, std::size_t budget) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] != "oracle") break;  // plain graph file
    auto fail = [&](const std::string& msg) -> ShiftOracle {
      throw Error(Error::Kind::parse, path + ": line " + std::to_string(line_no) + ": " + msg);
    };
    if (tok.size() < 2) return fail("expected: oracle sofic|dyck|codelist ...");
    if (tok[1] == "sofic") {
      if (tok.size() != 3) return fail("expected: oracle sofic <graph-file>");
      std::filesystem::path gp(tok[2]);
      if (gp.is_relative()) gp = std::filesystem::path(path).parent_path() / gp;
      return ShiftOracle::sofic(load_graph(gp.string()), budget);
    }
    if (tok[1] == "dyck") {
      if (tok.size() != 3) return fail("expected: oracle dyck <r>");
      std::size_t r = 0;
      try {
        r = std::stoul(tok[2]);
      } catch (const std::exception&) {
        return fail("bracket count must be a positive integer");
      }
      if (r == 0) return fail("bracket count must be a positive integer");
      return ShiftOracle::dyck(r, budget);
    }
    if (tok[1] == "codelist") {
      if (tok.size() < 3) return fail("expected: oracle codelist <block> ...");
      std::set<std::string> chars;
      for (std::size_t i = 2; i < tok.size(); ++i)
        for (char c : tok[i]) chars.insert(std::string(1, c));
      Alphabet alphabet(std::vector<std::string>(chars.begin(), chars.end()));
      std::vector<Block> gens;
      for (std::size_t i = 2; i < tok.size(); ++i) gens.push_back(alphabet.parse(tok[i]));
      return ShiftOracle::code_list(std::move(alphabet), std::move(gens), budget);
    }
    return fail("unknown oracle kind '" + tok[1] + "'");
  }
  return ShiftOracle::sofic(load_graph(path), budget);
}

}  // namespace shiftlab

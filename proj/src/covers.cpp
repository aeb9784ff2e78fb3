#include "shiftlab/covers.hpp"

#include <algorithm>
#include <limits>
#include <deque>
#include <map>
#include <set>

#include "shiftlab/kernels.hpp"

namespace shiftlab {

namespace {

std::string set_name(const LabeledGraph& g, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ',';
    out += g.vertex_name(s[i]);
  }
  return out + "}";
}

// Shortest, then lexicographically least, w with `from_good`·w alive and
// `from_bad`·w dead.
std::optional<Block> separating_word(const SubsetAutomaton& a, std::size_t alphabet_size,
                                     std::int32_t from_good, std::int32_t from_bad, std::size_t max_len) {
  struct Node {
    std::size_t parent;
    Symbol symbol;
    std::int32_t good, bad;
    std::size_t depth;
  };
  std::vector<Node> nodes{{0, 0, from_good, from_bad, 0}};
  std::set<std::pair<std::int32_t, std::int32_t>> seen{{from_good, from_bad}};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Node cur = nodes[head];
    if (cur.depth == max_len) continue;
    for (std::size_t x = 0; x < alphabet_size; ++x) {
      const std::int32_t g = a.transitions[static_cast<std::size_t>(cur.good)][x];
      if (g < 0) continue;
      const std::int32_t b = a.transitions[static_cast<std::size_t>(cur.bad)][x];
      nodes.push_back({head, static_cast<Symbol>(x), g, b, cur.depth + 1});
      if (b < 0) {
        Block w;
        for (std::size_t at = nodes.size() - 1; at != 0; at = nodes[at].parent) w.push_back(nodes[at].symbol);
        std::reverse(w.begin(), w.end());
        return w;
      }
      if (!seen.emplace(g, b).second) nodes.pop_back();
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_right_resolving(const LabeledGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& out = g.out_edges(static_cast<VertexId>(v));
    for (std::size_t i = 1; i < out.size(); ++i)
      if (g.edge(out[i]).label == g.edge(out[i - 1]).label) return false;
  }
  return true;
}

std::vector<std::size_t> moore_classes(const std::vector<std::vector<std::int32_t>>& transitions) {
  const std::size_t n = transitions.size();
  std::vector<std::size_t> cls(n, 0);
  std::size_t count = n == 0 ? 0 : 1;
  while (true) {
    std::map<std::vector<std::int64_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::int64_t> sig{static_cast<std::int64_t>(cls[s])};
      for (std::int32_t t : transitions[s])
        sig.push_back(t < 0 ? -1 : static_cast<std::int64_t>(cls[static_cast<std::size_t>(t)]));
      next[s] = ids.emplace(std::move(sig), ids.size()).first->second;
    }
    // Renumber by first occurrence so ids do not depend on map order.
    std::vector<std::int64_t> renum(ids.size(), -1);
    std::size_t fresh = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (renum[next[s]] < 0) renum[next[s]] = static_cast<std::int64_t>(fresh++);
      next[s] = static_cast<std::size_t>(renum[next[s]]);
    }
    cls = std::move(next);
    if (fresh == count) break;
    count = fresh;
  }
  return cls;
}

std::vector<VertexSet> follower_separation(const LabeledGraph& g) {
  if (!is_right_resolving(g))
    throw Error(Error::Kind::not_right_resolving, "follower separation needs a right-resolving graph");
  std::vector<std::vector<std::int32_t>> trans(g.vertex_count(),
                                               std::vector<std::int32_t>(g.alphabet().size(), -1));
  for (const auto& e : g.edges()) trans[e.source][e.label] = static_cast<std::int32_t>(e.target);
  const auto cls = moore_classes(trans);
  std::map<std::size_t, VertexSet> groups;
  for (std::size_t v = 0; v < cls.size(); ++v) groups[cls[v]].push_back(static_cast<VertexId>(v));
  std::vector<VertexSet> out;
  for (auto& [id, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph quotient(const LabeledGraph& g, const std::vector<VertexSet>& classes) {
  std::vector<VertexId> cls_of(g.vertex_count());
  std::vector<std::string> names;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (VertexId v : classes[c]) cls_of[v] = static_cast<VertexId>(c);
    names.push_back(g.vertex_name(classes[c].front()));
  }
  std::set<Edge> edges;
  for (const auto& e : g.edges()) edges.insert({cls_of[e.source], cls_of[e.target], e.label});
  return LabeledGraph(g.alphabet(), std::move(names), std::vector<Edge>(edges.begin(), edges.end()));
}

LabeledGraph subset_cover(const LabeledGraph& g) {
  if (g.empty()) return g;
  const SubsetAutomaton a = determinize(g);
  std::vector<std::string> names;
  for (const auto& s : a.states) names.push_back(set_name(g, s));
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < a.states.size(); ++s)
    for (std::size_t x = 0; x < g.alphabet().size(); ++x)
      if (a.transitions[s][x] >= 0)
        edges.push_back({static_cast<VertexId>(s), static_cast<VertexId>(a.transitions[s][x]),
                         static_cast<Symbol>(x)});
  return trim_to_essential(LabeledGraph(g.alphabet(), std::move(names), std::move(edges)));
}

FollowerClasses follower_classes(const LabeledGraph& g) {
  FollowerClasses fc;
  fc.automaton = determinize(g);
  fc.class_of = moore_classes(fc.automaton.transitions);
  return fc;
}

bool synchronizes(const FollowerClasses& fc, const Block& v) {
  const std::int32_t r0 = fc.automaton.run(0, v);
  if (r0 < 0) return false;
  const std::size_t target = fc.class_of[static_cast<std::size_t>(r0)];
  for (std::size_t s = 0; s < fc.automaton.states.size(); ++s) {
    const std::int32_t r = fc.automaton.run(static_cast<std::int32_t>(s), v);
    if (r >= 0 && fc.class_of[static_cast<std::size_t>(r)] != target) return false;
  }
  return true;
}

SyncVerdict is_synchronizing(const LabeledGraph& g, const Block& v, std::size_t context_bound) {
  if (g.empty() || !g.alphabet().contains(v))
    throw Error(Error::Kind::inadmissible_block, "block is not admissible");
  const FollowerClasses fc = follower_classes(g);
  const auto& a = fc.automaton;
  const std::int32_t after_v = a.run(0, v);
  if (after_v < 0) throw Error(Error::Kind::inadmissible_block, "block is not admissible");
  if (synchronizes(fc, v)) return {SyncVerdict::Status::synchronizing, std::nullopt};

  const std::size_t k = g.alphabet().size();
  // Length-lexicographic over u, then shortest w, within the bound.
  for (std::size_t len = 0; len <= context_bound; ++len) {
    for (const Block& u : kernels::enumerate_words_serial(a, 0, len, k)) {
      Block uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      const std::int32_t s = a.run(0, uv);
      if (s < 0) continue;
      if (auto w = separating_word(a, k, after_v, s, context_bound))
        return {SyncVerdict::Status::not_synchronizing, std::make_pair(u, *w)};
    }
  }
  // Beyond the bound: shortest-path tree over states always yields one.
  std::vector<Block> path(a.states.size());
  std::vector<bool> seen(a.states.size(), false);
  std::deque<std::int32_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::int32_t s = queue.front();
    queue.pop_front();
    const std::int32_t r = a.run(s, v);
    if (r >= 0) {
      if (auto w = separating_word(a, k, after_v, r, std::numeric_limits<std::size_t>::max()))
        return {SyncVerdict::Status::not_synchronizing, std::make_pair(path[static_cast<std::size_t>(s)], *w)};
    }
    for (std::size_t x = 0; x < k; ++x) {
      const std::int32_t t = a.transitions[static_cast<std::size_t>(s)][x];
      if (t < 0 || seen[static_cast<std::size_t>(t)]) continue;
      seen[static_cast<std::size_t>(t)] = true;
      path[static_cast<std::size_t>(t)] = path[static_cast<std::size_t>(s)];
      path[static_cast<std::size_t>(t)].push_back(static_cast<Symbol>(x));
      queue.push_back(t);
    }
  }
  // Unreachable: a non-synchronizing block always has a refutation.
  return {SyncVerdict::Status::not_synchronizing, std::nullopt};
}

std::optional<Block> find_synchronizing_word(const LabeledGraph& g, std::size_t max_len) {
  if (g.empty()) return std::nullopt;
  const FollowerClasses fc = follower_classes(g);
  for (std::size_t len = 1; len <= max_len; ++len) {
    const auto words = kernels::enumerate_words(fc.automaton, 0, len, g.alphabet().size());
    auto hit = kernels::first_hit<bool>(words.size(), [&](std::size_t i) -> std::optional<bool> {
      if (synchronizes(fc, words[i])) return true;
      return std::nullopt;
    });
    if (hit) return words[hit->first];
  }
  return std::nullopt;
}

LabeledGraph fischer_cover(const LabeledGraph& g) {
  if (!is_irreducible(g))
    throw Error(Error::Kind::invalid_argument, "fischer_cover needs an irreducible presentation");
  const LabeledGraph cover = subset_cover(g);
  const auto alpha = find_synchronizing_word(g, std::max<std::size_t>(1, cover.vertex_count()));
  if (!alpha) throw Error(Error::Kind::no_synchronizing_word, "no synchronizing word within the search bound");

  const auto classes = follower_separation(cover);
  const LabeledGraph merged = quotient(cover, classes);
  const VertexSet hit = image_set(cover, *alpha, all_vertices(cover));
  VertexId base = 0;
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::binary_search(classes[c].begin(), classes[c].end(), hit.front())) base = static_cast<VertexId>(c);
  for (const auto& comp : nontrivial_components(merged))
    if (std::binary_search(comp.begin(), comp.end(), base)) return induced_subgraph(merged, comp);
  throw Error(Error::Kind::no_synchronizing_word, "synchronizing vertex lies on no cycle");
}

std::string canonical_form(const LabeledGraph& f) {
  if (!is_right_resolving(f) || !is_irreducible(f))
    throw Error(Error::Kind::invalid_argument, "canonical_form needs an irreducible right-resolving cover");
  const auto alpha = find_synchronizing_word(f, std::max<std::size_t>(1, determinize(f).states.size()));
  if (!alpha) throw Error(Error::Kind::no_synchronizing_word, "no synchronizing word");
  const VertexSet start = image_set(f, *alpha, all_vertices(f));
  if (start.size() != 1) throw Error(Error::Kind::invalid_argument, "graph is not follower-separated");

  std::vector<std::int64_t> number(f.vertex_count(), -1);
  std::vector<VertexId> order{start.front()};
  number[start.front()] = 0;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (std::size_t ei : f.out_edges(order[head])) {
      const VertexId t = f.edge(ei).target;
      if (number[t] < 0) {
        number[t] = static_cast<std::int64_t>(order.size());
        order.push_back(t);
      }
    }
  std::string out = "alphabet";
  for (const auto& s : f.alphabet().names()) out += " " + s;
  out += "\nvertices " + std::to_string(order.size()) + "\n";
  for (VertexId v : order)
    for (std::size_t ei : f.out_edges(v)) {
      const auto& e = f.edge(ei);
      out += std::to_string(number[v]) + " " + f.alphabet().name(e.label) + " " +
             std::to_string(number[e.target]) + "\n";
    }
  return out;
}

bool same_irreducible_shift(const LabeledGraph& a, const LabeledGraph& b) {
  if (!(a.alphabet() == b.alphabet())) return false;
  return canonical_form(fischer_cover(a)) == canonical_form(fischer_cover(b));
}

bool language_contained(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.empty()) return true;
  if (b.empty()) return false;
  const SubsetAutomaton da = determinize(a);
  const SubsetAutomaton db = determinize(b);
  std::vector<Symbol> to_b(a.alphabet().size());
  std::vector<bool> known(a.alphabet().size(), false);
  for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
    if (auto s = b.alphabet().find(a.alphabet().name(static_cast<Symbol>(x)))) {
      to_b[x] = *s;
      known[x] = true;
    }
  }
  std::set<std::pair<std::int32_t, std::int32_t>> seen{{0, 0}};
  std::deque<std::pair<std::int32_t, std::int32_t>> queue{{0, 0}};
  while (!queue.empty()) {
    auto [sa, sb] = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
      const std::int32_t ta = da.transitions[static_cast<std::size_t>(sa)][x];
      if (ta < 0) continue;
      if (!known[x]) return false;
      const std::int32_t tb = db.transitions[static_cast<std::size_t>(sb)][to_b[x]];
      if (tb < 0) return false;
      if (seen.emplace(ta, tb).second) queue.emplace_back(ta, tb);
    }
  }
  return true;
}

HalfSyncVerdict is_half_synchronizing(const ShiftOracle& o, const Block& m, std::size_t horizon) {
  if (!o.alphabet().contains(m) || !o.admits(m))
    throw Error(Error::Kind::inadmissible_block, "candidate block is not admissible");
  HalfSyncVerdict verdict{HalfSyncVerdict::Status::refuted, m, horizon, std::nullopt, std::nullopt, false};

  // Every admissible block of the transitivity length, in lex order.
  const std::size_t span = std::min(horizon, o.horizon_budget());
  std::vector<Block> blocks;
  {
    std::vector<std::pair<Block, OracleState>> frontier{{Block{}, o.start()}};
    for (std::size_t len = 0; len < span; ++len) {
      std::vector<std::pair<Block, OracleState>> next;
      for (auto& [b, s] : frontier)
        for (std::size_t x = 0; x < o.alphabet().size(); ++x)
          if (auto t = o.advance(s, static_cast<Symbol>(x))) {
            Block nb = b;
            nb.push_back(static_cast<Symbol>(x));
            next.emplace_back(std::move(nb), std::move(*t));
          }
      frontier = std::move(next);
    }
    for (auto& [b, s] : frontier) blocks.push_back(std::move(b));
  }

  Block context;
  OracleState state = o.start();
  for (const Block& b : blocks) {
    const auto t = o.connector(state, b);
    if (!t) continue;
    context.insert(context.end(), t->begin(), t->end());
    context.insert(context.end(), b.begin(), b.end());
    state = *o.run(state, *t);
    state = *o.run(state, b);
  }

  const OracleState after_m = *o.run(o.start(), m);
  if (auto t = o.closing_connector(state, m, horizon)) {
    context.insert(context.end(), t->begin(), t->end());
    context.insert(context.end(), m.begin(), m.end());
    verdict.status = HalfSyncVerdict::Status::holds_at_horizon;
    if (o.kind() == OracleKind::sofic) {
      // A synchronizing word inside the context pins its follower set
      // against any further left extension.
      const auto alpha = find_synchronizing_word(o.graph(), span);
      verdict.exact = alpha.has_value() && o.follower_equal_exact(*o.run(o.start(), context), after_m);
    }
    verdict.transitive_ray_prefix = std::move(context);
    return verdict;
  }
  if (auto t = o.connector(state, m)) {
    context.insert(context.end(), t->begin(), t->end());
    context.insert(context.end(), m.begin(), m.end());
    verdict.refutation = o.distinguishing_word(after_m, *o.run(o.start(), context), horizon);
  }
  return verdict;
}

}  // namespace shiftlab

#include "shiftlab/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <unordered_set>

#include "shiftlab/covers.hpp"
#include "shiftlab/kernels.hpp"

namespace shiftlab {

namespace {

/// Subset automaton over codomain symbols on the cover. Forward states are
/// the possible end vertices of paths with a given image word; backward
/// states the possible start vertices. words[s] is a shortest word leading
/// to state s from the full vertex set.
struct ImageAutomaton {
  SubsetAutomaton automaton;
  std::vector<Block> words;
};

VertexSet image_step(const PresentedMap& m, const VertexSet& from, Symbol b, bool forward) {
  std::vector<char> mark(m.cover.vertex_count(), 0);
  for (VertexId v : from) {
    const auto& edges = forward ? m.cover.out_edges(v) : m.cover.in_edges(v);
    for (std::size_t e : edges)
      if (m.image_of_edge(e) == b) mark[forward ? m.cover.edge(e).target : m.cover.edge(e).source] = 1;
  }
  VertexSet out;
  for (std::size_t v = 0; v < mark.size(); ++v)
    if (mark[v]) out.push_back(static_cast<VertexId>(v));
  return out;
}

ImageAutomaton image_automaton(const PresentedMap& m, bool forward) {
  const std::size_t alphabet = m.recoded.codomain.alphabet().size();
  ImageAutomaton ia;
  std::map<VertexSet, std::int32_t> index;
  ia.automaton.states.push_back(all_vertices(m.cover));
  ia.words.emplace_back();
  index.emplace(ia.automaton.states.front(), 0);
  for (std::size_t s = 0; s < ia.automaton.states.size(); ++s) {
    ia.automaton.transitions.emplace_back(alphabet, -1);
    for (std::size_t b = 0; b < alphabet; ++b) {
      VertexSet next = image_step(m, ia.automaton.states[s], static_cast<Symbol>(b), forward);
      if (next.empty()) continue;
      auto [it, fresh] = index.emplace(next, static_cast<std::int32_t>(ia.automaton.states.size()));
      if (fresh) {
        ia.automaton.states.push_back(std::move(next));
        Block w = ia.words[s];
        if (forward)
          w.push_back(static_cast<Symbol>(b));
        else
          w.insert(w.begin(), static_cast<Symbol>(b));
        ia.words.push_back(std::move(w));
      }
      ia.automaton.transitions[s][b] = it->second;
    }
  }
  return ia;
}

/// States reachable from a cycle of the automaton; every state reached by
/// arbitrarily long words is among them.
std::vector<std::size_t> recurrent_states(const SubsetAutomaton& a, const Alphabet& alphabet) {
  std::vector<std::string> names;
  for (std::size_t s = 0; s < a.states.size(); ++s) names.push_back("s" + std::to_string(s));
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < a.states.size(); ++s)
    for (std::size_t b = 0; b < a.transitions[s].size(); ++b)
      if (a.transitions[s][b] >= 0)
        edges.push_back({static_cast<VertexId>(s), static_cast<VertexId>(a.transitions[s][b]), static_cast<Symbol>(b)});
  const LabeledGraph g(alphabet, std::move(names), std::move(edges));
  std::vector<char> keep(a.states.size(), 0);
  std::deque<std::size_t> queue;
  for (const auto& comp : nontrivial_components(g))
    for (VertexId v : comp) {
      keep[v] = 1;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (std::int32_t t : a.transitions[s])
      if (t >= 0 && !keep[static_cast<std::size_t>(t)]) {
        keep[static_cast<std::size_t>(t)] = 1;
        queue.push_back(static_cast<std::size_t>(t));
      }
  }
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < keep.size(); ++s)
    if (keep[s]) out.push_back(s);
  return out;
}

/// Distinct cover edges at each coordinate over all paths with image w.
std::vector<std::size_t> coordinate_counts(const PresentedMap& m, const Block& w) {
  const VertexSet all = all_vertices(m.cover);
  std::vector<VertexSet> fwd(w.size() + 1), bwd(w.size() + 1);
  fwd[0] = all;
  for (std::size_t i = 0; i < w.size(); ++i) fwd[i + 1] = image_step(m, fwd[i], w[i], true);
  bwd[w.size()] = all;
  for (std::size_t i = w.size(); i-- > 0;) bwd[i] = image_step(m, bwd[i + 1], w[i], false);
  std::vector<std::size_t> counts(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (VertexId v : fwd[i])
      for (std::size_t e : m.cover.out_edges(v))
        if (m.image_of_edge(e) == w[i] && std::binary_search(bwd[i + 1].begin(), bwd[i + 1].end(),
                                                             m.cover.edge(e).target))
          ++counts[i];
  return counts;
}

bool has_diamond(const PairAutomaton& pa) {
  const std::size_t n = pa.state_count();
  std::vector<std::vector<std::size_t>> reverse(n);
  for (std::size_t s = 0; s < n; ++s)
    for (const auto& mv : pa.moves(s)) reverse[mv.target].push_back(s);
  std::vector<char> reaches(n, 0);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s)
    if (pa.diagonal(s)) {
      reaches[s] = 1;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (std::size_t p : reverse[s])
      if (!reaches[p]) {
        reaches[p] = 1;
        queue.push_back(p);
      }
  }
  for (std::size_t v = 0; v < pa.vertex_count(); ++v) {
    const std::size_t s = pa.state(static_cast<VertexId>(v), static_cast<VertexId>(v));
    for (const auto& mv : pa.moves(s))
      if (mv.edge1 != mv.edge2 && reaches[mv.target]) return true;
  }
  return false;
}

template <bool Parallel>
DegreeReport degree_impl(const FactorMap& f, std::size_t word_bound) {
  const PresentedMap m = present(f);
  if (has_diamond(PairAutomaton(m)))
    throw Error(Error::Kind::not_finite_to_one, "map is not finite-to-one");
  const ImageAutomaton fa = image_automaton(m, true);
  const ImageAutomaton ba = image_automaton(m, false);
  const std::size_t alphabet = m.recoded.codomain.alphabet().size();

  DegreeReport report;
  report.finite_to_one = true;
  report.exactness_bound = fa.automaton.states.size() + ba.automaton.states.size() - 1;
  auto argmin = [](std::size_t count, const std::function<std::optional<std::uint64_t>(std::size_t)>& score) {
    return Parallel ? kernels::argmin(count, score) : kernels::argmin_serial(count, score);
  };

  if (word_bound >= report.exactness_bound) {
    // Every coordinate count is |{e : image a, source in F, target in B}|
    // for a reachable forward state F and backward state B.
    const std::size_t nf = fa.automaton.states.size();
    const std::size_t nb = ba.automaton.states.size();
    const auto best = argmin(nf * nb * alphabet, [&](std::size_t i) -> std::optional<std::uint64_t> {
      const std::size_t fi = i / (nb * alphabet);
      const std::size_t bi = (i / alphabet) % nb;
      const auto a = static_cast<Symbol>(i % alphabet);
      const VertexSet& from = fa.automaton.states[fi];
      const VertexSet& to = ba.automaton.states[bi];
      std::uint64_t count = 0;
      for (VertexId v : from)
        for (std::size_t e : m.cover.out_edges(v))
          if (m.image_of_edge(e) == a && std::binary_search(to.begin(), to.end(), m.cover.edge(e).target)) ++count;
      if (count == 0) return std::nullopt;
      // Shorter magic words win ties.
      const std::uint64_t length = fa.words[fi].size() + 1 + ba.words[bi].size();
      return count * 4096 + std::min<std::uint64_t>(length, 4095);
    });
    const std::size_t fi = best->first / (nb * alphabet);
    const std::size_t bi = (best->first / alphabet) % nb;
    Block word = fa.words[fi];
    word.push_back(static_cast<Symbol>(best->first % alphabet));
    word.insert(word.end(), ba.words[bi].begin(), ba.words[bi].end());
    report.degree = static_cast<std::size_t>(best->second / 4096);
    report.magic_word = std::move(word);
    report.exact = true;
  } else {
    std::vector<Block> words;
    for (std::size_t len = 1; len <= word_bound; ++len) {
      auto batch = Parallel ? kernels::enumerate_words(fa.automaton, 0, len, alphabet)
                            : kernels::enumerate_words_serial(fa.automaton, 0, len, alphabet);
      words.insert(words.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    }
    const auto best = argmin(words.size(), [&](std::size_t i) -> std::optional<std::uint64_t> {
      const auto counts = coordinate_counts(m, words[i]);
      return *std::min_element(counts.begin(), counts.end());
    });
    report.degree = static_cast<std::size_t>(best->second);
    report.magic_word = words[best->first];
    report.exact = report.degree == 1;
  }
  report.details = coordinate_counts(m, *report.magic_word);
  return report;
}

/// Shortest label word forcing the cover into vertex p: a word collapsing
/// the full vertex set to a singleton, then a path to p.
Block context_into(const LabeledGraph& cover, VertexId p) {
  const SubsetAutomaton det = determinize(cover);
  std::vector<std::int32_t> parent(det.states.size(), -1);
  std::vector<Symbol> via(det.states.size(), 0);
  std::vector<char> seen(det.states.size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::optional<std::size_t> single;
  while (!queue.empty() && !single) {
    const std::size_t s = queue.front();
    queue.pop_front();
    if (det.states[s].size() == 1) {
      single = s;
      break;
    }
    for (std::size_t a = 0; a < det.transitions[s].size(); ++a) {
      const std::int32_t t = det.transitions[s][a];
      if (t < 0 || seen[static_cast<std::size_t>(t)]) continue;
      seen[static_cast<std::size_t>(t)] = 1;
      parent[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(s);
      via[static_cast<std::size_t>(t)] = static_cast<Symbol>(a);
      queue.push_back(static_cast<std::size_t>(t));
    }
  }
  Block word;
  VertexId start = p;
  if (single) {
    for (std::size_t s = *single; parent[s] >= 0; s = static_cast<std::size_t>(parent[s])) word.push_back(via[s]);
    std::reverse(word.begin(), word.end());
    start = det.states[*single].front();
  }
  // Path from `start` to p by BFS over edges in label order.
  std::vector<std::int64_t> edge_in(cover.vertex_count(), -1);
  std::vector<char> reached(cover.vertex_count(), 0);
  std::deque<VertexId> vq{start};
  reached[start] = 1;
  while (!vq.empty()) {
    const VertexId v = vq.front();
    vq.pop_front();
    for (std::size_t e : cover.out_edges(v)) {
      const VertexId t = cover.edge(e).target;
      if (reached[t]) continue;
      reached[t] = 1;
      edge_in[t] = static_cast<std::int64_t>(e);
      vq.push_back(t);
    }
  }
  Block path;
  for (VertexId v = p; v != start && edge_in[v] >= 0;) {
    const Edge& e = cover.edge(static_cast<std::size_t>(edge_in[v]));
    path.push_back(e.label);
    v = e.source;
  }
  std::reverse(path.begin(), path.end());
  word.insert(word.end(), path.begin(), path.end());
  return word;
}

// ---------------------------------------------------------------------------
// Decoder blocks

struct DecoderSearch {
  PresentedMap map;
  PairAutomaton pairs;
  std::vector<std::optional<std::size_t>> lengths;
  ImageAutomaton forward;

  explicit DecoderSearch(const FactorMap& f)
      : map(present(f)), pairs(map), lengths(pairs.continuation_lengths()), forward(image_automaton(map, true)) {}

  /// Least k such that w is a decoder block with anticipation k. Pairs of
  /// paths ending anywhere in the image set of w run with equal labels until
  /// they split; after a split their images may agree for at most k - 1 more
  /// steps.
  std::optional<std::size_t> anticipation(const Block& w, std::size_t max_anticipation) const {
    const std::int32_t s = forward.automaton.run(0, w);
    if (s < 0) return std::nullopt;
    const VertexSet& ends = forward.automaton.states[static_cast<std::size_t>(s)];
    std::vector<char> seen(pairs.state_count(), 0);
    std::deque<std::size_t> queue;
    for (VertexId p : ends)
      for (VertexId q : ends) {
        seen[pairs.state(p, q)] = 1;
        queue.push_back(pairs.state(p, q));
      }
    std::size_t k = 0;
    while (!queue.empty()) {
      const std::size_t st = queue.front();
      queue.pop_front();
      for (const auto& mv : pairs.moves(st)) {
        const Symbol l1 = map.cover.edge(mv.edge1).label;
        const Symbol l2 = map.cover.edge(mv.edge2).label;
        if (l1 != l2) {
          const auto& len = lengths[mv.target];
          if (!len || *len + 1 > max_anticipation) return std::nullopt;
          k = std::max(k, *len + 1);
        } else if (!seen[mv.target]) {
          seen[mv.target] = 1;
          queue.push_back(mv.target);
        }
      }
    }
    return k;
  }
};

template <bool Parallel>
std::optional<DecoderCertificate> find_decoder_impl(const FactorMap& f, std::size_t max_len,
                                                    std::size_t max_anticipation) {
  const DecoderSearch search(f);
  const std::size_t alphabet = f.codomain.alphabet().size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    const auto words = Parallel ? kernels::enumerate_words(search.forward.automaton, 0, len, alphabet)
                                : kernels::enumerate_words_serial(search.forward.automaton, 0, len, alphabet);
    const kernels::CandidateTest<std::size_t> test = [&](std::size_t i) {
      return search.anticipation(words[i], max_anticipation);
    };
    const auto hit = Parallel ? kernels::first_hit(words.size(), test) : kernels::first_hit_serial(words.size(), test);
    if (hit) return DecoderCertificate{words[hit->first], hit->second, kUnbounded};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hyperbolicity

struct HyperbolicSearch {
  PresentedMap map;
  ImageAutomaton forward;
  ImageAutomaton backward;
  std::vector<std::size_t> forward_rec;
  std::vector<std::size_t> backward_rec;
  std::size_t extension_bound;

  HyperbolicSearch(const FactorMap& f, std::size_t ext)
      : map(present(f)),
        forward(image_automaton(map, true)),
        backward(image_automaton(map, false)),
        forward_rec(recurrent_states(forward.automaton, f.codomain.alphabet())),
        backward_rec(recurrent_states(backward.automaton, f.codomain.alphabet())),
        extension_bound(ext) {}

  /// Central (2k+1)-windows of preimages of every point carrying w at
  /// [-n, n]; nullopt when they differ between points. Left rays are
  /// summarized by recurrent forward states, right rays by recurrent
  /// backward states.
  std::optional<std::set<Block>> central_windows(const Block& w, std::size_t k) const {
    const std::size_t len = w.size();
    const std::size_t n = len / 2;
    std::optional<std::set<Block>> common;
    for (std::size_t fi : forward_rec) {
      std::vector<VertexSet> fwd(len + 1);
      fwd[0] = forward.automaton.states[fi];
      for (std::size_t i = 0; i < len; ++i) fwd[i + 1] = image_step(map, fwd[i], w[i], true);
      if (fwd[len].empty()) continue;
      for (std::size_t bi : backward_rec) {
        std::vector<VertexSet> live(len + 1);
        live[len] = backward.automaton.states[bi];
        for (std::size_t i = len; i-- > 0;) live[i] = image_step(map, live[i + 1], w[i], false);
        for (std::size_t i = 0; i <= len; ++i) {
          VertexSet both;
          std::set_intersection(fwd[i].begin(), fwd[i].end(), live[i].begin(), live[i].end(),
                                std::back_inserter(both));
          live[i] = std::move(both);
        }
        if (live[0].empty()) continue;
        std::set<Block> windows;
        Block window;
        collect_windows(w, n - k, n + k, live, live[n - k], window, windows);
        if (windows.empty()) continue;
        if (!common)
          common = std::move(windows);
        else if (*common != windows)
          return std::nullopt;
      }
    }
    return common;
  }

  void collect_windows(const Block& w, std::size_t pos, std::size_t last, const std::vector<VertexSet>& live,
                       const VertexSet& from, Block& window, std::set<Block>& out) const {
    if (pos > last) {
      out.insert(window);
      return;
    }
    std::set<std::pair<Symbol, VertexId>> steps;
    for (VertexId v : from)
      for (std::size_t e : map.cover.out_edges(v)) {
        const Edge& edge = map.cover.edge(e);
        if (map.image[edge.label] == w[pos] &&
            std::binary_search(live[pos + 1].begin(), live[pos + 1].end(), edge.target))
          steps.emplace(edge.label, edge.target);
      }
    // Group by label: the window records labels, not vertices.
    std::map<Symbol, VertexSet> by_label;
    for (const auto& [label, target] : steps) by_label[label].push_back(target);
    for (const auto& [label, targets] : by_label) {
      window.push_back(label);
      collect_windows(w, pos + 1, last, live, targets, window, out);
      window.pop_back();
    }
  }

  /// Two label paths with image w' (beginning and ending with w, starting
  /// at coordinate -n) that agree on [-k, k] but not on [-k, k + p].
  /// Returns the tested extension horizon, or nullopt on a violation.
  std::optional<std::size_t> unique_extensions(const Block& w, std::size_t k) const {
    const std::size_t len = w.size();
    const std::size_t n = len / 2;
    const std::size_t slack = n - k;
    const std::size_t verts = map.cover.vertex_count();

    // KMP automaton on w.
    std::vector<std::size_t> fail(len + 1, 0);
    for (std::size_t i = 1, j = 0; i < len; ++i) {
      while (j > 0 && w[i] != w[j]) j = fail[j];
      if (w[i] == w[j]) ++j;
      fail[i + 1] = j;
    }
    auto kmp_step = [&](std::size_t state, Symbol b) {
      if (state == len) state = fail[len];
      while (state > 0 && w[state] != b) state = fail[state];
      if (w[state] == b) ++state;
      return state;
    };

    constexpr std::size_t kStateLimit = std::size_t{1} << 22;
    const std::size_t t_exact = 2 * n + 1;
    const std::size_t dims = verts * verts * (len + 1) * 2 * (slack + 1);
    const bool exact = dims * (t_exact + 1) <= kStateLimit;
    const std::size_t t_cap = exact ? t_exact : 2 * n + 1 + extension_bound;

    struct State {
      VertexId p, q;
      std::size_t t, kmp, count;
      bool diverged;
    };
    auto key = [&](const State& s) {
      return ((((static_cast<std::size_t>(s.p) * verts + s.q) * (t_cap + 1) + s.t) * (len + 1) + s.kmp) * 2 +
              (s.diverged ? 1 : 0)) *
                 (slack + 1) +
             s.count;
    };
    std::unordered_set<std::size_t> seen;
    std::deque<State> queue;
    for (std::size_t p = 0; p < verts; ++p)
      for (std::size_t q = 0; q < verts; ++q) {
        State s{static_cast<VertexId>(p), static_cast<VertexId>(q), 0, 0, 0, false};
        seen.insert(key(s));
        queue.push_back(s);
      }
    while (!queue.empty()) {
      const State s = queue.front();
      queue.pop_front();
      if (!exact && s.t >= t_cap) continue;
      for (std::size_t e1 : map.cover.out_edges(s.p))
        for (std::size_t e2 : map.cover.out_edges(s.q)) {
          const Edge& a = map.cover.edge(e1);
          const Edge& b = map.cover.edge(e2);
          const Symbol img = map.image[a.label];
          if (map.image[b.label] != img) continue;
          if (s.t < len && img != w[s.t]) continue;
          if (s.t >= n - k && s.t <= n + k && a.label != b.label) continue;
          State next{a.target, b.target, exact ? std::min(s.t + 1, t_exact) : s.t + 1, kmp_step(s.kmp, img),
                     s.count, s.diverged};
          if (s.diverged)
            next.count = std::min(s.count + 1, slack);
          else if (s.t > n + k && a.label != b.label)
            next.diverged = true;
          if (s.t + 1 >= len && next.diverged && next.count >= slack && next.kmp == len) return std::nullopt;
          if (seen.insert(key(next)).second) queue.push_back(next);
        }
    }
    return exact ? kUnbounded : extension_bound;
  }

  std::optional<HyperbolicCertificate> test(const Block& w, std::size_t k_bound) const {
    const std::size_t n = w.size() / 2;
    for (std::size_t k = 0; k <= std::min(k_bound, n); ++k) {
      const auto windows = central_windows(w, k);
      if (!windows) continue;
      const auto horizon = unique_extensions(w, k);
      if (!horizon) continue;
      return HyperbolicCertificate{w, n, windows->size(), k, std::vector<Block>(windows->begin(), windows->end()),
                                   *horizon};
    }
    return std::nullopt;
  }
};

template <bool Parallel>
std::optional<HyperbolicCertificate> find_hyperbolic_impl(const FactorMap& f, std::size_t word_bound,
                                                          std::size_t k_bound, std::size_t extension_bound) {
  if (!f.onto()) throw Error(Error::Kind::invalid_argument, "map is not certified onto");
  const HyperbolicSearch search(f, extension_bound);
  const std::size_t alphabet = f.codomain.alphabet().size();
  for (std::size_t len = 1; len <= word_bound; len += 2) {
    const auto words = Parallel ? kernels::enumerate_words(search.forward.automaton, 0, len, alphabet)
                                : kernels::enumerate_words_serial(search.forward.automaton, 0, len, alphabet);
    const kernels::CandidateTest<HyperbolicCertificate> test = [&](std::size_t i) {
      return search.test(words[i], k_bound);
    };
    auto hit = Parallel ? kernels::first_hit(words.size(), test) : kernels::first_hit_serial(words.size(), test);
    if (hit) return std::move(hit->second);
  }
  return std::nullopt;
}

}  // namespace

PresentedMap present(const FactorMap& f) {
  FactorMap recoded = recode_to_one_block(f);
  if (!is_irreducible(recoded.domain))
    throw Error(Error::Kind::invalid_argument, "domain presentation must be irreducible");
  LabeledGraph cover = fischer_cover(recoded.domain);
  std::vector<Symbol> image(recoded.domain.alphabet().size(), 0);
  for (const auto& [w, s] : recoded.code.window_map()) image[w.front()] = s;
  return PresentedMap{std::move(recoded), std::move(cover), std::move(image)};
}

PairAutomaton::PairAutomaton(const PresentedMap& m) : n_(m.cover.vertex_count()), moves_(n_ * n_) {
  for (std::size_t p = 0; p < n_; ++p)
    for (std::size_t q = 0; q < n_; ++q) {
      auto& out = moves_[p * n_ + q];
      for (std::size_t e1 : m.cover.out_edges(static_cast<VertexId>(p)))
        for (std::size_t e2 : m.cover.out_edges(static_cast<VertexId>(q))) {
          const Symbol img = m.image_of_edge(e1);
          if (img != m.image_of_edge(e2)) continue;
          out.push_back({state(m.cover.edge(e1).target, m.cover.edge(e2).target), e1, e2, img});
        }
    }
}

std::vector<std::optional<std::size_t>> PairAutomaton::continuation_lengths() const {
  const std::size_t n = state_count();
  std::vector<std::vector<std::size_t>> reverse(n);
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    pending[s] = moves_[s].size();
    for (const auto& mv : moves_[s]) reverse[mv.target].push_back(s);
  }
  std::vector<std::optional<std::size_t>> length(n);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s)
    if (pending[s] == 0) {
      length[s] = 0;
      queue.push_back(s);
    }
  // Peel states whose every continuation is already finite; what remains
  // reaches a cycle.
  std::vector<std::size_t> best(n, 0);
  while (!queue.empty()) {
    const std::size_t t = queue.front();
    queue.pop_front();
    for (std::size_t p : reverse[t]) {
      best[p] = std::max(best[p], *length[t] + 1);
      if (--pending[p] == 0) {
        length[p] = best[p];
        queue.push_back(p);
      }
    }
  }
  return length;
}

bool is_finite_to_one(const FactorMap& f) { return !has_diamond(PairAutomaton(present(f))); }

std::size_t default_word_bound(const FactorMap& f) {
  const std::size_t v = subset_cover(recode_to_one_block(f).domain).vertex_count();
  return v * v + 1;
}

DegreeReport degree(const FactorMap& f, std::size_t word_bound) { return degree_impl<true>(f, word_bound); }
DegreeReport degree_serial(const FactorMap& f, std::size_t word_bound) { return degree_impl<false>(f, word_bound); }

bool is_one_to_one_ae(const FactorMap& f, std::size_t word_bound) { return degree(f, word_bound).degree == 1u; }

ClosingReport right_closing_ae(const FactorMap& f, std::size_t delay_bound) {
  const PresentedMap m = present(f);
  const PairAutomaton pa(m);
  const auto lengths = pa.continuation_lengths();

  // A split is a pair of distinct edges out of a common vertex with equal
  // images; its cost is the number of further steps the images can agree.
  std::optional<std::pair<std::size_t, PairMove>> worst;  // (vertex, move)
  bool unbounded = false;
  std::size_t delay = 0;
  for (std::size_t v = 0; v < pa.vertex_count() && !unbounded; ++v) {
    const std::size_t s = pa.state(static_cast<VertexId>(v), static_cast<VertexId>(v));
    for (const auto& mv : pa.moves(s)) {
      if (mv.edge1 == mv.edge2) continue;
      const auto& len = lengths[mv.target];
      if (!len) {
        unbounded = true;
        worst.emplace(v, mv);
        break;
      }
      if (*len + 1 > delay || !worst) {
        if (*len + 1 > delay) delay = *len + 1;
        worst.emplace(v, mv);
      }
    }
  }

  ClosingReport report;
  if (!unbounded && delay <= delay_bound) {
    report.right_closing_ae = true;
    report.delay = delay;
    return report;
  }
  report.beyond_bound = !unbounded;

  const auto& [vertex, split] = *worst;
  ClosingWitness witness;
  witness.context = context_into(m.cover, static_cast<VertexId>(vertex));
  witness.first.push_back(m.cover.edge(split.edge1).label);
  witness.second.push_back(m.cover.edge(split.edge2).label);
  std::size_t state = split.target;
  auto rank = [&](std::size_t t) {
    return lengths[t] ? *lengths[t] : std::numeric_limits<std::size_t>::max();
  };
  for (std::size_t step = 0; step < delay_bound; ++step) {
    const auto& moves = pa.moves(state);
    if (moves.empty()) break;
    const auto it = std::max_element(moves.begin(), moves.end(), [&](const PairMove& a, const PairMove& b) {
      return rank(a.target) < rank(b.target);
    });
    witness.first.push_back(m.cover.edge(it->edge1).label);
    witness.second.push_back(m.cover.edge(it->edge2).label);
    state = it->target;
  }
  report.witness = std::move(witness);
  return report;
}

std::optional<DecoderCertificate> find_decoder_block(const FactorMap& f, std::size_t max_len,
                                                     std::size_t max_anticipation) {
  return find_decoder_impl<true>(f, max_len, max_anticipation);
}

std::optional<DecoderCertificate> find_decoder_block_serial(const FactorMap& f, std::size_t max_len,
                                                            std::size_t max_anticipation) {
  return find_decoder_impl<false>(f, max_len, max_anticipation);
}

bool verify_decoder_block(const FactorMap& f, const Block& w, std::size_t k, std::size_t horizon) {
  if (!f.codomain.alphabet().contains(w) || !is_admissible(f.codomain, w))
    throw Error(Error::Kind::inadmissible_block, "decoder candidate is not a codomain block");
  const std::size_t mem = f.code.memory();
  const std::size_t ant = f.code.anticipation();
  for (std::size_t n = 1; n <= horizon; ++n) {
    // Domain blocks cover coordinates [-|w|+1-mem, n+k+ant]; x_1 sits at
    // index |w| + mem.
    std::map<Block, Block> decoded;
    for (const Block& b : blocks_of_length(f.domain, mem + w.size() + n + k + ant)) {
      const Block img = apply_block(f.code, b);
      if (!std::equal(w.begin(), w.end(), img.begin())) continue;
      const auto from = b.begin() + static_cast<std::ptrdiff_t>(w.size() + mem);
      Block x(from, from + static_cast<std::ptrdiff_t>(n));
      auto [it, fresh] = decoded.emplace(img, x);
      if (!fresh && it->second != x) return false;
    }
  }
  return true;
}

std::optional<HyperbolicCertificate> find_hyperbolic_certificate(const FactorMap& f, std::size_t word_bound,
                                                                 std::size_t k_bound, std::size_t extension_bound) {
  return find_hyperbolic_impl<true>(f, word_bound, k_bound, extension_bound);
}

std::optional<HyperbolicCertificate> find_hyperbolic_certificate_serial(const FactorMap& f, std::size_t word_bound,
                                                                        std::size_t k_bound,
                                                                        std::size_t extension_bound) {
  return find_hyperbolic_impl<false>(f, word_bound, k_bound, extension_bound);
}

std::string format_certificate(const Alphabet& domain, const Alphabet& codomain, const HyperbolicCertificate& c) {
  std::string out = "hyperbolic word " + codomain.format(c.word) + " d " + std::to_string(c.d) + " k " +
                    std::to_string(c.k) + " blocks";
  for (const auto& b : c.central_blocks) out += " " + domain.format(b);
  return out;
}

std::string format_certificate(const Alphabet& codomain, const DecoderCertificate& c) {
  return "decoder-block " + codomain.format(c.block) + " anticipation " + std::to_string(c.anticipation);
}

}  // namespace shiftlab

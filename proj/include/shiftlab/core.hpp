// core.hpp -- alphabets, blocks, eventually periodic points, labeled graphs
//
// Everything downstream is phrased in terms of these value types. Symbols and
// vertices are dense integer ids; their names live in the owning Alphabet or
// LabeledGraph and their declaration order is the total order used for all
// set-valued results and length-lexicographic searches.

#ifndef SHIFTLAB_CORE_HPP
#define SHIFTLAB_CORE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace shiftlab {

using Symbol = std::uint32_t;
using VertexId = std::uint32_t;
using Block = std::vector<Symbol>;
/// Sorted ascending, no duplicates.
using VertexSet = std::vector<VertexId>;

class Error : public std::runtime_error {
 public:
  enum class Kind {
    parse,
    invalid_argument,
    not_right_resolving,
    inadmissible_block,
    block_too_short,
    alphabet_mismatch,
    codomain_mismatch,
    no_synchronizing_word,
    not_finite_to_one,
    budget_exceeded,
    kind_mismatch,
    overflow,
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Symbol> find(std::string_view name) const;
  /// Throws Error::Kind::invalid_argument for unknown names.
  Symbol symbol(std::string_view name) const;

  /// True when every symbol name is one character long, so blocks can be
  /// written without separators.
  bool compact() const noexcept { return compact_; }

  /// Blocks over compact alphabets are written as plain concatenation,
  /// otherwise symbols are joined by '.'. The empty block is written "ε".
  std::string format(const Block& block) const;
  /// Inverse of format. Also accepts "" for the empty block, and '.'
  /// separators over compact alphabets.
  Block parse(std::string_view text) const;

  bool contains(const Block& block) const noexcept;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> index_;
  bool compact_ = true;
};

/// The bi-infinite sequence left^∞ · center · right^∞. Coordinate i of the
/// sequence is the symbol at offset i + origin from the first symbol of
/// center (negative offsets fall into the left period, offsets past the
/// center into the right period).
struct Point {
  Block left_period;
  Block center;
  Block right_period;
  std::int64_t origin = 0;

  Symbol at(std::int64_t i) const;
};

Point make_point(Block left_period, Block center, Block right_period, std::int64_t origin = 0);

/// σ^k: point_window(shift(p, k), i, j) == point_window(p, i + k, j + k).
Point shift(const Point& p, std::int64_t k);
/// p_i p_{i+1} ... p_j; requires i <= j.
Block point_window(const Point& p, std::int64_t i, std::int64_t j);
/// Denotational equality of two points.
bool same_sequence(const Point& a, const Point& b);

struct Edge {
  VertexId source;
  VertexId target;
  Symbol label;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class LabeledGraph {
 public:
  LabeledGraph() = default;
  /// Validates endpoints and labels; rejects duplicate (source, target, label)
  /// triples and duplicate vertex names.
  LabeledGraph(Alphabet alphabet, std::vector<std::string> vertices, std::vector<Edge> edges);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  /// Edge indices leaving v, ordered by (label, target).
  const std::vector<std::size_t>& out_edges(VertexId v) const { return out_.at(v); }
  const std::vector<std::size_t>& in_edges(VertexId v) const { return in_.at(v); }

 private:
  Alphabet alphabet_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

VertexSet all_vertices(const LabeledGraph& g);

LabeledGraph trim_to_essential(const LabeledGraph& g);
/// Subgraph induced by `keep` (sorted), vertex order preserved.
LabeledGraph induced_subgraph(const LabeledGraph& g, const VertexSet& keep);
LabeledGraph relabel(const LabeledGraph& g, const Alphabet& alphabet,
                     const std::vector<Symbol>& label_map);

bool is_irreducible(const LabeledGraph& g);
/// Strongly connected components, each sorted; components ordered by their
/// least vertex. Only components carrying at least one edge are returned.
std::vector<VertexSet> nontrivial_components(const LabeledGraph& g);

VertexSet image_set(const LabeledGraph& g, const Block& w, const VertexSet& start);
VertexSet step_set(const LabeledGraph& g, const VertexSet& from, Symbol a);
bool is_admissible(const LabeledGraph& g, const Block& w);

/// B_n(X) in lexicographic order (alphabet order).
std::vector<Block> blocks_of_length(const LabeledGraph& g, std::size_t n);
/// |B_n(X)|; rejects graphs that are not right-resolving.
std::uint64_t count_blocks(const LabeledGraph& g, std::size_t n);

/// Determinization from the full vertex set. State 0 is the full set (or
/// the empty set when g is empty); only non-empty sets are states.
struct SubsetAutomaton {
  std::vector<VertexSet> states;
  /// transitions[s][a] is the successor state or -1.
  std::vector<std::vector<std::int32_t>> transitions;

  std::int32_t run(std::int32_t from, const Block& w) const;
};

SubsetAutomaton determinize(const LabeledGraph& g);

/// Graph text format: `alphabet`, `vertex`, `edge` declarations, `#` comments.
LabeledGraph parse_graph(std::string_view text);
LabeledGraph load_graph(const std::string& path);
std::string format_graph(const LabeledGraph& g);

std::string read_file(const std::string& path);

}  // namespace shiftlab

#endif  // SHIFTLAB_CORE_HPP

// oracle.hpp -- bounded-horizon queries over shift spaces
//
// A ShiftOracle answers admissibility and follower-set questions for three
// kinds of shifts through one state-machine view: a state summarizes a finite
// left context, `advance` extends it by one symbol and a dead state means the
// context became inadmissible.
//
//   sofic      state = set of presentation vertices reachable by the context
//   dyck       state = stack of unmatched openers (bottom first)
//   code_list  state = set of (generator, offset) positions the context may
//              end at inside a free concatenation of generators

#ifndef SHIFTLAB_ORACLE_HPP
#define SHIFTLAB_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/core.hpp"

namespace shiftlab {

enum class OracleKind { sofic, dyck, code_list };

using OracleState = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultHorizonBudget = 8;

class ShiftOracle {
 public:
  static ShiftOracle sofic(LabeledGraph graph, std::size_t budget = kDefaultHorizonBudget);
  /// Bracket pairs rendered `(1 )1 (2 )2 ...`.
  static ShiftOracle dyck(std::size_t pairs, std::size_t budget = kDefaultHorizonBudget);
  static ShiftOracle dyck(const std::vector<std::pair<std::string, std::string>>& brackets,
                          std::size_t budget = kDefaultHorizonBudget);
  static ShiftOracle code_list(Alphabet alphabet, std::vector<Block> generators,
                               std::size_t budget = kDefaultHorizonBudget);

  OracleKind kind() const noexcept { return kind_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t horizon_budget() const noexcept { return budget_; }
  /// Backing presentation of a sofic oracle.
  const LabeledGraph& graph() const;
  const std::vector<Block>& generators() const noexcept { return generators_; }

  /// State of the empty context.
  OracleState start() const;
  std::optional<OracleState> advance(const OracleState& state, Symbol a) const;
  std::optional<OracleState> run(const OracleState& state, const Block& w) const;
  /// Admissibility without the budget check.
  bool admits(const Block& w) const { return run(start(), w).has_value(); }

  /// Shortest (then lexicographically least) t, |t| <= h, such that exactly
  /// one of a·t, b·t is alive. nullopt when the two states agree up to h.
  std::optional<Block> distinguishing_word(const OracleState& a, const OracleState& b,
                                           std::size_t horizon) const;
  bool follower_equal_states(const OracleState& a, const OracleState& b, std::size_t horizon) const {
    return !distinguishing_word(a, b, horizon).has_value();
  }
  /// Unbounded follower equality; sofic and code_list only (finite state
  /// spaces).
  bool follower_equal_exact(const OracleState& a, const OracleState& b) const;

  /// Shortest t such that from·t·next is alive; nullopt if none is found.
  std::optional<Block> connector(const OracleState& from, const Block& next) const;
  /// Shortest t such that from·t·m is alive and follower-equal to m at the
  /// horizon. For dyck oracles this closes every open bracket first.
  std::optional<Block> closing_connector(const OracleState& from, const Block& m,
                                         std::size_t horizon) const;

 private:
  ShiftOracle() = default;

  OracleKind kind_ = OracleKind::sofic;
  Alphabet alphabet_;
  std::size_t budget_ = kDefaultHorizonBudget;
  std::optional<LabeledGraph> graph_;
  std::vector<Block> generators_;
  // code_list: flattened (generator, offset) positions.
  std::vector<std::pair<std::size_t, std::size_t>> positions_;
  std::vector<std::uint32_t> boundary_positions_;
};

/// Budget-checked admissibility. code_list queries longer than the budget
/// fail with Error::Kind::budget_exceeded.
bool oracle_admissible(const ShiftOracle& o, const Block& w);
/// For every t with |t| <= horizon: u·t admissible iff v·t admissible.
bool oracle_follower_equal(const ShiftOracle& o, const Block& u, const Block& v, std::size_t horizon);
/// Unmatched openers of u, bottom to top.
Block dyck_follower_signature(const ShiftOracle& o, const Block& u);

/// Reads an oracle declaration (`oracle sofic <graph>`, `oracle dyck <r>`,
/// `oracle codelist <block>...`). A file that is a plain graph yields a
/// sofic oracle.
ShiftOracle load_oracle(const std::string& path, std::size_t budget = kDefaultHorizonBudget);

}  // namespace shiftlab

#endif  // SHIFTLAB_ORACLE_HPP

// codes.hpp -- sliding block codes and factor maps
//
// A BlockCode with memory m and anticipation n sends a point x to y with
// y_i = window_map(x_{i-m} ... x_{i+n}). Window maps are stored
// extensionally and are defined on exactly the admissible windows of the
// domain they were validated against.

#ifndef SHIFTLAB_CODES_HPP
#define SHIFTLAB_CODES_HPP

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "shiftlab/core.hpp"

namespace shiftlab {

/// Horizon value meaning "proved for every length".
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

class BlockCode {
 public:
  BlockCode(Alphabet domain, Alphabet codomain, std::size_t memory, std::size_t anticipation,
            std::map<Block, Symbol> window_map);

  const Alphabet& domain_alphabet() const noexcept { return domain_; }
  const Alphabet& codomain_alphabet() const noexcept { return codomain_; }
  std::size_t memory() const noexcept { return memory_; }
  std::size_t anticipation() const noexcept { return anticipation_; }
  std::size_t window_length() const noexcept { return memory_ + anticipation_ + 1; }
  /// 2N+1 with N = max(memory, anticipation).
  std::size_t coding_length() const noexcept { return 2 * std::max(memory_, anticipation_) + 1; }
  bool one_block() const noexcept { return memory_ == 0 && anticipation_ == 0; }
  const std::map<Block, Symbol>& window_map() const noexcept { return map_; }
  std::optional<Symbol> lookup(const Block& window) const;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::size_t memory_;
  std::size_t anticipation_;
  std::map<Block, Symbol> map_;
};

/// 1-block identity on the symbols of g.
BlockCode identity_code(const LabeledGraph& g);
/// 1-block code from an explicit symbol table.
BlockCode symbol_code(const Alphabet& domain, const Alphabet& codomain, const std::vector<Symbol>& table);

Block apply_block(const BlockCode& c, const Block& w);
Point apply_code(const BlockCode& c, const Point& p);

/// c2 ∘ c1; windows are the blocks whose every c1-window is mapped and whose
/// c1-image is c2-mapped.
BlockCode compose(const BlockCode& c2, const BlockCode& c1);
/// Keeps exactly the windows admissible in `domain`; every admissible window
/// must already be mapped.
BlockCode restrict_to(const BlockCode& c, const LabeledGraph& domain);

struct HigherBlock {
  /// Presents X^[N]: symbols are the admissible N-blocks.
  LabeledGraph graph;
  /// 1-block code X^[N] -> X, keeping the first symbol.
  BlockCode projection;
  /// Code X -> X^[N] with memory 0 and anticipation N-1.
  BlockCode encoder;
};

HigherBlock higher_block(const LabeledGraph& g, std::size_t n);

struct FactorMap {
  BlockCode code;
  LabeledGraph domain;
  LabeledGraph codomain;
  /// kUnbounded when ontoness is proved exactly; otherwise the largest n
  /// with B_n(image) = B_n(codomain).
  std::size_t surjectivity_horizon = 0;

  bool onto() const noexcept { return surjectivity_horizon == kUnbounded; }
};

/// Validates the window map against the domain language and the image
/// against the codomain language, then certifies ontoness.
FactorMap make_factor_map(BlockCode code, LabeledGraph domain, LabeledGraph codomain);
FactorMap identity_map(const LabeledGraph& g);

FactorMap recode_to_one_block(const FactorMap& f);
/// Code from the original domain onto the recoded domain (memory and
/// anticipation of f), so that recode(f).code ∘ recoding_conjugacy(f) = f.code.
BlockCode recoding_conjugacy(const FactorMap& f);
/// 1-block maps only: the domain graph relabeled through the code.
LabeledGraph image_presentation(const FactorMap& f);

/// Code text format (`code memory M anticipation N`, `map <window> <symbol>`)
/// against known domain and codomain alphabets and domain language.
BlockCode parse_code(std::string_view text, const LabeledGraph& domain, const LabeledGraph& codomain);
/// Code file with `domain <graph>` and `codomain <graph>` lines; paths are
/// relative to the code file.
FactorMap load_factor_map(const std::string& path);
std::string format_code(const BlockCode& c);

}  // namespace shiftlab

#endif  // SHIFTLAB_CODES_HPP

// analysis.hpp -- structure of factor maps between irreducible sofic shifts
//
// Every analysis first recodes the map to a 1-block code and replaces the
// recoded domain by its Fischer cover D. Questions about preimage points
// then become questions about pairs of D-paths with equal image labels,
// which are decided on the PairAutomaton below. Blocks reported by these
// functions (central blocks, witnesses) are over the recoded domain
// alphabet; for maps that are already 1-block that is the domain alphabet.

#ifndef SHIFTLAB_ANALYSIS_HPP
#define SHIFTLAB_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/codes.hpp"
#include "shiftlab/core.hpp"

namespace shiftlab {

/// A 1-block map presented on the Fischer cover of its domain.
struct PresentedMap {
  FactorMap recoded;
  /// Fischer cover of recoded.domain; labels are recoded domain symbols.
  LabeledGraph cover;
  /// image[s] = codomain symbol of recoded domain symbol s.
  std::vector<Symbol> image;

  Symbol image_of_edge(std::size_t e) const { return image[cover.edge(e).label]; }
};

/// Requires an irreducible domain.
PresentedMap present(const FactorMap& f);

struct PairMove {
  std::size_t target;
  std::size_t edge1;
  std::size_t edge2;
  Symbol image;
};

/// States are pairs (P, Q) of cover vertices, indexed P * n + Q. A move
/// reads one codomain symbol with an edge out of P and an edge out of Q
/// whose images both equal it.
class PairAutomaton {
 public:
  explicit PairAutomaton(const PresentedMap& m);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t state_count() const noexcept { return n_ * n_; }
  std::size_t state(VertexId p, VertexId q) const { return static_cast<std::size_t>(p) * n_ + q; }
  VertexId first(std::size_t s) const { return static_cast<VertexId>(s / n_); }
  VertexId second(std::size_t s) const { return static_cast<VertexId>(s % n_); }
  bool diagonal(std::size_t s) const { return first(s) == second(s); }
  const std::vector<PairMove>& moves(std::size_t s) const { return moves_.at(s); }

  /// Length of the longest move sequence starting at each state; nullopt
  /// when arbitrarily long sequences exist.
  std::vector<std::optional<std::size_t>> continuation_lengths() const;

 private:
  std::size_t n_;
  std::vector<std::vector<PairMove>> moves_;
};

bool is_finite_to_one(const FactorMap& f);

struct DegreeReport {
  bool finite_to_one = false;
  std::optional<std::size_t> degree;
  std::optional<Block> magic_word;
  /// Number of distinct cover edges at each coordinate of the magic word.
  std::vector<std::size_t> details;
  /// Word length from which the minimum is guaranteed to be attained.
  std::size_t exactness_bound = 0;
  /// False when word_bound < exactness_bound: the degree is an upper bound.
  bool exact = false;
};

/// Default word bound: |V_subset|^2 + 1 for the subset cover of the domain.
std::size_t default_word_bound(const FactorMap& f);
/// Throws Error::Kind::not_finite_to_one.
DegreeReport degree(const FactorMap& f, std::size_t word_bound);
DegreeReport degree_serial(const FactorMap& f, std::size_t word_bound);
bool is_one_to_one_ae(const FactorMap& f, std::size_t word_bound);

/// Two domain blocks following a common left context whose images agree
/// but whose first symbols differ.
struct ClosingWitness {
  Block context;
  Block first;
  Block second;
};

struct ClosingReport {
  bool right_closing_ae = false;
  /// Minimal n such that agreement of left rays and of images up to
  /// coordinate n + 1 forces the symbol at coordinate 1.
  std::optional<std::size_t> delay;
  std::optional<ClosingWitness> witness;
  /// Right-closing a.e., but only with a delay above the bound.
  bool beyond_bound = false;
};

ClosingReport right_closing_ae(const FactorMap& f, std::size_t delay_bound);

struct DecoderCertificate {
  Block block;
  std::size_t anticipation = 0;
  std::size_t verified_horizon = kUnbounded;
};

std::optional<DecoderCertificate> find_decoder_block(const FactorMap& f, std::size_t max_len,
                                                     std::size_t max_anticipation);
std::optional<DecoderCertificate> find_decoder_block_serial(const FactorMap& f, std::size_t max_len,
                                                            std::size_t max_anticipation);
/// Exhaustive check over domain blocks of the original (not recoded) map
/// for n = 1..horizon.
bool verify_decoder_block(const FactorMap& f, const Block& w, std::size_t k, std::size_t horizon);

struct HyperbolicCertificate {
  Block word;
  std::size_t half_width_n = 0;
  std::size_t d = 0;
  std::size_t k = 0;
  std::vector<Block> central_blocks;
  std::size_t extension_horizon = kUnbounded;
};

/// Words of odd length up to word_bound, centers k <= min(k_bound, n).
/// Condition (2) is decided exactly by a product search; extension_bound
/// caps the extension length only when that search would be too large.
std::optional<HyperbolicCertificate> find_hyperbolic_certificate(const FactorMap& f, std::size_t word_bound,
                                                                 std::size_t k_bound,
                                                                 std::size_t extension_bound);
std::optional<HyperbolicCertificate> find_hyperbolic_certificate_serial(const FactorMap& f,
                                                                        std::size_t word_bound,
                                                                        std::size_t k_bound,
                                                                        std::size_t extension_bound);

struct FiberComponent {
  LabeledGraph graph;
  bool both_onto = false;
};

struct FiberProduct {
  LabeledGraph presentation;
  /// The inputs recoded to 1-block maps.
  FactorMap first;
  FactorMap second;
  /// 1-block codes onto first.domain and second.domain.
  BlockCode projection1;
  BlockCode projection2;
  std::vector<FiberComponent> components;
};

FiberProduct fiber_product(const FactorMap& f1, const FactorMap& f2);

struct SearchBounds {
  std::size_t max_len = 8;
  std::size_t max_anticipation = 4;
  std::size_t horizon = 8;
  std::optional<std::size_t> word_bound;
  std::size_t delay_bound = 6;
  std::size_t extension_bound = 10;
};

struct ConsistencyReport {
  enum class Status { agree_positive, agree_negative, disagree, inconclusive };
  Status status = Status::inconclusive;
  /// Report lines after the status line (certificates, evidence).
  std::vector<std::string> details;
};

std::string status_name(ConsistencyReport::Status s);

/// Right-closing a.e. and 1-1 a.e. versus existence of a decoder block.
ConsistencyReport check_decoder_equivalence(const FactorMap& f, const SearchBounds& bounds);
/// Half-synchronized verdicts of domain and codomain of a hyperbolic map,
/// plus the lifting of a half-synchronizing block to a central block.
ConsistencyReport check_half_sync_lifting(const FactorMap& f, const SearchBounds& bounds);
/// Transitivity instance of common hyperbolic extensions: X <- V -> Y and
/// Y <- W -> Z give X <- Gamma -> Z through a component of the fiber product.
ConsistencyReport check_common_extension(const FactorMap& f_xv, const FactorMap& f_yv, const FactorMap& f_yw,
                                         const FactorMap& f_zw, const SearchBounds& bounds);

/// `hyperbolic word <w> d <d> k <k> blocks <m1> ...`; `domain` is the
/// recoded domain alphabet.
std::string format_certificate(const Alphabet& domain, const Alphabet& codomain, const HyperbolicCertificate& c);
/// `decoder-block <w> anticipation <k>`
std::string format_certificate(const Alphabet& codomain, const DecoderCertificate& c);

}  // namespace shiftlab

#endif  // SHIFTLAB_ANALYSIS_HPP

// Fiber products and the consistency harnesses built on the analyses.

#include <algorithm>
#include <map>

#include "shiftlab/analysis.hpp"
#include "shiftlab/covers.hpp"
#include "shiftlab/oracle.hpp"

namespace shiftlab {

namespace {

bool same_language(const LabeledGraph& a, const LabeledGraph& b) {
  return language_contained(a, b) && language_contained(b, a);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// 1-block code from the recoded domain back to the original domain
/// alphabet: a recoded symbol is a window, decoded at the memory offset.
BlockCode decode_recoding(const FactorMap& original, const FactorMap& recoded) {
  if (original.code.one_block()) return identity_code(original.domain);
  const Alphabet& from = recoded.domain.alphabet();
  std::vector<Symbol> table(from.size());
  for (std::size_t s = 0; s < from.size(); ++s)
    table[s] = original.domain.alphabet().parse(from.name(static_cast<Symbol>(s)))[original.code.memory()];
  return symbol_code(from, original.domain.alphabet(), table);
}

/// Least admissible block of length 1..3 passing the half-synchronizing
/// check at the horizon.
std::optional<Block> half_synchronizing_block(const ShiftOracle& o, std::size_t horizon) {
  for (std::size_t len = 1; len <= 3; ++len)
    for (const Block& m : blocks_of_length(o.graph(), len))
      if (is_half_synchronizing(o, m, horizon).status == HalfSyncVerdict::Status::holds_at_horizon) return m;
  return std::nullopt;
}

}  // namespace

std::string status_name(ConsistencyReport::Status s) {
  switch (s) {
    case ConsistencyReport::Status::agree_positive:
      return "agree-positive";
    case ConsistencyReport::Status::agree_negative:
      return "agree-negative";
    case ConsistencyReport::Status::disagree:
      return "disagree";
    case ConsistencyReport::Status::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

FiberProduct fiber_product(const FactorMap& f1, const FactorMap& f2) {
  if (!(f1.codomain.alphabet() == f2.codomain.alphabet()) || !same_language(f1.codomain, f2.codomain))
    throw Error(Error::Kind::codomain_mismatch, "maps do not share a codomain");
  FactorMap r1 = recode_to_one_block(f1);
  FactorMap r2 = recode_to_one_block(f2);
  const LabeledGraph& g1 = r1.domain;
  const LabeledGraph& g2 = r2.domain;
  std::vector<Symbol> img1(g1.alphabet().size(), 0), img2(g2.alphabet().size(), 0);
  for (const auto& [w, s] : r1.code.window_map()) img1[w.front()] = s;
  for (const auto& [w, s] : r2.code.window_map()) img2[w.front()] = s;

  // Pair symbols that actually occur, in (first, second) order.
  std::map<std::pair<Symbol, Symbol>, Symbol> pair_id;
  for (const Edge& a : g1.edges())
    for (const Edge& b : g2.edges())
      if (img1[a.label] == img2[b.label]) pair_id.emplace(std::make_pair(a.label, b.label), 0);
  std::vector<std::string> names;
  std::vector<Symbol> proj1, proj2;
  for (auto& [pr, id] : pair_id) {
    id = static_cast<Symbol>(names.size());
    names.push_back("(" + g1.alphabet().name(pr.first) + "," + g2.alphabet().name(pr.second) + ")");
    proj1.push_back(pr.first);
    proj2.push_back(pr.second);
  }
  const Alphabet alphabet(names);

  std::vector<std::string> vertices;
  for (std::size_t p = 0; p < g1.vertex_count(); ++p)
    for (std::size_t q = 0; q < g2.vertex_count(); ++q)
      vertices.push_back("(" + g1.vertex_name(static_cast<VertexId>(p)) + "," +
                         g2.vertex_name(static_cast<VertexId>(q)) + ")");
  std::vector<Edge> edges;
  const auto n2 = static_cast<VertexId>(g2.vertex_count());
  for (const Edge& a : g1.edges())
    for (const Edge& b : g2.edges())
      if (img1[a.label] == img2[b.label])
        edges.push_back({a.source * n2 + b.source, a.target * n2 + b.target, pair_id.at({a.label, b.label})});
  LabeledGraph sigma = trim_to_essential(LabeledGraph(alphabet, std::move(vertices), std::move(edges)));

  BlockCode p1 = symbol_code(alphabet, g1.alphabet(), proj1);
  BlockCode p2 = symbol_code(alphabet, g2.alphabet(), proj2);
  std::vector<FiberComponent> components;
  for (const VertexSet& comp : nontrivial_components(sigma)) {
    LabeledGraph graph = induced_subgraph(sigma, comp);
    const bool onto = same_language(relabel(graph, g1.alphabet(), proj1), g1) &&
                      same_language(relabel(graph, g2.alphabet(), proj2), g2);
    components.push_back({std::move(graph), onto});
  }
  return FiberProduct{std::move(sigma), std::move(r1), std::move(r2), std::move(p1), std::move(p2),
                      std::move(components)};
}

ConsistencyReport check_decoder_equivalence(const FactorMap& f, const SearchBounds& bounds) {
  ConsistencyReport report;
  auto& out = report.details;

  const ClosingReport closing = right_closing_ae(f, bounds.delay_bound);
  if (closing.right_closing_ae)
    out.push_back("right-closing yes delay " + std::to_string(*closing.delay));
  else
    out.push_back(closing.beyond_bound ? "right-closing beyond-bound" : "right-closing no");

  bool one_to_one = false;
  bool degree_known = true;
  try {
    const DegreeReport d = degree(f, bounds.word_bound.value_or(default_word_bound(f)));
    one_to_one = d.degree == 1u;
    degree_known = d.exact;
    out.push_back("degree " + std::to_string(*d.degree) + (d.exact ? "" : " upper-bound"));
  } catch (const Error& e) {
    if (e.kind() != Error::Kind::not_finite_to_one) throw;
    out.push_back("degree infinite");
  }

  const auto cert = find_decoder_block(f, bounds.max_len, bounds.max_anticipation);
  if (cert)
    out.push_back(format_certificate(f.codomain.alphabet(), *cert));
  else
    out.push_back("decoder-block none");

  const bool lhs_known = !closing.beyond_bound && degree_known;
  const bool lhs = closing.right_closing_ae && one_to_one;
  using S = ConsistencyReport::Status;
  if (!lhs_known)
    report.status = S::inconclusive;
  else if (lhs)
    report.status = cert ? S::agree_positive : S::inconclusive;
  else
    report.status = cert ? S::disagree : S::agree_negative;
  return report;
}

ConsistencyReport check_half_sync_lifting(const FactorMap& f, const SearchBounds& bounds) {
  ConsistencyReport report;
  auto& out = report.details;
  using S = ConsistencyReport::Status;

  const auto cert = find_hyperbolic_certificate(f, bounds.max_len, bounds.max_anticipation, bounds.extension_bound);
  if (!cert) {
    out.push_back("hyperbolic none");
    report.status = S::inconclusive;
    return report;
  }
  const PresentedMap m = present(f);
  out.push_back(format_certificate(m.recoded.domain.alphabet(), f.codomain.alphabet(), *cert));

  const ShiftOracle domain = ShiftOracle::sofic(f.domain);
  const ShiftOracle codomain = ShiftOracle::sofic(f.codomain);
  bool agree = true;
  bool all_positive = true;
  std::vector<std::size_t> horizons;
  for (std::size_t h = 4; h <= std::max<std::size_t>(bounds.horizon, 4); h += 2)
    horizons.push_back(std::min(h, domain.horizon_budget()));
  horizons.erase(std::unique(horizons.begin(), horizons.end()), horizons.end());
  for (std::size_t h : horizons) {
    const auto x = half_synchronizing_block(domain, h);
    const auto y = half_synchronizing_block(codomain, h);
    out.push_back("horizon " + std::to_string(h) + " domain " +
                  (x ? "half-synchronized " + f.domain.alphabet().format(*x) : std::string("refuted")) +
                  " codomain " +
                  (y ? "half-synchronized " + f.codomain.alphabet().format(*y) : std::string("refuted")));
    agree = agree && x.has_value() == y.has_value();
    all_positive = all_positive && x.has_value();
  }

  // The lifting step: some central block of the certificate is itself
  // half-synchronizing in the (recoded) domain.
  const ShiftOracle recoded = ShiftOracle::sofic(m.recoded.domain);
  std::optional<Block> lifted;
  for (const Block& c : cert->central_blocks)
    if (is_half_synchronizing(recoded, c, horizons.back()).status == HalfSyncVerdict::Status::holds_at_horizon) {
      lifted = c;
      break;
    }
  out.push_back("lifted-block " + (lifted ? m.recoded.domain.alphabet().format(*lifted) : std::string("none")));

  if (!agree || !lifted)
    report.status = S::disagree;
  else
    report.status = all_positive ? S::agree_positive : S::agree_negative;
  return report;
}

ConsistencyReport check_common_extension(const FactorMap& f_xv, const FactorMap& f_yv, const FactorMap& f_yw,
                                         const FactorMap& f_zw, const SearchBounds& bounds) {
  if (!(f_xv.domain.alphabet() == f_yv.domain.alphabet()) || !same_language(f_xv.domain, f_yv.domain))
    throw Error(Error::Kind::invalid_argument, "the maps out of V do not share a domain");
  if (!(f_zw.domain.alphabet() == f_yw.domain.alphabet()) || !same_language(f_zw.domain, f_yw.domain))
    throw Error(Error::Kind::invalid_argument, "the maps out of W do not share a domain");

  ConsistencyReport report;
  auto& out = report.details;
  using S = ConsistencyReport::Status;
  auto search = [&](const FactorMap& f) {
    return find_hyperbolic_certificate(f, bounds.max_len, bounds.max_anticipation, bounds.extension_bound);
  };

  bool inputs_ok = true;
  for (const FactorMap* f : {&f_xv, &f_yv, &f_yw, &f_zw}) inputs_ok = inputs_ok && search(*f).has_value();
  out.push_back("inputs hyperbolic " + yes_no(inputs_ok));
  if (!inputs_ok) {
    report.status = S::inconclusive;
    return report;
  }

  const FiberProduct fp = fiber_product(f_yv, f_yw);
  out.push_back("fiber-product vertices " + std::to_string(fp.presentation.vertex_count()) + " components " +
                std::to_string(fp.components.size()));
  const auto gamma = std::find_if(fp.components.begin(), fp.components.end(),
                                  [](const FiberComponent& c) { return c.both_onto; });
  if (gamma == fp.components.end()) {
    out.push_back("component none");
    report.status = S::inconclusive;
    return report;
  }
  out.push_back("component " + std::to_string(gamma - fp.components.begin()) + " vertices " +
                std::to_string(gamma->graph.vertex_count()));

  bool composed_ok = true;
  auto leg = [&](const std::string& name, const FactorMap& outer, const FactorMap& inner, const FactorMap& recoded,
                 const BlockCode& projection) {
    const BlockCode to_domain = compose(decode_recoding(inner, recoded), projection);
    const BlockCode code = restrict_to(compose(outer.code, to_domain), gamma->graph);
    const FactorMap composed = make_factor_map(code, gamma->graph, outer.codomain);
    const auto cert = search(composed);
    if (cert) {
      const PresentedMap m = present(composed);
      out.push_back(name + " " + format_certificate(m.recoded.domain.alphabet(), composed.codomain.alphabet(), *cert));
    } else {
      out.push_back(name + " hyperbolic none");
    }
    composed_ok = composed_ok && cert.has_value();
  };
  leg("left", f_xv, f_yv, fp.first, fp.projection1);
  leg("right", f_zw, f_yw, fp.second, fp.projection2);
  report.status = composed_ok ? S::agree_positive : S::inconclusive;
  return report;
}

}  // namespace shiftlab

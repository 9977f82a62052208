#pragma once

#include <cstddef>
#include <vector>

#include "latmod/arrow_set.hpp"
#include "latmod/lattice.hpp"
#include "latmod/model.hpp"

namespace latmod {

enum class Side { kLeft, kRight };

const char* side_name(Side side);

/// Blocks of the equivalence relation generated by W, each sorted, blocks
/// ordered by their least element.
std::vector<std::vector<Element>> weq_components(const ArrowSet& weak_equivalences);

/// Golden arrows contributed by one new short weak equivalence sigma.
struct GoldenArrowReport {
  Arrow sigma;
  /// Maximal elements of the old component of target(sigma).
  std::vector<Element> targets;
  /// Maximal elements of the old component of source(sigma) lying below
  /// some member of `targets`.
  std::vector<Element> sources;
  /// s -> t for s in sources, t in targets and s <= t.
  std::vector<Arrow> arrows;
};

struct GoldenArrows {
  std::vector<GoldenArrowReport> reports;
  /// Union of all report arrows.
  ArrowSet gamma;
};

/// Weak equivalences after right localization at f: iterate
/// AF_n = <AF_{n-1} u S_{n-1}>, W_n = 2-out-of-3 closure of AF_n o AC,
/// S_n = W_n \ W_{n-1}, starting from AF_0 = AF and S_0 = {f}.
ArrowSet right_localized_weak_equivalences(const ModelStructure& model,
                                           const Arrow& f);
/// The dual iteration on AC with cotransfer generation.
ArrowSet left_localized_weak_equivalences(const ModelStructure& model,
                                          const Arrow& f);

/// Golden arrows for right localization at the cover f. An f that is
/// already a weak equivalence yields an empty result. Throws NotShort.
GoldenArrows golden_arrows(const ModelStructure& model, const Arrow& f);

/// Right Bousfield localization. For a cover f the acyclic fibrations become
/// <AF u golden arrows>; any other f is localized one cover at a time along
/// its first maximal chain, and the result is checked against the direct
/// iteration (InternalError on mismatch). Throws NotAdmissible if the result
/// is not a model structure.
ModelStructure right_localize(const ModelAnalyzer& analyzer,
                              const ModelStructure& model, const Arrow& f);

/// Left Bousfield localization: acyclic fibrations stay fixed.
ModelStructure left_localize(const ModelAnalyzer& analyzer,
                             const ModelStructure& model, const Arrow& f);

ModelStructure localize(const ModelAnalyzer& analyzer,
                        const ModelStructure& model, Side side, const Arrow& f);

struct LocalizationEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Side side = Side::kLeft;
  Arrow at;

  friend bool operator==(const LocalizationEdge&, const LocalizationEdge&) = default;
};

/// Nodes are analyzer.model_structures(); edges are the left and right
/// localizations at covers f not in W, sorted by (from, at, side).
struct LocalizationGraph {
  std::size_t node_count = 0;
  std::vector<LocalizationEdge> edges;
  std::size_t trivial_index = 0;
};

LocalizationGraph localization_graph(const ModelAnalyzer& analyzer);

/// Node indices reachable from the trivial structure, ascending.
std::vector<std::size_t> reachable_from_trivial(const LocalizationGraph& graph);

/// Number of connected components when edge directions are ignored.
std::size_t weak_component_count(const LocalizationGraph& graph);

}  // namespace latmod

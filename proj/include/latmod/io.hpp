#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "latmod/arrow_set.hpp"
#include "latmod/bousfield.hpp"
#include "latmod/lattice.hpp"
#include "latmod/model.hpp"
#include "latmod/transfer.hpp"

namespace latmod::io {

using nlohmann::json;

// All JSON refers to elements by label, never by index.

/// {"elements": [...], "covers": [[s, t], ...]}
json lattice_to_json(const FiniteLattice& lattice);
FiniteLattice lattice_from_json(const json& doc);

/// {"arrows": [[s, t], ...]}
json arrows_to_json(const ArrowSet& set);
/// Accepts {"arrows": [...]} or a bare list of pairs.
ArrowSet arrows_from_json(const FiniteLattice& lattice, const json& doc);

/// {"W": [...], "AF": [...], "C": [...], "AC": [...], "F": [...]}
json model_to_json(const ModelStructure& model);
/// Reads W and AF; any derived class that is present must agree with the
/// derivation. No admissibility check.
ModelStructure model_from_json(const FiniteLattice& lattice, const json& doc);

json golden_arrows_to_json(const FiniteLattice& lattice,
                           const GoldenArrows& golden);

/// "builtin:n5", "builtin:m3", "builtin:square", "builtin:chain<n>",
/// "builtin:grid<a>x<b>". Throws ValidationError for unknown names.
FiniteLattice builtin_lattice(std::string_view name);
/// A builtin name or the path of a lattice JSON file.
FiniteLattice load_lattice(std::string_view source);
/// Inline JSON (starting with '{' or '[') or the path of a JSON file.
json load_json(std::string_view source);

/// Inclusion Hasse diagram of the catalog.
std::string catalog_to_dot(const TransferCatalog& catalog);
/// One cluster per weak equivalence set; nodes are the admissible AF
/// systems joined by the inclusion Hasse edges inside each interval.
std::string models_to_dot(const ModelAnalyzer& analyzer);
/// One row per weak equivalence set with its AF interval.
std::string models_to_csv(const ModelAnalyzer& analyzer);
json models_to_json(const ModelAnalyzer& analyzer);

/// Left localizations are dashed edges labelled L, right ones solid and
/// labelled R.
std::string localization_graph_to_dot(const ModelAnalyzer& analyzer,
                                      const LocalizationGraph& graph);
json localization_graph_to_json(const ModelAnalyzer& analyzer,
                                const LocalizationGraph& graph);

}  // namespace latmod::io

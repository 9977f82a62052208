#include "latmod/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "latmod/errors.hpp"

namespace latmod::io {

namespace {

std::string escaped(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

json pairs_to_json(const FiniteLattice& lattice, const std::vector<Arrow>& arrows) {
  json out = json::array();
  for (const Arrow& a : arrows) {
    out.push_back({lattice.label(a.source), lattice.label(a.target)});
  }
  return out;
}

std::vector<LabelPair> pairs_from_json(const json& doc, const char* what) {
  if (!doc.is_array()) {
    throw ValidationError(std::string(what) + " must be a list of label pairs");
  }
  std::vector<LabelPair> out;
  for (const json& pair : doc) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string()) {
      throw ValidationError(std::string(what) +
                            " entries must be [source, target] label pairs");
    }
    out.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return out;
}

std::optional<std::size_t> parse_size(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

std::string read_file(std::string_view path) {
  std::ifstream in{std::string(path)};
  if (!in) throw ValidationError("cannot read '" + std::string(path) + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

json lattice_to_json(const FiniteLattice& lattice) {
  json covers = json::array();
  for (const auto& [s, t] : lattice.cover_labels()) covers.push_back({s, t});
  return {{"elements", lattice.labels()}, {"covers", covers}};
}

FiniteLattice lattice_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("elements") ||
      !doc["elements"].is_array()) {
    throw ValidationError("lattice JSON needs an \"elements\" list");
  }
  std::vector<std::string> labels;
  for (const json& e : doc["elements"]) {
    if (!e.is_string()) throw ValidationError("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<LabelPair> covers;
  if (doc.contains("covers")) covers = pairs_from_json(doc["covers"], "covers");
  return FiniteLattice::build(labels, covers);
}

json arrows_to_json(const ArrowSet& set) {
  return {{"arrows", pairs_to_json(set.lattice(), set.arrows())}};
}

ArrowSet arrows_from_json(const FiniteLattice& lattice, const json& doc) {
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("arrows")) {
      throw ValidationError("arrow-set JSON needs an \"arrows\" list");
    }
    list = &doc["arrows"];
  }
  return ArrowSet::from_labels(lattice, pairs_from_json(*list, "arrows"));
}

json model_to_json(const ModelStructure& model) {
  const FiniteLattice& lattice = model.lattice();
  return {
      {"W", pairs_to_json(lattice, model.weak_equivalences.arrows())},
      {"AF", pairs_to_json(lattice, model.acyclic_fibrations.arrows())},
      {"C", pairs_to_json(lattice, model.cofibrations.arrows())},
      {"AC", pairs_to_json(lattice, model.acyclic_cofibrations.arrows())},
      {"F", pairs_to_json(lattice, model.fibrations.arrows())},
  };
}

ModelStructure model_from_json(const FiniteLattice& lattice, const json& doc) {
  if (!doc.is_object() || !doc.contains("W") || !doc.contains("AF")) {
    throw ValidationError("model JSON needs \"W\" and \"AF\"");
  }
  const ArrowSet w = ArrowSet::from_labels(lattice, pairs_from_json(doc["W"], "W"));
  const ArrowSet af =
      ArrowSet::from_labels(lattice, pairs_from_json(doc["AF"], "AF"));
  ModelStructure model = model_from_pair(w, af);
  const std::pair<const char*, const ArrowSet*> derived[] = {
      {"C", &model.cofibrations},
      {"AC", &model.acyclic_cofibrations},
      {"F", &model.fibrations}};
  for (const auto& [key, expected] : derived) {
    if (!doc.contains(key)) continue;
    const ArrowSet given =
        ArrowSet::from_labels(lattice, pairs_from_json(doc[key], key));
    if (given != *expected) {
      throw ValidationError(std::string("model JSON field \"") + key +
                            "\" does not match the class derived from W and AF");
    }
  }
  return model;
}

json golden_arrows_to_json(const FiniteLattice& lattice,
                           const GoldenArrows& golden) {
  json reports = json::array();
  for (const GoldenArrowReport& r : golden.reports) {
    json targets = json::array();
    for (Element t : r.targets) targets.push_back(lattice.label(t));
    json sources = json::array();
    for (Element s : r.sources) sources.push_back(lattice.label(s));
    reports.push_back({{"sigma", {lattice.label(r.sigma.source),
                                  lattice.label(r.sigma.target)}},
                       {"T", targets},
                       {"S", sources},
                       {"arrows", pairs_to_json(lattice, r.arrows)}});
  }
  return {{"reports", reports},
          {"gamma", pairs_to_json(lattice, golden.gamma.arrows())}};
}

FiniteLattice builtin_lattice(std::string_view name) {
  if (name == "n5") return n5();
  if (name == "m3") return m3();
  if (name == "square") return grid(1, 1);
  if (name.starts_with("chain")) {
    if (auto n = parse_size(name.substr(5))) return chain(*n);
  }
  if (name.starts_with("grid")) {
    const std::string_view dims = name.substr(4);
    const auto x = dims.find('x');
    if (x != std::string_view::npos) {
      auto a = parse_size(dims.substr(0, x));
      auto b = parse_size(dims.substr(x + 1));
      if (a && b) return grid(*a, *b);
    }
  }
  throw ValidationError("unknown builtin lattice '" + std::string(name) + "'");
}

FiniteLattice load_lattice(std::string_view source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) {
    return builtin_lattice(source.substr(prefix.size()));
  }
  return lattice_from_json(load_json(source));
}

json load_json(std::string_view source) {
  const std::size_t start = source.find_first_not_of(" \t\r\n");
  const bool inline_doc =
      start != std::string_view::npos &&
      (source[start] == '{' || source[start] == '[');
  const std::string text = inline_doc ? std::string(source) : read_file(source);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

std::string catalog_to_dot(const TransferCatalog& catalog) {
  std::ostringstream out;
  out << "digraph transfer_systems {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    out << "  t" << i << " [label=" << escaped(catalog[i].signature()) << "];\n";
  }
  for (const auto& [i, j] : catalog.hasse_edges()) {
    out << "  t" << i << " -> t" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string models_to_dot(const ModelAnalyzer& analyzer) {
  std::ostringstream out;
  out << "digraph model_structures {\n  rankdir=BT;\n  node [shape=box];\n";
  const auto& models = analyzer.model_structures();
  std::size_t begin = 0;
  for (std::size_t w = 0; w < analyzer.weak_equivalence_sets().size(); ++w) {
    const ArrowSet& weak = analyzer.weak_equivalence_sets()[w];
    std::size_t end = begin;
    while (end < models.size() && models[end].weak_equivalences == weak) ++end;
    out << "  subgraph cluster_w" << w << " {\n    label="
        << escaped("W = " + weak.signature()) << ";\n";
    for (std::size_t i = begin; i < end; ++i) {
      out << "    m" << i << " [label="
          << escaped(models[i].acyclic_fibrations.signature()) << "];\n";
    }
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = begin; j < end; ++j) {
        const ArrowSet& a = models[i].acyclic_fibrations;
        const ArrowSet& b = models[j].acyclic_fibrations;
        if (i == j || !a.is_subset_of(b)) continue;
        bool cover = true;
        for (std::size_t k = begin; k < end && cover; ++k) {
          const ArrowSet& c = models[k].acyclic_fibrations;
          if (k != i && k != j && a.is_subset_of(c) && c.is_subset_of(b)) {
            cover = false;
          }
        }
        if (cover) out << "    m" << i << " -> m" << j << ";\n";
      }
    }
    out << "  }\n";
    begin = end;
  }
  out << "}\n";
  return out.str();
}

std::string models_to_csv(const ModelAnalyzer& analyzer) {
  std::ostringstream out;
  out << "W,t_min,t_max,interval_size,interval\n";
  auto field = [](const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + '"';
  };
  for (const ArrowSet& w : analyzer.weak_equivalence_sets()) {
    const auto interval = analyzer.af_interval(w);
    std::string members;
    for (std::size_t i = 0; i < interval.size(); ++i) {
      if (i > 0) members += "; ";
      members += interval[i].signature();
    }
    out << field(w.signature()) << ',' << field(analyzer.t_min(w).signature())
        << ',' << field(analyzer.t_max(w).signature()) << ','
        << interval.size() << ',' << field(members) << '\n';
  }
  return out.str();
}

json models_to_json(const ModelAnalyzer& analyzer) {
  json models = json::array();
  for (const ModelStructure& m : analyzer.model_structures()) {
    models.push_back(model_to_json(m));
  }
  return {{"lattice", lattice_to_json(analyzer.lattice())},
          {"count", analyzer.model_structures().size()},
          {"models", models}};
}

std::string localization_graph_to_dot(const ModelAnalyzer& analyzer,
                                      const LocalizationGraph& graph) {
  const auto& models = analyzer.model_structures();
  const FiniteLattice& lattice = analyzer.lattice();
  std::ostringstream out;
  out << "digraph localizations {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < graph.node_count; ++i) {
    out << "  m" << i << " [label="
        << escaped("W = " + models[i].weak_equivalences.signature() +
                  "\nAF = " + models[i].acyclic_fibrations.signature());
    if (i == graph.trivial_index) out << ", peripheries=2";
    out << "];\n";
  }
  for (const LocalizationEdge& e : graph.edges) {
    const bool left = e.side == Side::kLeft;
    out << "  m" << e.from << " -> m" << e.to << " [label="
        << escaped(std::string(left ? "L " : "R ") + lattice.arrow_label(e.at))
        << ", style=" << (left ? "dashed" : "solid") << "];\n";
  }
  out << "}\n";
  return out.str();
}

json localization_graph_to_json(const ModelAnalyzer& analyzer,
                                const LocalizationGraph& graph) {
  const FiniteLattice& lattice = analyzer.lattice();
  json nodes = json::array();
  for (const ModelStructure& m : analyzer.model_structures()) {
    nodes.push_back(model_to_json(m));
  }
  json edges = json::array();
  for (const LocalizationEdge& e : graph.edges) {
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"side", side_name(e.side)},
                     {"at", {lattice.label(e.at.source), lattice.label(e.at.target)}}});
  }
  return {{"nodes", nodes}, {"edges", edges}, {"trivial", graph.trivial_index}};
}

}  // namespace latmod::io

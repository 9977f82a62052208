#include "latmod/bousfield.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

#include "latmod/errors.hpp"
#include "latmod/parallel.hpp"

namespace latmod {

const char* side_name(Side side) {
  return side == Side::kLeft ? "left" : "right";
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

const std::vector<Element>& block_of(
    const std::vector<std::vector<Element>>& blocks, Element x) {
  for (const auto& block : blocks) {
    if (std::binary_search(block.begin(), block.end(), x)) return block;
  }
  throw InternalError("element missing from component partition");
}

std::vector<Element> maximal_elements(const FiniteLattice& lattice,
                                      const std::vector<Element>& elements) {
  std::vector<Element> out;
  for (Element x : elements) {
    const bool dominated = std::any_of(
        elements.begin(), elements.end(),
        [&](Element y) { return lattice.less(x, y); });
    if (!dominated) out.push_back(x);
  }
  return out;
}

template <typename Generate, typename Combine>
ArrowSet localized_weak_equivalences(const ArrowSet& weak_equivalences,
                                     ArrowSet moving, const Arrow& f,
                                     Generate generate, Combine combine) {
  const FiniteLattice& lattice = weak_equivalences.lattice();
  ArrowSet previous = weak_equivalences;
  ArrowSet fresh(lattice, {f});
  const std::size_t bound = lattice.arrow_count() + 1;
  for (std::size_t round = 0; round <= bound; ++round) {
    moving = generate(moving | fresh);
    ArrowSet current = close_two_out_of_three(combine(moving));
    if (current == previous) return current;
    fresh = current - previous;
    previous = std::move(current);
  }
  throw InternalError("localization iteration did not converge");
}

}  // namespace

std::vector<std::vector<Element>> weq_components(
    const ArrowSet& weak_equivalences) {
  const FiniteLattice& lattice = weak_equivalences.lattice();
  DisjointSets sets(lattice.size());
  for (const Arrow& a : weak_equivalences.arrows()) sets.unite(a.source, a.target);
  std::vector<std::vector<Element>> blocks;
  std::vector<std::ptrdiff_t> slot(lattice.size(), -1);
  for (Element x = 0; x < lattice.size(); ++x) {
    const std::size_t root = sets.find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[root])].push_back(x);
  }
  return blocks;
}

ArrowSet right_localized_weak_equivalences(const ModelStructure& model,
                                           const Arrow& f) {
  if (model.weak_equivalences.contains(f)) return model.weak_equivalences;
  return localized_weak_equivalences(
      model.weak_equivalences, model.acyclic_fibrations, f, generate_transfer,
      [&](const ArrowSet& af) {
        return compose_sets(af, model.acyclic_cofibrations);
      });
}

ArrowSet left_localized_weak_equivalences(const ModelStructure& model,
                                          const Arrow& f) {
  if (model.weak_equivalences.contains(f)) return model.weak_equivalences;
  return localized_weak_equivalences(
      model.weak_equivalences, model.acyclic_cofibrations, f,
      generate_cotransfer, [&](const ArrowSet& ac) {
        return compose_sets(model.acyclic_fibrations, ac);
      });
}

GoldenArrows golden_arrows(const ModelStructure& model, const Arrow& f) {
  const FiniteLattice& lattice = model.lattice();
  if (!lattice.is_cover(f)) {
    throw NotShort(lattice.arrow_label(f) + " is not a short arrow");
  }
  GoldenArrows out{{}, ArrowSet(lattice)};
  if (model.weak_equivalences.contains(f)) return out;

  const ArrowSet localized = right_localized_weak_equivalences(model, f);
  const auto blocks = weq_components(model.weak_equivalences);
  for (const Arrow& sigma : lattice.covers()) {
    if (!localized.contains(sigma) || model.weak_equivalences.contains(sigma)) {
      continue;
    }
    GoldenArrowReport report;
    report.sigma = sigma;
    report.targets = maximal_elements(lattice, block_of(blocks, sigma.target));
    std::vector<Element> below;
    for (Element y : block_of(blocks, sigma.source)) {
      const bool under = std::any_of(
          report.targets.begin(), report.targets.end(),
          [&](Element t) { return lattice.leq(y, t); });
      if (under) below.push_back(y);
    }
    report.sources = maximal_elements(lattice, below);
    for (Element s : report.sources) {
      for (Element t : report.targets) {
        if (s != t && lattice.leq(s, t)) {
          report.arrows.push_back({s, t});
          out.gamma.insert({s, t});
        }
      }
    }
    out.reports.push_back(std::move(report));
  }
  return out;
}

ModelStructure right_localize(const ModelAnalyzer& analyzer,
                              const ModelStructure& model, const Arrow& f) {
  const FiniteLattice& lattice = model.lattice();
  lattice.require_arrow_id(f);
  if (model.weak_equivalences.contains(f)) return model;

  if (lattice.is_cover(f)) {
    ArrowSet weak = right_localized_weak_equivalences(model, f);
    ArrowSet fibrant =
        generate_transfer(model.acyclic_fibrations | golden_arrows(model, f).gamma);
    return analyzer.derive_classes(weak, fibrant);
  }

  const auto chains = enumerate_short_factorizations(lattice, f);
  ModelStructure current = model;
  for (const Arrow& sigma : chains.front()) {
    current = right_localize(analyzer, current, sigma);
  }
  if (current.weak_equivalences != right_localized_weak_equivalences(model, f)) {
    throw InternalError("stepwise right localization at " +
                        lattice.arrow_label(f) +
                        " disagrees with the direct iteration");
  }
  return current;
}

ModelStructure left_localize(const ModelAnalyzer& analyzer,
                             const ModelStructure& model, const Arrow& f) {
  model.lattice().require_arrow_id(f);
  if (model.weak_equivalences.contains(f)) return model;
  return analyzer.derive_classes(left_localized_weak_equivalences(model, f),
                                 model.acyclic_fibrations);
}

ModelStructure localize(const ModelAnalyzer& analyzer,
                        const ModelStructure& model, Side side, const Arrow& f) {
  return side == Side::kLeft ? left_localize(analyzer, model, f)
                             : right_localize(analyzer, model, f);
}

LocalizationGraph localization_graph(const ModelAnalyzer& analyzer) {
  const auto& models = analyzer.model_structures();
  const FiniteLattice& lattice = analyzer.lattice();
  LocalizationGraph graph;
  graph.node_count = models.size();
  const auto trivial = analyzer.index_of(trivial_model_structure(lattice));
  if (!trivial) throw InternalError("trivial model structure not enumerated");
  graph.trivial_index = *trivial;

  auto per_node = parallel_map(models.size(), analyzer.options().jobs,
                               [&](std::size_t from) {
    std::vector<LocalizationEdge> edges;
    const ModelStructure& model = models[from];
    for (const Arrow& f : lattice.covers()) {
      if (model.weak_equivalences.contains(f)) continue;
      for (Side side : {Side::kLeft, Side::kRight}) {
        const auto to = analyzer.index_of(localize(analyzer, model, side, f));
        if (!to) {
          throw InternalError(std::string(side_name(side)) +
                              " localization left the enumerated structures");
        }
        if (*to != from) edges.push_back({from, *to, side, f});
      }
    }
    return edges;
  });
  for (auto& edges : per_node) {
    graph.edges.insert(graph.edges.end(), edges.begin(), edges.end());
  }
  std::sort(graph.edges.begin(), graph.edges.end(),
            [](const LocalizationEdge& a, const LocalizationEdge& b) {
              return std::tie(a.from, a.at, a.side, a.to) <
                     std::tie(b.from, b.at, b.side, b.to);
            });
  return graph;
}

std::vector<std::size_t> reachable_from_trivial(const LocalizationGraph& graph) {
  std::vector<std::vector<std::size_t>> successors(graph.node_count);
  for (const auto& e : graph.edges) successors[e.from].push_back(e.to);
  std::vector<bool> seen(graph.node_count, false);
  std::queue<std::size_t> pending;
  if (graph.node_count > 0) {
    seen[graph.trivial_index] = true;
    pending.push(graph.trivial_index);
  }
  while (!pending.empty()) {
    const std::size_t node = pending.front();
    pending.pop();
    for (std::size_t next : successors[node]) {
      if (!seen[next]) {
        seen[next] = true;
        pending.push(next);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < graph.node_count; ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

std::size_t weak_component_count(const LocalizationGraph& graph) {
  DisjointSets sets(graph.node_count);
  for (const auto& e : graph.edges) sets.unite(e.from, e.to);
  std::size_t count = 0;
  for (std::size_t i = 0; i < graph.node_count; ++i) {
    if (sets.find(i) == i) ++count;
  }
  return count;
}

}  // namespace latmod

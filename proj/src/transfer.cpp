#include "latmod/transfer.hpp"

#include <algorithm>

#include "latmod/errors.hpp"
#include "latmod/parallel.hpp"

namespace latmod {

namespace {

struct SearchNode {
  std::size_t position;
  ArrowSet included;
  ArrowSet excluded;
};

class ClosedSetSearch {
 public:
  ClosedSetSearch(const FiniteLattice& lattice, const ClosureFn& closure)
      : lattice_(lattice), closure_(closure) {}

  SearchNode root() const {
    return {0, closure_(ArrowSet(lattice_)), ArrowSet(lattice_)};
  }

  // Children of a node in (exclude, include) order; empty at a leaf.
  std::vector<SearchNode> expand(const SearchNode& node) const {
    std::size_t pos = node.position;
    while (pos < lattice_.arrow_count() && node.included.contains_id(pos)) {
      ++pos;
    }
    if (pos == lattice_.arrow_count()) return {};
    std::vector<SearchNode> children;
    SearchNode without{pos + 1, node.included, node.excluded};
    without.excluded.insert_id(pos);
    children.push_back(std::move(without));
    ArrowSet grown = node.included;
    grown.insert_id(pos);
    grown = closure_(grown);
    if (!grown.intersects(node.excluded)) {
      children.push_back({pos + 1, std::move(grown), node.excluded});
    }
    return children;
  }

  bool is_leaf(const SearchNode& node) const {
    for (std::size_t pos = node.position; pos < lattice_.arrow_count(); ++pos) {
      if (!node.included.contains_id(pos)) return false;
    }
    return true;
  }

  void run(const SearchNode& node, std::vector<ArrowSet>& out) const {
    if (is_leaf(node)) {
      out.push_back(node.included);
      return;
    }
    for (const SearchNode& child : expand(node)) run(child, out);
  }

 private:
  const FiniteLattice& lattice_;
  const ClosureFn& closure_;
};

std::vector<ArrowSet> backtrack(const FiniteLattice& lattice,
                                const ClosureFn& closure, std::size_t jobs) {
  ClosedSetSearch search(lattice, closure);
  // Breadth-first until there is enough independent work per thread.
  std::vector<SearchNode> frontier{search.root()};
  std::vector<ArrowSet> leaves;
  const std::size_t target = jobs > 1 ? jobs * 8 : 1;
  while (!frontier.empty() && frontier.size() < target) {
    std::vector<SearchNode> next;
    for (const SearchNode& node : frontier) {
      if (search.is_leaf(node)) {
        leaves.push_back(node.included);
        continue;
      }
      for (SearchNode& child : search.expand(node)) next.push_back(std::move(child));
    }
    frontier = std::move(next);
  }
  auto parts = parallel_map(frontier.size(), jobs, [&](std::size_t i) {
    std::vector<ArrowSet> found;
    search.run(frontier[i], found);
    return found;
  });
  for (auto& part : parts) {
    for (ArrowSet& s : part) leaves.push_back(std::move(s));
  }
  return leaves;
}

std::vector<ArrowSet> exhaustive(const FiniteLattice& lattice,
                                 const ClosureFn& closure, std::size_t jobs) {
  const std::size_t k = lattice.arrow_count();
  if (k >= 63) throw std::invalid_argument("too many arrows for exhaustive search");
  const std::uint64_t total = std::uint64_t{1} << k;
  const std::size_t chunks = std::max<std::size_t>(jobs * 4, 1);
  auto parts = parallel_map(chunks, jobs, [&](std::size_t chunk) {
    std::vector<ArrowSet> found;
    const std::uint64_t begin = total * chunk / chunks;
    const std::uint64_t end = total * (chunk + 1) / chunks;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      ArrowSet candidate(lattice, ArrowSet::Bits(k, mask));
      if (closure(candidate) == candidate) found.push_back(std::move(candidate));
    }
    return found;
  });
  std::vector<ArrowSet> out;
  for (auto& part : parts) {
    for (ArrowSet& s : part) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<ArrowSet> enumerate_closed_sets(const FiniteLattice& lattice,
                                            const ClosureFn& closure,
                                            const EnumerationOptions& options) {
  SearchStrategy strategy = options.strategy;
  if (strategy == SearchStrategy::kAuto) {
    strategy = lattice.arrow_count() <= kExhaustiveArrowLimit
                   ? SearchStrategy::kExhaustive
                   : SearchStrategy::kBacktracking;
  }
  const std::size_t jobs = std::max<std::size_t>(options.jobs, 1);
  std::vector<ArrowSet> out = strategy == SearchStrategy::kExhaustive
                                  ? exhaustive(lattice, closure, jobs)
                                  : backtrack(lattice, closure, jobs);
  std::sort(out.begin(), out.end());
  return out;
}

TransferCatalog::TransferCatalog(const FiniteLattice& lattice,
                                 std::vector<ArrowSet> systems)
    : lattice_(&lattice), systems_(std::move(systems)) {
  std::sort(systems_.begin(), systems_.end());
  const std::size_t n = systems_.size();
  containment_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      containment_[i * n + j] = systems_[i].is_subset_of(systems_[j]) ? 1 : 0;
    }
  }
}

std::optional<std::size_t> TransferCatalog::index_of(
    const ArrowSet& system) const {
  auto it = std::lower_bound(systems_.begin(), systems_.end(), system);
  if (it == systems_.end() || *it != system) return std::nullopt;
  return static_cast<std::size_t>(it - systems_.begin());
}

std::size_t TransferCatalog::require_index(const ArrowSet& system) const {
  if (auto i = index_of(system)) return *i;
  throw NotATransferSystem(system.signature() + " is not a transfer system");
}

std::vector<std::pair<std::size_t, std::size_t>> TransferCatalog::hasse_edges()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !contained(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        if (k != i && k != j && contained(i, k) && contained(k, j)) cover = false;
      }
      if (cover) edges.emplace_back(i, j);
    }
  }
  return edges;
}

TransferCatalog enumerate_transfer_systems(const FiniteLattice& lattice,
                                           const EnumerationOptions& options) {
  return TransferCatalog(
      lattice, enumerate_closed_sets(lattice, generate_transfer, options));
}

std::vector<ArrowSet> enumerate_cotransfer_systems(
    const FiniteLattice& lattice, const EnumerationOptions& options) {
  return enumerate_closed_sets(lattice, generate_cotransfer, options);
}

ArrowSet tr_meet(const TransferCatalog& catalog, const ArrowSet& first,
                 const ArrowSet& second) {
  catalog.require_index(first);
  catalog.require_index(second);
  return first & second;
}

ArrowSet tr_join(const TransferCatalog& catalog, const ArrowSet& first,
                 const ArrowSet& second) {
  catalog.require_index(first);
  catalog.require_index(second);
  return generate_transfer(first | second);
}

FiniteLattice tr_as_lattice(const TransferCatalog& catalog) {
  std::vector<std::string> labels;
  labels.reserve(catalog.size());
  for (const ArrowSet& s : catalog.systems()) labels.push_back(s.signature());
  std::vector<LabelPair> covers;
  for (const auto& [i, j] : catalog.hasse_edges()) {
    covers.emplace_back(labels[i], labels[j]);
  }
  FiniteLattice lattice = FiniteLattice::build(labels, covers);
  // Canonical catalog order refines inclusion, so indices line up.
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (lattice.label(i) != labels[i]) {
      throw InternalError("transfer lattice indices diverge from catalog order");
    }
    for (std::size_t j = 0; j < catalog.size(); ++j) {
      const auto m = catalog.index_of(tr_meet(catalog, catalog[i], catalog[j]));
      const auto jn = catalog.index_of(tr_join(catalog, catalog[i], catalog[j]));
      if (!m || !jn || lattice.meet(i, j) != *m || lattice.join(i, j) != *jn) {
        throw InternalError("transfer lattice tables disagree with tr_meet/tr_join");
      }
    }
  }
  return lattice;
}

std::vector<GeneratedSystem> singly_generated_transfers(
    const FiniteLattice& lattice) {
  std::vector<GeneratedSystem> out;
  out.reserve(lattice.arrow_count());
  for (const Arrow& f : lattice.arrows()) {
    out.push_back({f, generate_transfer(ArrowSet(lattice, {f}))});
  }
  return out;
}

std::vector<GeneratedSystem> distinct_singly_generated(
    const FiniteLattice& lattice) {
  std::vector<GeneratedSystem> out;
  for (GeneratedSystem& g : singly_generated_transfers(lattice)) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& e) {
      return e.system == g.system;
    });
    if (!seen) out.push_back(std::move(g));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.system < b.system;
  });
  return out;
}

bool is_saturated(const ArrowSet& system) {
  if (!is_transfer_system(system)) {
    throw NotATransferSystem(system.signature() + " is not a transfer system");
  }
  return close_two_out_of_three(system) == system;
}

}  // namespace latmod

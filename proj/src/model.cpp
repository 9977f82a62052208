#include "latmod/model.hpp"

#include <algorithm>

#include "latmod/errors.hpp"
#include "latmod/parallel.hpp"

namespace latmod {

namespace {

bool pushouts_inside(const ArrowSet& set, const Arrow& sigma) {
  for (const Arrow& p : pushouts_of(set.lattice(), sigma)) {
    if (!set.contains(p)) return false;
  }
  return true;
}

bool pullbacks_inside(const ArrowSet& set, const Arrow& sigma) {
  for (const Arrow& p : pullbacks_of(set.lattice(), sigma)) {
    if (!set.contains(p)) return false;
  }
  return true;
}

// Some pivot k in [0, n] has pushout-closed covers up to k and
// pullback-closed covers after it.
bool admits_pivot(const ArrowSet& set, const std::vector<Arrow>& factors) {
  const std::size_t n = factors.size();
  std::vector<bool> push_ok(n), pull_ok(n);
  for (std::size_t i = 0; i < n; ++i) {
    push_ok[i] = pushouts_inside(set, factors[i]);
    pull_ok[i] = pullbacks_inside(set, factors[i]);
  }
  for (std::size_t k = 0; k <= n; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = i < k ? push_ok[i] : pull_ok[i];
    }
    if (ok) return true;
  }
  return false;
}

// Some m with source <= m <= target has source -> m in `first` and
// m -> target in `second` (identities count as members).
bool factors_through(const ArrowSet& first, const ArrowSet& second,
                     const Arrow& f) {
  const FiniteLattice& lattice = first.lattice();
  for (Element m = f.source; m <= f.target; ++m) {
    if (!lattice.leq(f.source, m) || !lattice.leq(m, f.target)) continue;
    if (first.contains(f.source, m) && second.contains(m, f.target)) return true;
  }
  return false;
}

}  // namespace

ModelStructure model_from_pair(const ArrowSet& weak_equivalences,
                               const ArrowSet& acyclic_fibrations) {
  ArrowSet cofibrations = llp_dual(acyclic_fibrations);
  ArrowSet acyclic_cofibrations = cofibrations & weak_equivalences;
  ArrowSet fibrations = rlp_dual(acyclic_cofibrations);
  return {weak_equivalences, acyclic_fibrations, std::move(cofibrations),
          std::move(acyclic_cofibrations), std::move(fibrations)};
}

bool is_weak_equivalence_set(const ArrowSet& weak_equivalences) {
  if (!is_composition_closed(weak_equivalences) ||
      !is_wide_decomposable(weak_equivalences)) {
    return false;
  }
  const FiniteLattice& lattice = weak_equivalences.lattice();
  for (const Arrow& f : weak_equivalences.arrows()) {
    const auto chains = enumerate_short_factorizations(lattice, f);
    const bool realized =
        std::any_of(chains.begin(), chains.end(), [&](const auto& chain) {
          return admits_pivot(weak_equivalences, chain);
        });
    if (!realized) return false;
  }
  return true;
}

std::vector<ArrowSet> enumerate_weak_equivalence_sets(
    const FiniteLattice& lattice, const EnumerationOptions& options) {
  std::vector<ArrowSet> candidates =
      enumerate_closed_sets(lattice, close_decomposable, options);
  std::vector<ArrowSet> out;
  for (ArrowSet& w : candidates) {
    if (is_weak_equivalence_set(w)) out.push_back(std::move(w));
  }
  return out;
}

bool verify_model_axioms(const ModelStructure& model) {
  const ArrowSet& w = model.weak_equivalences;
  const ArrowSet& af = model.acyclic_fibrations;
  const ArrowSet& c = model.cofibrations;
  const ArrowSet& ac = model.acyclic_cofibrations;
  const ArrowSet& f = model.fibrations;

  if (close_two_out_of_three(w) != w) return false;
  if (ac != (c & w) || af != (f & w)) return false;
  if (close_retracts(w) != w || close_retracts(c) != c ||
      close_retracts(f) != f) {
    return false;
  }
  if (ac != llp_dual(f) || c != llp_dual(af)) return false;
  for (const Arrow& a : w.lattice().arrows()) {
    if (!factors_through(c, af, a) || !factors_through(ac, f, a)) return false;
  }
  return true;
}

ModelAnalyzer::ModelAnalyzer(const FiniteLattice& lattice,
                             EnumerationOptions options)
    : lattice_(&lattice),
      options_(options),
      transfers_(enumerate_transfer_systems(lattice, options)),
      cotransfers_(enumerate_cotransfer_systems(lattice, options)),
      weak_equivalence_sets_(enumerate_weak_equivalence_sets(lattice, options)) {
  auto groups = parallel_map(
      weak_equivalence_sets_.size(), options_.jobs, [&](std::size_t i) {
        std::vector<ModelStructure> group;
        const ArrowSet& w = weak_equivalence_sets_[i];
        for (const ArrowSet& t : af_interval(w)) {
          group.push_back(model_from_pair(w, t));
        }
        return group;
      });
  for (auto& group : groups) {
    for (ModelStructure& m : group) model_structures_.push_back(std::move(m));
  }
}

ArrowSet ModelAnalyzer::t_max(const ArrowSet& weak_equivalences) const {
  ArrowSet out(*lattice_);
  for (const ArrowSet& t : transfers_.systems()) {
    if (t.is_subset_of(weak_equivalences)) out |= t;
  }
  if (!is_transfer_system(out)) {
    throw MaximalityViolation("union of transfer systems inside " +
                              weak_equivalences.signature() +
                              " is not a transfer system");
  }
  return out;
}

ArrowSet ModelAnalyzer::k_max(const ArrowSet& weak_equivalences) const {
  ArrowSet out(*lattice_);
  for (const ArrowSet& k : cotransfers_) {
    if (k.is_subset_of(weak_equivalences)) out |= k;
  }
  if (!is_cotransfer_system(out)) {
    throw MaximalityViolation("union of cotransfer systems inside " +
                              weak_equivalences.signature() +
                              " is not a cotransfer system");
  }
  return out;
}

ArrowSet ModelAnalyzer::t_min(const ArrowSet& weak_equivalences) const {
  return rlp_dual(k_max(weak_equivalences)) & weak_equivalences;
}

std::vector<ArrowSet> ModelAnalyzer::af_interval(
    const ArrowSet& weak_equivalences) const {
  const ArrowSet lower = t_min(weak_equivalences);
  const ArrowSet upper = t_max(weak_equivalences);
  std::vector<ArrowSet> out;
  for (const ArrowSet& t : transfers_.systems()) {
    if (lower.is_subset_of(t) && t.is_subset_of(upper)) out.push_back(t);
  }
  return out;
}

ModelStructure ModelAnalyzer::derive_classes(
    const ArrowSet& weak_equivalences,
    const ArrowSet& acyclic_fibrations) const {
  if (!is_weak_equivalence_set(weak_equivalences)) {
    throw NotAdmissible(weak_equivalences.signature() +
                        " is not a weak equivalence set");
  }
  if (!transfers_.index_of(acyclic_fibrations) ||
      !t_min(weak_equivalences).is_subset_of(acyclic_fibrations) ||
      !acyclic_fibrations.is_subset_of(t_max(weak_equivalences))) {
    throw NotAdmissible(acyclic_fibrations.signature() +
                        " is not an admissible acyclic fibration set for " +
                        weak_equivalences.signature());
  }
  return model_from_pair(weak_equivalences, acyclic_fibrations);
}

std::optional<std::size_t> ModelAnalyzer::index_of(
    const ModelStructure& model) const {
  auto it = std::lower_bound(
      model_structures_.begin(), model_structures_.end(), model,
      [](const ModelStructure& a, const ModelStructure& b) {
        if (a.weak_equivalences != b.weak_equivalences) {
          return a.weak_equivalences < b.weak_equivalences;
        }
        return a.acyclic_fibrations < b.acyclic_fibrations;
      });
  if (it == model_structures_.end() || !(*it == model)) return std::nullopt;
  return static_cast<std::size_t>(it - model_structures_.begin());
}

ModelStructure trivial_model_structure(const FiniteLattice& lattice) {
  return model_from_pair(ArrowSet(lattice), ArrowSet(lattice));
}

}  // namespace latmod

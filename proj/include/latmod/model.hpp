#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latmod/arrow_set.hpp"
#include "latmod/lattice.hpp"
#include "latmod/transfer.hpp"

namespace latmod {

/// A model structure on a lattice. It is determined by the weak
/// equivalences and the acyclic fibrations; the other classes are derived.
struct ModelStructure {
  ArrowSet weak_equivalences;
  ArrowSet acyclic_fibrations;
  ArrowSet cofibrations;
  ArrowSet acyclic_cofibrations;
  ArrowSet fibrations;

  const FiniteLattice& lattice() const { return weak_equivalences.lattice(); }

  /// Equality on the determining pair (W, AF).
  friend bool operator==(const ModelStructure& a, const ModelStructure& b) {
    return a.weak_equivalences == b.weak_equivalences &&
           a.acyclic_fibrations == b.acyclic_fibrations;
  }
};

/// C = llp(AF), AC = C n W, F = rlp(AC), with no admissibility check.
ModelStructure model_from_pair(const ArrowSet& weak_equivalences,
                               const ArrowSet& acyclic_fibrations);

/// Composition closed, decomposable, and every member factors into covers
/// sigma_n o ... o sigma_1 with a pivot k such that the nontrivial pushouts
/// of sigma_1..sigma_k and the nontrivial pullbacks of sigma_{k+1}..sigma_n
/// all lie in W.
bool is_weak_equivalence_set(const ArrowSet& weak_equivalences);

std::vector<ArrowSet> enumerate_weak_equivalence_sets(
    const FiniteLattice& lattice, const EnumerationOptions& options = {});

/// Checks the model category axioms directly on the five stored classes:
/// 2-out-of-3 for W, AC = C n W, AF = F n W, the lifting identities
/// AC = llp(F) and C = llp(AF), retract closure of W, C and F, and that
/// every arrow factors as (AF or id) o (C or id) and as (F or id) o (AC or
/// id). Uses neither the weak-equivalence criterion nor the AF interval.
bool verify_model_axioms(const ModelStructure& model);

/// Per-lattice analysis: catalogs of transfer and cotransfer systems, the
/// weak equivalence sets and all model structures, computed once at
/// construction. Holds a reference to the lattice; immutable afterwards.
class ModelAnalyzer {
 public:
  explicit ModelAnalyzer(const FiniteLattice& lattice,
                         EnumerationOptions options = {});

  const FiniteLattice& lattice() const { return *lattice_; }
  const EnumerationOptions& options() const { return options_; }
  const TransferCatalog& transfers() const { return transfers_; }
  const std::vector<ArrowSet>& cotransfers() const { return cotransfers_; }

  /// Largest transfer system inside W: the union of all catalog members
  /// contained in W. Throws MaximalityViolation if that union is not closed.
  ArrowSet t_max(const ArrowSet& weak_equivalences) const;
  /// Largest cotransfer system inside W.
  ArrowSet k_max(const ArrowSet& weak_equivalences) const;
  /// rlp(k_max(W)) n W.
  ArrowSet t_min(const ArrowSet& weak_equivalences) const;
  /// Transfer systems T with t_min(W) <= T <= t_max(W), canonical order.
  std::vector<ArrowSet> af_interval(const ArrowSet& weak_equivalences) const;

  /// Throws NotAdmissible unless AF lies in af_interval(W).
  ModelStructure derive_classes(const ArrowSet& weak_equivalences,
                                const ArrowSet& acyclic_fibrations) const;

  const std::vector<ArrowSet>& weak_equivalence_sets() const {
    return weak_equivalence_sets_;
  }
  /// Grouped by weak equivalence set (canonical order), then by AF.
  const std::vector<ModelStructure>& model_structures() const {
    return model_structures_;
  }
  /// Position of (W, AF) in model_structures().
  std::optional<std::size_t> index_of(const ModelStructure& model) const;

 private:
  const FiniteLattice* lattice_;
  EnumerationOptions options_;
  TransferCatalog transfers_;
  std::vector<ArrowSet> cotransfers_;
  std::vector<ArrowSet> weak_equivalence_sets_;
  std::vector<ModelStructure> model_structures_;
};

/// The model structure with only identities as weak equivalences.
ModelStructure trivial_model_structure(const FiniteLattice& lattice);

}  // namespace latmod

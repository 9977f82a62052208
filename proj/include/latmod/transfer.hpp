#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "latmod/arrow_set.hpp"
#include "latmod/lattice.hpp"

namespace latmod {

enum class SearchStrategy {
  /// Exhaustive for small arrow counts, backtracking otherwise.
  kAuto,
  /// Test every subset of arrows.
  kExhaustive,
  /// Include/exclude search that prunes as soon as a closure hits an
  /// excluded arrow.
  kBacktracking,
};

struct EnumerationOptions {
  SearchStrategy strategy = SearchStrategy::kAuto;
  /// Worker threads; results are identical for every value.
  std::size_t jobs = 1;
};

/// Arrow count up to which kAuto filters all subsets.
inline constexpr std::size_t kExhaustiveArrowLimit = 16;

using ClosureFn = std::function<ArrowSet(const ArrowSet&)>;

/// Every set fixed by `closure` (an extensive, monotone, idempotent map), in
/// canonical order.
std::vector<ArrowSet> enumerate_closed_sets(const FiniteLattice& lattice,
                                            const ClosureFn& closure,
                                            const EnumerationOptions& options);

/// All transfer systems of a lattice with their inclusion order.
class TransferCatalog {
 public:
  TransferCatalog(const FiniteLattice& lattice, std::vector<ArrowSet> systems);

  const FiniteLattice& lattice() const { return *lattice_; }
  std::size_t size() const { return systems_.size(); }
  const std::vector<ArrowSet>& systems() const { return systems_; }
  const ArrowSet& operator[](std::size_t i) const { return systems_[i]; }

  /// Position of `system` in canonical order, if it is a member.
  std::optional<std::size_t> index_of(const ArrowSet& system) const;
  /// Like index_of, but throws NotATransferSystem.
  std::size_t require_index(const ArrowSet& system) const;

  bool contained(std::size_t i, std::size_t j) const {
    return containment_[i * size() + j] != 0;
  }
  /// Covering pairs (i, j) of the inclusion order.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

 private:
  const FiniteLattice* lattice_;
  std::vector<ArrowSet> systems_;
  std::vector<unsigned char> containment_;
};

TransferCatalog enumerate_transfer_systems(const FiniteLattice& lattice,
                                           const EnumerationOptions& options = {});
std::vector<ArrowSet> enumerate_cotransfer_systems(
    const FiniteLattice& lattice, const EnumerationOptions& options = {});

/// Intersection. Both operands must be catalog members.
ArrowSet tr_meet(const TransferCatalog& catalog, const ArrowSet& first,
                 const ArrowSet& second);
/// Transfer system generated by the union.
ArrowSet tr_join(const TransferCatalog& catalog, const ArrowSet& first,
                 const ArrowSet& second);

/// The catalog as a lattice. Element i is catalog entry i and is labelled by
/// its signature. Throws InternalError if the lattice tables disagree with
/// tr_meet / tr_join.
FiniteLattice tr_as_lattice(const TransferCatalog& catalog);

struct GeneratedSystem {
  Arrow generator;
  ArrowSet system;
};

/// (f, generate_transfer({f})) for every arrow f, in arrow order.
std::vector<GeneratedSystem> singly_generated_transfers(
    const FiniteLattice& lattice);

/// Distinct singly generated systems, each keeping its first generating
/// arrow, sorted by canonical system order.
std::vector<GeneratedSystem> distinct_singly_generated(
    const FiniteLattice& lattice);

/// Closed under 2-out-of-3. Throws NotATransferSystem for other sets.
bool is_saturated(const ArrowSet& system);

}  // namespace latmod

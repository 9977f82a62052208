#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "latmod/lattice.hpp"

namespace latmod {

/// A wide subcategory of a lattice, stored as the set of its non-identity
/// arrows. Identities are always implicitly members.
///
/// An ArrowSet borrows its lattice: the FiniteLattice must outlive it.
/// Ordering is canonical: sets compare lexicographically on their membership
/// vector (arrow 0 first, absent before present), which refines inclusion.
class ArrowSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  explicit ArrowSet(const FiniteLattice& lattice);
  ArrowSet(const FiniteLattice& lattice, Bits bits);
  /// Throws InvalidArrow for identities or non-arrows.
  ArrowSet(const FiniteLattice& lattice, std::initializer_list<Arrow> arrows);
  ArrowSet(const FiniteLattice& lattice, const std::vector<Arrow>& arrows);

  static ArrowSet all(const FiniteLattice& lattice);
  /// Builds a set from label pairs, e.g. {{"0","A"},{"A","C"}}.
  static ArrowSet from_labels(const FiniteLattice& lattice,
                              const std::vector<LabelPair>& arrows);

  const FiniteLattice& lattice() const { return *lattice_; }
  const Bits& bits() const { return bits_; }

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  /// Identities count as members.
  bool contains(const Arrow& a) const;
  bool contains(Element source, Element target) const {
    return contains(Arrow{source, target});
  }
  bool contains_id(std::size_t id) const { return bits_.test(id); }

  void insert(const Arrow& a);
  void insert_id(std::size_t id) { bits_.set(id); }
  void erase_id(std::size_t id) { bits_.reset(id); }

  bool is_subset_of(const ArrowSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const ArrowSet& other) const {
    return bits_.intersects(other.bits_);
  }

  ArrowSet operator|(const ArrowSet& other) const;
  ArrowSet operator&(const ArrowSet& other) const;
  ArrowSet operator-(const ArrowSet& other) const;
  ArrowSet& operator|=(const ArrowSet& other);
  /// Complement within the non-identity arrows.
  ArrowSet complement() const;

  std::vector<Arrow> arrows() const;
  std::vector<std::size_t> ids() const;

  /// "{0->A, 0->B}" with arrows in canonical order.
  std::string signature() const;

  friend bool operator==(const ArrowSet& a, const ArrowSet& b) {
    return a.bits_ == b.bits_;
  }
  friend std::strong_ordering operator<=>(const ArrowSet& a,
                                          const ArrowSet& b);

 private:
  const FiniteLattice* lattice_;
  Bits bits_;
};

// Closures. Each is monotone, extensive and idempotent.

ArrowSet close_composition(const ArrowSet& set);
ArrowSet close_pullback(const ArrowSet& set);
ArrowSet close_pushout(const ArrowSet& set);
/// Closes under composition and both cancellation rules of 2-out-of-3.
ArrowSet close_two_out_of_three(const ArrowSet& set);
/// Adds every retract of a member. On a poset this never adds anything.
ArrowSet close_retracts(const ArrowSet& set);

bool is_composition_closed(const ArrowSet& set);
bool is_transfer_system(const ArrowSet& set);
bool is_cotransfer_system(const ArrowSet& set);

/// Smallest transfer system containing `set`: pullback closure followed by
/// composition closure.
ArrowSet generate_transfer(const ArrowSet& set);
ArrowSet generate_cotransfer(const ArrowSet& set);

/// Arrows with the left lifting property against every member of `set`.
ArrowSet llp_dual(const ArrowSet& set);
/// Arrows with the right lifting property against every member of `set`.
ArrowSet rlp_dual(const ArrowSet& set);

/// f: a -> b lifts on the left against s: x -> y (a <= x and b <= y force
/// b <= x). Identities lift against everything.
bool has_lift(const FiniteLattice& lattice, const Arrow& f, const Arrow& s);

/// x <= y <= z with x -> z a member forces x -> y and y -> z members.
bool is_wide_decomposable(const ArrowSet& set);

/// Smallest composition-closed, decomposable set containing `set`.
ArrowSet close_decomposable(const ArrowSet& set);

/// { g o f : f in second (or identity), g in first (or identity) } without
/// identities. Contains both operands.
ArrowSet compose_sets(const ArrowSet& first, const ArrowSet& second);

}  // namespace latmod

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latmod {

/// Index of a lattice element. Indices form a linear extension of the
/// order: x <= y implies x <= y as integers.
using Element = std::size_t;

/// A relation source <= target, read as a morphism source -> target.
struct Arrow {
  Element source = 0;
  Element target = 0;

  bool is_identity() const { return source == target; }
  Arrow reversed() const { return {target, source}; }

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

using LabelPair = std::pair<std::string, std::string>;

/// An immutable finite lattice with precomputed order, meet and join tables,
/// cover relation and a dense numbering of its non-identity arrows.
///
/// Build one with `FiniteLattice::build` or the named constructors below.
/// Validation is eager: every FiniteLattice in existence is a lattice.
class FiniteLattice {
 public:
  /// Validates the poset generated by `covers` and assigns canonical indices:
  /// a topological order where ties go to the element listed first.
  /// Cover pairs need not be irredundant; the true cover relation is
  /// recomputed from the transitive closure.
  static FiniteLattice build(const std::vector<std::string>& labels,
                             const std::vector<LabelPair>& covers);

  std::size_t size() const { return labels_.size(); }

  bool leq(Element x, Element y) const { return leq_[x * size() + y] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const {
    return leq(x, y) || leq(y, x);
  }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element bottom() const { return 0; }
  Element top() const { return size() - 1; }

  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  /// Like `find`, but throws UnknownLabel.
  Element element(std::string_view label) const;

  /// Cover relations in (source, target) index order.
  std::span<const Arrow> covers() const { return covers_; }
  bool is_cover(const Arrow& a) const;

  /// Non-identity arrows, numbered in (source, target) index order. Arrow
  /// sets are bitsets over this numbering.
  std::size_t arrow_count() const { return arrows_.size(); }
  std::span<const Arrow> arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t id) const { return arrows_[id]; }
  /// Dense id of x -> y; empty for identities and incomparable pairs.
  std::optional<std::size_t> arrow_id(Element source, Element target) const;
  std::optional<std::size_t> arrow_id(const Arrow& a) const {
    return arrow_id(a.source, a.target);
  }
  /// Throws InvalidArrow unless `a` is a non-identity arrow of this lattice.
  std::size_t require_arrow_id(const Arrow& a) const;

  bool is_arrow(const Arrow& a) const {
    return a.source < size() && a.target < size() && leq(a.source, a.target);
  }

  std::string arrow_label(const Arrow& a) const {
    return label(a.source) + "->" + label(a.target);
  }

  /// The order-dual lattice on the same labels. Element indices are
  /// reversed: element x here is element size()-1-x in the dual.
  FiniteLattice dual() const;

  /// Presentation (labels in index order plus covers) for serialization.
  std::vector<LabelPair> cover_labels() const;

 private:
  friend class LatticeFactory;
  FiniteLattice() = default;

  std::vector<std::string> labels_;
  std::vector<unsigned char> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Arrow> covers_;
  std::vector<Arrow> arrows_;
  std::vector<std::ptrdiff_t> arrow_ids_;
};

// Named lattices.

/// The total order [n] = {0 < 1 < ... < n}.
FiniteLattice chain(std::size_t n);
/// The pentagon 0 < A < C < 1, 0 < B < 1.
FiniteLattice n5();
/// The diamond M3: three pairwise incomparable atoms.
FiniteLattice m3();
/// Componentwise product; labels are "(a,b)".
FiniteLattice product(const FiniteLattice& first, const FiniteLattice& second);
/// product(chain(a), chain(b)).
FiniteLattice grid(std::size_t a, std::size_t b);

// Queries.

/// Nontrivial pushouts of f: for every z >= source(f), the arrow
/// z -> z v target(f), dropping identities and f itself. Sorted, unique.
std::vector<Arrow> pushouts_of(const FiniteLattice& lattice, const Arrow& f);
/// Nontrivial pullbacks of f: for every z <= target(f), the arrow
/// source(f) ^ z -> z, dropping identities and f itself. Sorted, unique.
std::vector<Arrow> pullbacks_of(const FiniteLattice& lattice, const Arrow& f);

std::vector<Arrow> short_arrows(const FiniteLattice& lattice);

/// All maximal chains from source(f) to target(f), each a sequence of covers
/// ordered from the source. Chains are listed in lexicographic order of
/// their intermediate elements.
std::vector<std::vector<Arrow>> enumerate_short_factorizations(
    const FiniteLattice& lattice, const Arrow& f);

/// Minimum number of covers in a factorization of f (0 for identities).
std::size_t arrow_length(const FiniteLattice& lattice, const Arrow& f);

/// Modular law: x <= y implies x v (a ^ y) == (x v a) ^ y.
bool is_modular(const FiniteLattice& lattice);

/// Every nontrivial pushout of every cover is again a cover.
bool pushouts_preserve_covers(const FiniteLattice& lattice);

/// An injective map pattern -> host preserving meets and joins, as a vector
/// indexed by pattern element. Empty if there is none.
std::optional<std::vector<Element>> find_sublattice_embedding(
    const FiniteLattice& host, const FiniteLattice& pattern);

}  // namespace latmod

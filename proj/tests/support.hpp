#pragma once

// Test-side oracles. They work from the order relation alone and share no
// code with the closures and enumerators under test.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "latmod/arrow_set.hpp"
#include "latmod/lattice.hpp"

namespace latmod::testing {

inline ArrowSet arrows_of(const FiniteLattice& lattice,
                          const std::vector<LabelPair>& pairs) {
  return ArrowSet::from_labels(lattice, pairs);
}

inline Arrow arrow_of(const FiniteLattice& lattice, const std::string& source,
                      const std::string& target) {
  return {lattice.element(source), lattice.element(target)};
}

inline std::vector<LabelPair> labels_of(const FiniteLattice& lattice,
                                        const std::vector<Arrow>& arrows) {
  std::vector<LabelPair> out;
  for (const Arrow& a : arrows) {
    out.emplace_back(lattice.label(a.source), lattice.label(a.target));
  }
  return out;
}

struct PushoutPullbackRow {
  LabelPair arrow;
  std::vector<LabelPair> pushouts;
  std::vector<LabelPair> pullbacks;
};

/// The published table of nontrivial pushouts and pullbacks in N5, sorted
/// within each cell by canonical arrow order.
inline std::vector<PushoutPullbackRow> pentagon_table() {
  return {
      {{"0", "A"}, {{"B", "1"}}, {}},
      {{"A", "C"}, {}, {}},
      {{"C", "1"}, {}, {{"0", "B"}}},
      {{"0", "B"}, {{"A", "1"}, {"C", "1"}}, {}},
      {{"B", "1"}, {}, {{"0", "A"}, {"0", "C"}}},
      {{"A", "1"}, {{"C", "1"}}, {{"0", "B"}, {"A", "C"}}},
      {{"0", "C"}, {{"A", "C"}, {"B", "1"}}, {{"0", "A"}}},
      {{"0", "1"}, {{"A", "1"}, {"B", "1"}, {"C", "1"}}, {{"0", "A"}, {"0", "B"}, {"0", "C"}}},
  };
}

/// Plain membership table over (source, target) element pairs, diagonal set.
class Relation {
 public:
  explicit Relation(const FiniteLattice& lattice)
      : lattice_(&lattice), n_(lattice.size()), cells_(n_ * n_, false) {
    for (std::size_t x = 0; x < n_; ++x) cells_[x * n_ + x] = true;
  }
  Relation(const FiniteLattice& lattice, const ArrowSet& set) : Relation(lattice) {
    for (const Arrow& a : set.arrows()) add(a.source, a.target);
  }
  Relation(const FiniteLattice& lattice, std::uint64_t mask) : Relation(lattice) {
    for (std::size_t i = 0; i < lattice.arrow_count(); ++i) {
      if ((mask >> i) & 1U) add(lattice.arrows()[i].source, lattice.arrows()[i].target);
    }
  }

  bool has(std::size_t x, std::size_t y) const { return cells_[x * n_ + y]; }
  void add(std::size_t x, std::size_t y) { cells_[x * n_ + y] = true; }
  std::size_t size() const { return n_; }

  ArrowSet to_set() const {
    ArrowSet out(*lattice_);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if (x != y && has(x, y)) out.insert({x, y});
      }
    }
    return out;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.cells_ == b.cells_;
  }

 private:
  const FiniteLattice* lattice_;
  std::size_t n_;
  std::vector<bool> cells_;
};

// The oracles below recompute meets and joins by scanning the order so they
// do not lean on the lattice tables either.

inline std::size_t oracle_meet(const FiniteLattice& l, std::size_t x, std::size_t y) {
  std::size_t best = l.bottom();
  for (std::size_t z = 0; z < l.size(); ++z) {
    if (l.leq(z, x) && l.leq(z, y) && l.leq(best, z)) best = z;
  }
  return best;
}

inline std::size_t oracle_join(const FiniteLattice& l, std::size_t x, std::size_t y) {
  std::size_t best = l.top();
  for (std::size_t z = 0; z < l.size(); ++z) {
    if (l.leq(x, z) && l.leq(y, z) && l.leq(z, best)) best = z;
  }
  return best;
}

inline bool oracle_composition_closed(const FiniteLattice& l, const Relation& r) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (r.has(x, y) && r.has(y, z) && !r.has(x, z)) return false;
  return true;
}

inline bool oracle_is_transfer(const FiniteLattice& l, const Relation& r) {
  if (!oracle_composition_closed(l, r)) return false;
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = 0; y < l.size(); ++y) {
      if (!l.leq(x, y) || !r.has(x, y)) continue;
      for (std::size_t z = 0; z < l.size(); ++z) {
        if (l.leq(z, y) && !r.has(oracle_meet(l, x, z), z)) return false;
      }
    }
  return true;
}

inline bool oracle_is_cotransfer(const FiniteLattice& l, const Relation& r) {
  if (!oracle_composition_closed(l, r)) return false;
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = 0; y < l.size(); ++y) {
      if (!l.leq(x, y) || !r.has(x, y)) continue;
      for (std::size_t z = 0; z < l.size(); ++z) {
        if (l.leq(x, z) && !r.has(z, oracle_join(l, z, y))) return false;
      }
    }
  return true;
}

/// Every arrow set passing `pred`, by filtering all 2^|arrows| subsets.
template <typename Pred>
std::vector<ArrowSet> oracle_filter_subsets(const FiniteLattice& l, Pred pred) {
  std::vector<ArrowSet> out;
  const std::uint64_t limit = std::uint64_t{1} << l.arrow_count();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Relation r(l, mask);
    if (pred(r)) out.push_back(r.to_set());
  }
  return out;
}

inline std::vector<ArrowSet> oracle_transfer_systems(const FiniteLattice& l) {
  return oracle_filter_subsets(l, [&](const Relation& r) { return oracle_is_transfer(l, r); });
}

inline std::vector<ArrowSet> oracle_cotransfer_systems(const FiniteLattice& l) {
  return oracle_filter_subsets(l, [&](const Relation& r) { return oracle_is_cotransfer(l, r); });
}

/// a -> b lifts against x -> y: a commuting square forces b <= x.
inline bool oracle_lifts(const FiniteLattice& l, std::size_t a, std::size_t b,
                         std::size_t x, std::size_t y) {
  return !(l.leq(a, x) && l.leq(b, y)) || l.leq(b, x);
}

/// Left lifting dual. Identities of the lattice are included in the
/// quantified set when `with_identities` is set.
inline ArrowSet oracle_llp(const FiniteLattice& l, const ArrowSet& set,
                           bool with_identities = false) {
  std::vector<Arrow> against = set.arrows();
  if (with_identities) {
    for (std::size_t x = 0; x < l.size(); ++x) against.push_back({x, x});
  }
  ArrowSet out(l);
  for (const Arrow& f : l.arrows()) {
    bool ok = true;
    for (const Arrow& s : against) ok = ok && oracle_lifts(l, f.source, f.target, s.source, s.target);
    if (ok) out.insert(f);
  }
  return out;
}

inline ArrowSet oracle_rlp(const FiniteLattice& l, const ArrowSet& set,
                           bool with_identities = false) {
  std::vector<Arrow> against = set.arrows();
  if (with_identities) {
    for (std::size_t x = 0; x < l.size(); ++x) against.push_back({x, x});
  }
  ArrowSet out(l);
  for (const Arrow& f : l.arrows()) {
    bool ok = true;
    for (const Arrow& s : against) ok = ok && oracle_lifts(l, s.source, s.target, f.source, f.target);
    if (ok) out.insert(f);
  }
  return out;
}

/// 2-out-of-3 closure by naive rescanning of all comparable triples.
inline ArrowSet oracle_two_out_of_three(const FiniteLattice& l, const ArrowSet& set) {
  Relation r(l, set);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < l.size(); ++x)
      for (std::size_t y = 0; y < l.size(); ++y)
        for (std::size_t z = 0; z < l.size(); ++z) {
          if (!l.leq(x, y) || !l.leq(y, z)) continue;
          const int present = r.has(x, y) + r.has(y, z) + r.has(x, z);
          if (present == 2) {
            r.add(x, y);
            r.add(y, z);
            r.add(x, z);
            changed = true;
          }
        }
  }
  return r.to_set();
}

inline bool oracle_decomposable(const FiniteLattice& l, const ArrowSet& set) {
  Relation r(l, set);
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = 0; y < l.size(); ++y)
      for (std::size_t z = 0; z < l.size(); ++z)
        if (l.leq(x, y) && l.leq(y, z) && r.has(x, z) && !(r.has(x, y) && r.has(y, z)))
          return false;
  return true;
}

/// Intersection of every member of `systems` that contains `set`.
inline ArrowSet oracle_smallest_containing(const FiniteLattice& l,
                                           const std::vector<ArrowSet>& systems,
                                           const ArrowSet& set) {
  ArrowSet out = ArrowSet::all(l);
  for (const ArrowSet& t : systems) {
    if (set.is_subset_of(t)) out = out & t;
  }
  return out;
}

inline ArrowSet random_subset(const FiniteLattice& l, std::mt19937_64& rng,
                              double density = 0.35) {
  std::bernoulli_distribution coin(density);
  ArrowSet out(l);
  for (std::size_t i = 0; i < l.arrow_count(); ++i) {
    if (coin(rng)) out.insert_id(i);
  }
  return out;
}

inline std::uint64_t catalan(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

/// Every 5-element lattice, up to relabelling, as bottom and top around a
/// partial order on three middle elements.
inline std::vector<FiniteLattice> five_element_lattices() {
  const std::vector<std::string> mid = {"p", "q", "r"};
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<FiniteLattice> out;
  for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
    bool rel[3][3] = {};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) rel[pairs[k].first][pairs[k].second] = true;
    }
    bool order = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i != j && rel[i][j] && rel[j][i]) order = false;
        for (int k = 0; k < 3; ++k)
          if (rel[i][j] && rel[j][k] && i != k && !rel[i][k]) order = false;
      }
    if (!order) continue;
    std::vector<LabelPair> covers;
    for (int i = 0; i < 3; ++i) {
      covers.emplace_back("bot", mid[i]);
      covers.emplace_back(mid[i], "top");
      for (int j = 0; j < 3; ++j)
        if (rel[i][j]) covers.emplace_back(mid[i], mid[j]);
    }
    out.push_back(FiniteLattice::build({"bot", "p", "q", "r", "top"}, covers));
  }
  return out;
}

/// N5, M3, chains [0]..[5], grids up to [3]x[3] and all 5-element lattices.
inline std::vector<FiniteLattice> modularity_corpus() {
  std::vector<FiniteLattice> out = {n5(), m3()};
  for (std::size_t n = 0; n <= 5; ++n) out.push_back(chain(n));
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= a; ++b) out.push_back(grid(a, b));
  for (FiniteLattice& l : five_element_lattices()) out.push_back(std::move(l));
  return out;
}

}  // namespace latmod::testing

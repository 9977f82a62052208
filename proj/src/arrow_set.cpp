#include "latmod/arrow_set.hpp"

#include <stdexcept>

#include "latmod/errors.hpp"

namespace latmod {

namespace {

void require_same_lattice(const ArrowSet& a, const ArrowSet& b) {
  if (&a.lattice() != &b.lattice()) {
    throw std::invalid_argument("arrow sets belong to different lattices");
  }
}

// Applies `step` until nothing changes. A monotone step on k arrows settles
// within k + 1 rounds.
template <typename Step>
ArrowSet fixpoint(ArrowSet current, Step step, const char* what) {
  const std::size_t bound = current.lattice().arrow_count() + 1;
  for (std::size_t round = 0; round <= bound; ++round) {
    ArrowSet next = step(current);
    if (next == current) return current;
    current = std::move(next);
  }
  throw InternalError(std::string(what) + " did not converge");
}

}  // namespace

ArrowSet::ArrowSet(const FiniteLattice& lattice)
    : lattice_(&lattice), bits_(lattice.arrow_count()) {}

ArrowSet::ArrowSet(const FiniteLattice& lattice, Bits bits)
    : lattice_(&lattice), bits_(std::move(bits)) {
  if (bits_.size() != lattice.arrow_count()) {
    throw std::invalid_argument("bitset width does not match arrow count");
  }
}

ArrowSet::ArrowSet(const FiniteLattice& lattice,
                   std::initializer_list<Arrow> arrows)
    : ArrowSet(lattice) {
  for (const Arrow& a : arrows) bits_.set(lattice.require_arrow_id(a));
}

ArrowSet::ArrowSet(const FiniteLattice& lattice,
                   const std::vector<Arrow>& arrows)
    : ArrowSet(lattice) {
  for (const Arrow& a : arrows) bits_.set(lattice.require_arrow_id(a));
}

ArrowSet ArrowSet::all(const FiniteLattice& lattice) {
  ArrowSet out(lattice);
  out.bits_.set();
  return out;
}

ArrowSet ArrowSet::from_labels(const FiniteLattice& lattice,
                               const std::vector<LabelPair>& arrows) {
  ArrowSet out(lattice);
  for (const auto& [s, t] : arrows) {
    out.insert(Arrow{lattice.element(s), lattice.element(t)});
  }
  return out;
}

bool ArrowSet::contains(const Arrow& a) const {
  if (a.is_identity()) return a.source < lattice_->size();
  const auto id = lattice_->arrow_id(a);
  return id && bits_.test(*id);
}

void ArrowSet::insert(const Arrow& a) {
  if (a.is_identity() && a.source < lattice_->size()) return;
  bits_.set(lattice_->require_arrow_id(a));
}

ArrowSet ArrowSet::operator|(const ArrowSet& other) const {
  require_same_lattice(*this, other);
  return ArrowSet(*lattice_, bits_ | other.bits_);
}

ArrowSet ArrowSet::operator&(const ArrowSet& other) const {
  require_same_lattice(*this, other);
  return ArrowSet(*lattice_, bits_ & other.bits_);
}

ArrowSet ArrowSet::operator-(const ArrowSet& other) const {
  require_same_lattice(*this, other);
  return ArrowSet(*lattice_, bits_ - other.bits_);
}

ArrowSet& ArrowSet::operator|=(const ArrowSet& other) {
  require_same_lattice(*this, other);
  bits_ |= other.bits_;
  return *this;
}

ArrowSet ArrowSet::complement() const { return ArrowSet(*lattice_, ~bits_); }

std::vector<Arrow> ArrowSet::arrows() const {
  std::vector<Arrow> out;
  out.reserve(size());
  for (auto id = bits_.find_first(); id != Bits::npos;
       id = bits_.find_next(id)) {
    out.push_back(lattice_->arrow(id));
  }
  return out;
}

std::vector<std::size_t> ArrowSet::ids() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (auto id = bits_.find_first(); id != Bits::npos;
       id = bits_.find_next(id)) {
    out.push_back(id);
  }
  return out;
}

std::string ArrowSet::signature() const {
  std::string out = "{";
  bool first = true;
  for (const Arrow& a : arrows()) {
    if (!first) out += ", ";
    first = false;
    out += lattice_->arrow_label(a);
  }
  out += "}";
  return out;
}

std::strong_ordering operator<=>(const ArrowSet& a, const ArrowSet& b) {
  if (a.bits_.size() != b.bits_.size()) return a.bits_.size() <=> b.bits_.size();
  const ArrowSet::Bits diff = a.bits_ ^ b.bits_;
  const auto first = diff.find_first();
  if (first == ArrowSet::Bits::npos) return std::strong_ordering::equal;
  return a.bits_.test(first) ? std::strong_ordering::greater
                             : std::strong_ordering::less;
}

ArrowSet close_composition(const ArrowSet& set) {
  const FiniteLattice& lattice = set.lattice();
  const std::size_t n = lattice.size();
  ArrowSet out = set;
  // Warshall over middle objects; indices are topological so the middle
  // element of a composable pair lies strictly between its endpoints.
  for (Element mid = 0; mid < n; ++mid) {
    for (Element x = 0; x < mid; ++x) {
      if (!out.contains(x, mid) || !lattice.less(x, mid)) continue;
      for (Element z = mid + 1; z < n; ++z) {
        if (lattice.less(mid, z) && out.contains(mid, z)) out.insert({x, z});
      }
    }
  }
  return out;
}

ArrowSet close_pullback(const ArrowSet& set) {
  return fixpoint(
      set,
      [](const ArrowSet& current) {
        ArrowSet next = current;
        for (const Arrow& f : current.arrows()) {
          for (const Arrow& p : pullbacks_of(current.lattice(), f)) {
            next.insert(p);
          }
        }
        return next;
      },
      "pullback closure");
}

ArrowSet close_pushout(const ArrowSet& set) {
  return fixpoint(
      set,
      [](const ArrowSet& current) {
        ArrowSet next = current;
        for (const Arrow& f : current.arrows()) {
          for (const Arrow& p : pushouts_of(current.lattice(), f)) {
            next.insert(p);
          }
        }
        return next;
      },
      "pushout closure");
}

ArrowSet close_two_out_of_three(const ArrowSet& set) {
  return fixpoint(
      set,
      [](const ArrowSet& current) {
        const FiniteLattice& lattice = current.lattice();
        const std::size_t n = lattice.size();
        ArrowSet next = current;
        for (Element x = 0; x < n; ++x) {
          for (Element y = x + 1; y < n; ++y) {
            if (!lattice.less(x, y)) continue;
            for (Element z = y + 1; z < n; ++z) {
              if (!lattice.less(y, z)) continue;
              const bool f = current.contains(x, y);
              const bool g = current.contains(y, z);
              const bool gf = current.contains(x, z);
              if (f + g + gf == 2) {
                next.insert({x, y});
                next.insert({y, z});
                next.insert({x, z});
              }
            }
          }
        }
        return next;
      },
      "2-out-of-3 closure");
}

ArrowSet close_retracts(const ArrowSet& set) {
  const FiniteLattice& lattice = set.lattice();
  ArrowSet out = set;
  // g: x -> y is a retract of f: a -> b when x -> a -> x and y -> b -> y
  // exist and the squares commute (automatic in a poset).
  for (const Arrow& g : lattice.arrows()) {
    for (const Arrow& f : set.arrows()) {
      const bool source_retract =
          lattice.leq(g.source, f.source) && lattice.leq(f.source, g.source);
      const bool target_retract =
          lattice.leq(g.target, f.target) && lattice.leq(f.target, g.target);
      if (source_retract && target_retract) out.insert(g);
    }
  }
  return out;
}

bool is_composition_closed(const ArrowSet& set) {
  return close_composition(set) == set;
}

bool is_transfer_system(const ArrowSet& set) {
  return is_composition_closed(set) && close_pullback(set) == set;
}

bool is_cotransfer_system(const ArrowSet& set) {
  return is_composition_closed(set) && close_pushout(set) == set;
}

ArrowSet generate_transfer(const ArrowSet& set) {
  return close_composition(close_pullback(set));
}

ArrowSet generate_cotransfer(const ArrowSet& set) {
  return close_composition(close_pushout(set));
}

bool has_lift(const FiniteLattice& lattice, const Arrow& f, const Arrow& s) {
  if (!(lattice.leq(f.source, s.source) && lattice.leq(f.target, s.target))) {
    return true;
  }
  return lattice.leq(f.target, s.source);
}

ArrowSet llp_dual(const ArrowSet& set) {
  const FiniteLattice& lattice = set.lattice();
  const std::vector<Arrow> members = set.arrows();
  ArrowSet out(lattice);
  for (std::size_t id = 0; id < lattice.arrow_count(); ++id) {
    const Arrow& f = lattice.arrow(id);
    bool lifts = true;
    for (const Arrow& s : members) {
      if (!has_lift(lattice, f, s)) {
        lifts = false;
        break;
      }
    }
    if (lifts) out.insert_id(id);
  }
  return out;
}

ArrowSet rlp_dual(const ArrowSet& set) {
  const FiniteLattice& lattice = set.lattice();
  const std::vector<Arrow> members = set.arrows();
  ArrowSet out(lattice);
  for (std::size_t id = 0; id < lattice.arrow_count(); ++id) {
    const Arrow& g = lattice.arrow(id);
    bool lifts = true;
    for (const Arrow& s : members) {
      if (!has_lift(lattice, s, g)) {
        lifts = false;
        break;
      }
    }
    if (lifts) out.insert_id(id);
  }
  return out;
}

bool is_wide_decomposable(const ArrowSet& set) {
  const FiniteLattice& lattice = set.lattice();
  for (const Arrow& f : set.arrows()) {
    for (Element y = f.source + 1; y < f.target; ++y) {
      if (lattice.less(f.source, y) && lattice.less(y, f.target) &&
          !(set.contains(f.source, y) && set.contains(y, f.target))) {
        return false;
      }
    }
  }
  return true;
}

ArrowSet close_decomposable(const ArrowSet& set) {
  return fixpoint(
      set,
      [](const ArrowSet& current) {
        const FiniteLattice& lattice = current.lattice();
        ArrowSet next = close_composition(current);
        for (const Arrow& f : next.arrows()) {
          for (Element y = f.source + 1; y < f.target; ++y) {
            if (lattice.less(f.source, y) && lattice.less(y, f.target)) {
              next.insert({f.source, y});
              next.insert({y, f.target});
            }
          }
        }
        return next;
      },
      "decomposable closure");
}

ArrowSet compose_sets(const ArrowSet& first, const ArrowSet& second) {
  require_same_lattice(first, second);
  ArrowSet out = first | second;
  for (const Arrow& f : second.arrows()) {
    for (const Arrow& g : first.arrows()) {
      if (f.target == g.source) out.insert({f.source, g.target});
    }
  }
  return out;
}

}  // namespace latmod

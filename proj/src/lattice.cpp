#include "latmod/lattice.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

#include "latmod/errors.hpp"

namespace latmod {

struct OrderData {
  std::vector<std::string> labels;
  std::vector<unsigned char> leq;
};

class LatticeFactory {
 public:
  // Fills in everything derived from an order relation that is already
  // indexed topologically. Throws NotALattice when some pair lacks a meet or
  // join.
  static FiniteLattice from_order(OrderData data) {
    FiniteLattice out;
    const std::size_t n = data.labels.size();
    out.labels_ = std::move(data.labels);
    out.leq_ = std::move(data.leq);
    out.meet_.assign(n * n, 0);
    out.join_.assign(n * n, 0);

    for (Element x = 0; x < n; ++x) {
      for (Element y = x; y < n; ++y) {
        // The greatest lower bound is a lower bound above every other one.
        std::optional<Element> glb;
        std::optional<Element> lub;
        for (Element z = 0; z < n; ++z) {
          if (out.leq(z, x) && out.leq(z, y)) {
            bool greatest = true;
            for (Element w = 0; w < n && greatest; ++w) {
              if (out.leq(w, x) && out.leq(w, y) && !out.leq(w, z)) {
                greatest = false;
              }
            }
            if (greatest) glb = z;
          }
          if (out.leq(x, z) && out.leq(y, z)) {
            bool least = true;
            for (Element w = 0; w < n && least; ++w) {
              if (out.leq(x, w) && out.leq(y, w) && !out.leq(z, w)) {
                least = false;
              }
            }
            if (least) lub = z;
          }
        }
        if (!glb) {
          throw NotALattice("elements '" + out.labels_[x] + "' and '" +
                            out.labels_[y] + "' have no meet");
        }
        if (!lub) {
          throw NotALattice("elements '" + out.labels_[x] + "' and '" +
                            out.labels_[y] + "' have no join");
        }
        out.meet_[x * n + y] = out.meet_[y * n + x] = *glb;
        out.join_[x * n + y] = out.join_[y * n + x] = *lub;
      }
    }

    out.arrow_ids_.assign(n * n, -1);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!out.less(x, y)) continue;
        out.arrow_ids_[x * n + y] =
            static_cast<std::ptrdiff_t>(out.arrows_.size());
        out.arrows_.push_back({x, y});
        bool cover = true;
        for (Element z = x + 1; z < y && cover; ++z) {
          if (out.less(x, z) && out.less(z, y)) cover = false;
        }
        if (cover) out.covers_.push_back({x, y});
      }
    }
    return out;
  }

  static OrderData reversed(const FiniteLattice& lattice) {
    const std::size_t n = lattice.size();
    OrderData data;
    data.labels.assign(lattice.labels_.rbegin(), lattice.labels_.rend());
    data.leq.assign(n * n, 0);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        data.leq[(n - 1 - x) * n + (n - 1 - y)] = lattice.leq(y, x) ? 1 : 0;
      }
    }
    return data;
  }
};

FiniteLattice FiniteLattice::build(const std::vector<std::string>& labels,
                                   const std::vector<LabelPair>& covers) {
  if (labels.empty()) {
    throw NotALattice("a lattice needs at least one element");
  }
  const std::size_t n = labels.size();
  std::unordered_map<std::string, std::size_t> input_index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!input_index.emplace(labels[i], i).second) {
      throw DuplicateLabel("duplicate element label '" + labels[i] + "'");
    }
  }

  std::vector<std::vector<std::size_t>> successors(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [from, to] : covers) {
    auto s = input_index.find(from);
    auto t = input_index.find(to);
    if (s == input_index.end()) throw UnknownLabel("unknown label '" + from + "'");
    if (t == input_index.end()) throw UnknownLabel("unknown label '" + to + "'");
    if (s->second == t->second) {
      throw CycleError("cover '" + from + "' -> '" + to + "' is a loop");
    }
    successors[s->second].push_back(t->second);
    ++indegree[t->second];
  }

  // Kahn's algorithm, always taking the earliest listed available element.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>>
      ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t next = ready.top();
    ready.pop();
    order.push_back(next);
    for (std::size_t succ : successors[next]) {
      if (--indegree[succ] == 0) ready.push(succ);
    }
  }
  if (order.size() != n) {
    throw CycleError("cover relation contains a cycle");
  }

  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  OrderData data;
  data.labels.reserve(n);
  for (std::size_t i : order) data.labels.push_back(labels[i]);
  data.leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) data.leq[i * n + i] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t succ : successors[i]) {
      data.leq[position[i] * n + position[succ]] = 1;
    }
  }
  // Transitive closure; the topological numbering means the intermediate
  // index always lies between the endpoints.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!data.leq[i * n + k]) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (data.leq[k * n + j]) data.leq[i * n + j] = 1;
      }
    }
  }
  return LatticeFactory::from_order(std::move(data));
}

std::optional<Element> FiniteLattice::find(std::string_view name) const {
  for (Element x = 0; x < size(); ++x) {
    if (labels_[x] == name) return x;
  }
  return std::nullopt;
}

Element FiniteLattice::element(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw UnknownLabel("unknown element '" + std::string(name) + "'");
}

bool FiniteLattice::is_cover(const Arrow& a) const {
  return std::binary_search(covers_.begin(), covers_.end(), a);
}

std::optional<std::size_t> FiniteLattice::arrow_id(Element source,
                                                   Element target) const {
  if (source >= size() || target >= size()) return std::nullopt;
  const auto id = arrow_ids_[source * size() + target];
  if (id < 0) return std::nullopt;
  return static_cast<std::size_t>(id);
}

std::size_t FiniteLattice::require_arrow_id(const Arrow& a) const {
  if (auto id = arrow_id(a)) return *id;
  if (a.source < size() && a.target < size()) {
    throw InvalidArrow("'" + label(a.source) + "' -> '" + label(a.target) +
                       "' is not a non-identity arrow");
  }
  throw InvalidArrow("arrow endpoint out of range");
}

FiniteLattice FiniteLattice::dual() const {
  return LatticeFactory::from_order(LatticeFactory::reversed(*this));
}

std::vector<LabelPair> FiniteLattice::cover_labels() const {
  std::vector<LabelPair> out;
  out.reserve(covers_.size());
  for (const Arrow& c : covers_) out.emplace_back(label(c.source), label(c.target));
  return out;
}

FiniteLattice chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<LabelPair> covers;
  for (std::size_t i = 0; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return FiniteLattice::build(labels, covers);
}

FiniteLattice n5() {
  return FiniteLattice::build(
      {"0", "A", "B", "C", "1"},
      {{"0", "A"}, {"A", "C"}, {"C", "1"}, {"0", "B"}, {"B", "1"}});
}

FiniteLattice m3() {
  return FiniteLattice::build({"0", "a", "b", "c", "1"},
                              {{"0", "a"}, {"0", "b"}, {"0", "c"},
                               {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteLattice product(const FiniteLattice& first, const FiniteLattice& second) {
  const std::size_t n1 = first.size();
  const std::size_t n2 = second.size();
  const std::size_t n = n1 * n2;
  OrderData data;
  data.labels.reserve(n);
  for (Element a = 0; a < n1; ++a) {
    for (Element b = 0; b < n2; ++b) {
      data.labels.push_back("(" + first.label(a) + "," + second.label(b) + ")");
    }
  }
  data.leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool le = first.leq(i / n2, j / n2) && second.leq(i % n2, j % n2);
      data.leq[i * n + j] = le ? 1 : 0;
    }
  }
  return LatticeFactory::from_order(std::move(data));
}

FiniteLattice grid(std::size_t a, std::size_t b) {
  return product(chain(a), chain(b));
}

std::vector<Arrow> pushouts_of(const FiniteLattice& lattice, const Arrow& f) {
  std::set<Arrow> found;
  for (Element z = 0; z < lattice.size(); ++z) {
    if (!lattice.leq(f.source, z)) continue;
    const Arrow p{z, lattice.join(z, f.target)};
    if (!p.is_identity() && p != f) found.insert(p);
  }
  return {found.begin(), found.end()};
}

std::vector<Arrow> pullbacks_of(const FiniteLattice& lattice, const Arrow& f) {
  std::set<Arrow> found;
  for (Element z = 0; z < lattice.size(); ++z) {
    if (!lattice.leq(z, f.target)) continue;
    const Arrow p{lattice.meet(f.source, z), z};
    if (!p.is_identity() && p != f) found.insert(p);
  }
  return {found.begin(), found.end()};
}

std::vector<Arrow> short_arrows(const FiniteLattice& lattice) {
  return {lattice.covers().begin(), lattice.covers().end()};
}

namespace {

void extend_chains(const FiniteLattice& lattice, Element current, Element goal,
                   std::vector<Arrow>& prefix,
                   std::vector<std::vector<Arrow>>& out) {
  if (current == goal) {
    out.push_back(prefix);
    return;
  }
  for (const Arrow& c : lattice.covers()) {
    if (c.source != current || !lattice.leq(c.target, goal)) continue;
    prefix.push_back(c);
    extend_chains(lattice, c.target, goal, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Arrow>> enumerate_short_factorizations(
    const FiniteLattice& lattice, const Arrow& f) {
  std::vector<std::vector<Arrow>> out;
  if (f.is_identity() || !lattice.is_arrow(f)) return out;
  std::vector<Arrow> prefix;
  extend_chains(lattice, f.source, f.target, prefix, out);
  return out;
}

std::size_t arrow_length(const FiniteLattice& lattice, const Arrow& f) {
  if (f.is_identity()) return 0;
  const auto chains = enumerate_short_factorizations(lattice, f);
  std::size_t best = lattice.size();
  for (const auto& c : chains) best = std::min(best, c.size());
  return best;
}

bool is_modular(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      if (!lattice.leq(x, y)) continue;
      for (Element a = 0; a < n; ++a) {
        const Element lhs = lattice.join(x, lattice.meet(a, y));
        const Element rhs = lattice.meet(lattice.join(x, a), y);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool pushouts_preserve_covers(const FiniteLattice& lattice) {
  for (const Arrow& c : lattice.covers()) {
    for (const Arrow& p : pushouts_of(lattice, c)) {
      if (!lattice.is_cover(p)) return false;
    }
  }
  return true;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const FiniteLattice& host, const FiniteLattice& pattern)
      : host_(host),
        pattern_(pattern),
        image_(pattern.size(), kUnset),
        used_(host.size(), false) {}

  std::optional<std::vector<Element>> run() {
    if (pattern_.size() > host_.size()) return std::nullopt;
    if (assign(0)) return image_;
    return std::nullopt;
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  // Checks every pair whose meet or join is already mapped.
  bool consistent(Element p) const {
    for (Element q = 0; q <= p; ++q) {
      const Element m = pattern_.meet(p, q);
      const Element j = pattern_.join(p, q);
      if (image_[m] != kUnset &&
          image_[m] != host_.meet(image_[p], image_[q])) {
        return false;
      }
      if (image_[j] != kUnset &&
          image_[j] != host_.join(image_[p], image_[q])) {
        return false;
      }
    }
    // p may itself be the meet or join of earlier pairs.
    for (Element a = 0; a < p; ++a) {
      for (Element b = a; b < p; ++b) {
        if (pattern_.join(a, b) == p &&
            image_[p] != host_.join(image_[a], image_[b])) {
          return false;
        }
        if (pattern_.meet(a, b) == p &&
            image_[p] != host_.meet(image_[a], image_[b])) {
          return false;
        }
      }
    }
    return true;
  }

  bool assign(Element p) {
    if (p == pattern_.size()) return true;
    for (Element h = 0; h < host_.size(); ++h) {
      if (used_[h]) continue;
      bool order_ok = true;
      for (Element q = 0; q < p && order_ok; ++q) {
        if (pattern_.leq(q, p) != host_.leq(image_[q], h)) order_ok = false;
        if (pattern_.leq(p, q) != host_.leq(h, image_[q])) order_ok = false;
      }
      if (!order_ok) continue;
      image_[p] = h;
      used_[h] = true;
      if (consistent(p) && assign(p + 1)) return true;
      used_[h] = false;
      image_[p] = kUnset;
    }
    return false;
  }

  const FiniteLattice& host_;
  const FiniteLattice& pattern_;
  std::vector<Element> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Element>> find_sublattice_embedding(
    const FiniteLattice& host, const FiniteLattice& pattern) {
  return EmbeddingSearch(host, pattern).run();
}

}  // namespace latmod

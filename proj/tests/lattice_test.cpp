#include <gtest/gtest.h>

#include <algorithm>

#include "latmod/errors.hpp"
#include "latmod/lattice.hpp"
#include "support.hpp"

namespace latmod {
namespace {

using testing::labels_of;

std::vector<LabelPair> pairs(const FiniteLattice& l, const std::vector<Arrow>& a) {
  return labels_of(l, a);
}

TEST(BuildLattice, PentagonFromCovers) {
  const FiniteLattice l = FiniteLattice::build(
      {"0", "A", "B", "C", "1"},
      {{"0", "A"}, {"A", "C"}, {"C", "1"}, {"0", "B"}, {"B", "1"}});
  EXPECT_EQ(l.size(), 5U);
  EXPECT_EQ(l.labels(), (std::vector<std::string>{"0", "A", "B", "C", "1"}));
  EXPECT_EQ(l.arrow_count(), 8U);
  EXPECT_FALSE(is_modular(l));
  EXPECT_EQ(l.label(l.bottom()), "0");
  EXPECT_EQ(l.label(l.top()), "1");
}

TEST(BuildLattice, Singleton) {
  const FiniteLattice l = FiniteLattice::build({"x"}, {});
  EXPECT_EQ(l.size(), 1U);
  EXPECT_EQ(l.arrow_count(), 0U);
  EXPECT_TRUE(l.covers().empty());
  EXPECT_EQ(l.meet(0, 0), 0U);
  EXPECT_TRUE(is_modular(l));
}

TEST(BuildLattice, SquareAccepted) {
  const FiniteLattice l = FiniteLattice::build(
      {"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  EXPECT_EQ(l.size(), 4U);
  EXPECT_EQ(l.covers().size(), 4U);
  EXPECT_EQ(l.join(l.element("b"), l.element("c")), l.element("d"));
  EXPECT_EQ(l.meet(l.element("b"), l.element("c")), l.element("a"));
}

TEST(BuildLattice, TiesFollowInputOrder) {
  const FiniteLattice l = FiniteLattice::build(
      {"top", "y", "x", "bot"},
      {{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}});
  EXPECT_EQ(l.labels(), (std::vector<std::string>{"bot", "y", "x", "top"}));
}

TEST(BuildLattice, RedundantCoversAreDropped) {
  const FiniteLattice l =
      FiniteLattice::build({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}});
  EXPECT_EQ(pairs(l, {l.covers().begin(), l.covers().end()}),
            (std::vector<LabelPair>{{"0", "1"}, {"1", "2"}}));
}

TEST(BuildLattice, Rejections) {
  EXPECT_THROW(FiniteLattice::build({}, {}), NotALattice);
  EXPECT_THROW(FiniteLattice::build({"a", "a"}, {}), DuplicateLabel);
  EXPECT_THROW(FiniteLattice::build({"a"}, {{"a", "b"}}), UnknownLabel);
  EXPECT_THROW(FiniteLattice::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
  EXPECT_THROW(FiniteLattice::build({"a"}, {{"a", "a"}}), CycleError);
  EXPECT_THROW(FiniteLattice::build({"a", "b"}, {}), NotALattice);
  // Two atoms with two incomparable upper bounds and no join.
  EXPECT_THROW(FiniteLattice::build({"0", "a", "b", "c", "d", "1"},
                                    {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"},
                                     {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}}),
               NotALattice);
  // The diamond without a top.
  EXPECT_THROW(FiniteLattice::build({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}),
               NotALattice);
}

TEST(BuildLattice, ValidationErrorsShareABase) {
  EXPECT_THROW(FiniteLattice::build({"a", "a"}, {}), ValidationError);
}

TEST(MeetJoin, PentagonValues) {
  const FiniteLattice l = n5();
  auto e = [&](const char* s) { return l.element(s); };
  EXPECT_EQ(l.meet(e("B"), e("C")), e("0"));
  EXPECT_EQ(l.join(e("A"), e("B")), e("1"));
  EXPECT_EQ(l.join(e("B"), e("C")), e("1"));
  EXPECT_EQ(l.meet(e("A"), e("B")), e("0"));
  EXPECT_EQ(l.join(e("A"), e("C")), e("C"));
  EXPECT_EQ(l.meet(e("A"), e("C")), e("A"));
  for (Element x = 0; x < l.size(); ++x) {
    EXPECT_EQ(l.meet(x, x), x);
    EXPECT_EQ(l.join(x, x), x);
  }
}

TEST(MeetJoin, BoundsPropertyOnCorpus) {
  for (const FiniteLattice& l : testing::modularity_corpus()) {
    for (Element x = 0; x < l.size(); ++x) {
      for (Element y = 0; y < l.size(); ++y) {
        const Element m = l.meet(x, y), j = l.join(x, y);
        ASSERT_TRUE(l.leq(m, x) && l.leq(m, y));
        ASSERT_TRUE(l.leq(x, j) && l.leq(y, j));
        for (Element z = 0; z < l.size(); ++z) {
          if (l.leq(z, x) && l.leq(z, y)) {
            ASSERT_TRUE(l.leq(z, m));
          }
          if (l.leq(x, z) && l.leq(y, z)) {
            ASSERT_TRUE(l.leq(j, z));
          }
        }
        ASSERT_EQ(m, testing::oracle_meet(l, x, y));
        ASSERT_EQ(j, testing::oracle_join(l, x, y));
      }
    }
  }
}

TEST(CanonicalOrder, IndicesExtendTheOrder) {
  for (const FiniteLattice& l : testing::modularity_corpus()) {
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y)
        if (l.leq(x, y)) {
          ASSERT_LE(x, y);
        }
  }
}

TEST(Arrows, DenseNumbering) {
  const FiniteLattice l = n5();
  ASSERT_EQ(l.arrow_count(), 8U);
  for (std::size_t i = 0; i < l.arrow_count(); ++i) {
    EXPECT_EQ(l.arrow_id(l.arrow(i)), i);
    if (i > 0) {
      EXPECT_LT(l.arrow(i - 1), l.arrow(i));
    }
  }
  EXPECT_FALSE(l.arrow_id(2, 2).has_value());
  EXPECT_FALSE(l.arrow_id(l.element("A"), l.element("B")).has_value());
  EXPECT_THROW(l.require_arrow_id({l.element("A"), l.element("B")}), InvalidArrow);
  EXPECT_THROW(l.require_arrow_id({1, 1}), InvalidArrow);
  EXPECT_THROW(l.require_arrow_id({0, 9}), InvalidArrow);
  EXPECT_THROW(l.element("Z"), UnknownLabel);
}

TEST(PushoutsPullbacks, PentagonExamples) {
  const FiniteLattice l = n5();
  auto a = [&](const char* s, const char* t) { return testing::arrow_of(l, s, t); };
  EXPECT_EQ(pairs(l, pushouts_of(l, a("0", "B"))),
            (std::vector<LabelPair>{{"A", "1"}, {"C", "1"}}));
  EXPECT_EQ(pairs(l, pullbacks_of(l, a("B", "1"))),
            (std::vector<LabelPair>{{"0", "A"}, {"0", "C"}}));
  EXPECT_TRUE(pushouts_of(l, a("A", "C")).empty());
  EXPECT_TRUE(pullbacks_of(l, a("0", "A")).empty());
}

TEST(PushoutsPullbacks, PentagonTable) {
  const FiniteLattice l = n5();
  const auto table = testing::pentagon_table();
  ASSERT_EQ(table.size(), l.arrow_count());
  for (const auto& row : table) {
    const Arrow f = testing::arrow_of(l, row.arrow.first, row.arrow.second);
    EXPECT_EQ(pairs(l, pushouts_of(l, f)), row.pushouts) << l.arrow_label(f);
    EXPECT_EQ(pairs(l, pullbacks_of(l, f)), row.pullbacks) << l.arrow_label(f);
  }
}

TEST(PushoutsPullbacks, DualityOnCorpus) {
  for (const FiniteLattice& l : testing::modularity_corpus()) {
    const FiniteLattice d = l.dual();
    const Element n = l.size() - 1;
    auto flip = [&](const Arrow& a) { return Arrow{n - a.target, n - a.source}; };
    for (const Arrow& f : l.arrows()) {
      std::vector<Arrow> expected;
      for (const Arrow& p : pullbacks_of(d, flip(f))) expected.push_back(flip(p));
      std::sort(expected.begin(), expected.end());
      ASSERT_EQ(pushouts_of(l, f), expected);
    }
  }
}

TEST(ShortArrows, Counts) {
  const FiniteLattice l = n5();
  EXPECT_EQ(pairs(l, short_arrows(l)),
            (std::vector<LabelPair>{{"0", "A"}, {"0", "B"}, {"A", "C"}, {"B", "1"}, {"C", "1"}}));
  const FiniteLattice c = chain(2);
  EXPECT_EQ(pairs(c, short_arrows(c)), (std::vector<LabelPair>{{"0", "1"}, {"1", "2"}}));
  EXPECT_EQ(short_arrows(grid(1, 1)).size(), 4U);
}

TEST(ShortFactorizations, PentagonChains) {
  const FiniteLattice l = n5();
  auto a = [&](const char* s, const char* t) { return testing::arrow_of(l, s, t); };
  const auto top = enumerate_short_factorizations(l, a("0", "1"));
  ASSERT_EQ(top.size(), 2U);
  EXPECT_EQ(pairs(l, top[0]),
            (std::vector<LabelPair>{{"0", "A"}, {"A", "C"}, {"C", "1"}}));
  EXPECT_EQ(pairs(l, top[1]), (std::vector<LabelPair>{{"0", "B"}, {"B", "1"}}));
  const auto a1 = enumerate_short_factorizations(l, a("A", "1"));
  ASSERT_EQ(a1.size(), 1U);
  EXPECT_EQ(pairs(l, a1[0]), (std::vector<LabelPair>{{"A", "C"}, {"C", "1"}}));
  for (const Arrow& f : l.covers()) {
    const auto chains = enumerate_short_factorizations(l, f);
    ASSERT_EQ(chains.size(), 1U);
    EXPECT_EQ(chains[0], std::vector<Arrow>{f});
  }
  EXPECT_EQ(arrow_length(l, a("0", "1")), 2U);
  EXPECT_EQ(arrow_length(l, a("0", "C")), 2U);
  EXPECT_EQ(arrow_length(l, a("B", "1")), 1U);
  EXPECT_EQ(arrow_length(l, {2, 2}), 0U);
}

TEST(ShortFactorizations, ChainCountInGrid) {
  // Monotone lattice paths from (0,0) to (2,2).
  const FiniteLattice g = grid(2, 2);
  EXPECT_EQ(enumerate_short_factorizations(g, {g.bottom(), g.top()}).size(), 6U);
}

TEST(Modularity, Examples) {
  EXPECT_FALSE(is_modular(n5()));
  EXPECT_TRUE(is_modular(chain(3)));
  EXPECT_TRUE(is_modular(grid(2, 1)));
  EXPECT_TRUE(is_modular(m3()));
}

TEST(Modularity, CharacterizationsAgreeOnCorpus) {
  const FiniteLattice pentagon = n5();
  const auto corpus = testing::modularity_corpus();
  std::size_t nonmodular = 0;
  for (const FiniteLattice& l : corpus) {
    const bool modular = is_modular(l);
    nonmodular += !modular;
    EXPECT_EQ(modular, pushouts_preserve_covers(l));
    EXPECT_EQ(modular, !find_sublattice_embedding(l, pentagon).has_value());
  }
  EXPECT_GE(nonmodular, 1U);
}

TEST(Modularity, FiveElementCorpusIsComplete) {
  // Up to isomorphism there are five 5-element lattices; the generator
  // produces labelled copies of every one of them and only those.
  const auto lattices = testing::five_element_lattices();
  std::size_t chains = 0, pentagons = 0, diamonds = 0;
  for (const FiniteLattice& l : lattices) {
    ASSERT_EQ(l.size(), 5U);
    const std::size_t covers = l.covers().size();
    if (covers == 4) ++chains;
    if (!is_modular(l)) ++pentagons;
    if (covers == 6) ++diamonds;
  }
  EXPECT_EQ(lattices.size(), 19U);
  EXPECT_EQ(chains, 6U);
  EXPECT_EQ(pentagons, 6U);
  EXPECT_EQ(diamonds, 1U);
}

TEST(Embedding, Examples) {
  const FiniteLattice pentagon = n5();
  EXPECT_FALSE(find_sublattice_embedding(grid(2, 1), pentagon).has_value());
  for (const FiniteLattice& l : {n5(), m3(), chain(3), grid(2, 1)}) {
    const auto map = find_sublattice_embedding(l, l);
    ASSERT_TRUE(map.has_value());
    for (Element x = 0; x < l.size(); ++x) EXPECT_EQ((*map)[x], x);
  }
  const auto into = find_sublattice_embedding(pentagon, pentagon);
  ASSERT_TRUE(into.has_value());
}

TEST(Embedding, PreservesMeetsAndJoins) {
  // N5 sits inside [1] x N5 as a sublattice; check the returned map.
  const FiniteLattice pentagon = n5();
  const FiniteLattice host = product(chain(1), pentagon);
  const auto map = find_sublattice_embedding(host, pentagon);
  ASSERT_TRUE(map.has_value());
  for (Element x = 0; x < pentagon.size(); ++x)
    for (Element y = 0; y < pentagon.size(); ++y) {
      EXPECT_EQ(host.meet((*map)[x], (*map)[y]), (*map)[pentagon.meet(x, y)]);
      EXPECT_EQ(host.join((*map)[x], (*map)[y]), (*map)[pentagon.join(x, y)]);
    }
}

TEST(Constructors, ChainsAndProducts) {
  const FiniteLattice c2 = chain(2);
  EXPECT_EQ(c2.size(), 3U);
  EXPECT_EQ(c2.arrow_count(), 3U);
  EXPECT_EQ(chain(0).size(), 1U);
  const FiniteLattice sq = product(chain(1), chain(1));
  EXPECT_EQ(sq.size(), 4U);
  EXPECT_EQ(sq.labels(),
            (std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"}));
  const FiniteLattice g = grid(2, 1);
  EXPECT_EQ(g.size(), 6U);
  EXPECT_EQ(g.arrow_count(), 12U);
  EXPECT_TRUE(g.leq(g.element("(1,0)"), g.element("(2,1)")));
  EXPECT_FALSE(g.comparable(g.element("(0,1)"), g.element("(1,0)")));
  const FiniteLattice d = m3();
  EXPECT_EQ(d.size(), 5U);
  EXPECT_EQ(d.covers().size(), 6U);
}

TEST(Constructors, DualReversesOrder) {
  const FiniteLattice l = n5();
  const FiniteLattice d = l.dual();
  ASSERT_EQ(d.size(), l.size());
  for (Element x = 0; x < l.size(); ++x) {
    EXPECT_EQ(d.label(l.size() - 1 - x), l.label(x));
    for (Element y = 0; y < l.size(); ++y) {
      EXPECT_EQ(l.leq(x, y), d.leq(l.size() - 1 - y, l.size() - 1 - x));
    }
  }
  EXPECT_FALSE(is_modular(d));
}

}  // namespace
}  // namespace latmod

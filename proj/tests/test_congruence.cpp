#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "qnd/congruence.hpp"
#include "qnd/enumeration.hpp"
#include "qnd/error.hpp"

using namespace qnd;
using namespace qnd::test;

namespace {

std::vector<Quandle> small_quandles() {
  std::vector<Quandle> out;
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto const& q : census(n).representatives) out.push_back(q);
  out.push_back(final_remark());
  return out;
}

// Brute force: every labelling in {0..n-1}^n, normalized, kept if compatible.
std::set<std::vector<Element>> congruences_oracle(Quandle const& q) {
  auto const n = q.order();
  std::set<std::vector<Element>> out;
  std::vector<Element> labels(n, 0);
  while (true) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b)
        for (Element c = 0; c < n && ok; ++c) {
          if (labels[a] != labels[b]) continue;
          ok = labels[q.op(a, c)] == labels[q.op(b, c)] && labels[q.op(c, a)] == labels[q.op(c, b)] &&
               labels[q.op_inv(a, c)] == labels[q.op_inv(b, c)] &&
               labels[q.op_inv(c, a)] == labels[q.op_inv(c, b)];
        }
    if (ok) {
      auto const norm = Congruence::from_labels(labels);
      out.insert(std::vector<Element>(norm.labels().begin(), norm.labels().end()));
    }
    std::size_t i = 0;
    while (i < n && ++labels[i] == n) labels[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST(Congruence, LabelsAreNormalized) {
  std::vector<Element> raw{5, 5, 2, 9, 2};
  auto const c = Congruence::from_labels(raw);
  EXPECT_EQ(std::vector<Element>(c.labels().begin(), c.labels().end()), (std::vector<Element>{0, 0, 1, 2, 1}));
  EXPECT_EQ(c.num_blocks(), 3u);
  EXPECT_TRUE(c.related(2, 4));
  EXPECT_FALSE(c.related(0, 3));
  EXPECT_EQ(c.blocks(), (std::vector<std::vector<Element>>{{0, 1}, {2, 4}, {3}}));
  EXPECT_EQ(Congruence::discrete(3).num_blocks(), 3u);
  EXPECT_EQ(Congruence::full(3).num_blocks(), 1u);
  EXPECT_EQ(Congruence::full(2).pairs().size(), 4u);
}

TEST(Congruence, MakeCongruenceRejectsIncompatibleLabels) {
  // Identifying 0 and 3 in the final-Remark quandle forces 0 ◁ 1 = 2 ~ 3 ◁ 1 = 3.
  std::vector<Element> bad{0, 1, 2, 0};
  EXPECT_FALSE(is_congruence(final_remark(), bad));
  EXPECT_THROW(make_congruence(final_remark(), bad), Error);
  std::vector<Element> fibers{0, 0, 0, 1};
  EXPECT_TRUE(is_congruence(final_remark(), fibers));
}

TEST(Congruence, AllCongruencesMatchBruteForce) {
  for (auto const& q : small_quandles()) {
    std::set<std::vector<Element>> got;
    for (auto const& c : all_congruences(q)) got.insert(std::vector<Element>(c.labels().begin(), c.labels().end()));
    EXPECT_EQ(got, congruences_oracle(q));
  }
}

TEST(Congruence, GeneratedIsLeastContainingPairs) {
  for (auto const& q : small_quandles()) {
    auto const all = all_congruences(q);
    auto const n = q.order();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        std::vector<ElementPair> pairs{{a, b}};
        auto const g = congruence_generated(q, pairs);
        EXPECT_TRUE(is_congruence(q, g.labels()));
        EXPECT_TRUE(g.related(a, b));
        // Least: contained in every congruence relating a and b.
        for (auto const& c : all) {
          if (!c.related(a, b)) continue;
          for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
              if (g.related(x, y)) { EXPECT_TRUE(c.related(x, y)); }
        }
        // Idempotent.
        auto const again = g.pairs();
        EXPECT_EQ(congruence_generated(q, again), g);
      }
    }
  }
}

TEST(Congruence, GeneratedIsMonotone) {
  for (auto const& q : small_quandles()) {
    auto const n = q.order();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        std::vector<ElementPair> small{{a, b}};
        std::vector<ElementPair> big{{a, b}, {0, static_cast<Element>(n - 1)}};
        auto const gs = congruence_generated(q, small), gb = congruence_generated(q, big);
        for (Element x = 0; x < n; ++x)
          for (Element y = 0; y < n; ++y)
            if (gs.related(x, y)) { EXPECT_TRUE(gb.related(x, y)); }
      }
    }
  }
}

TEST(Congruence, QuotientKernelRecoversCongruence) {
  for (auto const& q : small_quandles()) {
    for (auto const& theta : all_congruences(q)) {
      auto const quo = quotient(q, theta);
      EXPECT_EQ(quo.quandle.order(), theta.num_blocks());
      EXPECT_EQ(kernel_congruence(quo.projection), theta);
    }
  }
}

TEST(Congruence, JoinIsGeneratedByUnion) {
  auto const q = final_remark();
  auto const all = all_congruences(q);
  for (auto const& x : all) {
    for (auto const& y : all) {
      auto pairs = x.pairs();
      auto const more = y.pairs();
      pairs.insert(pairs.end(), more.begin(), more.end());
      EXPECT_EQ(join(q, x, y), congruence_generated(q, pairs));
    }
  }
}

TEST(Relation, Composition) {
  Relation r(3), s(3);
  r.insert(0, 1);
  s.insert(1, 2);
  auto const rs = relation_compose(r, s);
  EXPECT_TRUE(rs.contains(0, 2));
  EXPECT_EQ(rs.size(), 1u);
  EXPECT_EQ(relation_compose(s, r).size(), 0u);
  EXPECT_EQ(relation_compose(Relation::identity(3), r), r);
  EXPECT_EQ(Relation::of(Congruence::full(3)).size(), 9u);
}

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "qnd/enumeration.hpp"
#include "qnd/error.hpp"
#include "qnd/morphism.hpp"

using namespace qnd;
using namespace qnd::test;

TEST(NaiveOracle, SmallCounts) {
  EXPECT_EQ(enumerate_all_tables(1).size(), 1u);
  // Columns must fix their own index, so only the trivial table survives.
  ASSERT_EQ(enumerate_all_tables(2).size(), 1u);
  EXPECT_EQ(enumerate_all_tables(2)[0], trivial_quandle(2));
  try {
    enumerate_all_tables(5);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderTooLarge);
  }
}

TEST(Census, AgreesWithNaiveOracle) {
  for (std::size_t n = 1; n <= kMaxNaiveOrder; ++n) {
    auto const tables = enumerate_all_tables(n);
    auto const c = enumerate_quandles(n);
    EXPECT_EQ(c.counts.total, count_classes_brute_force(tables)) << n;
    EXPECT_EQ(c.representatives.size(), c.counts.total);
    // Every labelled table is isomorphic to exactly one representative.
    for (auto const& t : tables) {
      auto const hits = std::count_if(c.representatives.begin(), c.representatives.end(),
                                      [&](Quandle const& r) { return isomorphic_brute_force(r, t); });
      EXPECT_EQ(hits, 1);
    }
    // The column search finds exactly the labelled tables of the oracle.
    auto labelled = enumerate_labeled_quandles(n);
    EXPECT_EQ(labelled.size(), tables.size());
  }
}

TEST(Census, RepresentativesArePairwiseNonIsomorphic) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const& reps = census(n).representatives;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      EXPECT_EQ(canonical_form(reps[i]), reps[i]);
      for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(are_isomorphic(reps[i], reps[j]).has_value());
    }
  }
}

TEST(Census, OrderFiveDedupStrategiesAgree) {
  auto const labelled = enumerate_labeled_quandles(5);
  auto const by_iso = dedup_by_isomorphism(labelled);
  auto const by_form = dedup_by_canonical_form(labelled);
  EXPECT_EQ(by_iso.size(), by_form.size());
  EXPECT_EQ(census(5).counts.total, by_form.size());
  std::vector<Quandle> forms;
  for (auto const& q : by_iso) forms.push_back(canonical_form(q));
  std::sort(forms.begin(), forms.end(), [](Quandle const& x, Quandle const& y) {
    return std::lexicographical_compare(x.flat_table().begin(), x.flat_table().end(), y.flat_table().begin(),
                                        y.flat_table().end());
  });
  EXPECT_EQ(forms, by_form);
}

TEST(Census, CountsAreConsistent) {
  for (std::size_t n = 1; n <= kMaxCensusOrder; ++n) {
    auto const& c = census(n);
    EXPECT_LE(c.counts.abelian_symmetric, std::min(c.counts.symmetric, c.counts.abelian));
    EXPECT_EQ(c.counts.trivial, 1u);
    // 2t = 1 has no solution in even order, so symmetric quandles have odd order here.
    if (n % 2 == 0) { EXPECT_EQ(c.counts.symmetric, 0u) << n; }
    for (auto const& q : c.representatives) EXPECT_NO_THROW(validate(q.rows()));
    EXPECT_TRUE(std::is_sorted(c.representatives.begin(), c.representatives.end(),
                               [](Quandle const& x, Quandle const& y) {
                                 return std::lexicographical_compare(x.flat_table().begin(), x.flat_table().end(),
                                                                     y.flat_table().begin(), y.flat_table().end());
                               }));
  }
}

TEST(Census, DeterministicAcrossThreadCounts) {
  for (std::size_t n : {4u, 5u}) {
    auto const one = enumerate_quandles(n, {1, false});
    auto const four = enumerate_quandles(n, {4, false});
    EXPECT_EQ(one.representatives, four.representatives);
    EXPECT_EQ(enumerate_labeled_quandles(n, 1).size(), enumerate_labeled_quandles(n, 3).size());
  }
}

TEST(Census, NamedQuandlesAppear) {
  auto contains = [](std::size_t n, Quandle const& q) {
    auto const& reps = census(n).representatives;
    return std::any_of(reps.begin(), reps.end(), [&](Quandle const& r) { return are_isomorphic(r, q).has_value(); });
  };
  EXPECT_TRUE(contains(3, r3()));
  EXPECT_TRUE(contains(4, final_remark()));
  EXPECT_TRUE(contains(5, dihedral(5)));
  EXPECT_TRUE(contains(5, affine(5, 3)));
  EXPECT_TRUE(contains(6, conj_quandle(parse_group(read_text(data_path("s3group.g"))))));
}

TEST(Census, OrderCap) {
  try {
    enumerate_quandles(7);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderTooLarge);
  }
  EXPECT_THROW(enumerate_quandles(0), Error);
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  auto const fr = final_remark();
  std::vector<Element> perm{1, 3, 0, 2};
  EXPECT_EQ(canonical_form(fr), canonical_form(relabel(fr, perm)));
  EXPECT_TRUE(isomorphic_brute_force(fr, canonical_form(fr)));
}

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "qnd/enumeration.hpp"
#include "qnd/error.hpp"
#include "qnd/morphism.hpp"

using namespace qnd;
using namespace qnd::test;

namespace {

Hom final_remark_map() { return validate_hom(final_remark(), trivial_quandle(2), {0, 0, 0, 1}); }

// Brute force: every map dom → cod that preserves ◁, in lexicographic order.
std::vector<std::vector<Element>> homs_oracle(Quandle const& dom, Quandle const& cod) {
  std::vector<std::vector<Element>> out;
  auto const n = dom.order(), m = cod.order();
  std::vector<Element> map(n, 0);
  while (true) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b) ok = map[dom.op(a, b)] == cod.op(map[a], map[b]);
    if (ok) out.push_back(map);
    // Increment with the last coordinate fastest, giving lexicographic order.
    std::size_t i = n;
    while (i > 0 && ++map[i - 1] == m) map[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<Quandle> small_quandles(std::size_t max_order) {
  std::vector<Quandle> out;
  for (std::size_t n = 1; n <= max_order; ++n)
    for (auto const& q : census(n).representatives) out.push_back(q);
  return out;
}

}  // namespace

TEST(Hom, ValidateRejectsNonHomomorphisms) {
  try {
    validate_hom(r3(), trivial_quandle(2), {0, 1, 1});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAHomomorphism);
    EXPECT_EQ(e.witness().size(), 2u);
  }
  EXPECT_THROW(validate_hom(r3(), terminal(), {0, 0}), Error);
  EXPECT_THROW(validate_hom(r3(), terminal(), {0, 0, 1}), Error);
}

TEST(Hom, IdentityComposeTerminal) {
  auto const f = final_remark_map();
  EXPECT_EQ(compose(identity(f.dom()), f), f);
  EXPECT_EQ(compose(f, identity(f.cod())), f);
  auto const g = compose(f, to_terminal(f.cod()));
  EXPECT_EQ(g, to_terminal(f.dom()));
  EXPECT_THROW(compose(f, f), Error);
  EXPECT_TRUE(is_surjective(f));
  EXPECT_FALSE(is_injective(f));
  EXPECT_TRUE(is_injective(identity(r3())));
}

TEST(Hom, EveryHomPreservesInverseOperation) {
  for (auto const& a : small_quandles(3)) {
    for (auto const& b : small_quandles(3)) {
      for (auto const& f : enumerate_homs(a, b)) {
        for (Element x = 0; x < a.order(); ++x)
          for (Element y = 0; y < a.order(); ++y) EXPECT_EQ(f(a.op_inv(x, y)), b.op_inv(f(x), f(y)));
      }
    }
  }
}

TEST(Hom, EnumerationMatchesBruteForce) {
  auto const qs = small_quandles(4);
  for (auto const& a : qs) {
    for (auto const& b : qs) {
      if (a.order() > 3 && b.order() > 3) continue;  // keeps the oracle small
      auto const expected = homs_oracle(a, b);
      std::vector<std::vector<Element>> got;
      for (auto const& f : enumerate_homs(a, b)) got.emplace_back(f.map().begin(), f.map().end());
      EXPECT_EQ(got, expected);
      std::vector<std::vector<Element>> onto;
      for (auto const& f : enumerate_surjections(a, b)) onto.emplace_back(f.map().begin(), f.map().end());
      std::vector<std::vector<Element>> expected_onto;
      for (auto const& m : expected) {
        std::vector<char> hit(b.order(), 0);
        for (auto v : m) hit[v] = 1;
        if (std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; })) expected_onto.push_back(m);
      }
      EXPECT_EQ(onto, expected_onto);
    }
  }
}

TEST(Hom, Sections) {
  auto const f = final_remark_map();
  auto const sections = enumerate_sections(f);
  // s(1) = 3 is forced; s(0) ranges over the first fiber.
  ASSERT_EQ(sections.size(), 3u);
  for (auto const& s : sections) {
    EXPECT_EQ(f(s(0)), 0u);
    EXPECT_EQ(s(1), 3u);
  }
}

TEST(Fibers, FinalRemark) {
  auto const f = final_remark_map();
  EXPECT_EQ(fibers(f), (std::vector<std::vector<Element>>{{0, 1, 2}, {3}}));
  EXPECT_EQ(fiber_subquandle(f, 0).quandle, r3());
  EXPECT_TRUE(has_symmetric_fibers(f));
  EXPECT_TRUE(has_abelian_symmetric_fibers(f));
  auto const into = validate_hom(terminal(), trivial_quandle(2), {1});
  try {
    fiber_subquandle(into, 0);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyFiber);
  }
  EXPECT_FALSE(has_symmetric_fibers(to_terminal(trivial_quandle(2))));
}

TEST(KernelPair, FinalRemarkHasTenElements) {
  auto const kp = kernel_pair(final_remark_map());
  EXPECT_EQ(kp.carrier().order(), 10u);
  for (Element i = 0; i < 10; ++i) {
    auto const [x, y] = kp.pairs.pair(i);
    EXPECT_EQ(kp.proj1(i), x);
    EXPECT_EQ(kp.proj2(i), y);
  }
  for (Element a = 0; a < 4; ++a) EXPECT_EQ(kp.pairs.pair(kp.diag(a)), std::make_pair(a, a));
  EXPECT_TRUE(std::is_sorted(kp.pairs.pairs().begin(), kp.pairs.pairs().end()));
}

TEST(KernelPair, CarriersValidateForAllSmallSurjections) {
  for (auto const& a : small_quandles(4)) {
    for (auto const& b : small_quandles(a.order())) {
      for (auto const& f : enumerate_surjections(a, b)) {
        auto const kp = kernel_pair(f);
        EXPECT_NO_THROW(validate(kp.carrier().rows()));
        std::size_t expected = 0;
        for (auto const& fib : fibers(f)) expected += fib.size() * fib.size();
        EXPECT_EQ(kp.carrier().order(), expected);
      }
    }
  }
}

TEST(Pullback, ProjectionsAreJointlyInjective) {
  auto const f = final_remark_map();
  for (auto const& e : small_quandles(3)) {
    for (auto const& p : enumerate_surjections(e, f.cod())) {
      auto const pb = pullback(f, p);
      std::size_t expected = 0;
      for (Element x = 0; x < e.order(); ++x)
        for (Element a = 0; a < 4; ++a) expected += p(x) == f(a);
      EXPECT_EQ(pb.carrier().order(), expected);
      for (Element i = 0; i < pb.carrier().order(); ++i) {
        for (Element j = 0; j < pb.carrier().order(); ++j) {
          if (i != j) { EXPECT_FALSE(pb.proj1(i) == pb.proj1(j) && pb.proj2(i) == pb.proj2(j)); }
        }
        EXPECT_EQ(p(pb.proj1(i)), f(pb.proj2(i)));
      }
    }
  }
  EXPECT_THROW(pullback(f, identity(r3())), Error);
}

TEST(Isomorphism, AgreesWithBruteForce) {
  auto const tables = enumerate_all_tables(3);
  for (auto const& x : tables) {
    for (auto const& y : tables) {
      auto const iso = are_isomorphic(x, y);
      EXPECT_EQ(iso.has_value(), isomorphic_brute_force(x, y));
      if (iso) {
        EXPECT_EQ(relabel(x, *iso), y);
      }
    }
  }
}

TEST(Isomorphism, EquivalenceOnRelabelledCensus) {
  auto const reps = census(4).representatives;
  std::vector<Element> perm{2, 0, 3, 1};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto const moved = relabel(reps[i], perm);
    EXPECT_TRUE(are_isomorphic(reps[i], reps[i]).has_value());
    auto const fwd = are_isomorphic(reps[i], moved);
    ASSERT_TRUE(fwd.has_value());
    // Inverting the bijection gives the reverse isomorphism.
    std::vector<Element> inv(4);
    for (Element a = 0; a < 4; ++a) inv[(*fwd)[a]] = a;
    EXPECT_EQ(relabel(moved, inv), reps[i]);
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (i != j) { EXPECT_FALSE(are_isomorphic(reps[j], moved).has_value()); }
    }
  }
  EXPECT_FALSE(are_isomorphic(r3(), trivial_quandle(2)).has_value());
}

TEST(Pushout, OfSurjectionsCommutes) {
  auto const a = final_remark();
  auto const f = final_remark_map();
  auto const g = to_terminal(a);
  auto const po = pushout_of_surjections(f, g);
  EXPECT_EQ(po.corner.order(), 1u);
  for (Element x = 0; x < 4; ++x) EXPECT_EQ(po.from_f_cod(f(x)), po.from_g_cod(g(x)));
  auto const self = pushout_of_surjections(f, f);
  EXPECT_EQ(self.corner.order(), 2u);
}

#pragma once

// Exhaustive checks over the small-order census: the three-way equivalence
// for central extensions, and the property suites behind it.

#include <string>
#include <vector>

#include "qnd/enumeration.hpp"
#include "qnd/extensions.hpp"

namespace qnd {

inline constexpr std::size_t kMaxTheoremOrder = 4;       // without allow_large
inline constexpr std::size_t kMaxTheoremOrderLarge = 5;  // with allow_large
inline constexpr std::size_t kMaxLemmaOrder = 4;

// census(order).representatives[index]
struct CensusRef {
  std::size_t order = 0;
  std::size_t index = 0;

  Quandle const& get() const { return census(order).representatives[index]; }
  friend bool operator==(CensusRef const&, CensusRef const&) = default;
};

std::string to_string(CensusRef const& r);  // q<order>_<index>

// Every (A, B) pair of representatives with |B| <= |A| <= n, domains first by
// (order, index), then codomains the same way.
std::vector<std::pair<CensusRef, CensusRef>> census_pairs(std::size_t n);

struct ExtensionRecord {
  CensusRef dom, cod;
  std::vector<Element> map;
  bool fibers_abelian_symmetric = false;
  bool algebraically_central = false;
  bool trivial = false;
  bool normal = false;
  // A definitional witness p : E → B with |E| <= n was found.
  bool central = false;

  bool characterized() const noexcept { return algebraically_central && fibers_abelian_symmetric; }
  bool consistent() const noexcept {
    return central == normal && normal == characterized() && (!trivial || central);
  }
};

struct TheoremCounts {
  std::size_t surjections = 0;
  std::size_t algebraically_central = 0;
  std::size_t fibers_abelian_symmetric = 0;
  std::size_t characterized = 0;
  std::size_t normal = 0;
  std::size_t central = 0;
  std::size_t trivial = 0;
};

struct TheoremReport {
  std::size_t max_order = 0;
  std::vector<ExtensionRecord> records;  // census_pairs order, maps lexicographic
  TheoremCounts counts;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

struct VerifyOptions {
  unsigned threads = 1;
  bool allow_large = false;
};

// Classifies every surjection between census representatives of order <= n.
// Throws OrderTooLarge above kMaxTheoremOrder (kMaxTheoremOrderLarge with
// allow_large). Violations are report content, never exceptions.
TheoremReport verify_main_theorem(std::size_t n, VerifyOptions options = {});
std::string format_theorem_report(TheoremReport const& report);

struct PropertyResult {
  std::string name;
  std::size_t max_order = 0;  // the order actually covered
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string counterexample;  // first violation, empty if none
};

struct LemmaReport {
  std::size_t max_order = 0;
  std::vector<PropertyResult> properties;  // fixed order

  bool ok() const noexcept;
};

// Runs every property suite at order <= n (abelian symmetric product factors
// stop at order 3). Properties run in parallel; the report order is fixed.
// Throws OrderTooLarge above kMaxLemmaOrder.
LemmaReport verify_lemmas(std::size_t n, unsigned threads = 1);
std::string format_lemma_report(LemmaReport const& report);

// "[0 2 1; 2 1 0; 1 0 2]"
std::string describe(Quandle const& q);
std::string describe(std::span<Element const> map);

}  // namespace qnd

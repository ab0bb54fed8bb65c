#pragma once

// Small-order quandle census: all quandles of order n up to isomorphism,
// plus the naive oracles used to cross-check it.

#include <span>
#include <vector>

#include "qnd/quandle.hpp"

namespace qnd {

inline constexpr std::size_t kMaxCensusOrder = 6;
inline constexpr std::size_t kMaxNaiveOrder = 4;

struct CensusCounts {
  std::size_t total = 0;
  std::size_t symmetric = 0;
  std::size_t abelian = 0;
  std::size_t abelian_symmetric = 0;
  std::size_t trivial = 0;
};

struct Census {
  std::size_t order = 0;
  // Each representative is stored as its canonical form; sorted ascending.
  std::vector<Quandle> representatives;
  CensusCounts counts;
};

struct EnumerateOptions {
  unsigned threads = 1;
  bool allow_large = false;  // lift the kMaxCensusOrder cap
};

// Column search: column b ranges over permutations fixing b, in lexicographic
// order; whenever columns b and c are known the column of b ◁ c is forced to
// σ_c σ_b σ_c⁻¹ (which is exactly self-distributivity). Returns every labelled
// quandle of order n, in search order. Parallel over the choice of column 0.
std::vector<Quandle> enumerate_labeled_quandles(std::size_t n, unsigned threads = 1);

// Representatives up to isomorphism. Throws OrderTooLarge above
// kMaxCensusOrder unless allow_large is set.
Census enumerate_quandles(std::size_t n, EnumerateOptions options = {});

// Memoised enumerate_quandles(n) (single-threaded, thread-safe).
Census const& census(std::size_t n);

// Naive oracle: every n-tuple of arbitrary column permutations, filtered by
// A1 and A3. Throws OrderTooLarge above kMaxNaiveOrder.
std::vector<Quandle> enumerate_all_tables(std::size_t n);

// Lexicographically least row-major table over all n! relabellings.
Quandle canonical_form(Quandle const& q);

// Tries all n! bijections.
bool isomorphic_brute_force(Quandle const& q1, Quandle const& q2);

// Dedup strategy A: invariant buckets, then are_isomorphic within a bucket.
// Keeps the first table seen of each class.
std::vector<Quandle> dedup_by_isomorphism(std::span<Quandle const> tables);
// Dedup strategy B: distinct canonical forms, sorted.
std::vector<Quandle> dedup_by_canonical_form(std::span<Quandle const> tables);
// Oracle partition: greedy classes compared by isomorphic_brute_force.
std::size_t count_classes_brute_force(std::span<Quandle const> tables);

}  // namespace qnd

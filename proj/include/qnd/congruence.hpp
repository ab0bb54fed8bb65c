#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qnd/morphism.hpp"
#include "qnd/quandle.hpp"

namespace qnd {

using ElementPair = std::pair<Element, Element>;

// An equivalence relation on 0..n-1 stored as normalized block labels: the
// block ids appear in first-occurrence order, so two congruences are equal
// iff their label arrays are equal.
class Congruence {
 public:
  // Normalizes arbitrary labels; does not check compatibility.
  static Congruence from_labels(std::span<Element const> labels);
  static Congruence discrete(std::size_t n);
  static Congruence full(std::size_t n);

  std::size_t base_order() const noexcept { return block_of_.size(); }
  std::size_t num_blocks() const noexcept { return num_blocks_; }
  Element block_of(Element a) const noexcept { return block_of_[a]; }
  std::span<Element const> labels() const noexcept { return block_of_; }
  bool related(Element a, Element b) const noexcept { return block_of_[a] == block_of_[b]; }
  std::vector<std::vector<Element>> blocks() const;
  std::vector<ElementPair> pairs() const;

  friend bool operator==(Congruence const&, Congruence const&) = default;

 private:
  std::vector<Element> block_of_;
  std::size_t num_blocks_ = 0;
};

// Compatibility with ◁ and ◁⁻¹ on both sides.
bool is_congruence(Quandle const& q, std::span<Element const> labels);
// Checked construction; throws NotACongruence(a, b, c) on the first failure.
Congruence make_congruence(Quandle const& q, std::span<Element const> labels);

// Least congruence containing `pairs` (union-find plus a translation worklist).
Congruence congruence_generated(Quandle const& q, std::span<ElementPair const> pairs);
Congruence join(Quandle const& q, Congruence const& x, Congruence const& y);
Congruence kernel_congruence(Hom const& f);

struct Quotient {
  Quandle quandle;
  Hom projection;
};

Quotient quotient(Quandle const& q, Congruence const& theta);

// Every congruence of q, in restricted-growth-string order.
std::vector<Congruence> all_congruences(Quandle const& q);

// A binary relation on 0..n-1 as a dense bit matrix.
class Relation {
 public:
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}
  static Relation identity(std::size_t n);
  static Relation of(Congruence const& c);

  std::size_t base_order() const noexcept { return n_; }
  bool contains(Element x, Element y) const noexcept { return bits_[x * n_ + y] != 0; }
  void insert(Element x, Element y) noexcept { bits_[x * n_ + y] = 1; }
  std::size_t size() const noexcept;

  friend bool operator==(Relation const&, Relation const&) = default;

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

// {(x, z) : ∃y (x, y) ∈ r1 ∧ (y, z) ∈ r2}
Relation relation_compose(Relation const& r1, Relation const& r2);

}  // namespace qnd

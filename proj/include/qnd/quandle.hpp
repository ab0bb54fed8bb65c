#pragma once

// Finite quandles as validated operation tables, and the identities that
// carve out the symmetric / abelian / trivial subvarieties.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace qnd {

using Element = std::uint32_t;
using Table = std::vector<std::vector<Element>>;

// An immutable quandle on the universe 0..n-1. Only the ◁ table is supplied;
// the ◁⁻¹ table is the columnwise inverse. Copies share the same storage.
//
// Instances can only be obtained through `validate` (or the constructors
// below, which go through it), so every Quandle satisfies A1-A3.
class Quandle {
 public:
  // The one-element quandle.
  Quandle();

  std::size_t order() const noexcept { return data_->order; }

  // a ◁ b
  Element op(Element a, Element b) const noexcept {
    return data_->table[a * data_->order + b];
  }
  // a ◁⁻¹ b
  Element op_inv(Element a, Element b) const noexcept {
    return data_->inv_table[a * data_->order + b];
  }

  // Row-major ◁ table, entry a*n+b = a ◁ b.
  std::span<Element const> flat_table() const noexcept { return data_->table; }
  std::span<Element const> flat_inv_table() const noexcept { return data_->inv_table; }
  Table rows() const;

  friend bool operator==(Quandle const& x, Quandle const& y) noexcept {
    return x.data_ == y.data_ || x.data_->table == y.data_->table;
  }

 private:
  struct Data {
    std::size_t order;
    std::vector<Element> table;
    std::vector<Element> inv_table;
  };

  explicit Quandle(std::shared_ptr<Data const> data) : data_(std::move(data)) {}
  friend Quandle validate_flat(std::size_t n, std::vector<Element> table);

  std::shared_ptr<Data const> data_;
};

// Checks A1 (diagonal), column bijectivity and the ◁ form of A3, in that
// order, and throws qnd::Error pinpointing the first failing witness:
// DiagonalViolation(a), ColumnNotBijective(b), DistributivityViolation(a,b,c).
Quandle validate(Table const& rows);
Quandle validate_flat(std::size_t n, std::vector<Element> table);

bool is_symmetric(Quandle const& q) noexcept;
// (a ◁ b) ◁ (c ◁ d) = (a ◁ c) ◁ (b ◁ d)
bool is_abelian(Quandle const& q) noexcept;
// (a ◁ b) ◁⁻¹ (c ◁ d) = (a ◁⁻¹ c) ◁ (b ◁⁻¹ d), equivalent to is_abelian.
bool satisfies_inverse_medial_identity(Quandle const& q) noexcept;
bool is_trivial(Quandle const& q) noexcept;
bool is_abelian_symmetric(Quandle const& q) noexcept;

// p(a, b, c) = (a ◁ c) ◁⁻¹ b
inline Element maltsev(Quandle const& q, Element a, Element b, Element c) noexcept {
  return q.op_inv(q.op(a, c), b);
}

// True iff (a,b,c) ↦ maltsev(q,a,b,c) preserves ◁ as a map q³ → q.
bool maltsev_is_homomorphism(Quandle const& q) noexcept;

// Conjugation quandle a ◁ b = b·a·b⁻¹ of a group given by its Cayley table
// (row a, column b = a·b). Index 0 must be the identity. Throws NotAGroup.
Quandle conj_quandle(Table const& group_table);

Quandle trivial_quandle(std::size_t n);
Quandle terminal();

// Componentwise operations; the pair (i1, i2) is stored at i1*|q2| + i2.
Quandle product(Quandle const& q1, Quandle const& q2);

constexpr Element product_index(Element i1, Element i2, std::size_t right_order) noexcept {
  return static_cast<Element>(i1 * right_order + i2);
}

struct Subquandle {
  Quandle quandle;
  // embedding[i] is the element of the ambient quandle labelled i.
  std::vector<Element> embedding;
};

// Restriction to a ◁-closed subset (sorted ascending, duplicates ignored).
// Throws SubsetNotClosed(a, b) for the first pair leaving the subset.
Subquandle subquandle(Quandle const& q, std::span<Element const> subset);

// The table relabelled by a bijection: result has perm[a] ◁ perm[b] = perm[a ◁ b].
Quandle relabel(Quandle const& q, std::span<Element const> perm);

}  // namespace qnd

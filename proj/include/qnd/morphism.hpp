#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qnd/quandle.hpp"

namespace qnd {

// A ◁-preserving map dom → cod. Built only through validate_hom and the
// constructions in this header, so the homomorphism property always holds.
class Hom {
 public:
  Quandle const& dom() const noexcept { return dom_; }
  Quandle const& cod() const noexcept { return cod_; }
  std::span<Element const> map() const noexcept { return map_; }
  Element operator()(Element a) const noexcept { return map_[a]; }

  friend bool operator==(Hom const& f, Hom const& g) noexcept {
    return f.map_ == g.map_ && f.dom_ == g.dom_ && f.cod_ == g.cod_;
  }

 private:
  Hom(Quandle dom, Quandle cod, std::vector<Element> map)
      : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {}
  friend Hom validate_hom(Quandle dom, Quandle cod, std::vector<Element> map);
  friend Hom unchecked_hom(Quandle dom, Quandle cod, std::vector<Element> map);

  Quandle dom_;
  Quandle cod_;
  std::vector<Element> map_;
};

// Throws NotAHomomorphism(a, b) at the first pair with f(a ◁ b) != f(a) ◁ f(b).
Hom validate_hom(Quandle dom, Quandle cod, std::vector<Element> map);

// For maps the caller has already proven to be homomorphisms (searches that
// checked every pair). Still bounds-checked.
Hom unchecked_hom(Quandle dom, Quandle cod, std::vector<Element> map);

Hom identity(Quandle const& q);
// Diagrammatic order: compose(f, g) = g ∘ f, requires cod(f) == dom(g).
Hom compose(Hom const& f, Hom const& g);
Hom to_terminal(Quandle const& q);

bool is_surjective(Hom const& f) noexcept;
bool is_injective(Hom const& f) noexcept;

// One (possibly empty) fiber per codomain element, each ascending.
std::vector<std::vector<Element>> fibers(Hom const& f);
// Throws EmptyFiber(b) when b is not in the image.
Subquandle fiber_subquandle(Hom const& f, Element b);
bool has_symmetric_fibers(Hom const& f);
bool has_abelian_symmetric_fibers(Hom const& f);

// A subquandle of X × Y on a set of pairs, with the pair decoding retained.
class PairQuandle {
 public:
  PairQuandle(Quandle const& left, Quandle const& right, std::vector<std::pair<Element, Element>> pairs);

  Quandle const& carrier() const noexcept { return carrier_; }
  std::pair<Element, Element> pair(Element i) const noexcept { return pairs_[i]; }
  std::vector<std::pair<Element, Element>> const& pairs() const noexcept { return pairs_; }
  // Index of (x, y), or nullopt if the pair is not in the carrier.
  std::optional<Element> index_of(Element x, Element y) const noexcept;

 private:
  Quandle carrier_;
  std::vector<std::pair<Element, Element>> pairs_;
  std::size_t right_order_;
  std::vector<std::int64_t> index_;
};

// The kernel pair Eq(f) = {(a, a') : f(a) = f(a')} with its projections and
// the diagonal δ_f : dom → Eq(f). Pairs are listed lexicographically.
struct KernelPair {
  PairQuandle pairs;
  Hom proj1;
  Hom proj2;
  Hom diag;

  Quandle const& carrier() const noexcept { return pairs.carrier(); }
};

KernelPair kernel_pair(Hom const& f);

// E ×_B A for f : A → B and p : E → B, elements (e, a) with p(e) = f(a).
// proj1 : → E, proj2 : → A.
struct Pullback {
  PairQuandle pairs;
  Hom proj1;
  Hom proj2;

  Quandle const& carrier() const noexcept { return pairs.carrier(); }
};

Pullback pullback(Hom const& f, Hom const& p);

// A ◁-preserving bijection q1 → q2 if one exists.
std::optional<std::vector<Element>> are_isomorphic(Quandle const& q1, Quandle const& q2);

// Per-element isomorphism invariant: cycle type of the column x ↦ x ◁ a,
// cycle type of the row x ↦ a ◁ x, and the size of the fixed set.
std::vector<std::vector<std::size_t>> element_invariants(Quandle const& q);

struct HomSearch {
  bool injective = false;
  bool surjective = false;
};

// Depth-first search over homomorphisms dom → cod. Images are fixed in
// element order with ascending candidates; values forced by the tables are
// propagated before branching, so maps are visited in lexicographic order.
// The visitor returns false to stop the search.
void for_each_hom(Quandle const& dom, Quandle const& cod, HomSearch options,
                  std::function<bool(std::span<Element const>)> const& visit);

std::vector<Hom> enumerate_homs(Quandle const& dom, Quandle const& cod);
std::vector<Hom> enumerate_surjections(Quandle const& dom, Quandle const& cod);
// Homs s : B → A with f ∘ s = 1_B.
std::vector<Hom> enumerate_sections(Hom const& f);

// Pushout of two surjections out of the same quandle A, computed as the
// quotient of A by join(Eq(f), Eq(g)).
struct Pushout {
  Quandle corner;
  Hom from_f_cod;  // h : B → D
  Hom from_g_cod;  // l : C → D
};

Pushout pushout_of_surjections(Hom const& f, Hom const& g);

}  // namespace qnd

#pragma once

// Σ-special maps, connectors, and the trivial / normal / central extension
// classifiers relative to the reflection onto abelian symmetric quandles.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qnd/congruence.hpp"
#include "qnd/morphism.hpp"
#include "qnd/reflection.hpp"

namespace qnd {

struct Triple {
  Element x, y, z;
  friend bool operator==(Triple const&, Triple const&) = default;
};

// R ×_A S = {(x, y, z) : x R y, y S z}, a subquandle of A³ with componentwise
// operations. Triples are stored in lexicographic order.
class TripleDomain {
 public:
  TripleDomain(Quandle base, Congruence r, Congruence s);

  Quandle const& base() const noexcept { return base_; }
  Congruence const& r() const noexcept { return r_; }
  Congruence const& s() const noexcept { return s_; }
  std::size_t size() const noexcept { return triples_.size(); }
  Triple const& triple(std::size_t i) const noexcept { return triples_[i]; }
  std::vector<Triple> const& triples() const noexcept { return triples_; }
  std::optional<std::size_t> index_of(Element x, Element y, Element z) const noexcept;
  // Index of t ◁ u and t ◁⁻¹ u.
  std::size_t op(std::size_t t, std::size_t u) const noexcept { return op_[t * size() + u]; }
  std::size_t op_inv(std::size_t t, std::size_t u) const noexcept { return inv_[t * size() + u]; }

 private:
  Quandle base_;
  Congruence r_, s_;
  std::vector<Triple> triples_;
  std::vector<std::int64_t> index_;
  std::vector<std::size_t> op_, inv_;
};

enum class ConnectorLaw {
  MaltsevLeft,     // p(x, x, y) = y
  MaltsevRight,    // p(x, y, y) = x
  MembershipS,     // x S p(x, y, z)
  MembershipR,     // z R p(x, y, z)
  AssociativityLeft,   // p(x, y, p(y, u, v)) = p(x, u, v)
  AssociativityRight,  // p(p(x, y, u), u, v) = p(x, y, v)
  Homomorphism,    // p(t ◁ t') = p(t) ◁ p(t')
};

std::string_view to_string(ConnectorLaw law) noexcept;

// A value table on R ×_A S.
class Connector {
 public:
  Connector(std::shared_ptr<TripleDomain const> domain, std::vector<Element> values)
      : domain_(std::move(domain)), values_(std::move(values)) {}

  TripleDomain const& domain() const noexcept { return *domain_; }
  std::span<Element const> values() const noexcept { return values_; }
  std::optional<Element> at(Element x, Element y, Element z) const noexcept;

  friend bool operator==(Connector const& a, Connector const& b) noexcept { return a.values_ == b.values_; }

 private:
  std::shared_ptr<TripleDomain const> domain_;
  std::vector<Element> values_;
};

// First violated law in declaration order; checking only the laws listed.
std::optional<ConnectorLaw> first_violated_law(TripleDomain const& domain, std::span<Element const> values,
                                               std::span<ConnectorLaw const> laws);
// All seven laws.
std::optional<ConnectorLaw> first_violated_law(TripleDomain const& domain, std::span<Element const> values);

// (f, s) ∈ Σ: for every b, k ↦ s(b) ◁ k maps the fiber over b onto itself.
// Throws NotASection unless f ∘ s = 1.
bool in_sigma(Hom const& f, Hom const& s);
// The kernel pair of f, split by the diagonal, lies in Σ.
bool is_sigma_special(Hom const& f);
// (S, r1, δ_S) ∈ Σ for a congruence S on q.
bool is_sigma_equivalence(Quandle const& q, Congruence const& s);
// a' ◁⁻¹ a, the element k of the common fiber with a ◁ k = a'. Throws
// PreconditionFailed unless f(a) = f(a') and that fiber is symmetric.
Element sigma_witness(Hom const& f, Element a, Element a_prime);

// p(a, b, c) = (a ◁⁻¹ b) ◁ k_c on A ×_A Eq(f) (R = ∇, S = Eq(f)), where k_c
// is the unique element of the fiber with b ◁ k_c = c. Returns the table if
// it satisfies every connector law. Throws PreconditionFailed if the fibers
// are not abelian symmetric or k_c is not unique.
std::optional<Connector> connector_candidate_formula(Hom const& f);

enum class ConnectorLaws {
  Full,            // all seven laws; values restricted by the membership laws
  PartialMaltsev,  // only the two Mal'tsev laws and the homomorphism law
};

struct ConnectorSearchOptions {
  ConnectorLaws laws = ConnectorLaws::Full;
  std::size_t limit = 1;  // stop after this many solutions (0 = all)
};

// Backtracking over value tables: the Mal'tsev laws pin every triple with
// x = y or y = z, other cells are filled in lexicographic triple order with
// ascending candidates, and the homomorphism (and, in Full mode,
// associativity) constraints are propagated before branching. Every returned
// table is re-verified against the requested laws.
std::vector<Connector> search_connectors(Quandle const& a, Congruence const& r, Congruence const& s,
                                         ConnectorSearchOptions options = {});
std::optional<Connector> connector_search(Quandle const& a, Congruence const& r, Congruence const& s);

// A connector between ∇_A and Eq(f) exists. Throws NotSurjective.
bool is_algebraically_central(Hom const& f);
// The first kernel-pair projection is a trivial extension. Throws NotSurjective.
bool is_normal_extension(Hom const& f);

struct CentralityResult {
  bool central = false;
  // A surjection p : E → B along which f pulls back to a trivial extension.
  std::optional<Hom> witness;
};

// Decided as algebraically central ∧ abelian symmetric fibers. When the
// answer is true and witness_bound > 0, also searches for a definitional
// witness p : E → B with |E| <= witness_bound (p = f first).
CentralityResult is_central_extension(Hom const& f, std::size_t witness_bound);

// Bounded search for p : E → B (E over the census up to `bound`, p = f tried
// first) such that π1 : E ×_B A → E is a trivial extension.
std::optional<Hom> find_central_witness(Hom const& f, std::size_t bound);

struct Decomposition {
  Quandle factor;                // Q
  std::vector<Element> iso;      // Eq(f) → Q × A
};

// Eq(f) ≅ Q × A for some census quandle Q of order |Eq(f)| / |A|.
std::optional<Decomposition> decompose_kernel_pair(Hom const& f);

struct ExtensionReport {
  bool surjective = false;
  bool fibers_abelian_symmetric = false;
  bool sigma_special = false;
  // Absent when f is not surjective.
  std::optional<bool> algebraically_central;
  std::optional<bool> trivial;
  std::optional<bool> normal;
  std::optional<bool> central;
  std::size_t eq_f_order = 0;
  std::optional<Quandle> decomposition_factor;
};

// Computes every field. Throws InvariantViolation if central, normal and
// (algebraically central ∧ abelian symmetric fibers) disagree, or if a
// trivial extension is not central.
ExtensionReport classify(Hom const& f);

}  // namespace qnd

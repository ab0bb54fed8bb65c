#pragma once

// Reflections onto the subvarieties of symmetric and abelian symmetric
// quandles, and the trivial-extension test relative to the latter.

#include "qnd/congruence.hpp"
#include "qnd/morphism.hpp"

namespace qnd {

enum class Variety { Symmetric, AbelianSymmetric };

struct Reflection {
  Quandle quotient;
  Hom unit;  // η : q → quotient, always surjective
};

// Quotient by the congruence generated by all (a ◁ b, b ◁ a).
Reflection reflect_sym(Quandle const& q);
// For symmetric q: quotient by the congruence generated by all
// ((a ◁ b) ◁ (c ◁ d), (a ◁ c) ◁ (b ◁ d)). Throws NotSymmetric otherwise.
Reflection reflect_ab(Quandle const& q);
// Both identity families at once: the reflector I onto AbSymQnd.
Reflection reflect_absym(Quandle const& q);
Reflection reflect(Quandle const& q, Variety variety);

// I(f) : I(A) → I(B), the unique map with I(f) ∘ η_A = η_B ∘ f.
Hom reflect_hom(Hom const& f);
Hom reflect_hom(Hom const& f, Reflection const& of_dom, Reflection const& of_cod);

// True iff the square (f, η_A, η_B, I(f)) is a pullback, i.e. the comparison
// a ↦ (f(a), η_A(a)) into B ×_{I(B)} I(A) is a bijection.
// Throws NotSurjective when f is not surjective.
bool is_trivial_extension(Hom const& f);

// The map a ↦ (f(a), η_A(a)) into the pullback of I(f) along η_B, as indices
// into that pullback. Exposed for property tests.
struct TrivialityComparison {
  Pullback target;
  std::vector<Element> comparison;
};
TrivialityComparison triviality_comparison(Hom const& f);

}  // namespace qnd

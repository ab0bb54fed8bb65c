#include "qnd/reflection.hpp"

#include "qnd/error.hpp"

namespace qnd {

namespace {

void add_symmetry_pairs(Quandle const& q, std::vector<ElementPair>& pairs) {
  auto const n = q.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (q.op(a, b) != q.op(b, a)) pairs.emplace_back(q.op(a, b), q.op(b, a));
}

void add_medial_pairs(Quandle const& q, std::vector<ElementPair>& pairs) {
  auto const n = q.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        for (Element d = 0; d < n; ++d) {
          auto const lhs = q.op(q.op(a, b), q.op(c, d));
          auto const rhs = q.op(q.op(a, c), q.op(b, d));
          if (lhs != rhs) pairs.emplace_back(lhs, rhs);
        }
}

// One pass is enough: the unit is surjective, so every identity instance in
// the quotient is the image of an instance that was already collapsed.
Reflection reflect_by(Quandle const& q, std::vector<ElementPair> const& pairs,
                      bool (*in_target)(Quandle const&) noexcept) {
  auto quot = quotient(q, congruence_generated(q, pairs));
  if (!in_target(quot.quandle)) {
    throw InvariantViolation("reflection quotient is not in the target subvariety");
  }
  return Reflection{std::move(quot.quandle), std::move(quot.projection)};
}

}  // namespace

Reflection reflect_sym(Quandle const& q) {
  std::vector<ElementPair> pairs;
  add_symmetry_pairs(q, pairs);
  return reflect_by(q, pairs, &is_symmetric);
}

Reflection reflect_ab(Quandle const& q) {
  if (!is_symmetric(q)) throw Error(ErrorKind::NotSymmetric, {}, "reflect_ab needs a symmetric quandle");
  std::vector<ElementPair> pairs;
  add_medial_pairs(q, pairs);
  return reflect_by(q, pairs, &is_abelian_symmetric);
}

Reflection reflect_absym(Quandle const& q) {
  std::vector<ElementPair> pairs;
  add_symmetry_pairs(q, pairs);
  add_medial_pairs(q, pairs);
  return reflect_by(q, pairs, &is_abelian_symmetric);
}

Reflection reflect(Quandle const& q, Variety variety) {
  return variety == Variety::Symmetric ? reflect_sym(q) : reflect_absym(q);
}

Hom reflect_hom(Hom const& f, Reflection const& of_dom, Reflection const& of_cod) {
  std::vector<std::int64_t> map(of_dom.quotient.order(), -1);
  for (Element a = 0; a < f.dom().order(); ++a) {
    auto const src = of_dom.unit(a);
    auto const dst = static_cast<std::int64_t>(of_cod.unit(f(a)));
    if (map[src] >= 0 && map[src] != dst) {
      throw InvariantViolation("η_B ∘ f does not factor through η_A");
    }
    map[src] = dst;
  }
  std::vector<Element> out(map.begin(), map.end());
  return validate_hom(of_dom.quotient, of_cod.quotient, std::move(out));
}

Hom reflect_hom(Hom const& f) { return reflect_hom(f, reflect_absym(f.dom()), reflect_absym(f.cod())); }

TrivialityComparison triviality_comparison(Hom const& f) {
  if (!is_surjective(f)) throw Error(ErrorKind::NotSurjective, {}, "trivial extension test needs a surjection");
  auto const ra = reflect_absym(f.dom());
  auto const rb = reflect_absym(f.cod());
  auto const i_f = reflect_hom(f, ra, rb);
  // Pairs (b, u) with η_B(b) = I(f)(u).
  auto target = pullback(i_f, rb.unit);
  std::vector<Element> comparison(f.dom().order());
  for (Element a = 0; a < f.dom().order(); ++a) {
    auto idx = target.pairs.index_of(f(a), ra.unit(a));
    if (!idx) throw InvariantViolation("trivial extension square does not commute");
    comparison[a] = *idx;
  }
  return TrivialityComparison{std::move(target), std::move(comparison)};
}

bool is_trivial_extension(Hom const& f) {
  auto const tc = triviality_comparison(f);
  if (tc.comparison.size() != tc.target.carrier().order()) return false;
  std::vector<char> hit(tc.comparison.size(), 0);
  for (auto i : tc.comparison) {
    if (hit[i]) return false;
    hit[i] = 1;
  }
  return true;
}

}  // namespace qnd

#include "qnd/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "qnd/congruence.hpp"
#include "qnd/error.hpp"
#include "qnd/reflection.hpp"

namespace qnd {

namespace {

template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body const& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < count; i = next++) body(i);
  };
  auto const used = std::min<std::size_t>(std::max(1u, threads), count);
  if (used <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < used; ++t) pool.emplace_back(worker);
}

void warm_census(std::size_t n) {
  for (std::size_t k = 1; k <= n; ++k) census(k);
}

std::vector<CensusRef> refs_up_to(std::size_t n) {
  std::vector<CensusRef> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 0; i < census(k).representatives.size(); ++i) out.push_back({k, i});
  return out;
}

std::string describe_hom(Hom const& f) {
  return "dom " + describe(f.dom()) + " cod " + describe(f.cod()) + " map " + describe(f.map());
}

std::string describe_record(ExtensionRecord const& r) {
  std::ostringstream out;
  out << to_string(r.dom) << " -> " << to_string(r.cod) << " dom " << describe(r.dom.get()) << " cod "
      << describe(r.cod.get()) << " map " << describe(r.map) << " algebraically_central="
      << r.algebraically_central << " fibers_abelian_symmetric=" << r.fibers_abelian_symmetric
      << " normal=" << r.normal << " central=" << r.central << " trivial=" << r.trivial;
  return out.str();
}

// Accumulates one property's instances; keeps the first counterexample.
class Check {
 public:
  Check(std::string name, std::size_t order) { r_.name = std::move(name); r_.max_order = order; }

  template <class Describe>
  void expect(bool ok, Describe const& describe_failure) {
    ++r_.instances;
    if (ok) return;
    if (r_.violations++ == 0) r_.counterexample = describe_failure();
  }

  PropertyResult result() && { return std::move(r_); }

 private:
  PropertyResult r_;
};

// All surjections between representatives of order <= n.
std::vector<Hom> surjections_up_to(std::size_t n) {
  std::vector<Hom> out;
  for (auto const& [a, b] : census_pairs(n)) {
    for (auto& f : enumerate_surjections(a.get(), b.get())) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Quandle> abelian_symmetric_up_to(std::size_t n) {
  std::vector<Quandle> out;
  for (auto const& r : refs_up_to(n))
    if (is_abelian_symmetric(r.get())) out.push_back(r.get());
  return out;
}

bool central_characterization(Hom const& f) {
  return has_abelian_symmetric_fibers(f) && is_algebraically_central(f);
}

PropertyResult symmetric_fibers_sigma_special(std::size_t n) {
  Check c("symmetric_fibers_sigma_special", n);
  for (auto const& f : surjections_up_to(n)) {
    if (!has_symmetric_fibers(f)) continue;
    c.expect(is_sigma_special(f), [&] { return describe_hom(f); });
  }
  return std::move(c).result();
}

PropertyResult sigma_injectivity(std::size_t n) {
  Check c("split_symmetric_fibers_injective", n);
  for (auto const& f : surjections_up_to(n)) {
    if (!has_symmetric_fibers(f)) continue;
    auto const fibs = fibers(f);
    for (auto const& s : enumerate_sections(f)) {
      bool ok = in_sigma(f, s);
      for (Element b = 0; b < fibs.size() && ok; ++b) {
        std::vector<char> hit(f.dom().order(), 0);
        for (auto k : fibs[b]) {
          auto const v = f.dom().op(s(b), k);
          ok = ok && !hit[v];
          hit[v] = 1;
        }
      }
      c.expect(ok, [&] { return describe_hom(f) + " section " + describe(s.map()); });
    }
  }
  return std::move(c).result();
}

PropertyResult sigma_permutability(std::size_t n) {
  Check c("sigma_special_permutability", n);
  for (auto const& f : surjections_up_to(n)) {
    if (!is_sigma_special(f)) continue;
    auto const eq = Relation::of(kernel_congruence(f));
    for (auto const& r : all_congruences(f.dom())) {
      auto const rel = Relation::of(r);
      c.expect(relation_compose(rel, eq) == relation_compose(eq, rel),
               [&] { return describe_hom(f) + " congruence " + describe(r.labels()); });
    }
  }
  return std::move(c).result();
}

PropertyResult pushout_comparison(std::size_t n) {
  Check c("pushout_comparison_surjective", n);
  for (auto const& ra : refs_up_to(n)) {
    auto const& a = ra.get();
    std::vector<Hom> outgoing;
    for (auto const& rb : refs_up_to(ra.order))
      for (auto& f : enumerate_surjections(a, rb.get())) outgoing.push_back(std::move(f));
    for (auto const& f : outgoing) {
      if (!is_sigma_special(f)) continue;
      for (auto const& g : outgoing) {
        auto const po = pushout_of_surjections(f, g);
        auto const pb = pullback(po.from_f_cod, po.from_g_cod);  // pairs (c, b)
        std::vector<char> hit(pb.carrier().order(), 0);
        bool ok = true;
        for (Element x = 0; x < a.order(); ++x) {
          auto idx = pb.pairs.index_of(g(x), f(x));
          if (!idx) {
            ok = false;
            break;
          }
          hit[*idx] = 1;
        }
        ok = ok && std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
        c.expect(ok, [&] { return describe_hom(f) + " and map " + describe(g.map()); });
      }
    }
  }
  return std::move(c).result();
}

// (R, S) pairs of congruences on representatives of order <= n with S a
// Σ-equivalence relation.
template <class Visit>
void for_each_sigma_pair(std::size_t n, Visit const& visit) {
  for (auto const& ra : refs_up_to(n)) {
    auto const& a = ra.get();
    auto const congs = all_congruences(a);
    for (auto const& s : congs) {
      if (!is_sigma_equivalence(a, s)) continue;
      for (auto const& r : congs) visit(a, r, s);
    }
  }
}

PropertyResult connector_uniqueness(std::size_t n) {
  Check c("connector_unique_under_sigma", n);
  for_each_sigma_pair(n, [&](Quandle const& a, Congruence const& r, Congruence const& s) {
    auto const found = search_connectors(a, r, s, {ConnectorLaws::Full, 2});
    c.expect(found.size() <= 1, [&] {
      return "quandle " + describe(a) + " R " + describe(r.labels()) + " S " + describe(s.labels());
    });
  });
  return std::move(c).result();
}

PropertyResult partial_maltsev_full(std::size_t n) {
  Check c("partial_maltsev_is_connector", n);
  for_each_sigma_pair(n, [&](Quandle const& a, Congruence const& r, Congruence const& s) {
    for (auto const& p : search_connectors(a, r, s, {ConnectorLaws::PartialMaltsev, 0})) {
      auto const violated = first_violated_law(p.domain(), p.values());
      c.expect(!violated, [&] {
        return "quandle " + describe(a) + " R " + describe(r.labels()) + " S " + describe(s.labels()) +
               " values " + describe(p.values()) + " violates " + std::string(to_string(*violated));
      });
    }
  });
  return std::move(c).result();
}

PropertyResult pullback_stability(std::size_t n) {
  Check c("pullback_stability_of_centrality", n);
  for (auto const& f : surjections_up_to(n)) {
    bool const fib = has_abelian_symmetric_fibers(f);
    bool const central = central_characterization(f);
    for (auto const& re : refs_up_to(n)) {
      for (auto const& p : enumerate_surjections(re.get(), f.cod())) {
        auto const pi1 = pullback(f, p).proj1;
        bool const ok = has_abelian_symmetric_fibers(pi1) == fib && central_characterization(pi1) == central;
        c.expect(ok, [&] { return describe_hom(f) + " along " + describe_hom(p); });
      }
    }
  }
  return std::move(c).result();
}

PropertyResult jointly_epimorphic(std::size_t n) {
  Check c("jointly_epimorphic_sections", n);
  for (auto const& f : surjections_up_to(n)) {
    auto const& a = f.dom();
    auto const& b = f.cod();
    std::vector<Hom> sigma_sections;
    for (auto& s : enumerate_sections(f))
      if (in_sigma(f, s)) sigma_sections.push_back(std::move(s));
    if (sigma_sections.empty()) continue;
    for (auto const& re : refs_up_to(n)) {
      auto const& e = re.get();
      for (auto const& p : enumerate_surjections(e, b)) {
        auto const ts = enumerate_sections(p);
        if (ts.empty()) continue;
        auto const pb = pullback(f, p);  // pairs (e, a)
        auto const& carrier = pb.carrier();
        for (auto const& s : sigma_sections) {
          for (auto const& t : ts) {
            // Images of (1, s∘p) and (t∘f, 1) in the pullback.
            std::vector<Element> left, right;
            for (Element x = 0; x < e.order(); ++x) left.push_back(*pb.pairs.index_of(x, s(p(x))));
            for (Element k = 0; k < a.order(); ++k) right.push_back(*pb.pairs.index_of(t(f(k)), k));
            std::vector<char> hit(carrier.order(), 0);
            for (auto l : left)
              for (auto r : right) hit[carrier.op(l, r)] = 1;
            bool const ok = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
            c.expect(ok, [&] {
              return describe_hom(f) + " section " + describe(s.map()) + " along " + describe_hom(p) +
                     " section " + describe(t.map());
            });
          }
        }
      }
    }
  }
  return std::move(c).result();
}

PropertyResult decomposition(std::size_t n) {
  Check c("central_kernel_pair_decomposes", n);
  for (auto const& f : surjections_up_to(n)) {
    if (!central_characterization(f)) continue;
    auto const d = decompose_kernel_pair(f);
    c.expect(d && is_abelian_symmetric(d->factor), [&] { return describe_hom(f); });
  }
  return std::move(c).result();
}

PropertyResult admissibility(std::size_t n) {
  Check c("reflector_preserves_admissible_pullbacks", n);
  auto const absym = abelian_symmetric_up_to(n);
  for (auto const& x : absym) {
    for (auto const& y : absym) {
      if (y.order() > x.order()) continue;
      auto const ix = reflect_absym(x), iy = reflect_absym(y);
      for (auto const& phi : enumerate_surjections(x, y)) {
        auto const iphi = reflect_hom(phi, ix, iy);
        for (auto const& ra : refs_up_to(n)) {
          auto const& a = ra.get();
          auto const ia = reflect_absym(a);
          for (auto const& f : enumerate_surjections(a, y)) {
            auto const pb = pullback(f, phi);  // pairs (x, a)
            auto const ip = reflect_absym(pb.carrier());
            auto const target = pullback(reflect_hom(f, ia, iy), iphi);  // pairs (η x, η a)
            auto const k = pb.carrier().order();
            std::vector<std::int64_t> image(k, -1);
            bool ok = true;
            for (Element i = 0; i < k && ok; ++i) {
              auto const [xi, ai] = pb.pairs.pair(i);
              auto idx = target.pairs.index_of(ix.unit(xi), ia.unit(ai));
              ok = idx.has_value();
              if (ok) image[i] = *idx;
            }
            // The induced map I(P) → I(A) ×_Y X is well defined and bijective.
            std::vector<char> hit(target.carrier().order(), 0);
            for (Element i = 0; i < k && ok; ++i) {
              hit[image[i]] = 1;
              for (Element j = 0; j < k && ok; ++j) {
                ok = (ip.unit(i) == ip.unit(j)) == (image[i] == image[j]);
              }
            }
            ok = ok && std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
            c.expect(ok, [&] { return describe_hom(f) + " against " + describe_hom(phi); });
          }
        }
      }
    }
  }
  return std::move(c).result();
}

PropertyResult product_preservation(std::size_t n) {
  auto const q_bound = std::min<std::size_t>(n, 3);
  Check c("reflector_preserves_products_with_abelian_symmetric", n);
  for (auto const& q : abelian_symmetric_up_to(q_bound)) {
    for (auto const& ra : refs_up_to(n)) {
      auto const& a = ra.get();
      auto const lhs = reflect_absym(product(a, q)).quotient;
      auto const rhs = product(reflect_absym(a).quotient, q);
      c.expect(are_isomorphic(lhs, rhs).has_value(),
               [&] { return "A " + describe(a) + " Q " + describe(q); });
    }
  }
  return std::move(c).result();
}

PropertyResult reflection_composite(std::size_t n) {
  Check c("absym_reflection_is_ab_after_sym", n);
  for (auto const& r : refs_up_to(n)) {
    auto const& q = r.get();
    auto const sym = reflect_sym(q);
    auto const ab = reflect_ab(sym.quotient);
    auto const both = reflect_absym(q);
    c.expect(kernel_congruence(compose(sym.unit, ab.unit)) == kernel_congruence(both.unit),
             [&] { return describe(q); });
  }
  return std::move(c).result();
}

PropertyResult reflection_universal(std::size_t n) {
  Check c("absym_unit_universal", n);
  for (auto const& r : refs_up_to(n)) {
    auto const& q = r.get();
    auto const unit = reflect_absym(q).unit;
    for (auto const& x : abelian_symmetric_up_to(q.order())) {
      for (auto const& g : enumerate_homs(q, x)) {
        bool ok = true;
        for (Element a = 0; a < q.order() && ok; ++a)
          for (Element b = 0; b < q.order() && ok; ++b) ok = unit(a) != unit(b) || g(a) == g(b);
        c.expect(ok, [&] { return describe_hom(g); });
      }
    }
  }
  return std::move(c).result();
}

PropertyResult maltsev_symmetric(std::size_t n) {
  Check c("symmetric_maltsev_laws_and_abelian", n);
  for (auto const& r : refs_up_to(n)) {
    auto const& q = r.get();
    if (!is_symmetric(q)) continue;
    bool ok = maltsev_is_homomorphism(q) == is_abelian(q);
    for (Element a = 0; a < q.order() && ok; ++a)
      for (Element b = 0; b < q.order() && ok; ++b) ok = maltsev(q, a, a, b) == b && maltsev(q, a, b, b) == a;
    c.expect(ok, [&] { return describe(q); });
  }
  return std::move(c).result();
}

PropertyResult quotient_kernel(std::size_t n) {
  Check c("quotient_kernel_recovers_congruence", n);
  for (auto const& r : refs_up_to(n)) {
    auto const& q = r.get();
    for (auto const& theta : all_congruences(q)) {
      auto const quo = quotient(q, theta);
      auto const pairs = theta.pairs();
      bool const ok = kernel_congruence(quo.projection) == theta && congruence_generated(q, pairs) == theta;
      c.expect(ok, [&] { return describe(q) + " congruence " + describe(theta.labels()); });
    }
  }
  return std::move(c).result();
}

}  // namespace

std::string to_string(CensusRef const& r) {
  return "q" + std::to_string(r.order) + "_" + std::to_string(r.index);
}

std::vector<std::pair<CensusRef, CensusRef>> census_pairs(std::size_t n) {
  std::vector<std::pair<CensusRef, CensusRef>> out;
  for (auto const& a : refs_up_to(n))
    for (auto const& b : refs_up_to(a.order)) out.emplace_back(a, b);
  return out;
}

std::string describe(Quandle const& q) {
  std::string out = "[";
  auto const n = q.order();
  for (Element a = 0; a < n; ++a) {
    if (a) out += "; ";
    for (Element b = 0; b < n; ++b) {
      if (b) out += ' ';
      out += std::to_string(q.op(a, b));
    }
  }
  return out + "]";
}

std::string describe(std::span<Element const> map) {
  std::string out = "[";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(map[i]);
  }
  return out + "]";
}

TheoremReport verify_main_theorem(std::size_t n, VerifyOptions options) {
  if (n == 0) throw Error(ErrorKind::PreconditionFailed, {0}, "order must be positive");
  auto const cap = options.allow_large ? kMaxTheoremOrderLarge : kMaxTheoremOrder;
  if (n > cap) throw Error(ErrorKind::OrderTooLarge, {n}, "theorem verification limited to order " + std::to_string(cap));
  warm_census(n);

  auto const pairs = census_pairs(n);
  std::vector<std::vector<ExtensionRecord>> cells(pairs.size());
  std::vector<std::vector<std::string>> cell_violations(pairs.size());
  parallel_for(pairs.size(), options.threads, [&](std::size_t i) {
    auto const& [ra, rb] = pairs[i];
    for (auto const& f : enumerate_surjections(ra.get(), rb.get())) {
      ExtensionRecord r;
      r.dom = ra;
      r.cod = rb;
      r.map.assign(f.map().begin(), f.map().end());
      try {
        r.fibers_abelian_symmetric = has_abelian_symmetric_fibers(f);
        r.algebraically_central = is_algebraically_central(f);
        r.trivial = is_trivial_extension(f);
        r.normal = is_normal_extension(f);
        r.central = find_central_witness(f, n).has_value();
        if (!r.consistent()) cell_violations[i].push_back(describe_record(r));
      } catch (std::exception const& e) {
        cell_violations[i].push_back(describe_record(r) + " error " + e.what());
      }
      cells[i].push_back(std::move(r));
    }
  });

  TheoremReport report;
  report.max_order = n;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (auto& r : cells[i]) {
      auto& c = report.counts;
      ++c.surjections;
      c.algebraically_central += r.algebraically_central;
      c.fibers_abelian_symmetric += r.fibers_abelian_symmetric;
      c.characterized += r.characterized();
      c.normal += r.normal;
      c.central += r.central;
      c.trivial += r.trivial;
      report.records.push_back(std::move(r));
    }
    for (auto& v : cell_violations[i]) report.violations.push_back(std::move(v));
  }
  return report;
}

std::string format_theorem_report(TheoremReport const& report) {
  std::ostringstream out;
  auto const& c = report.counts;
  out << "max_order: " << report.max_order << '\n'
      << "surjections: " << c.surjections << '\n'
      << "algebraically_central: " << c.algebraically_central << '\n'
      << "fibers_abelian_symmetric: " << c.fibers_abelian_symmetric << '\n'
      << "algebraically_central_with_abelian_symmetric_fibers: " << c.characterized << '\n'
      << "normal: " << c.normal << '\n'
      << "central: " << c.central << '\n'
      << "trivial: " << c.trivial << '\n'
      << "violations: " << report.violations.size() << '\n';
  for (auto const& v : report.violations) out << "violation: " << v << '\n';
  return out.str();
}

bool LemmaReport::ok() const noexcept {
  return std::all_of(properties.begin(), properties.end(),
                     [](PropertyResult const& p) { return p.violations == 0; });
}

LemmaReport verify_lemmas(std::size_t n, unsigned threads) {
  if (n == 0) throw Error(ErrorKind::PreconditionFailed, {0}, "order must be positive");
  if (n > kMaxLemmaOrder) {
    throw Error(ErrorKind::OrderTooLarge, {n}, "lemma suites limited to order " + std::to_string(kMaxLemmaOrder));
  }
  warm_census(n);
  std::vector<std::function<PropertyResult()>> suites{
      [=] { return symmetric_fibers_sigma_special(n); },
      [=] { return sigma_injectivity(n); },
      [=] { return sigma_permutability(n); },
      [=] { return pushout_comparison(n); },
      [=] { return connector_uniqueness(n); },
      [=] { return partial_maltsev_full(n); },
      [=] { return pullback_stability(n); },
      [=] { return jointly_epimorphic(n); },
      [=] { return decomposition(n); },
      [=] { return admissibility(n); },
      [=] { return product_preservation(n); },
      [=] { return reflection_composite(n); },
      [=] { return reflection_universal(n); },
      [=] { return maltsev_symmetric(n); },
      [=] { return quotient_kernel(n); },
  };
  LemmaReport report;
  report.max_order = n;
  report.properties.resize(suites.size());
  parallel_for(suites.size(), threads, [&](std::size_t i) {
    try {
      report.properties[i] = suites[i]();
    } catch (std::exception const& e) {
      report.properties[i].name = "suite_" + std::to_string(i);
      report.properties[i].violations = 1;
      report.properties[i].counterexample = std::string("error ") + e.what();
    }
  });
  return report;
}

std::string format_lemma_report(LemmaReport const& report) {
  std::ostringstream out;
  out << "max_order: " << report.max_order << '\n';
  std::size_t failures = 0;
  for (auto const& p : report.properties) {
    out << p.name << ": " << (p.violations == 0 ? "pass" : "fail") << " (order <= " << p.max_order << ", "
        << p.instances << " instances, " << p.violations << " violations)\n";
    if (p.violations) {
      ++failures;
      out << p.name << "_counterexample: " << p.counterexample << '\n';
    }
  }
  out << "failed_properties: " << failures << '\n';
  return out.str();
}

}  // namespace qnd

#include "qnd/morphism.hpp"

#include <algorithm>
#include <string>

#include "qnd/congruence.hpp"
#include "qnd/error.hpp"

namespace qnd {

Hom validate_hom(Quandle dom, Quandle cod, std::vector<Element> map) {
  if (map.size() != dom.order()) {
    throw Error(ErrorKind::NotAHomomorphism, {map.size()}, "map length differs from domain order");
  }
  for (std::size_t a = 0; a < map.size(); ++a) {
    if (map[a] >= cod.order()) throw Error(ErrorKind::EntryOutOfRange, {a}, "image out of range");
  }
  auto const n = dom.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (map[dom.op(a, b)] != cod.op(map[a], map[b])) {
        throw Error(ErrorKind::NotAHomomorphism, {a, b},
                    "f(a ◁ b) != f(a) ◁ f(b) at " + std::to_string(a) + " " + std::to_string(b));
      }
    }
  }
  return Hom(std::move(dom), std::move(cod), std::move(map));
}

Hom unchecked_hom(Quandle dom, Quandle cod, std::vector<Element> map) {
  if (map.size() != dom.order()) {
    throw Error(ErrorKind::NotAHomomorphism, {map.size()}, "map length differs from domain order");
  }
  return Hom(std::move(dom), std::move(cod), std::move(map));
}

Hom identity(Quandle const& q) {
  std::vector<Element> map(q.order());
  for (Element a = 0; a < map.size(); ++a) map[a] = a;
  return unchecked_hom(q, q, std::move(map));
}

Hom compose(Hom const& f, Hom const& g) {
  if (!(f.cod() == g.dom())) {
    throw Error(ErrorKind::PreconditionFailed, {}, "compose: codomain of f is not the domain of g");
  }
  std::vector<Element> map(f.dom().order());
  for (Element a = 0; a < map.size(); ++a) map[a] = g(f(a));
  return unchecked_hom(f.dom(), g.cod(), std::move(map));
}

Hom to_terminal(Quandle const& q) {
  return unchecked_hom(q, terminal(), std::vector<Element>(q.order(), 0));
}

bool is_surjective(Hom const& f) noexcept {
  std::vector<char> hit(f.cod().order(), 0);
  for (auto b : f.map()) hit[b] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_injective(Hom const& f) noexcept {
  std::vector<char> hit(f.cod().order(), 0);
  for (auto b : f.map()) {
    if (hit[b]) return false;
    hit[b] = 1;
  }
  return true;
}

std::vector<std::vector<Element>> fibers(Hom const& f) {
  std::vector<std::vector<Element>> out(f.cod().order());
  for (Element a = 0; a < f.dom().order(); ++a) out[f(a)].push_back(a);
  return out;
}

Subquandle fiber_subquandle(Hom const& f, Element b) {
  if (b >= f.cod().order()) throw Error(ErrorKind::EntryOutOfRange, {b}, "fiber index out of range");
  std::vector<Element> members;
  for (Element a = 0; a < f.dom().order(); ++a) {
    if (f(a) == b) members.push_back(a);
  }
  if (members.empty()) throw Error(ErrorKind::EmptyFiber, {b}, "empty fiber over " + std::to_string(b));
  return subquandle(f.dom(), members);
}

namespace {

template <class Pred>
bool all_fibers(Hom const& f, Pred pred) {
  auto const fs = fibers(f);
  for (Element b = 0; b < fs.size(); ++b) {
    if (fs[b].empty()) continue;
    if (!pred(subquandle(f.dom(), fs[b]).quandle)) return false;
  }
  return true;
}

}  // namespace

bool has_symmetric_fibers(Hom const& f) {
  return all_fibers(f, [](Quandle const& q) { return is_symmetric(q); });
}

bool has_abelian_symmetric_fibers(Hom const& f) {
  return all_fibers(f, [](Quandle const& q) { return is_abelian_symmetric(q); });
}

PairQuandle::PairQuandle(Quandle const& left, Quandle const& right,
                         std::vector<std::pair<Element, Element>> pairs)
    : pairs_(std::move(pairs)), right_order_(right.order()), index_(left.order() * right.order(), -1) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    index_[pairs_[i].first * right_order_ + pairs_[i].second] = static_cast<std::int64_t>(i);
  }
  auto const k = pairs_.size();
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto const x = left.op(pairs_[i].first, pairs_[j].first);
      auto const y = right.op(pairs_[i].second, pairs_[j].second);
      auto const idx = index_[x * right_order_ + y];
      if (idx < 0) throw Error(ErrorKind::SubsetNotClosed, {i, j}, "pair set not closed under ◁");
      table[i * k + j] = static_cast<Element>(idx);
    }
  }
  carrier_ = validate_flat(k, std::move(table));
}

std::optional<Element> PairQuandle::index_of(Element x, Element y) const noexcept {
  auto const pos = x * right_order_ + y;
  if (y >= right_order_ || pos >= index_.size() || index_[pos] < 0) return std::nullopt;
  return static_cast<Element>(index_[pos]);
}

namespace {

Hom projection(PairQuandle const& pq, Quandle const& target, bool first) {
  std::vector<Element> map(pq.pairs().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = first ? pq.pairs()[i].first : pq.pairs()[i].second;
  return validate_hom(pq.carrier(), target, std::move(map));
}

}  // namespace

KernelPair kernel_pair(Hom const& f) {
  auto const& a = f.dom();
  std::vector<std::pair<Element, Element>> pairs;
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < a.order(); ++y)
      if (f(x) == f(y)) pairs.emplace_back(x, y);
  PairQuandle pq(a, a, std::move(pairs));
  std::vector<Element> diag(a.order());
  for (Element x = 0; x < a.order(); ++x) diag[x] = *pq.index_of(x, x);
  auto p1 = projection(pq, a, true);
  auto p2 = projection(pq, a, false);
  auto d = validate_hom(a, pq.carrier(), std::move(diag));
  return KernelPair{std::move(pq), std::move(p1), std::move(p2), std::move(d)};
}

Pullback pullback(Hom const& f, Hom const& p) {
  if (!(f.cod() == p.cod())) {
    throw Error(ErrorKind::PreconditionFailed, {}, "pullback: maps have different codomains");
  }
  auto const& a = f.dom();
  auto const& e = p.dom();
  std::vector<std::pair<Element, Element>> pairs;
  for (Element x = 0; x < e.order(); ++x)
    for (Element y = 0; y < a.order(); ++y)
      if (p(x) == f(y)) pairs.emplace_back(x, y);
  PairQuandle pq(e, a, std::move(pairs));
  auto p1 = projection(pq, e, true);
  auto p2 = projection(pq, a, false);
  return Pullback{std::move(pq), std::move(p1), std::move(p2)};
}

namespace {

std::vector<std::size_t> cycle_type(Quandle const& q, Element a) {
  auto const n = q.order();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> lengths;
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Element y = x; !seen[y]; y = q.op(y, a)) {
      seen[y] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

class HomSearcher {
 public:
  HomSearcher(Quandle const& dom, Quandle const& cod, HomSearch options, std::vector<char> allowed,
              std::function<bool(std::span<Element const>)> const& visit)
      : dom_(dom), cod_(cod), options_(options), allowed_(std::move(allowed)), visit_(visit) {}

  void run() {
    State s{std::vector<std::int64_t>(dom_.order(), -1), std::vector<char>(cod_.order(), 0), 0, 0};
    if (options_.surjective && dom_.order() < cod_.order()) return;
    if (options_.injective && dom_.order() > cod_.order()) return;
    recurse(s);
  }

 private:
  struct State {
    std::vector<std::int64_t> image;
    std::vector<char> covered;
    std::size_t assigned;
    std::size_t num_covered;
  };

  bool allowed(Element a, Element v) const {
    return allowed_.empty() || allowed_[a * cod_.order() + v] != 0;
  }

  bool assign(State& s, Element a, Element v) const {
    std::vector<std::pair<Element, Element>> work{{a, v}};
    while (!work.empty()) {
      auto [x, w] = work.back();
      work.pop_back();
      if (s.image[x] >= 0) {
        if (static_cast<Element>(s.image[x]) != w) return false;
        continue;
      }
      if (!allowed(x, w)) return false;
      if (s.covered[w]) {
        if (options_.injective) return false;
      } else {
        s.covered[w] = 1;
        ++s.num_covered;
      }
      s.image[x] = w;
      ++s.assigned;
      for (Element y = 0; y < dom_.order(); ++y) {
        if (s.image[y] < 0) continue;
        auto const u = static_cast<Element>(s.image[y]);
        work.emplace_back(dom_.op(x, y), cod_.op(w, u));
        work.emplace_back(dom_.op(y, x), cod_.op(u, w));
        work.emplace_back(dom_.op_inv(x, y), cod_.op_inv(w, u));
        work.emplace_back(dom_.op_inv(y, x), cod_.op_inv(u, w));
      }
    }
    return true;
  }

  // Returns false once the visitor asks to stop.
  bool recurse(State const& s) {
    auto const n = dom_.order();
    if (options_.surjective && n - s.assigned < cod_.order() - s.num_covered) return true;
    Element next = 0;
    while (next < n && s.image[next] >= 0) ++next;
    if (next == n) {
      if (options_.surjective && s.num_covered != cod_.order()) return true;
      std::vector<Element> map(n);
      for (Element a = 0; a < n; ++a) map[a] = static_cast<Element>(s.image[a]);
      return visit_(map);
    }
    for (Element v = 0; v < cod_.order(); ++v) {
      if (!allowed(next, v) || (options_.injective && s.covered[v])) continue;
      State child = s;
      if (assign(child, next, v) && !recurse(child)) return false;
    }
    return true;
  }

  Quandle const& dom_;
  Quandle const& cod_;
  HomSearch options_;
  std::vector<char> allowed_;
  std::function<bool(std::span<Element const>)> const& visit_;
};

}  // namespace

std::vector<std::vector<std::size_t>> element_invariants(Quandle const& q) {
  auto const n = q.order();
  std::vector<std::vector<std::size_t>> out(n);
  for (Element a = 0; a < n; ++a) {
    auto inv = cycle_type(q, a);
    std::size_t row_fixed = 0;
    std::vector<char> image(n, 0);
    for (Element x = 0; x < n; ++x) {
      if (q.op(a, x) == a) ++row_fixed;
      image[q.op(a, x)] = 1;
    }
    inv.push_back(0);  // separator
    inv.push_back(row_fixed);
    inv.push_back(static_cast<std::size_t>(std::count(image.begin(), image.end(), 1)));
    out[a] = std::move(inv);
  }
  return out;
}

std::optional<std::vector<Element>> are_isomorphic(Quandle const& q1, Quandle const& q2) {
  if (q1.order() != q2.order()) return std::nullopt;
  auto const n = q1.order();
  auto inv1 = element_invariants(q1);
  auto inv2 = element_invariants(q2);
  {
    auto s1 = inv1, s2 = inv2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<char> allowed(n * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) allowed[a * n + b] = inv1[a] == inv2[b];

  std::optional<std::vector<Element>> found;
  std::function<bool(std::span<Element const>)> visit = [&](std::span<Element const> map) {
    found.emplace(map.begin(), map.end());
    return false;
  };
  HomSearcher(q1, q2, HomSearch{true, true}, std::move(allowed), visit).run();
  return found;
}

void for_each_hom(Quandle const& dom, Quandle const& cod, HomSearch options,
                  std::function<bool(std::span<Element const>)> const& visit) {
  HomSearcher(dom, cod, options, {}, visit).run();
}

namespace {

std::vector<Hom> collect(Quandle const& dom, Quandle const& cod, HomSearch options, std::vector<char> allowed) {
  std::vector<Hom> out;
  std::function<bool(std::span<Element const>)> visit = [&](std::span<Element const> map) {
    out.push_back(unchecked_hom(dom, cod, std::vector<Element>(map.begin(), map.end())));
    return true;
  };
  HomSearcher(dom, cod, options, std::move(allowed), visit).run();
  return out;
}

}  // namespace

std::vector<Hom> enumerate_homs(Quandle const& dom, Quandle const& cod) {
  return collect(dom, cod, HomSearch{}, {});
}

std::vector<Hom> enumerate_surjections(Quandle const& dom, Quandle const& cod) {
  return collect(dom, cod, HomSearch{false, true}, {});
}

std::vector<Hom> enumerate_sections(Hom const& f) {
  auto const& b = f.cod();
  auto const& a = f.dom();
  std::vector<char> allowed(b.order() * a.order(), 0);
  for (Element y = 0; y < b.order(); ++y)
    for (Element x = 0; x < a.order(); ++x) allowed[y * a.order() + x] = f(x) == y;
  return collect(b, a, HomSearch{true, false}, std::move(allowed));
}

Pushout pushout_of_surjections(Hom const& f, Hom const& g) {
  if (!(f.dom() == g.dom()) || !is_surjective(f) || !is_surjective(g)) {
    throw Error(ErrorKind::NotSurjective, {}, "pushout needs two surjections with a common domain");
  }
  auto const& a = f.dom();
  auto theta = join(a, kernel_congruence(f), kernel_congruence(g));
  auto q = quotient(a, theta);
  std::vector<Element> h(f.cod().order()), l(g.cod().order());
  for (Element x = 0; x < a.order(); ++x) {
    h[f(x)] = theta.block_of(x);
    l[g(x)] = theta.block_of(x);
  }
  return Pushout{q.quandle, validate_hom(f.cod(), q.quandle, std::move(h)),
                 validate_hom(g.cod(), q.quandle, std::move(l))};
}

}  // namespace qnd

#include "qnd/congruence.hpp"

#include <numeric>
#include <string>

#include "qnd/error.hpp"

namespace qnd {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Element{0}); }

  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Element x, Element y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
    return true;
  }

 private:
  std::vector<Element> parent_;
};

}  // namespace

Congruence Congruence::from_labels(std::span<Element const> labels) {
  Congruence out;
  out.block_of_.resize(labels.size());
  std::vector<std::int64_t> renumber;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= renumber.size()) renumber.resize(labels[i] + 1, -1);
    if (renumber[labels[i]] < 0) renumber[labels[i]] = static_cast<std::int64_t>(out.num_blocks_++);
    out.block_of_[i] = static_cast<Element>(renumber[labels[i]]);
  }
  return out;
}

Congruence Congruence::discrete(std::size_t n) {
  std::vector<Element> labels(n);
  std::iota(labels.begin(), labels.end(), Element{0});
  return from_labels(labels);
}

Congruence Congruence::full(std::size_t n) {
  std::vector<Element> labels(n, 0);
  return from_labels(labels);
}

std::vector<std::vector<Element>> Congruence::blocks() const {
  std::vector<std::vector<Element>> out(num_blocks_);
  for (Element a = 0; a < block_of_.size(); ++a) out[block_of_[a]].push_back(a);
  return out;
}

std::vector<ElementPair> Congruence::pairs() const {
  std::vector<ElementPair> out;
  for (Element a = 0; a < block_of_.size(); ++a)
    for (Element b = 0; b < block_of_.size(); ++b)
      if (related(a, b)) out.emplace_back(a, b);
  return out;
}

namespace {

// First (a, b, c) with a ~ b but some translation by c separates them.
std::optional<std::array<std::size_t, 3>> first_incompatibility(Quandle const& q,
                                                                std::span<Element const> labels) {
  auto const n = q.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == b || labels[a] != labels[b]) continue;
      for (Element c = 0; c < n; ++c) {
        if (labels[q.op(a, c)] != labels[q.op(b, c)] || labels[q.op(c, a)] != labels[q.op(c, b)] ||
            labels[q.op_inv(a, c)] != labels[q.op_inv(b, c)] ||
            labels[q.op_inv(c, a)] != labels[q.op_inv(c, b)]) {
          return std::array<std::size_t, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_congruence(Quandle const& q, std::span<Element const> labels) {
  return labels.size() == q.order() && !first_incompatibility(q, labels);
}

Congruence make_congruence(Quandle const& q, std::span<Element const> labels) {
  if (labels.size() != q.order()) {
    throw Error(ErrorKind::NotACongruence, {labels.size()}, "partition does not cover the quandle");
  }
  if (auto w = first_incompatibility(q, labels)) {
    throw Error(ErrorKind::NotACongruence, {(*w)[0], (*w)[1], (*w)[2]}, "partition is not compatible");
  }
  return Congruence::from_labels(labels);
}

Congruence congruence_generated(Quandle const& q, std::span<ElementPair const> pairs) {
  auto const n = q.order();
  UnionFind uf(n);
  std::vector<ElementPair> work;
  auto merge = [&](Element x, Element y) {
    if (uf.unite(x, y)) work.emplace_back(x, y);
  };
  for (auto [x, y] : pairs) merge(x, y);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (Element c = 0; c < n; ++c) {
      merge(q.op(x, c), q.op(y, c));
      merge(q.op(c, x), q.op(c, y));
      merge(q.op_inv(x, c), q.op_inv(y, c));
      merge(q.op_inv(c, x), q.op_inv(c, y));
    }
  }
  std::vector<Element> labels(n);
  for (Element a = 0; a < n; ++a) labels[a] = uf.find(a);
  return Congruence::from_labels(labels);
}

Congruence join(Quandle const& q, Congruence const& x, Congruence const& y) {
  // Chaining consecutive elements of every block is enough to generate it.
  std::vector<ElementPair> generators;
  for (auto const* c : {&x, &y}) {
    for (auto const& block : c->blocks()) {
      for (std::size_t i = 1; i < block.size(); ++i) generators.emplace_back(block[0], block[i]);
    }
  }
  return congruence_generated(q, generators);
}

Congruence kernel_congruence(Hom const& f) { return Congruence::from_labels(f.map()); }

Quotient quotient(Quandle const& q, Congruence const& theta) {
  auto const n = q.order(), k = theta.num_blocks();
  std::vector<Element> rep(k);
  for (Element a = n; a-- > 0;) rep[theta.block_of(a)] = a;
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = theta.block_of(q.op(rep[i], rep[j]));
  }
  auto quandle = validate_flat(k, std::move(table));
  std::vector<Element> map(theta.labels().begin(), theta.labels().end());
  return Quotient{quandle, validate_hom(q, quandle, std::move(map))};
}

std::vector<Congruence> all_congruences(Quandle const& q) {
  auto const n = q.order();
  std::vector<Congruence> out;
  std::vector<Element> labels(n, 0);
  // Restricted growth strings: labels[i] <= 1 + max(labels[0..i-1]).
  auto recurse = [&](auto&& self, std::size_t i, Element max_label) -> void {
    if (i == n) {
      if (is_congruence(q, labels)) out.push_back(Congruence::from_labels(labels));
      return;
    }
    for (Element v = 0; v <= max_label + 1; ++v) {
      labels[i] = v;
      self(self, i + 1, std::max(max_label, v));
    }
  };
  if (n == 1) {
    out.push_back(Congruence::full(1));
    return out;
  }
  labels[0] = 0;
  recurse(recurse, 1, 0);
  return out;
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (Element a = 0; a < n; ++a) r.insert(a, a);
  return r;
}

Relation Relation::of(Congruence const& c) {
  Relation r(c.base_order());
  for (auto [a, b] : c.pairs()) r.insert(a, b);
  return r;
}

std::size_t Relation::size() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

Relation relation_compose(Relation const& r1, Relation const& r2) {
  auto const n = r1.base_order();
  Relation out(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (r1.contains(x, y))
        for (Element z = 0; z < n; ++z)
          if (r2.contains(y, z)) out.insert(x, z);
  return out;
}

}  // namespace qnd

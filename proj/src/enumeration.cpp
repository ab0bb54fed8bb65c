#include "qnd/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "qnd/error.hpp"
#include "qnd/morphism.hpp"

namespace qnd {

namespace {

using Perm = std::vector<Element>;

std::vector<Perm> permutations_fixing(std::size_t n, Element fixed) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), Element{0});
  do {
    if (p[fixed] == fixed) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// columns[b][a] = a ◁ b; an empty vector marks an unknown column.
class ColumnSearch {
 public:
  explicit ColumnSearch(std::size_t n) : n_(n) {
    for (Element b = 0; b < n; ++b) choices_.push_back(permutations_fixing(n, b));
  }

  std::vector<Perm> const& choices(Element b) const { return choices_[b]; }

  // All quandles whose column 0 is `first`.
  std::vector<Quandle> run_from(Perm const& first) const {
    std::vector<Quandle> out;
    std::vector<Perm> cols(n_);
    cols[0] = first;
    if (propagate(cols)) recurse(cols, out);
    return out;
  }

 private:
  bool propagate(std::vector<Perm>& cols) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Element c = 0; c < n_; ++c) {
        if (cols[c].empty()) continue;
        auto const& sc = cols[c];
        Perm sc_inv(n_);
        for (Element a = 0; a < n_; ++a) sc_inv[sc[a]] = a;
        for (Element b = 0; b < n_; ++b) {
          if (cols[b].empty()) continue;
          auto const& sb = cols[b];
          Perm conj(n_);
          for (Element a = 0; a < n_; ++a) conj[a] = sc[sb[sc_inv[a]]];
          auto const d = sc[b];
          if (cols[d].empty()) {
            cols[d] = std::move(conj);
            changed = true;
          } else if (cols[d] != conj) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void recurse(std::vector<Perm>& cols, std::vector<Quandle>& out) const {
    Element next = 0;
    while (next < n_ && !cols[next].empty()) ++next;
    if (next == n_) {
      std::vector<Element> table(n_ * n_);
      for (Element a = 0; a < n_; ++a)
        for (Element b = 0; b < n_; ++b) table[a * n_ + b] = cols[b][a];
      out.push_back(validate_flat(n_, std::move(table)));
      return;
    }
    for (auto const& p : choices_[next]) {
      auto child = cols;
      child[next] = p;
      if (propagate(child)) recurse(child, out);
    }
  }

  std::size_t n_;
  std::vector<std::vector<Perm>> choices_;
};

bool table_less(Quandle const& x, Quandle const& y) {
  auto tx = x.flat_table(), ty = y.flat_table();
  return std::lexicographical_compare(tx.begin(), tx.end(), ty.begin(), ty.end());
}

}  // namespace

std::vector<Quandle> enumerate_labeled_quandles(std::size_t n, unsigned threads) {
  if (n == 0) return {};
  ColumnSearch search(n);
  auto const& firsts = search.choices(0);
  std::vector<std::vector<Quandle>> parts(firsts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < firsts.size(); i = next++) parts[i] = search.run_from(firsts[i]);
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<Quandle> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

Quandle canonical_form(Quandle const& q) {
  auto const n = q.order();
  Perm perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<Element> best(q.flat_table().begin(), q.flat_table().end());
  std::vector<Element> cand(n * n);
  do {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) cand[perm[a] * n + perm[b]] = perm[q.op(a, b)];
    if (cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return validate_flat(n, std::move(best));
}

bool isomorphic_brute_force(Quandle const& q1, Quandle const& q2) {
  if (q1.order() != q2.order()) return false;
  auto const n = q1.order();
  Perm perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  do {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b) ok = perm[q1.op(a, b)] == q2.op(perm[a], perm[b]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Quandle> dedup_by_isomorphism(std::span<Quandle const> tables) {
  std::map<std::vector<std::vector<std::size_t>>, std::vector<std::size_t>> buckets;
  std::vector<Quandle> reps;
  for (auto const& q : tables) {
    auto key = element_invariants(q);
    std::sort(key.begin(), key.end());
    auto& bucket = buckets[std::move(key)];
    bool seen = std::any_of(bucket.begin(), bucket.end(),
                            [&](std::size_t r) { return are_isomorphic(reps[r], q).has_value(); });
    if (!seen) {
      bucket.push_back(reps.size());
      reps.push_back(q);
    }
  }
  return reps;
}

std::vector<Quandle> dedup_by_canonical_form(std::span<Quandle const> tables) {
  std::vector<Quandle> forms;
  forms.reserve(tables.size());
  for (auto const& q : tables) forms.push_back(canonical_form(q));
  std::sort(forms.begin(), forms.end(), table_less);
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

std::size_t count_classes_brute_force(std::span<Quandle const> tables) {
  std::vector<Quandle> reps;
  for (auto const& q : tables) {
    if (std::none_of(reps.begin(), reps.end(), [&](Quandle const& r) { return isomorphic_brute_force(r, q); })) {
      reps.push_back(q);
    }
  }
  return reps.size();
}

Census enumerate_quandles(std::size_t n, EnumerateOptions options) {
  if (n == 0) throw Error(ErrorKind::PreconditionFailed, {0}, "order must be positive");
  if (n > kMaxCensusOrder && !options.allow_large) {
    throw Error(ErrorKind::OrderTooLarge, {n}, "census order above " + std::to_string(kMaxCensusOrder));
  }
  auto const labeled = enumerate_labeled_quandles(n, options.threads);
  auto reps = dedup_by_isomorphism(labeled);
  for (auto& q : reps) q = canonical_form(q);
  std::sort(reps.begin(), reps.end(), table_less);

  Census out;
  out.order = n;
  for (auto const& q : reps) {
    ++out.counts.total;
    bool const sym = is_symmetric(q), ab = is_abelian(q);
    out.counts.symmetric += sym;
    out.counts.abelian += ab;
    out.counts.abelian_symmetric += sym && ab;
    out.counts.trivial += is_trivial(q);
  }
  out.representatives = std::move(reps);
  return out;
}

Census const& census(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, Census> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_quandles(n)).first;
  return it->second;
}

std::vector<Quandle> enumerate_all_tables(std::size_t n) {
  if (n == 0 || n > kMaxNaiveOrder) {
    throw Error(ErrorKind::OrderTooLarge, {n}, "naive enumeration is limited to order " +
                                                   std::to_string(kMaxNaiveOrder));
  }
  std::vector<Perm> perms;
  Perm p(n);
  std::iota(p.begin(), p.end(), Element{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<Quandle> out;
  std::vector<std::size_t> pick(n, 0);
  std::vector<Element> table(n * n);
  while (true) {
    for (Element b = 0; b < n; ++b)
      for (Element a = 0; a < n; ++a) table[a * n + b] = perms[pick[b]][a];
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = table[a * n + a] == a;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b)
        for (Element c = 0; c < n && ok; ++c)
          ok = table[table[a * n + b] * n + c] == table[table[a * n + c] * n + table[b * n + c]];
    if (ok) out.push_back(validate_flat(n, table));

    std::size_t i = 0;
    while (i < n && ++pick[i] == perms.size()) pick[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace qnd

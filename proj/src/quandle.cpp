#include "qnd/quandle.hpp"

#include <algorithm>
#include <string>

#include "qnd/error.hpp"

namespace qnd {

namespace {

std::string witness_string(std::vector<std::size_t> const& w) {
  std::string out;
  for (auto x : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

[[noreturn]] void fail(ErrorKind kind, std::vector<std::size_t> witness, std::string const& what) {
  auto msg = what + " (" + witness_string(witness) + ")";
  throw Error(kind, std::move(witness), msg);
}

}  // namespace

Quandle::Quandle() : Quandle(validate_flat(1, {0})) {}

Table Quandle::rows() const {
  auto const n = order();
  Table out(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out[a][b] = op(a, b);
  }
  return out;
}

Quandle validate(Table const& rows) {
  auto const n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) fail(ErrorKind::NotSquare, {a}, "row has wrong length");
    flat.insert(flat.end(), rows[a].begin(), rows[a].end());
  }
  return validate_flat(n, std::move(flat));
}

Quandle validate_flat(std::size_t n, std::vector<Element> table) {
  if (n == 0) fail(ErrorKind::NotSquare, {}, "empty table");
  if (table.size() != n * n) fail(ErrorKind::NotSquare, {table.size()}, "table size is not n*n");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) fail(ErrorKind::EntryOutOfRange, {i / n, i % n}, "table entry out of range");
  }
  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };

  for (std::size_t a = 0; a < n; ++a) {
    if (at(a, a) != a) fail(ErrorKind::DiagonalViolation, {a}, "a ◁ a != a");
  }

  std::vector<Element> inv(n * n);
  std::vector<char> seen(n);
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      auto const v = at(a, b);
      if (seen[v]) fail(ErrorKind::ColumnNotBijective, {b}, "column is not a permutation");
      seen[v] = 1;
      inv[v * n + b] = static_cast<Element>(a);
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(at(a, c), at(b, c))) {
          fail(ErrorKind::DistributivityViolation, {a, b, c}, "(a ◁ b) ◁ c != (a ◁ c) ◁ (b ◁ c)");
        }
      }
    }
  }

  auto data = std::make_shared<Quandle::Data>(Quandle::Data{n, std::move(table), std::move(inv)});
  return Quandle(std::move(data));
}

bool is_symmetric(Quandle const& q) noexcept {
  auto const n = q.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (q.op(a, b) != q.op(b, a)) return false;
    }
  }
  return true;
}

bool is_abelian(Quandle const& q) noexcept {
  auto const n = q.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        for (Element d = 0; d < n; ++d) {
          if (q.op(q.op(a, b), q.op(c, d)) != q.op(q.op(a, c), q.op(b, d))) return false;
        }
      }
    }
  }
  return true;
}

bool satisfies_inverse_medial_identity(Quandle const& q) noexcept {
  auto const n = q.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        for (Element d = 0; d < n; ++d) {
          if (q.op_inv(q.op(a, b), q.op(c, d)) != q.op(q.op_inv(a, c), q.op_inv(b, d))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool is_trivial(Quandle const& q) noexcept {
  auto const n = q.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (q.op(a, b) != a) return false;
    }
  }
  return true;
}

bool is_abelian_symmetric(Quandle const& q) noexcept {
  return is_symmetric(q) && is_abelian(q);
}

bool maltsev_is_homomorphism(Quandle const& q) noexcept {
  auto const n = q.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        for (Element x = 0; x < n; ++x)
          for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z) {
              auto lhs = maltsev(q, q.op(a, x), q.op(b, y), q.op(c, z));
              auto rhs = q.op(maltsev(q, a, b, c), maltsev(q, x, y, z));
              if (lhs != rhs) return false;
            }
  return true;
}

Quandle conj_quandle(Table const& group) {
  auto const n = group.size();
  auto not_group = [](std::string const& reason, std::vector<std::size_t> w) {
    fail(ErrorKind::NotAGroup, std::move(w), "not a group: " + reason);
  };
  if (n == 0) not_group("empty table", {});
  for (std::size_t a = 0; a < n; ++a) {
    if (group[a].size() != n) fail(ErrorKind::NotSquare, {a}, "row has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (group[a][b] >= n) fail(ErrorKind::EntryOutOfRange, {a, b}, "table entry out of range");
    }
  }
  auto mul = [&](std::size_t a, std::size_t b) { return group[a][b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) not_group("0 is not the identity", {0, a, a});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) not_group("not associative", {a, b, c});
  std::vector<Element> inverse(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto it = std::find(group[a].begin(), group[a].end(), Element{0});
    auto const b = static_cast<std::size_t>(it - group[a].begin());
    if (it == group[a].end() || mul(b, a) != 0) not_group("no inverse", {a, 0, 0});
    inverse[a] = static_cast<Element>(b);
  }

  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = mul(mul(b, a), inverse[b]);
  }
  return validate_flat(n, std::move(table));
}

Quandle trivial_quandle(std::size_t n) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill_n(table.begin() + static_cast<std::ptrdiff_t>(a * n), n, static_cast<Element>(a));
  }
  return validate_flat(n, std::move(table));
}

Quandle terminal() { return Quandle(); }

Quandle product(Quandle const& q1, Quandle const& q2) {
  auto const n1 = q1.order(), n2 = q2.order(), n = n1 * n2;
  std::vector<Element> table(n * n);
  for (Element a1 = 0; a1 < n1; ++a1)
    for (Element a2 = 0; a2 < n2; ++a2)
      for (Element b1 = 0; b1 < n1; ++b1)
        for (Element b2 = 0; b2 < n2; ++b2) {
          table[product_index(a1, a2, n2) * n + product_index(b1, b2, n2)] =
              product_index(q1.op(a1, b1), q2.op(a2, b2), n2);
        }
  return validate_flat(n, std::move(table));
}

Subquandle subquandle(Quandle const& q, std::span<Element const> subset) {
  std::vector<Element> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) fail(ErrorKind::SubsetNotClosed, {}, "empty subset");
  if (members.back() >= q.order()) fail(ErrorKind::EntryOutOfRange, {members.back()}, "element out of range");

  std::vector<std::int64_t> local(q.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<std::int64_t>(i);

  auto const m = members.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto const v = q.op(members[i], members[j]);
      if (local[v] < 0) fail(ErrorKind::SubsetNotClosed, {members[i], members[j]}, "subset not closed under ◁");
      table[i * m + j] = static_cast<Element>(local[v]);
    }
  }
  return Subquandle{validate_flat(m, std::move(table)), std::move(members)};
}

Quandle relabel(Quandle const& q, std::span<Element const> perm) {
  auto const n = q.order();
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) table[perm[a] * n + perm[b]] = perm[q.op(a, b)];
  }
  return validate_flat(n, std::move(table));
}

}  // namespace qnd

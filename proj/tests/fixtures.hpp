#pragma once

#include <numeric>
#include <string>

#include "qnd/io.hpp"
#include "qnd/quandle.hpp"

namespace qnd::test {

inline std::string data_path(std::string const& name) { return std::string(QND_DATA_DIR) + "/" + name; }

inline Quandle load(std::string const& name) { return parse_quandle(read_text(data_path(name))); }

// The 4-element quandle whose map onto two points has abelian symmetric
// fibers but no connector.
inline Quandle final_remark() {
  return validate({{0, 2, 1, 0}, {2, 1, 0, 1}, {1, 0, 2, 2}, {3, 3, 3, 3}});
}

// Dihedral quandle of order 3: a ◁ b = 2b - a mod 3.
inline Quandle r3() { return validate({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}); }

// Dihedral quandle a ◁ b = 2b - a mod n, built from the formula.
inline Quandle dihedral(std::size_t n) {
  Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((2 * b + n - a) % n);
  return validate(t);
}

// Affine quandle a ◁ b = t·a + (1 - t)·b mod n.
inline Quandle affine(std::size_t n, std::size_t t) {
  Table tab(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) tab[a][b] = static_cast<Element>((t * a + (n + 1 - t) * b) % n);
  return validate(tab);
}

// Cayley table of Z/n.
inline Table cyclic_group(std::size_t n) {
  Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return t;
}

}  // namespace qnd::test

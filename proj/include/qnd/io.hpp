#pragma once

// Plain-text file formats and the line-oriented `key: value` reports.
//
//   quandle n      n rows of n indices, row a column b = a ◁ b
//   hom n m        one row of n indices below m
//   group n        n rows, row a column b = a · b, 0 the identity
//
// '#' starts a comment and blank lines are ignored. Syntax problems throw
// Error(Parse); mathematical problems are left to the validators.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qnd/enumeration.hpp"
#include "qnd/extensions.hpp"
#include "qnd/reflection.hpp"

namespace qnd {

// Whole file as a string; throws Error(Parse) if it cannot be read.
std::string read_text(std::filesystem::path const& path);

// Shape-checked but unvalidated table.
Table parse_quandle_table(std::string_view text);
// parse_quandle_table followed by validate.
Quandle parse_quandle(std::string_view text);
std::string format_quandle(Quandle const& q);

struct HomData {
  std::size_t dom_order = 0;
  std::size_t cod_order = 0;
  std::vector<Element> map;
};

HomData parse_hom(std::string_view text);
std::string format_hom(Hom const& f);
// Checks the header sizes against dom/cod (PreconditionFailed), then validate_hom.
Hom make_hom(Quandle const& dom, Quandle const& cod, HomData const& data);

Table parse_group(std::string_view text);
std::string format_group(Table const& group);

// "true" / "false"
std::string_view bool_text(bool b) noexcept;

std::string format_props(Quandle const& q);
std::string format_reflection(Reflection const& r);
// Absent fields print as "n/a".
std::string format_classification(ExtensionReport const& r);
std::string format_census_summary(Census const& c);

}  // namespace qnd

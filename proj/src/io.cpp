#include "qnd/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qnd/error.hpp"

namespace qnd {

namespace {

using Line = std::vector<std::string_view>;

[[noreturn]] void parse_error(std::string const& what, std::size_t line_no = 0) {
  auto msg = line_no ? "line " + std::to_string(line_no) + ": " + what : what;
  throw Error(ErrorKind::Parse, {line_no}, msg);
}

struct NumberedLine {
  std::size_t number;
  Line tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<NumberedLine> tokenize(std::string_view text) {
  std::vector<NumberedLine> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto const eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      auto const start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (!tokens.empty()) out.push_back({line_no, std::move(tokens)});
  }
  return out;
}

std::size_t to_number(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_error("expected a non-negative integer, got '" + std::string(token) + "'", line_no);
  }
  return value;
}

Element to_element(std::string_view token, std::size_t line_no) {
  auto const v = to_number(token, line_no);
  if (v > 0xffffffffu) parse_error("index too large", line_no);
  return static_cast<Element>(v);
}

// Header `keyword n [m]`; returns the sizes.
std::vector<std::size_t> header(std::vector<NumberedLine> const& lines, std::string_view keyword,
                                std::size_t arity) {
  if (lines.empty()) parse_error("missing '" + std::string(keyword) + "' header");
  auto const& h = lines.front();
  if (h.tokens.size() != arity + 1 || h.tokens[0] != keyword) {
    parse_error("header must be '" + std::string(keyword) + (arity == 1 ? " n'" : " n m'"), h.number);
  }
  std::vector<std::size_t> sizes;
  for (std::size_t i = 1; i <= arity; ++i) {
    auto const v = to_number(h.tokens[i], h.number);
    if (v == 0) parse_error("size must be positive", h.number);
    sizes.push_back(v);
  }
  return sizes;
}

Table square_body(std::vector<NumberedLine> const& lines, std::size_t n) {
  if (lines.size() != n + 1) {
    parse_error("expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  }
  Table rows;
  for (std::size_t r = 1; r <= n; ++r) {
    auto const& line = lines[r];
    if (line.tokens.size() != n) {
      parse_error("expected " + std::to_string(n) + " entries, found " + std::to_string(line.tokens.size()),
                  line.number);
    }
    std::vector<Element> row;
    for (auto tok : line.tokens) row.push_back(to_element(tok, line.number));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string join(std::span<Element const> xs) {
  std::string out;
  for (auto x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

std::string format_square(std::string_view keyword, Table const& rows) {
  std::string out = std::string(keyword) + ' ' + std::to_string(rows.size()) + '\n';
  for (auto const& row : rows) out += join(row) + '\n';
  return out;
}

std::string opt_text(std::optional<bool> b) { return b ? std::string(bool_text(*b)) : "n/a"; }

}  // namespace

std::string read_text(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, {}, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Table parse_quandle_table(std::string_view text) {
  auto const lines = tokenize(text);
  auto const n = header(lines, "quandle", 1)[0];
  return square_body(lines, n);
}

Quandle parse_quandle(std::string_view text) { return validate(parse_quandle_table(text)); }

std::string format_quandle(Quandle const& q) { return format_square("quandle", q.rows()); }

HomData parse_hom(std::string_view text) {
  auto const lines = tokenize(text);
  auto const sizes = header(lines, "hom", 2);
  HomData out{sizes[0], sizes[1], {}};
  if (lines.size() != 2) parse_error("expected exactly one line of images");
  auto const& line = lines[1];
  if (line.tokens.size() != out.dom_order) {
    parse_error("expected " + std::to_string(out.dom_order) + " images", line.number);
  }
  for (auto tok : line.tokens) out.map.push_back(to_element(tok, line.number));
  return out;
}

std::string format_hom(Hom const& f) {
  return "hom " + std::to_string(f.dom().order()) + ' ' + std::to_string(f.cod().order()) + '\n' +
         join(f.map()) + '\n';
}

Hom make_hom(Quandle const& dom, Quandle const& cod, HomData const& data) {
  if (data.dom_order != dom.order() || data.cod_order != cod.order()) {
    throw Error(ErrorKind::PreconditionFailed, {data.dom_order, data.cod_order},
                "hom header does not match the quandle orders");
  }
  return validate_hom(dom, cod, data.map);
}

Table parse_group(std::string_view text) {
  auto const lines = tokenize(text);
  auto const n = header(lines, "group", 1)[0];
  return square_body(lines, n);
}

std::string format_group(Table const& group) { return format_square("group", group); }

std::string_view bool_text(bool b) noexcept { return b ? "true" : "false"; }

std::string format_props(Quandle const& q) {
  std::ostringstream out;
  out << "order: " << q.order() << '\n'
      << "symmetric: " << bool_text(is_symmetric(q)) << '\n'
      << "abelian: " << bool_text(is_abelian(q)) << '\n'
      << "abelian_symmetric: " << bool_text(is_abelian_symmetric(q)) << '\n'
      << "trivial: " << bool_text(is_trivial(q)) << '\n';
  return out.str();
}

std::string format_reflection(Reflection const& r) {
  return format_quandle(r.quotient) + "unit: " + join(r.unit.map()) + '\n';
}

std::string format_classification(ExtensionReport const& r) {
  std::ostringstream out;
  out << "surjective: " << bool_text(r.surjective) << '\n'
      << "fibers_abelian_symmetric: " << bool_text(r.fibers_abelian_symmetric) << '\n'
      << "sigma_special: " << bool_text(r.sigma_special) << '\n'
      << "algebraically_central: " << opt_text(r.algebraically_central) << '\n'
      << "trivial_extension: " << opt_text(r.trivial) << '\n'
      << "normal_extension: " << opt_text(r.normal) << '\n'
      << "central_extension: " << opt_text(r.central) << '\n'
      << "eq_f_order: " << r.eq_f_order << '\n';
  return out.str();
}

std::string format_census_summary(Census const& c) {
  std::ostringstream out;
  out << "order: " << c.order << '\n'
      << "total: " << c.counts.total << '\n'
      << "symmetric: " << c.counts.symmetric << '\n'
      << "abelian: " << c.counts.abelian << '\n'
      << "abelian_symmetric: " << c.counts.abelian_symmetric << '\n'
      << "trivial: " << c.counts.trivial << '\n';
  return out.str();
}

}  // namespace qnd

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qnd/error.hpp"
#include "qnd/io.hpp"

using namespace qnd;
using namespace qnd::test;

namespace {

ErrorKind parse_kind(std::string const& text) {
  try {
    parse_quandle(text);
  } catch (Error const& e) {
    return e.kind();
  }
  return ErrorKind::PreconditionFailed;
}

}  // namespace

TEST(QuandleFile, BundledFilesRoundTrip) {
  for (auto name : {"final-remark.qnd", "trivial2.qnd", "r3.qnd", "terminal.qnd"}) {
    auto const text = read_text(data_path(name));
    EXPECT_EQ(format_quandle(parse_quandle(text)), text) << name;
  }
  EXPECT_EQ(load("final-remark.qnd"), final_remark());
  EXPECT_EQ(load("r3.qnd"), r3());
}

TEST(QuandleFile, CommentsAndBlankLines) {
  auto const q = parse_quandle("# dihedral\n\nquandle 3   # header\n0 2 1\n\n2 1 0\n  1 0 2  \n# end\n");
  EXPECT_EQ(q, r3());
  EXPECT_EQ(parse_quandle("quandle 1\n0"), terminal());
}

TEST(QuandleFile, SyntaxErrors) {
  EXPECT_EQ(parse_kind(""), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("quandle\n0\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("group 1\n0\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("quandle 0\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("quandle 2\n0 0\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("quandle 2\n0 0\n1 1\n0 0\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("quandle 2\n0 0 0\n1 1\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("quandle 2\n0 -1\n1 1\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("quandle 2\n0 a\n1 1\n"), ErrorKind::Parse);
  EXPECT_THROW(read_text(data_path("missing.qnd")), Error);
}

TEST(QuandleFile, ValidationErrorsAreNotSyntaxErrors) {
  EXPECT_EQ(parse_kind("quandle 2\n0 0\n0 1\n"), ErrorKind::ColumnNotBijective);
  EXPECT_EQ(parse_kind("quandle 2\n0 5\n1 1\n"), ErrorKind::EntryOutOfRange);
  EXPECT_EQ(parse_kind("quandle 2\n1 0\n0 1\n"), ErrorKind::DiagonalViolation);
  // Shape is fine, so the raw table is available for reporting.
  EXPECT_EQ(parse_quandle_table("quandle 2\n0 0\n0 1\n"), (Table{{0, 0}, {0, 1}}));
}

TEST(HomFile, ParseAndBuild) {
  auto const data = parse_hom(read_text(data_path("final-remark.qhom")));
  EXPECT_EQ(data.dom_order, 4u);
  EXPECT_EQ(data.cod_order, 2u);
  EXPECT_EQ(data.map, (std::vector<Element>{0, 0, 0, 1}));
  auto const f = make_hom(final_remark(), trivial_quandle(2), data);
  EXPECT_EQ(format_hom(f), read_text(data_path("final-remark.qhom")));
  EXPECT_THROW(make_hom(r3(), trivial_quandle(2), data), Error);
  EXPECT_THROW(parse_hom("hom 2 1\n0\n"), Error);
  EXPECT_THROW(parse_hom("hom 2 1\n0 0\n0 0\n"), Error);
  EXPECT_THROW(parse_hom("hom 2\n0 0\n"), Error);
  try {
    make_hom(r3(), trivial_quandle(2), parse_hom("hom 3 2\n0 1 1\n"));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAHomomorphism);
  }
}

TEST(GroupFile, ParseAndRoundTrip) {
  for (auto name : {"z2group.g", "s3group.g"}) {
    auto const text = read_text(data_path(name));
    EXPECT_EQ(format_group(parse_group(text)), text);
  }
  EXPECT_EQ(parse_group(read_text(data_path("z2group.g"))), cyclic_group(2));
  EXPECT_THROW(parse_group("quandle 2\n0 1\n1 0\n"), Error);
}

TEST(Reports, PropsKeyOrder) {
  EXPECT_EQ(format_props(final_remark()),
            "order: 4\nsymmetric: false\nabelian: false\nabelian_symmetric: false\ntrivial: false\n");
  EXPECT_EQ(format_props(r3()), "order: 3\nsymmetric: true\nabelian: true\nabelian_symmetric: true\ntrivial: false\n");
}

TEST(Reports, ClassificationKeyOrder) {
  ExtensionReport r;
  r.surjective = false;
  r.eq_f_order = 1;
  EXPECT_EQ(format_classification(r),
            "surjective: false\nfibers_abelian_symmetric: false\nsigma_special: false\n"
            "algebraically_central: n/a\ntrivial_extension: n/a\nnormal_extension: n/a\n"
            "central_extension: n/a\neq_f_order: 1\n");
}

TEST(Reports, ReflectionBody) {
  auto const r = reflect_absym(trivial_quandle(2));
  EXPECT_EQ(format_reflection(r), "quandle 1\n0\nunit: 0 0\n");
}

#include <gtest/gtest.h>

#include <qsat/error.hpp>
#include <qsat/parser.hpp>
#include <qsat/transform.hpp>

#include "support/testing.hpp"

using namespace qsat;
using namespace qsat::testing;

namespace {

constexpr const char* kExCnf = "p cnf 4 2\n1 2 -3 0\n-2 3 4 0\n";
constexpr const char* kExEcnf = "p ecnf 4 2\n1 ^ T ^ 2 -3 0\n-2 ^ -3 4 0\n";

std::size_t parse_error_line(std::string_view text, bool ecnf) {
  try {
    if (ecnf) {
      parse_ecnf(text);
    } else {
      parse_dimacs(text);
    }
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Dimacs, ParsesExample) {
  EXPECT_EQ(parse_dimacs(kExCnf), ex_cnf());
  const auto unit = parse_dimacs("p cnf 1 1\n1 0\n");
  EXPECT_EQ(unit, CnfFormula(1, {clause({1})}));
}

TEST(Dimacs, CommentsAndMultiLineClauses) {
  const auto f = parse_dimacs("c hello\np cnf 3 2\n1 -2\n 3 0 -1 0\n");
  EXPECT_EQ(f, CnfFormula(3, {clause({1, -2, 3}), clause({-1})}));
}

TEST(Dimacs, Errors) {
  EXPECT_EQ(parse_error_line("p cnf 2 1\n1 3 0\n", false), 2U);
  EXPECT_EQ(parse_error_line("p cnf 2 1\n1 2\n", false), 2U);
  EXPECT_EQ(parse_error_line("p cnf 2 2\n1 2 0\n", false), 2U);
  EXPECT_EQ(parse_error_line("p cnf 2 1\n1 2 0\n-1 0\n", false), 3U);
  EXPECT_EQ(parse_error_line("p cnf x 1\n", false), 1U);
  EXPECT_EQ(parse_error_line("1 2 0\n", false), 1U);
  EXPECT_EQ(parse_error_line("p cnf 2 1\np cnf 2 1\n1 0\n", false), 2U);
  EXPECT_EQ(parse_error_line("p cnf 2 1\n1 1 0\n", false), 2U);
  EXPECT_EQ(parse_error_line("p cnf 2 1\n1 foo 0\n", false), 2U);
  EXPECT_THROW(parse_dimacs(""), ParseError);
}

TEST(Dimacs, WriteIsCanonical) {
  EXPECT_EQ(write_dimacs(ex_cnf()), kExCnf);
  EXPECT_EQ(write_dimacs(CnfFormula(3, {})), "p cnf 3 0\n");
}

TEST(Dimacs, RandomRoundTrip) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_cnf(rng, 1 + trial % 8, 6, 4);
    const auto text = write_dimacs(f);
    EXPECT_EQ(parse_dimacs(text), f);
    EXPECT_EQ(write_dimacs(parse_dimacs(text)), text);
  }
}

TEST(Ecnf, ParsesExample) {
  const auto f = parse_ecnf(kExEcnf);
  EXPECT_EQ(f, ex_ecnf());
  EXPECT_EQ(write_ecnf(f), kExEcnf);
}

TEST(Ecnf, ConstantClause) {
  const auto f = parse_ecnf("p ecnf 2 1\nT 0\n");
  ASSERT_EQ(f.clauses.size(), 1U);
  ASSERT_EQ(f.clauses[0].monomials().size(), 1U);
  EXPECT_TRUE(f.clauses[0].monomials()[0].is_one());
}

TEST(Ecnf, EquivalenceClauseShape) {
  const auto f = parse_ecnf("p ecnf 3 1\n-1 ^ 1 -2 0\n");
  EXPECT_EQ(f.num_vars, 3);
  EXPECT_EQ(f.clauses[0], EsopClause({mono({-1}), mono({1, -2})}));
}

TEST(Ecnf, DropsConstantZeroMonomials) {
  std::vector<std::string> warnings;
  const auto f = parse_ecnf("p ecnf 2 1\n1 ^ 2 -2 0\n", &warnings);
  EXPECT_EQ(f.clauses[0], EsopClause({mono({1})}));
  EXPECT_EQ(warnings.size(), 1U);
}

TEST(Ecnf, NormalizesDuplicates) {
  const auto f = parse_ecnf("p ecnf 2 1\n1 ^ 2 ^ 1 0\n");
  EXPECT_EQ(f.clauses[0], EsopClause({mono({2})}));
}

TEST(Ecnf, Errors) {
  EXPECT_EQ(parse_error_line("p ecnf 2 1\n1 ^ x 0\n", true), 2U);
  EXPECT_EQ(parse_error_line("p ecnf 2 1\n1 ^ ^ 2 0\n", true), 2U);
  EXPECT_EQ(parse_error_line("p ecnf 2 1\n0\n", true), 2U);
  EXPECT_EQ(parse_error_line("p ecnf 2 1\n1 ^ 3 0\n", true), 2U);
  EXPECT_EQ(parse_error_line("p ecnf 2 1\n1 ^ 1 0\n", true), 2U);
  EXPECT_EQ(parse_error_line("p ecnf 2 1\n1 2\n", true), 2U);
  EXPECT_EQ(parse_error_line("p ecnf 2 2\n1 0\n", true), 2U);
  EXPECT_EQ(parse_error_line("p ecnf 2 1\nT 1 0\n", true), 2U);
  EXPECT_EQ(parse_error_line("p cnf 2 1\n1 0\n", true), 1U);
}

TEST(Ecnf, EmptyFormulaIsHeaderOnly) { EXPECT_EQ(write_ecnf(EcnfFormula(3, {})), "p ecnf 3 0\n"); }

TEST(Ecnf, FamilyFileHasOneLinePerClause) {
  const auto text = write_ecnf(phi_family(2).ecnf);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
  EXPECT_EQ(parse_ecnf(text), phi_family(2).ecnf);
}

TEST(Ecnf, RandomRoundTrip) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = random_ecnf(rng, 1 + trial % 8, 6, 4, 4);
    const auto text = write_ecnf(f);
    EXPECT_EQ(parse_ecnf(text), f);
    EXPECT_EQ(write_ecnf(parse_ecnf(text)), text);
  }
}

TEST(Expr, Precedence) {
  const auto v = [](int i) { return BoolExpr::var(i); };
  EXPECT_EQ(parse_expr("x1 <-> (x2 & !x3)"), BoolExpr::iff(v(1), v(2) & !v(3)));
  EXPECT_EQ(parse_expr("1"), BoolExpr::constant(true));
  EXPECT_EQ(parse_expr("x1 ^ x2 ^ x3"), (v(1) ^ v(2)) ^ v(3));
  EXPECT_EQ(parse_expr("x1 | x2 & x3"), v(1) | (v(2) & v(3)));
  EXPECT_EQ(parse_expr("x1 ^ x2 | x3"), v(1) ^ (v(2) | v(3)));
  EXPECT_EQ(parse_expr("x1 -> x2 <-> x3"), BoolExpr::iff(BoolExpr::implies(v(1), v(2)), v(3)));
  EXPECT_EQ(parse_expr("x1 -> x2 -> x3"), BoolExpr::implies(BoolExpr::implies(v(1), v(2)), v(3)));
  EXPECT_EQ(parse_expr("!!x1"), !!v(1));
}

TEST(Expr, ErrorOffsets) {
  try {
    parse_expr("x1 & & x2");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5U);
  }
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("(x1"), ParseError);
  EXPECT_THROW(parse_expr("x0"), ParseError);
  EXPECT_THROW(parse_expr("x1 x2"), ParseError);
  EXPECT_THROW(parse_expr("y1"), ParseError);
}

TEST(Expr, PrintParseRoundTrip) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 300; ++trial) {
    const auto e = random_expr(rng, 5, 5);
    EXPECT_EQ(parse_expr(to_string(e)), e) << to_string(e);
  }
}

TEST(SourceFormat, Names) {
  EXPECT_EQ(parse_source_format("dimacs-cnf"), SourceFormat::DimacsCnf);
  EXPECT_EQ(parse_source_format("ecnf-text"), SourceFormat::EcnfText);
  EXPECT_EQ(parse_source_format("expr"), SourceFormat::Expr);
  EXPECT_FALSE(parse_source_format("aig").has_value());
  EXPECT_EQ(format_from_extension("dir/a.cnf"), SourceFormat::DimacsCnf);
  EXPECT_EQ(format_from_extension("a.ecnf"), SourceFormat::EcnfText);
  EXPECT_EQ(format_from_extension("a.expr"), SourceFormat::Expr);
  EXPECT_FALSE(format_from_extension("a.txt").has_value());
}

#include <gtest/gtest.h>

#include <map>

#include <qsat/error.hpp>
#include <qsat/parser.hpp>
#include <qsat/transform.hpp>

#include "support/testing.hpp"

using namespace qsat;
using namespace qsat::testing;

namespace {

BoolExpr v(int i) { return BoolExpr::var(i); }

// Projects the models of a transformed formula onto the first n variables
// and counts how many extensions each projected model has.
template <typename Eval>
std::map<std::uint64_t, int> projected(int total_vars, int n, Eval eval) {
  std::map<std::uint64_t, int> out;
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << total_vars); ++x) {
    if (eval(x)) ++out[x & mask];
  }
  return out;
}

void expect_strong_equisat(const BoolExpr& e) {
  const auto t = tseitin_encode(e);
  const auto r = encode_ecnf(e);
  const int n = t.original_vars;
  ASSERT_EQ(n, e.max_var());
  ASSERT_EQ(r.original_vars, n);
  const auto want = ref_models(n, [&](std::uint64_t x) { return ref_expr(e, x); });

  for (const auto& [name, got] :
       {std::pair{"tseitin", projected(t.formula.num_vars, n, [&](std::uint64_t x) { return ref_cnf(t.formula, x); })},
        std::pair{"ecnf", projected(r.formula.num_vars, n, [&](std::uint64_t x) { return ref_ecnf(r.formula, x); })}}) {
    ASSERT_EQ(got.size(), want.size()) << name << ": " << to_string(e);
    for (const auto& [model, extensions] : got) {
      EXPECT_TRUE(want.count(model)) << name << ": " << to_string(e);
      EXPECT_EQ(extensions, 1) << name << ": " << to_string(e);
    }
  }
}

}  // namespace

TEST(Tseitin, AndDefinition) {
  const auto r = tseitin_encode(BoolExpr::iff(v(5), v(1) & !v(2)));
  EXPECT_TRUE(r.aux_vars.empty());
  EXPECT_EQ(r.formula, CnfFormula(5, {clause({-1, 2, 5}), clause({1, -5}), clause({-2, -5})}));
}

TEST(Tseitin, XorDefinition) {
  const auto r = tseitin_encode(BoolExpr::iff(v(3), v(1) ^ v(2)));
  EXPECT_EQ(r.formula,
            CnfFormula(3, {clause({-3, 1, 2}), clause({-3, -1, -2}), clause({3, -1, 2}), clause({3, 1, -2})}));
}

TEST(Tseitin, OrDefinition) {
  const auto r = tseitin_encode(BoolExpr::iff(v(3), v(1) | v(2)));
  EXPECT_EQ(r.formula, CnfFormula(3, {clause({3, -1}), clause({3, -2}), clause({-3, 1, 2})}));
}

TEST(Tseitin, SingleVariable) {
  const auto r = tseitin_encode(v(1));
  EXPECT_TRUE(r.aux_vars.empty());
  EXPECT_EQ(r.formula, CnfFormula(1, {clause({1})}));
  ASSERT_TRUE(r.root.has_value());
  EXPECT_EQ(*r.root, lit(1));
}

TEST(Tseitin, RootUnitClauseForNestedGate) {
  // x1 ^ (x2 & x3): p4 = x2 & x3, p5 = x1 ^ p4, asserted by (p5).
  const auto r = tseitin_encode(v(1) ^ (v(2) & v(3)));
  ASSERT_EQ(r.aux_vars.size(), 2U);
  EXPECT_EQ(r.aux_vars[0].var, 4);
  EXPECT_EQ(r.aux_vars[1].var, 5);
  EXPECT_EQ(r.formula.clauses.front(), clause({5}));
  EXPECT_EQ(r.formula.clauses.size(), 1U + 3U + 4U);
  EXPECT_EQ(*r.root, lit(5));
}

TEST(Tseitin, NotFoldsIntoPolarity) {
  const auto r = tseitin_encode(!(v(1) & v(2)));
  EXPECT_EQ(r.aux_vars.size(), 1U);
  EXPECT_EQ(*r.root, lit(-3));
}

TEST(Tseitin, Constants) {
  EXPECT_TRUE(tseitin_encode(BoolExpr::constant(true)).formula.clauses.empty());
  const auto f = tseitin_encode(v(1) & BoolExpr::constant(false));
  EXPECT_EQ(count_models(f.formula).count, 0U);
}

TEST(EquivalenceToEsop, PaperShapes) {
  using K = EquivalenceRhs::Kind;
  EXPECT_EQ(equivalence_to_esop(lit(3), {K::And, {lit(1), lit(-2)}}), EsopClause({mono({-3}), mono({1, -2})}));
  EXPECT_EQ(equivalence_to_esop(lit(3), {K::Or, {lit(1), lit(2)}}), EsopClause({mono({3}), mono({-1, -2})}));
  EXPECT_EQ(equivalence_to_esop(lit(3), {K::Xor, {lit(1), lit(2)}}),
            EsopClause({mono({}), mono({3}), mono({1}), mono({2})}));
  // Complemented operands fold into the constant.
  EXPECT_EQ(equivalence_to_esop(lit(3), {K::Xor, {lit(-1), lit(2)}}), EsopClause({mono({3}), mono({1}), mono({2})}));
}

TEST(EquivalenceToEsop, Semantics) {
  using K = EquivalenceRhs::Kind;
  for (K kind : {K::And, K::Or, K::Xor}) {
    for (int pa = 0; pa < 2; ++pa) {
      for (int pb = 0; pb < 2; ++pb) {
        for (int pp = 0; pp < 2; ++pp) {
          const Literal p{3, pp == 1};
          const Literal a{1, pa == 1};
          const Literal b{2, pb == 1};
          const auto c = equivalence_to_esop(p, {kind, {a, b}});
          for (std::uint64_t x = 0; x < 8; ++x) {
            const bool av = ref_literal(x, a);
            const bool bv = ref_literal(x, b);
            const bool rhs = kind == K::And ? (av && bv) : kind == K::Or ? (av || bv) : (av != bv);
            EXPECT_EQ(c.evaluate(Assignment::from_index(x, 3)), ref_literal(x, p) == rhs);
          }
        }
      }
    }
  }
}

TEST(ClauseToEsop, Shapes) {
  EXPECT_EQ(clause_to_esop(clause({1, 2, -3})), EsopClause({mono({}), mono({-1, -2, 3})}));
  EXPECT_EQ(clause_to_esop(clause({-2})), EsopClause({mono({-2})}));
  EXPECT_EQ(clause_to_esop(clause({1, -2, 3, -4})), EsopClause({mono({}), mono({-1, 2, -3, 4})}));
}

TEST(ExprToEcnf, FamilyShape) {
  const auto f = expr_to_ecnf(phi_family(2).phi);
  ASSERT_EQ(f.clauses.size(), 3U);
  EXPECT_EQ(f.num_vars, 6);
  EXPECT_EQ(f.clauses[0], EsopClause({mono({}), mono({-5, 6})}));
}

TEST(ExprToEcnf, SingleVariable) {
  const auto r = encode_ecnf(v(1));
  EXPECT_TRUE(r.aux_vars.empty());
  EXPECT_EQ(r.formula, EcnfFormula(1, {EsopClause({mono({1})})}));
}

TEST(CnfToEcnf, ClauseWise) {
  const auto e = cnf_to_ecnf(ex_cnf());
  ASSERT_EQ(e.clauses.size(), 2U);
  for (const auto& c : e.clauses) {
    ASSERT_EQ(c.monomials().size(), 2U);
    EXPECT_TRUE(c.monomials()[0].is_one());
  }
  EXPECT_TRUE(cnf_to_ecnf(CnfFormula(3, {})).clauses.empty());
}

TEST(CnfToEcnf, PreservesModelSet) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_cnf(rng, 1 + trial % 5, 6, 4);
    EXPECT_EQ(count_models(cnf_to_ecnf(f)).models, count_models(f).models);
  }
}

TEST(Equisatisfiability, HandPickedExpressions) {
  for (const char* text : {"x1", "!x1", "x1 & !x1", "x1 | !x1", "x1 <-> (x2 & !x3)", "(x1 & !x2) | !(x3 & x4)",
                           "x1 -> x2 -> x3", "x1 ^ x2 ^ x3", "x1 <-> x1 & x2", "x1 <-> (x2 | (x1 ^ x3))",
                           "!(x1 <-> x2) & (x2 | x3) & x1", "(x1 | x2) & (x1 | x2)", "x2 & 1 | 0"}) {
    SCOPED_TRACE(text);
    expect_strong_equisat(parse_expr(text));
  }
}

TEST(Equisatisfiability, RandomExpressions) {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 200; ++trial) {
    const auto e = random_expr(rng, 1 + trial % 5, 5);
    expect_strong_equisat(e);
  }
}

TEST(Growth, LinearInAstSize) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    const auto e = random_expr(rng, 5, 6);
    const auto t = tseitin_encode(e);
    const int nodes = e.internal_nodes();
    EXPECT_LE(static_cast<int>(t.aux_vars.size()), std::max(1, nodes)) << to_string(e);
    // A bare constant 0 still needs its two contradictory unit clauses.
    EXPECT_LE(static_cast<int>(t.formula.clauses.size()), 4 * std::max(1, nodes) + 1) << to_string(e);
    for (const auto& a : t.aux_vars) {
      EXPECT_GT(a.var, t.original_vars);
      bool used = false;
      for (const auto& c : t.formula.clauses) {
        for (const auto& l : c.literals()) used = used || l.var == a.var;
      }
      EXPECT_TRUE(used) << to_string(e);
    }
  }
}

TEST(PhiFamily, Structure) {
  for (int m = 2; m <= 6; ++m) {
    const auto fam = phi_family(m);
    EXPECT_EQ(fam.cnf.num_vars, 3 * m);
    EXPECT_EQ(fam.ecnf.num_vars, 3 * m);
    EXPECT_EQ(fam.cnf.clauses.size(), static_cast<std::size_t>(1 + 3 * m));
    EXPECT_EQ(fam.ecnf.clauses.size(), static_cast<std::size_t>(1 + m));
    EXPECT_EQ(fam.cnf.clauses.front().size(), static_cast<std::size_t>(m));
    // Wide clause (p1 | !p2 | p3 ..) becomes 1 ^ (!p1 & p2 & !p3 ..).
    const auto& top = fam.ecnf.clauses.front().monomials();
    ASSERT_EQ(top.size(), 2U);
    EXPECT_TRUE(top[0].is_one());
    for (int i = 1; i <= m; ++i) EXPECT_EQ(top[1].literals()[i - 1], (Literal{2 * m + i, i % 2 == 1}));
  }
  EXPECT_THROW(phi_family(0), InputError);
}

TEST(PhiFamily, EncodingsAgreeWithExpression) {
  for (int m = 2; m <= 4; ++m) {
    const auto fam = phi_family(m);
    const int n = 2 * m;
    const auto want = ref_models(n, [&](std::uint64_t x) { return ref_expr(fam.phi, x); });
    const auto cnf = projected(fam.cnf.num_vars, n, [&](std::uint64_t x) { return ref_cnf(fam.cnf, x); });
    const auto ecnf = projected(fam.ecnf.num_vars, n, [&](std::uint64_t x) { return ref_ecnf(fam.ecnf, x); });
    EXPECT_EQ(cnf.size(), want.size());
    EXPECT_EQ(ecnf.size(), want.size());
    for (const auto& [x, k] : ecnf) {
      EXPECT_TRUE(want.count(x));
      EXPECT_EQ(k, 1);
    }
    // Both encodings have exactly the same models, aux bits included.
    EXPECT_EQ(count_models(fam.cnf).models, count_models(fam.ecnf).models);
  }
}

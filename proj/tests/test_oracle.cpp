#include <gtest/gtest.h>

#include <qsat/error.hpp>
#include <qsat/mcx.hpp>
#include <qsat/oracle.hpp>
#include <qsat/statevector.hpp>
#include <qsat/transform.hpp>

#include "support/testing.hpp"

using namespace qsat;
using namespace qsat::testing;

namespace {

Gate pol(Gate g) { return g.with_role(GateRole::Polarity); }

// Runs the oracle on every input basis state with clean ancillas and checks
// the output is (-1)^F(x) |x>|0..0>.
template <typename Formula, typename Ref>
void expect_phase_oracle(const Formula& f, const Circuit& c, Ref ref) {
  const int n = f.num_vars;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const auto s = run(c, x);
    const double sign = ref(f, x) ? -1.0 : 1.0;
    ASSERT_NEAR(std::abs(s[x] - Amplitude{sign}), 0.0, 1e-12) << "input " << x;
  }
}

Circuit compute_only(const OracleCircuit& o) {
  Circuit c(o.registry());
  c.append(o.compute());
  return c;
}

}  // namespace

TEST(ClauseCnf, GateSequence) {
  const QubitRegistry reg(4, 2, 0);
  const Qubit y = reg.clause_ancilla(0);
  const auto gates = synthesize_clause_cnf(clause({1, 2, -3}), reg, y);
  const std::vector<Gate> want = {Gate::x(y),     pol(Gate::x(0)), pol(Gate::x(1)), Gate::mcx({{0}, {1}, {2}}, y),
                                  pol(Gate::x(0)), pol(Gate::x(1))};
  EXPECT_EQ(gates, want);
  const auto unit = synthesize_clause_cnf(clause({1}), reg, y);
  EXPECT_EQ(unit, (std::vector<Gate>{Gate::x(y), pol(Gate::x(0)), Gate::cx(0, y), pol(Gate::x(0))}));
}

TEST(ClauseCnf, ComputesClauseValue) {
  const QubitRegistry reg(3, 1, 0);
  const Clause c = clause({1, 2, -3});
  Circuit circ(reg);
  circ.append(std::span<const Gate>(synthesize_clause_cnf(c, reg, 3)));
  for (std::uint64_t x = 0; x < 8; ++x) {
    const auto s = run(circ, x);
    const std::uint64_t want = x | (c.evaluate(Assignment::from_index(x, 3)) ? 8U : 0U);
    EXPECT_EQ(s[want], Amplitude{1.0});
  }
}

TEST(ClauseEcnf, GateSequence) {
  const QubitRegistry reg(4, 2, 0);
  const Qubit y = reg.clause_ancilla(0);
  const auto gates = synthesize_clause_ecnf(ex_ecnf().clauses[0], reg, y);
  const std::vector<Gate> want = {Gate::cx(0, y), Gate::x(y), pol(Gate::x(2)), Gate::mcx({{1}, {2}}, y),
                                  pol(Gate::x(2))};
  EXPECT_EQ(gates, want);
  EXPECT_EQ(synthesize_clause_ecnf(EsopClause({Monomial::one()}), reg, y), std::vector<Gate>{Gate::x(y)});
}

TEST(ClauseEcnf, EquivalenceCostsSeventeen) {
  const QubitRegistry reg(3, 1, 0);
  const auto gates = synthesize_clause_ecnf(EsopClause({mono({-1}), mono({2, -3})}), reg, 3);
  Circuit c(reg);
  c.append(std::span<const Gate>(gates));
  EXPECT_EQ(count_gates(lower(c), AccountingMode::Paper).clifford_t(), 17);
  EXPECT_EQ(count_gates(lower(c), AccountingMode::Physical).clifford_t(), 19);
}

TEST(Oracle, ExCnfStructure) {
  const auto o = synthesize_oracle(ex_cnf());
  EXPECT_EQ(o.num_clauses, 2);
  EXPECT_EQ(o.registry().clause_ancillas(), 2);
  EXPECT_EQ(o.registry().pool_size(), 1);
  const auto phase = o.phase();
  ASSERT_EQ(phase.size(), 3U);
  EXPECT_EQ(phase[0], Gate::h(5).with_role(GateRole::Kickback));
  EXPECT_EQ(phase[1], Gate::cx(4, 5));
  EXPECT_EQ(phase[2], Gate::h(5).with_role(GateRole::Kickback));
}

TEST(Oracle, ExEcnfStructure) {
  const auto o = synthesize_oracle(ex_ecnf());
  EXPECT_EQ(o.registry().pool_size(), 0);
  EXPECT_EQ(o.compute().size(), 5U + 5U);
  EXPECT_EQ(o.phase().size(), 3U);
}

TEST(Oracle, UncomputeIsInverseOfCompute) {
  for (const auto& o : {synthesize_oracle(ex_cnf()), synthesize_oracle(ex_ecnf())}) {
    const auto inv = invert(o.compute());
    EXPECT_TRUE(std::equal(inv.begin(), inv.end(), o.uncompute().begin(), o.uncompute().end()));
  }
}

TEST(Oracle, PhaseTables) {
  expect_phase_oracle(ex_cnf(), synthesize_oracle(ex_cnf()).circuit, ref_cnf);
  expect_phase_oracle(ex_ecnf(), synthesize_oracle(ex_ecnf()).circuit, ref_ecnf);
  expect_phase_oracle(ex_cnf(), lowered(synthesize_oracle(ex_cnf())), ref_cnf);
  expect_phase_oracle(ex_ecnf(), lowered(synthesize_oracle(ex_ecnf())), ref_ecnf);
}

TEST(Oracle, ExCnfOnFirstBasisInput) {
  // (a1..a4) = (1,0,0,0) satisfies both clauses.
  const auto s = run(lowered(synthesize_oracle(ex_cnf())), 1);
  EXPECT_NEAR(std::abs(s[1] - Amplitude{-1.0}), 0.0, 1e-12);
}

TEST(Oracle, ExEcnfModelsFlipped) {
  const auto c = lowered(synthesize_oracle(ex_ecnf()));
  int flipped = 0;
  for (std::uint64_t x = 0; x < 16; ++x) {
    if (run(c, x)[x].real() < 0) ++flipped;
  }
  EXPECT_EQ(flipped, 4);
}

TEST(Oracle, SingleClauseUsesFourT) {
  const CnfFormula f(2, {clause({1, -2})});
  const auto o = synthesize_oracle(f);
  ASSERT_EQ(o.phase().size(), 4U);
  for (const auto& g : o.phase()) EXPECT_EQ(g, Gate::t(2));
  expect_phase_oracle(f, o.circuit, ref_cnf);
}

TEST(Oracle, TautologicalClause) {
  const CnfFormula f(1, {clause({1, -1})});
  const auto o = synthesize_oracle(f);
  EXPECT_EQ(o.compute().size(), 1U);
  expect_phase_oracle(f, o.circuit, ref_cnf);
}

TEST(Oracle, EmptyFormulaRejected) {
  EXPECT_THROW(synthesize_oracle(CnfFormula(2, {})), SynthesisError);
  EXPECT_THROW(synthesize_oracle(EcnfFormula(2, {})), SynthesisError);
}

TEST(Oracle, RandomFormulasPhaseAndHygiene) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    const auto f = random_cnf(rng, n, 4, 4);
    const auto e = random_ecnf(rng, n, 4, 3, 3);
    const auto oc = synthesize_oracle(f);
    const auto oe = synthesize_oracle(e);
    if (oc.registry().total() <= 16) expect_phase_oracle(f, lowered(oc), ref_cnf);
    if (oe.registry().total() <= 16) expect_phase_oracle(e, lowered(oe), ref_ecnf);
  }
}

TEST(Oracle, SelfInverse) {
  const auto o = lowered(synthesize_oracle(ex_ecnf()));
  Circuit twice = o;
  twice.append(o);
  for (std::uint64_t x = 0; x < 16; ++x) EXPECT_NEAR(std::abs(run(twice, x)[x] - Amplitude{1.0}), 0.0, 1e-12);
}

TEST(Oracle, ComputeLeavesClauseValues) {
  const auto f = ex_ecnf();
  const auto o = synthesize_oracle(f);
  const Circuit c = compute_only(o);
  for (std::uint64_t x = 0; x < 16; ++x) {
    std::uint64_t want = x;
    for (std::size_t k = 0; k < f.clauses.size(); ++k) {
      if (f.clauses[k].evaluate(Assignment::from_index(x, 4))) want |= std::uint64_t{1} << (4 + k);
    }
    EXPECT_EQ(run(c, x)[want], Amplitude{1.0});
  }
}

TEST(Oracle, FamilyPhase) {
  const auto fam = phi_family(2);
  expect_phase_oracle(fam.ecnf, lowered(synthesize_oracle(fam.ecnf)), ref_ecnf);
  expect_phase_oracle(fam.cnf, synthesize_oracle(fam.cnf).circuit, ref_cnf);
}

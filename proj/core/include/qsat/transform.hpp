#pragma once

// Encoding passes from Boolean expressions to clause form.
//
// Both encoders share the same front end: constants are folded away, the
// top-level conjunction is split into constraints, and every remaining
// operator node gets a fresh auxiliary variable p in post-order (Not nodes
// only flip literal polarity). A top-level constraint of the form
// `literal <-> gate` defines that literal directly instead of allocating a
// new proposition. The CNF back end writes each definition as Tseitin gate
// clauses; the e-CNF back end writes it as a single XOR clause.

#include <optional>
#include <vector>

#include "qsat/expr.hpp"
#include "qsat/formula.hpp"

namespace qsat {

struct AuxVar {
  int var;
  /// Sub-expression the variable stands for, over original variables.
  BoolExpr definition;
};

struct TseitinResult {
  CnfFormula formula;
  std::vector<AuxVar> aux_vars;
  /// Literal asserted by the final unit clause, when the whole expression
  /// reduces to a single proposition.
  std::optional<Literal> root;
  int original_vars = 0;
};

struct EcnfEncoding {
  EcnfFormula formula;
  std::vector<AuxVar> aux_vars;
  std::optional<Literal> root;
  int original_vars = 0;
};

TseitinResult tseitin_encode(const BoolExpr& e);

/// Right-hand side of `p <-> rhs`, with operands already reduced to literals.
struct EquivalenceRhs {
  enum class Kind { And, Or, Xor };
  Kind kind;
  std::vector<Literal> operands;
};

/// p <-> AND(l..)  =>  !p ^ (l & ..)
/// p <-> OR(l..)   =>  p ^ (!l & ..)
/// p <-> XOR(l..)  =>  1 ^ p ^ l ^ ..   (literal polarity folded into the constant)
EsopClause equivalence_to_esop(Literal p, const EquivalenceRhs& rhs);

/// (l1 | .. | ln)  =>  1 ^ (!l1 & .. & !ln); a unit clause maps to its literal.
EsopClause clause_to_esop(const Clause& c);

EcnfEncoding encode_ecnf(const BoolExpr& e);
EcnfFormula expr_to_ecnf(const BoolExpr& e);

/// Clause-wise clause_to_esop; the model set is preserved exactly.
EcnfFormula cnf_to_ecnf(const CnfFormula& f);

/// The m-group family phi = g1 | g2 | .. | gm over inputs a1..a2m, where
/// odd groups are (a_{2i-1} & !a_{2i}) and even groups are !(a_{2i-1} & a_{2i}).
/// `cnf` defines p_i (variable 2m+i) with Tseitin AND clauses and keeps the
/// top-level disjunction as one wide clause; `ecnf` is its XOR rewriting.
struct PhiFamily {
  int m = 0;
  BoolExpr phi;
  CnfFormula cnf;
  EcnfFormula ecnf;
};

PhiFamily phi_family(int m);

}  // namespace qsat

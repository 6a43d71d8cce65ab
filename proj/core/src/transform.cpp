#include "qsat/transform.hpp"

#include <fmt/format.h>

#include "qsat/error.hpp"

namespace qsat {

namespace {

BoolExpr fold(const BoolExpr& e) {
  switch (e.op()) {
    case ExprOp::Var:
    case ExprOp::Const:
      return e;
    case ExprOp::Not: {
      BoolExpr x = fold(e.operand());
      if (x.op() == ExprOp::Const) return BoolExpr::constant(x.value() == 0);
      if (x.op() == ExprOp::Not) return x.operand();
      return BoolExpr::negation(std::move(x));
    }
    default:
      break;
  }
  BoolExpr a = fold(e.lhs());
  BoolExpr b = fold(e.rhs());
  const bool a_const = a.op() == ExprOp::Const;
  const bool b_const = b.op() == ExprOp::Const;
  if (a_const && b_const) {
    return BoolExpr::constant(eval_expr(BoolExpr::binary(e.op(), a, b), Assignment()));
  }
  if (!a_const && !b_const) return BoolExpr::binary(e.op(), std::move(a), std::move(b));

  const bool c = a_const ? a.value() != 0 : b.value() != 0;
  const BoolExpr& other = a_const ? b : a;
  auto negated = [](const BoolExpr& x) {
    return x.op() == ExprOp::Not ? x.operand() : BoolExpr::negation(x);
  };
  switch (e.op()) {
    case ExprOp::And:
      return c ? other : BoolExpr::constant(false);
    case ExprOp::Or:
      return c ? BoolExpr::constant(true) : other;
    case ExprOp::Xor:
      return c ? negated(other) : other;
    case ExprOp::Iff:
      return c ? other : negated(other);
    case ExprOp::Implies:
      if (a_const) return c ? other : BoolExpr::constant(true);
      return c ? BoolExpr::constant(true) : negated(other);
    default:
      return e;
  }
}

bool is_literal_expr(const BoolExpr& e) {
  if (e.op() == ExprOp::Var) return true;
  return e.op() == ExprOp::Not && is_literal_expr(e.operand());
}

Literal literal_of(const BoolExpr& e) {
  if (e.op() == ExprOp::Var) return Literal::positive(e.value());
  return !literal_of(e.operand());
}

// Strips Not nodes, reporting their parity.
const BoolExpr& strip_negations(const BoolExpr& e, bool& negated) {
  const BoolExpr* cur = &e;
  while (cur->op() == ExprOp::Not) {
    negated = !negated;
    cur = &cur->operand();
  }
  return *cur;
}

void flatten(const BoolExpr& e, ExprOp op, std::vector<BoolExpr>& out) {
  if (e.op() == op) {
    flatten(e.lhs(), op, out);
    flatten(e.rhs(), op, out);
  } else {
    out.push_back(e);
  }
}

EquivalenceRhs gate_rhs(ExprOp op, Literal a, Literal b) {
  switch (op) {
    case ExprOp::And:
      return {EquivalenceRhs::Kind::And, {a, b}};
    case ExprOp::Or:
      return {EquivalenceRhs::Kind::Or, {a, b}};
    case ExprOp::Xor:
      return {EquivalenceRhs::Kind::Xor, {a, b}};
    case ExprOp::Iff:
      return {EquivalenceRhs::Kind::Xor, {!a, b}};
    case ExprOp::Implies:
      return {EquivalenceRhs::Kind::Or, {!a, b}};
    default:
      throw SynthesisError("not a gate operator");
  }
}

struct Definition {
  Literal out;
  EquivalenceRhs rhs;
};

// Constraint in emission order: either a disjunction of literals or a
// top-level definition.
struct Constraint {
  std::optional<std::vector<Literal>> clause;
  std::optional<Definition> definition;
};

struct Network {
  int original_vars = 0;
  int num_vars = 0;
  std::vector<Constraint> constraints;
  std::vector<Definition> definitions;
  std::vector<AuxVar> aux_vars;
  std::optional<Literal> root;
};

class NetworkBuilder {
 public:
  Network build(const BoolExpr& input) {
    net_.original_vars = input.max_var();
    net_.num_vars = net_.original_vars;
    const BoolExpr e = fold(input);

    if (e.op() == ExprOp::Const) {
      if (e.value() == 0) {
        const int p = fresh(e);
        net_.constraints.push_back({std::vector<Literal>{Literal::positive(p)}, std::nullopt});
        net_.constraints.push_back({std::vector<Literal>{Literal::negative(p)}, std::nullopt});
      }
      return std::move(net_);
    }

    std::vector<BoolExpr> conjuncts;
    flatten(e, ExprOp::And, conjuncts);
    for (const auto& c : conjuncts) add_conjunct(c);

    if (net_.constraints.size() == 1 && net_.constraints.front().clause &&
        net_.constraints.front().clause->size() == 1) {
      net_.root = net_.constraints.front().clause->front();
    }
    return std::move(net_);
  }

 private:
  int fresh(const BoolExpr& definition) {
    const int p = ++net_.num_vars;
    net_.aux_vars.push_back(AuxVar{p, definition});
    return p;
  }

  Literal lower(const BoolExpr& e) {
    if (e.op() == ExprOp::Var) return Literal::positive(e.value());
    if (e.op() == ExprOp::Not) return !lower(e.operand());
    if (!e.is_binary()) throw SynthesisError("constant left after folding");
    const Literal a = lower(e.lhs());
    const Literal b = lower(e.rhs());
    const int p = fresh(e);
    net_.definitions.push_back(Definition{Literal::positive(p), gate_rhs(e.op(), a, b)});
    return Literal::positive(p);
  }

  // `lit <-> gate` where lit's variable is not a direct operand of the gate.
  std::optional<std::pair<Literal, const BoolExpr*>> direct_definition(const BoolExpr& c) {
    if (c.op() != ExprOp::Iff) return std::nullopt;
    for (int side = 0; side < 2; ++side) {
      const BoolExpr& lit_side = side == 0 ? c.lhs() : c.rhs();
      const BoolExpr& gate_side = side == 0 ? c.rhs() : c.lhs();
      if (!is_literal_expr(lit_side)) continue;
      bool negated = false;
      const BoolExpr& gate = strip_negations(gate_side, negated);
      if (!gate.is_binary()) continue;
      Literal out = literal_of(lit_side);
      for (const BoolExpr* operand : {&gate.lhs(), &gate.rhs()}) {
        if (is_literal_expr(*operand) && literal_of(*operand).var == out.var) return std::nullopt;
      }
      if (negated) out = !out;
      return std::make_pair(out, &gate);
    }
    return std::nullopt;
  }

  void add_conjunct(const BoolExpr& c) {
    if (auto def = direct_definition(c)) {
      const BoolExpr& gate = *def->second;
      const Literal a = lower(gate.lhs());
      const Literal b = lower(gate.rhs());
      net_.constraints.push_back({std::nullopt, Definition{def->first, gate_rhs(gate.op(), a, b)}});
      return;
    }
    std::vector<BoolExpr> disjuncts;
    flatten(c, ExprOp::Or, disjuncts);
    std::vector<Literal> lits;
    lits.reserve(disjuncts.size());
    for (const auto& d : disjuncts) lits.push_back(lower(d));
    net_.constraints.push_back({std::move(lits), std::nullopt});
  }

  Network net_;
};

void push_clause(std::vector<Clause>& out, std::vector<Literal> lits) {
  if (auto c = Clause::simplified(std::move(lits))) out.push_back(std::move(*c));
}

void gate_clauses(const Definition& d, std::vector<Clause>& out) {
  const Literal p = d.out;
  const auto& ops = d.rhs.operands;
  switch (d.rhs.kind) {
    case EquivalenceRhs::Kind::And: {
      std::vector<Literal> big;
      for (const auto& a : ops) big.push_back(!a);
      big.push_back(p);
      push_clause(out, std::move(big));
      for (const auto& a : ops) push_clause(out, {a, !p});
      break;
    }
    case EquivalenceRhs::Kind::Or: {
      for (const auto& a : ops) push_clause(out, {p, !a});
      std::vector<Literal> big{!p};
      big.insert(big.end(), ops.begin(), ops.end());
      push_clause(out, std::move(big));
      break;
    }
    case EquivalenceRhs::Kind::Xor: {
      if (ops.size() != 2) throw SynthesisError("CNF XOR definitions take exactly two operands");
      const Literal a = ops[0];
      const Literal b = ops[1];
      push_clause(out, {!p, a, b});
      push_clause(out, {!p, !a, !b});
      push_clause(out, {p, !a, b});
      push_clause(out, {p, a, !b});
      break;
    }
  }
}

}  // namespace

TseitinResult tseitin_encode(const BoolExpr& e) {
  Network net = NetworkBuilder().build(e);
  std::vector<Clause> clauses;
  for (const auto& c : net.constraints) {
    if (c.clause) {
      push_clause(clauses, *c.clause);
    } else {
      gate_clauses(*c.definition, clauses);
    }
  }
  for (const auto& d : net.definitions) gate_clauses(d, clauses);
  return TseitinResult{CnfFormula(net.num_vars, std::move(clauses)), std::move(net.aux_vars), net.root,
                       net.original_vars};
}

EsopClause equivalence_to_esop(Literal p, const EquivalenceRhs& rhs) {
  if (rhs.operands.empty()) throw SynthesisError("equivalence right-hand side has no operands");
  std::vector<Monomial> terms;
  switch (rhs.kind) {
    case EquivalenceRhs::Kind::And: {
      terms.push_back(Monomial::literal(!p));
      if (auto m = Monomial::product(rhs.operands)) terms.push_back(std::move(*m));
      break;
    }
    case EquivalenceRhs::Kind::Or: {
      terms.push_back(Monomial::literal(p));
      std::vector<Literal> negated;
      for (const auto& a : rhs.operands) negated.push_back(!a);
      if (auto m = Monomial::product(std::move(negated))) terms.push_back(std::move(*m));
      break;
    }
    case EquivalenceRhs::Kind::Xor: {
      bool constant = !p.negated;
      for (const auto& a : rhs.operands) constant ^= a.negated;
      if (constant) terms.push_back(Monomial::one());
      terms.push_back(Monomial::literal(Literal::positive(p.var)));
      for (const auto& a : rhs.operands) terms.push_back(Monomial::literal(Literal::positive(a.var)));
      break;
    }
  }
  return EsopClause(std::move(terms));
}

EsopClause clause_to_esop(const Clause& c) {
  if (c.size() == 1) return EsopClause({Monomial::literal(c.literals().front())});
  std::vector<Literal> negated;
  negated.reserve(c.size());
  for (const auto& l : c.literals()) negated.push_back(!l);
  std::vector<Monomial> terms{Monomial::one()};
  if (auto m = Monomial::product(std::move(negated))) terms.push_back(std::move(*m));
  return EsopClause(std::move(terms));
}

EcnfEncoding encode_ecnf(const BoolExpr& e) {
  Network net = NetworkBuilder().build(e);
  std::vector<EsopClause> clauses;
  for (const auto& c : net.constraints) {
    if (c.clause) {
      if (auto clause = Clause::simplified(*c.clause)) clauses.push_back(clause_to_esop(*clause));
    } else {
      clauses.push_back(equivalence_to_esop(c.definition->out, c.definition->rhs));
    }
  }
  for (const auto& d : net.definitions) clauses.push_back(equivalence_to_esop(d.out, d.rhs));
  return EcnfEncoding{EcnfFormula(net.num_vars, std::move(clauses)), std::move(net.aux_vars), net.root,
                      net.original_vars};
}

EcnfFormula expr_to_ecnf(const BoolExpr& e) { return encode_ecnf(e).formula; }

EcnfFormula cnf_to_ecnf(const CnfFormula& f) {
  std::vector<EsopClause> clauses;
  clauses.reserve(f.clauses.size());
  for (const auto& c : f.clauses) clauses.push_back(clause_to_esop(c));
  return EcnfFormula(f.num_vars, std::move(clauses));
}

PhiFamily phi_family(int m) {
  if (m < 1) throw InputError(fmt::format("phi family needs at least one group, got {}", m));
  const int n = 2 * m;
  auto a = [](int i) { return Literal::positive(i); };
  auto p = [n](int i) { return Literal::positive(n + i); };

  std::optional<BoolExpr> phi;
  std::vector<Literal> top;
  std::vector<Definition> defs;
  for (int i = 1; i <= m; ++i) {
    const bool odd = i % 2 == 1;
    const BoolExpr lhs = BoolExpr::var(2 * i - 1);
    const BoolExpr rhs = BoolExpr::var(2 * i);
    const BoolExpr group = odd ? (lhs & !rhs) : !(lhs & rhs);
    phi = phi ? (*phi | group) : group;

    const Literal second = odd ? !a(2 * i) : a(2 * i);
    top.push_back(odd ? p(i) : !p(i));
    defs.push_back(Definition{p(i), {EquivalenceRhs::Kind::And, {a(2 * i - 1), second}}});
  }

  std::vector<Clause> cnf_clauses{Clause(top)};
  std::vector<EsopClause> ecnf_clauses{clause_to_esop(Clause(top))};
  for (const auto& d : defs) {
    gate_clauses(d, cnf_clauses);
    ecnf_clauses.push_back(equivalence_to_esop(d.out, d.rhs));
  }
  return PhiFamily{m, *phi, CnfFormula(n + m, std::move(cnf_clauses)),
                   EcnfFormula(n + m, std::move(ecnf_clauses))};
}

}  // namespace qsat

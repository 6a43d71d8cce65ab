#pragma once

#include <memory>
#include <string>

#include "qsat/formula.hpp"

namespace qsat {

enum class ExprOp { Var, Const, Not, And, Or, Xor, Iff, Implies };

/// Immutable Boolean expression tree. Nodes are shared, so copies are cheap.
class BoolExpr {
 public:
  static BoolExpr var(int index);
  static BoolExpr constant(bool value);
  static BoolExpr negation(BoolExpr operand);
  static BoolExpr binary(ExprOp op, BoolExpr lhs, BoolExpr rhs);

  static BoolExpr conj(BoolExpr a, BoolExpr b) { return binary(ExprOp::And, std::move(a), std::move(b)); }
  static BoolExpr disj(BoolExpr a, BoolExpr b) { return binary(ExprOp::Or, std::move(a), std::move(b)); }
  static BoolExpr exclusive(BoolExpr a, BoolExpr b) { return binary(ExprOp::Xor, std::move(a), std::move(b)); }
  static BoolExpr iff(BoolExpr a, BoolExpr b) { return binary(ExprOp::Iff, std::move(a), std::move(b)); }
  static BoolExpr implies(BoolExpr a, BoolExpr b) { return binary(ExprOp::Implies, std::move(a), std::move(b)); }

  ExprOp op() const { return node_->op; }
  /// Variable index for Var, 0/1 for Const.
  int value() const { return node_->value; }
  bool is_binary() const;
  const BoolExpr& lhs() const;
  const BoolExpr& rhs() const;
  /// Operand of a Not node.
  const BoolExpr& operand() const { return lhs(); }

  /// Largest variable index, 0 if there are none.
  int max_var() const;
  /// Number of Not and binary nodes.
  int internal_nodes() const;
  int depth() const;

  friend bool operator==(const BoolExpr& a, const BoolExpr& b);

 private:
  struct Node {
    ExprOp op;
    int value = 0;
    std::shared_ptr<const BoolExpr> lhs;
    std::shared_ptr<const BoolExpr> rhs;
  };
  explicit BoolExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

BoolExpr operator!(BoolExpr e);
BoolExpr operator&(BoolExpr a, BoolExpr b);
BoolExpr operator|(BoolExpr a, BoolExpr b);
BoolExpr operator^(BoolExpr a, BoolExpr b);

/// Standard semantics; Iff is XNOR and Implies is !a | b.
bool eval_expr(const BoolExpr& e, const Assignment& a);

/// Renders in the textual grammar accepted by parse_expr, fully parenthesized
/// where precedence would otherwise change the tree.
std::string to_string(const BoolExpr& e);

}  // namespace qsat

#include "qsat/expr.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "qsat/error.hpp"

namespace qsat {

BoolExpr BoolExpr::var(int index) {
  if (index < 1) throw InputError(fmt::format("variable index {} must be >= 1", index));
  return BoolExpr(std::make_shared<const Node>(Node{ExprOp::Var, index, nullptr, nullptr}));
}

BoolExpr BoolExpr::constant(bool value) {
  return BoolExpr(std::make_shared<const Node>(Node{ExprOp::Const, value ? 1 : 0, nullptr, nullptr}));
}

BoolExpr BoolExpr::negation(BoolExpr operand) {
  return BoolExpr(std::make_shared<const Node>(
      Node{ExprOp::Not, 0, std::make_shared<const BoolExpr>(std::move(operand)), nullptr}));
}

BoolExpr BoolExpr::binary(ExprOp op, BoolExpr lhs, BoolExpr rhs) {
  if (op == ExprOp::Var || op == ExprOp::Const || op == ExprOp::Not) {
    throw InputError("binary node requires a binary operator");
  }
  return BoolExpr(std::make_shared<const Node>(Node{op, 0, std::make_shared<const BoolExpr>(std::move(lhs)),
                                                    std::make_shared<const BoolExpr>(std::move(rhs))}));
}

bool BoolExpr::is_binary() const {
  switch (op()) {
    case ExprOp::And:
    case ExprOp::Or:
    case ExprOp::Xor:
    case ExprOp::Iff:
    case ExprOp::Implies:
      return true;
    default:
      return false;
  }
}

const BoolExpr& BoolExpr::lhs() const {
  if (!node_->lhs) throw InputError("leaf expression has no operands");
  return *node_->lhs;
}

const BoolExpr& BoolExpr::rhs() const {
  if (!node_->rhs) throw InputError("expression has no right operand");
  return *node_->rhs;
}

int BoolExpr::max_var() const {
  switch (op()) {
    case ExprOp::Var:
      return value();
    case ExprOp::Const:
      return 0;
    case ExprOp::Not:
      return operand().max_var();
    default:
      return std::max(lhs().max_var(), rhs().max_var());
  }
}

int BoolExpr::internal_nodes() const {
  switch (op()) {
    case ExprOp::Var:
    case ExprOp::Const:
      return 0;
    case ExprOp::Not:
      return 1 + operand().internal_nodes();
    default:
      return 1 + lhs().internal_nodes() + rhs().internal_nodes();
  }
}

int BoolExpr::depth() const {
  switch (op()) {
    case ExprOp::Var:
    case ExprOp::Const:
      return 0;
    case ExprOp::Not:
      return 1 + operand().depth();
    default:
      return 1 + std::max(lhs().depth(), rhs().depth());
  }
}

bool operator==(const BoolExpr& a, const BoolExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.value() != b.value()) return false;
  if (a.op() == ExprOp::Not) return a.operand() == b.operand();
  if (a.is_binary()) return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  return true;
}

BoolExpr operator!(BoolExpr e) { return BoolExpr::negation(std::move(e)); }
BoolExpr operator&(BoolExpr a, BoolExpr b) { return BoolExpr::conj(std::move(a), std::move(b)); }
BoolExpr operator|(BoolExpr a, BoolExpr b) { return BoolExpr::disj(std::move(a), std::move(b)); }
BoolExpr operator^(BoolExpr a, BoolExpr b) { return BoolExpr::exclusive(std::move(a), std::move(b)); }

bool eval_expr(const BoolExpr& e, const Assignment& a) {
  switch (e.op()) {
    case ExprOp::Var:
      return a.value(e.value());
    case ExprOp::Const:
      return e.value() != 0;
    case ExprOp::Not:
      return !eval_expr(e.operand(), a);
    case ExprOp::And:
      return eval_expr(e.lhs(), a) && eval_expr(e.rhs(), a);
    case ExprOp::Or:
      return eval_expr(e.lhs(), a) || eval_expr(e.rhs(), a);
    case ExprOp::Xor:
      return eval_expr(e.lhs(), a) != eval_expr(e.rhs(), a);
    case ExprOp::Iff:
      return eval_expr(e.lhs(), a) == eval_expr(e.rhs(), a);
    case ExprOp::Implies:
      return !eval_expr(e.lhs(), a) || eval_expr(e.rhs(), a);
  }
  return false;
}

namespace {

// Binding strength in the text grammar; larger binds tighter.
int precedence(ExprOp op) {
  switch (op) {
    case ExprOp::Iff:
      return 1;
    case ExprOp::Implies:
      return 2;
    case ExprOp::Xor:
      return 3;
    case ExprOp::Or:
      return 4;
    case ExprOp::And:
      return 5;
    default:
      return 6;
  }
}

const char* symbol(ExprOp op) {
  switch (op) {
    case ExprOp::And:
      return "&";
    case ExprOp::Or:
      return "|";
    case ExprOp::Xor:
      return "^";
    case ExprOp::Iff:
      return "<->";
    case ExprOp::Implies:
      return "->";
    default:
      return "?";
  }
}

std::string render(const BoolExpr& e) {
  switch (e.op()) {
    case ExprOp::Var:
      return fmt::format("x{}", e.value());
    case ExprOp::Const:
      return e.value() ? "1" : "0";
    case ExprOp::Not: {
      const auto& sub = e.operand();
      if (sub.is_binary()) return "!(" + render(sub) + ")";
      return "!" + render(sub);
    }
    default: {
      const int p = precedence(e.op());
      // Left-associative: the left child may share our precedence, the right may not.
      std::string l = render(e.lhs());
      std::string r = render(e.rhs());
      if (e.lhs().is_binary() && precedence(e.lhs().op()) < p) l = "(" + l + ")";
      if (e.rhs().is_binary() && precedence(e.rhs().op()) <= p) r = "(" + r + ")";
      return fmt::format("{} {} {}", l, symbol(e.op()), r);
    }
  }
}

}  // namespace

std::string to_string(const BoolExpr& e) { return render(e); }

}  // namespace qsat

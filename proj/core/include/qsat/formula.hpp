#pragma once

// Clause-level formula representations: CNF (AND of OR-clauses) and e-CNF
// (AND of XOR-of-products clauses), plus evaluation and exhaustive model
// counting. Variables are 1-based as in DIMACS; bit i of a packed
// assignment index corresponds to variable i+1.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsat {

struct Literal {
  int var = 1;
  bool negated = false;

  static Literal positive(int var);
  static Literal negative(int var);
  /// Signed DIMACS integer: +v or -v. Zero is rejected.
  static Literal from_dimacs(int value);

  int dimacs() const { return negated ? -var : var; }
  Literal operator!() const { return Literal{var, !negated}; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Truth assignment over variables 1..size().
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> bits) : bits_(std::move(bits)) {}

  /// Bit i of `packed` becomes the value of variable i+1.
  static Assignment from_index(std::uint64_t packed, int num_vars);

  int size() const { return static_cast<int>(bits_.size()); }
  bool value(int var) const;
  bool value(const Literal& lit) const { return value(lit.var) != lit.negated; }

 private:
  std::vector<bool> bits_;
};

/// Disjunction of literals. Non-empty and free of repeated (var, polarity)
/// pairs; a clause may still contain x and !x (tautology).
class Clause {
 public:
  explicit Clause(std::vector<Literal> literals);

  /// Drops repeated literals; returns nullopt if the clause is a tautology.
  static std::optional<Clause> simplified(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool is_tautology() const;
  bool evaluate(const Assignment& a) const;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
};

/// Conjunction of literals on distinct variables, or the constant 1.
class Monomial {
 public:
  static Monomial one();
  /// Throws InputError on a repeated literal or an empty list. Returns
  /// nullopt when the product is constant 0 (x and !x both present).
  static std::optional<Monomial> make(std::vector<Literal> literals);
  /// Like make(), but repeated literals are merged instead of rejected.
  static std::optional<Monomial> product(std::vector<Literal> literals);
  static Monomial literal(Literal lit);

  bool is_one() const { return literals_.empty(); }
  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t degree() const { return literals_.size(); }
  bool evaluate(const Assignment& a) const;

  /// Same product, irrespective of literal order.
  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  Monomial() = default;
  explicit Monomial(std::vector<Literal> lits) : literals_(std::move(lits)) {}
  std::vector<Literal> literals_;
};

/// XOR of monomials. Held in normalized form: identical monomials cancel in
/// pairs, survivors keep their first-seen order, and the clause is non-empty.
class EsopClause {
 public:
  /// Throws InputError if every monomial cancels (the clause would be 0).
  explicit EsopClause(std::vector<Monomial> monomials);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool evaluate(const Assignment& a) const;

  /// XOR-cancels identical monomials; may return an empty list.
  static std::vector<Monomial> cancel_pairs(std::vector<Monomial> monomials);

  friend bool operator==(const EsopClause&, const EsopClause&) = default;

 private:
  std::vector<Monomial> monomials_;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  CnfFormula() = default;
  CnfFormula(int num_vars, std::vector<Clause> clauses);

  bool evaluate(const Assignment& a) const;
  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

struct EcnfFormula {
  int num_vars = 0;
  std::vector<EsopClause> clauses;

  EcnfFormula() = default;
  EcnfFormula(int num_vars, std::vector<EsopClause> clauses);

  bool evaluate(const Assignment& a) const;
  friend bool operator==(const EcnfFormula&, const EcnfFormula&) = default;
};

bool eval_cnf(const CnfFormula& f, const Assignment& a);
bool eval_ecnf(const EcnfFormula& f, const Assignment& a);

/// Bit i of `x` is variable i+1; bits above num_vars are ignored. No checks.
bool evaluate_packed(const CnfFormula& f, std::uint64_t x);
bool evaluate_packed(const EcnfFormula& f, std::uint64_t x);

inline constexpr int kDefaultBruteForceCap = 24;

struct ModelSet {
  std::uint64_t count = 0;
  /// Packed assignments (bit i = variable i+1), ascending.
  std::vector<std::uint64_t> models;
};

ModelSet count_models(const CnfFormula& f, int cap = kDefaultBruteForceCap);
ModelSet count_models(const EcnfFormula& f, int cap = kDefaultBruteForceCap);

std::string to_string(const Literal& lit);
std::string to_string(const Clause& c);
std::string to_string(const Monomial& m);
std::string to_string(const EsopClause& c);

}  // namespace qsat

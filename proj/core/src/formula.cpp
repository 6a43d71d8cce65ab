#include "qsat/formula.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "qsat/error.hpp"

namespace qsat {

Literal Literal::positive(int var) {
  if (var < 1) throw InputError(fmt::format("variable index {} must be >= 1", var));
  return Literal{var, false};
}

Literal Literal::negative(int var) {
  if (var < 1) throw InputError(fmt::format("variable index {} must be >= 1", var));
  return Literal{var, true};
}

Literal Literal::from_dimacs(int value) {
  if (value == 0) throw InputError("literal 0 is not a variable");
  return value > 0 ? positive(value) : negative(-value);
}

Assignment Assignment::from_index(std::uint64_t packed, int num_vars) {
  if (num_vars < 0 || num_vars > 64) {
    throw InputError(fmt::format("cannot unpack {} variables from a 64-bit index", num_vars));
  }
  std::vector<bool> bits(static_cast<std::size_t>(num_vars));
  for (int i = 0; i < num_vars; ++i) bits[i] = ((packed >> i) & 1U) != 0;
  return Assignment(std::move(bits));
}

bool Assignment::value(int var) const {
  if (var < 1 || var > size()) {
    throw InputError(fmt::format("variable {} outside assignment of length {}", var, size()));
  }
  return bits_[static_cast<std::size_t>(var - 1)];
}

// Clause ---------------------------------------------------------------------

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.empty()) throw InputError("clause must contain at least one literal");
  for (std::size_t i = 0; i < literals_.size(); ++i) {
    if (literals_[i].var < 1) throw InputError("variable index must be >= 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (literals_[i] == literals_[j]) {
        throw InputError(fmt::format("duplicate literal {} in clause", literals_[i].dimacs()));
      }
    }
  }
}

std::optional<Clause> Clause::simplified(std::vector<Literal> literals) {
  std::vector<Literal> kept;
  for (const auto& lit : literals) {
    if (std::find(kept.begin(), kept.end(), !lit) != kept.end()) return std::nullopt;
    if (std::find(kept.begin(), kept.end(), lit) == kept.end()) kept.push_back(lit);
  }
  return Clause(std::move(kept));
}

bool Clause::is_tautology() const {
  return std::any_of(literals_.begin(), literals_.end(), [&](const Literal& l) {
    return std::find(literals_.begin(), literals_.end(), !l) != literals_.end();
  });
}

bool Clause::evaluate(const Assignment& a) const {
  return std::any_of(literals_.begin(), literals_.end(),
                     [&](const Literal& l) { return a.value(l); });
}

// Monomial -------------------------------------------------------------------

Monomial Monomial::one() { return Monomial(); }

Monomial Monomial::literal(Literal lit) {
  if (lit.var < 1) throw InputError("variable index must be >= 1");
  return Monomial(std::vector<Literal>{lit});
}

std::optional<Monomial> Monomial::make(std::vector<Literal> literals) {
  if (literals.empty()) throw InputError("monomial must contain a literal or be the constant 1");
  bool contradictory = false;
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (literals[i].var < 1) throw InputError("variable index must be >= 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (literals[i] == literals[j]) {
        throw InputError(fmt::format("duplicate literal {} in monomial", literals[i].dimacs()));
      }
      if (literals[i].var == literals[j].var) contradictory = true;
    }
  }
  if (contradictory) return std::nullopt;
  return Monomial(std::move(literals));
}

std::optional<Monomial> Monomial::product(std::vector<Literal> literals) {
  std::vector<Literal> kept;
  for (const auto& lit : literals) {
    if (std::find(kept.begin(), kept.end(), lit) == kept.end()) kept.push_back(lit);
  }
  return make(std::move(kept));
}

bool Monomial::evaluate(const Assignment& a) const {
  return std::all_of(literals_.begin(), literals_.end(),
                     [&](const Literal& l) { return a.value(l); });
}

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.literals_.size() != b.literals_.size()) return false;
  auto x = a.literals_;
  auto y = b.literals_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// EsopClause -----------------------------------------------------------------

std::vector<Monomial> EsopClause::cancel_pairs(std::vector<Monomial> monomials) {
  std::vector<Monomial> out;
  out.reserve(monomials.size());
  for (auto& m : monomials) {
    auto it = std::find(out.begin(), out.end(), m);
    if (it != out.end()) {
      out.erase(it);
    } else {
      out.push_back(std::move(m));
    }
  }
  return out;
}

EsopClause::EsopClause(std::vector<Monomial> monomials)
    : monomials_(cancel_pairs(std::move(monomials))) {
  if (monomials_.empty()) {
    throw InputError("ESOP clause is empty (all monomials cancel to constant 0)");
  }
}

bool EsopClause::evaluate(const Assignment& a) const {
  bool acc = false;
  for (const auto& m : monomials_) acc ^= m.evaluate(a);
  return acc;
}

// Formulas -------------------------------------------------------------------

namespace {

void check_range(int num_vars, const std::vector<Literal>& lits) {
  for (const auto& l : lits) {
    if (l.var > num_vars) {
      throw InputError(fmt::format("literal {} exceeds declared variable count {}", l.dimacs(), num_vars));
    }
  }
}

void check_length(int num_vars, const Assignment& a) {
  if (a.size() != num_vars) {
    throw InputError(fmt::format("assignment has {} values, formula has {} variables", a.size(), num_vars));
  }
}

bool packed_value(std::uint64_t x, const Literal& l) {
  return (((x >> (l.var - 1)) & 1U) != 0) != l.negated;
}

bool packed_eval_cnf(const CnfFormula& f, std::uint64_t x) {
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (const auto& l : c.literals()) sat = sat || packed_value(x, l);
    if (!sat) return false;
  }
  return true;
}

bool packed_eval_ecnf(const EcnfFormula& f, std::uint64_t x) {
  for (const auto& c : f.clauses) {
    bool acc = false;
    for (const auto& m : c.monomials()) {
      bool term = true;
      for (const auto& l : m.literals()) term = term && packed_value(x, l);
      acc ^= term;
    }
    if (!acc) return false;
  }
  return true;
}

template <typename Formula>
ModelSet enumerate(const Formula& f, int cap) {
  if (f.num_vars > cap) {
    throw CapacityError(fmt::format("model counting over {} variables exceeds the brute-force cap of {}",
                                    f.num_vars, cap));
  }
  if (f.num_vars > 62) throw CapacityError("model counting is limited to 62 variables");
  ModelSet out;
  const std::uint64_t space = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t x = 0; x < space; ++x) {
    if (evaluate_packed(f, x)) out.models.push_back(x);
  }
  out.count = out.models.size();
  return out;
}

}  // namespace

bool evaluate_packed(const CnfFormula& f, std::uint64_t x) { return packed_eval_cnf(f, x); }
bool evaluate_packed(const EcnfFormula& f, std::uint64_t x) { return packed_eval_ecnf(f, x); }

CnfFormula::CnfFormula(int n, std::vector<Clause> cs) : num_vars(n), clauses(std::move(cs)) {
  if (num_vars < 0) throw InputError("variable count must be non-negative");
  for (const auto& c : clauses) check_range(num_vars, c.literals());
}

bool CnfFormula::evaluate(const Assignment& a) const {
  check_length(num_vars, a);
  return std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) { return c.evaluate(a); });
}

EcnfFormula::EcnfFormula(int n, std::vector<EsopClause> cs) : num_vars(n), clauses(std::move(cs)) {
  if (num_vars < 0) throw InputError("variable count must be non-negative");
  for (const auto& c : clauses) {
    for (const auto& m : c.monomials()) check_range(num_vars, m.literals());
  }
}

bool EcnfFormula::evaluate(const Assignment& a) const {
  check_length(num_vars, a);
  return std::all_of(clauses.begin(), clauses.end(),
                     [&](const EsopClause& c) { return c.evaluate(a); });
}

bool eval_cnf(const CnfFormula& f, const Assignment& a) { return f.evaluate(a); }
bool eval_ecnf(const EcnfFormula& f, const Assignment& a) { return f.evaluate(a); }

ModelSet count_models(const CnfFormula& f, int cap) { return enumerate(f, cap); }
ModelSet count_models(const EcnfFormula& f, int cap) { return enumerate(f, cap); }

// Printing -------------------------------------------------------------------

std::string to_string(const Literal& lit) {
  return fmt::format("{}x{}", lit.negated ? "!" : "", lit.var);
}

std::string to_string(const Clause& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " | ";
    out += to_string(c.literals()[i]);
  }
  return out + ")";
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.degree(); ++i) {
    if (i) out += " & ";
    out += to_string(m.literals()[i]);
  }
  return out;
}

std::string to_string(const EsopClause& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.monomials().size(); ++i) {
    if (i) out += " ^ ";
    out += to_string(c.monomials()[i]);
  }
  return out + ")";
}

}  // namespace qsat

#pragma once

// Readers and writers for the three accepted source formats:
//
//   dimacs-cnf   c comment / p cnf <vars> <clauses> / signed ints ending in 0
//   ecnf-text    c comment / p ecnf <vars> <clauses> / one clause per line,
//                monomials split by '^', 'T' for the constant 1, ending in 0
//   expr         x<int>, 0, 1, ! & | ^ -> <-> and parentheses
//
// Readers throw ParseError carrying a 1-based line (or a byte offset for
// expr); writers emit the canonical form that the readers accept.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsat/expr.hpp"
#include "qsat/formula.hpp"

namespace qsat {

enum class SourceFormat { DimacsCnf, EcnfText, Expr };

std::string_view to_string(SourceFormat f);
/// Accepts "dimacs-cnf", "ecnf-text" and "expr".
std::optional<SourceFormat> parse_source_format(std::string_view name);
/// Guess from a file name: .cnf/.dimacs, .ecnf, .expr/.bool.
std::optional<SourceFormat> format_from_extension(std::string_view path);

CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

/// Monomials that are constant 0 (x & !x) are dropped; a note is appended to
/// `warnings` when provided.
EcnfFormula parse_ecnf(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string write_ecnf(const EcnfFormula& f);

BoolExpr parse_expr(std::string_view text);

}  // namespace qsat

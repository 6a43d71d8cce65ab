#include "qsat/parser.hpp"

#include <cctype>
#include <charconv>
#include <fmt/format.h>

#include "qsat/error.hpp"

namespace qsat {

std::string_view to_string(SourceFormat f) {
  switch (f) {
    case SourceFormat::DimacsCnf:
      return "dimacs-cnf";
    case SourceFormat::EcnfText:
      return "ecnf-text";
    case SourceFormat::Expr:
      return "expr";
  }
  return "?";
}

std::optional<SourceFormat> parse_source_format(std::string_view name) {
  if (name == "dimacs-cnf") return SourceFormat::DimacsCnf;
  if (name == "ecnf-text") return SourceFormat::EcnfText;
  if (name == "expr") return SourceFormat::Expr;
  return std::nullopt;
}

std::optional<SourceFormat> format_from_extension(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".cnf") || ends_with(".dimacs")) return SourceFormat::DimacsCnf;
  if (ends_with(".ecnf")) return SourceFormat::EcnfText;
  if (ends_with(".expr") || ends_with(".bool")) return SourceFormat::Expr;
  return std::nullopt;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-empty, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_ws(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front() != "c" && tokens.front().front() != 'c') {
      out.push_back(Line{number, std::move(tokens)});
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::optional<long long> to_int(std::string_view tok) {
  long long v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return v;
}

struct Header {
  int vars;
  int clauses;
};

Header parse_header(const Line& line, std::string_view kind) {
  const auto& t = line.tokens;
  if (t.size() != 4 || t[0] != "p" || t[1] != kind) {
    throw ParseError(fmt::format("line {}: expected header 'p {} <vars> <clauses>'", line.number, kind),
                     line.number);
  }
  auto vars = to_int(t[2]);
  auto clauses = to_int(t[3]);
  if (!vars || !clauses || *vars < 0 || *clauses < 0 || *vars > 1'000'000'000 || *clauses > 1'000'000'000) {
    throw ParseError(fmt::format("line {}: header counts must be non-negative integers", line.number),
                     line.number);
  }
  return Header{static_cast<int>(*vars), static_cast<int>(*clauses)};
}

Literal literal_in_range(long long value, int num_vars, std::size_t line) {
  if (value == 0 || value > num_vars || value < -static_cast<long long>(num_vars)) {
    throw ParseError(fmt::format("line {}: literal {} out of range for {} variables", line, value, num_vars),
                     line);
  }
  return Literal::from_dimacs(static_cast<int>(value));
}

void check_clause_count(const Header& h, std::size_t found, std::size_t line) {
  if (found != static_cast<std::size_t>(h.clauses)) {
    throw ParseError(fmt::format("header declares {} clauses but {} were read", h.clauses, found), line);
  }
}

}  // namespace

// DIMACS ---------------------------------------------------------------------

CnfFormula parse_dimacs(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty() || lines.front().tokens.front() != "p") {
    const std::size_t at = lines.empty() ? 1 : lines.front().number;
    throw ParseError(fmt::format("line {}: missing 'p cnf' header", at), at);
  }
  const Header header = parse_header(lines.front(), "cnf");

  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  std::size_t last_line = lines.front().number;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    last_line = line.number;
    for (auto tok : line.tokens) {
      if (tok == "p") throw ParseError(fmt::format("line {}: duplicate header", line.number), line.number);
      auto value = to_int(tok);
      if (!value) {
        throw ParseError(fmt::format("line {}: unexpected token '{}'", line.number, tok), line.number);
      }
      if (*value == 0) {
        if (pending.empty()) {
          throw ParseError(fmt::format("line {}: empty clause", line.number), line.number);
        }
        try {
          clauses.emplace_back(std::move(pending));
        } catch (const InputError& e) {
          throw ParseError(fmt::format("line {}: {}", line.number, e.what()), line.number);
        }
        pending.clear();
      } else {
        pending.push_back(literal_in_range(*value, header.vars, line.number));
      }
    }
  }
  if (!pending.empty()) {
    throw ParseError(fmt::format("line {}: clause is missing its terminating 0", last_line), last_line);
  }
  check_clause_count(header, clauses.size(), last_line);
  return CnfFormula(header.vars, std::move(clauses));
}

std::string write_dimacs(const CnfFormula& f) {
  std::string out = fmt::format("p cnf {} {}\n", f.num_vars, f.clauses.size());
  for (const auto& c : f.clauses) {
    for (const auto& l : c.literals()) out += fmt::format("{} ", l.dimacs());
    out += "0\n";
  }
  return out;
}

// e-CNF text -----------------------------------------------------------------

EcnfFormula parse_ecnf(std::string_view text, std::vector<std::string>* warnings) {
  const auto lines = content_lines(text);
  if (lines.empty() || lines.front().tokens.front() != "p") {
    const std::size_t at = lines.empty() ? 1 : lines.front().number;
    throw ParseError(fmt::format("line {}: missing 'p ecnf' header", at), at);
  }
  const Header header = parse_header(lines.front(), "ecnf");

  std::vector<EsopClause> clauses;
  std::size_t last_line = lines.front().number;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const std::size_t n = line.number;
    last_line = n;
    const auto& toks = line.tokens;
    if (toks.front() == "p") throw ParseError(fmt::format("line {}: duplicate header", n), n);
    if (toks.back() != "0") throw ParseError(fmt::format("line {}: clause must end with 0", n), n);
    if (toks.size() == 1) throw ParseError(fmt::format("line {}: empty clause", n), n);

    std::vector<Monomial> monomials;
    std::vector<Literal> lits;
    bool saw_one = false;
    bool in_term = false;
    auto close_term = [&] {
      if (!in_term) throw ParseError(fmt::format("line {}: empty monomial", n), n);
      if (saw_one) {
        monomials.push_back(Monomial::one());
      } else {
        std::optional<Monomial> m;
        try {
          m = Monomial::make(lits);
        } catch (const InputError& e) {
          throw ParseError(fmt::format("line {}: {}", n, e.what()), n);
        }
        if (m) {
          monomials.push_back(std::move(*m));
        } else if (warnings) {
          warnings->push_back(fmt::format("line {}: dropped constant-0 monomial", n));
        }
      }
      lits.clear();
      saw_one = false;
      in_term = false;
    };

    for (std::size_t k = 0; k + 1 < toks.size(); ++k) {
      const auto tok = toks[k];
      if (tok == "^") {
        close_term();
      } else if (tok == "T") {
        if (in_term) throw ParseError(fmt::format("line {}: 'T' must stand alone in its monomial", n), n);
        saw_one = true;
        in_term = true;
      } else if (auto v = to_int(tok); v && *v != 0) {
        if (saw_one) throw ParseError(fmt::format("line {}: 'T' must stand alone in its monomial", n), n);
        lits.push_back(literal_in_range(*v, header.vars, n));
        in_term = true;
      } else {
        throw ParseError(fmt::format("line {}: unknown token '{}'", n, tok), n);
      }
    }
    close_term();

    auto survivors = EsopClause::cancel_pairs(std::move(monomials));
    if (survivors.empty()) {
      throw ParseError(fmt::format("line {}: clause cancels to constant 0", n), n);
    }
    clauses.emplace_back(std::move(survivors));
  }
  check_clause_count(header, clauses.size(), last_line);
  return EcnfFormula(header.vars, std::move(clauses));
}

std::string write_ecnf(const EcnfFormula& f) {
  std::string out = fmt::format("p ecnf {} {}\n", f.num_vars, f.clauses.size());
  for (const auto& c : f.clauses) {
    bool first_term = true;
    for (const auto& m : c.monomials()) {
      if (!first_term) out += "^ ";
      first_term = false;
      if (m.is_one()) {
        out += "T ";
      } else {
        for (const auto& l : m.literals()) out += fmt::format("{} ", l.dimacs());
      }
    }
    out += "0\n";
  }
  return out;
}

// Expressions ----------------------------------------------------------------

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  BoolExpr parse() {
    BoolExpr e = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail(fmt::format("unexpected '{}'", text_[pos_]));
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(fmt::format("offset {}: {}", pos_, msg), 0, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  BoolExpr parse_iff() {
    BoolExpr e = parse_implies();
    while (accept("<->")) e = BoolExpr::iff(std::move(e), parse_implies());
    return e;
  }

  BoolExpr parse_implies() {
    BoolExpr e = parse_xor();
    while (accept("->")) e = BoolExpr::implies(std::move(e), parse_xor());
    return e;
  }

  BoolExpr parse_xor() {
    BoolExpr e = parse_or();
    while (accept("^")) e = BoolExpr::exclusive(std::move(e), parse_or());
    return e;
  }

  BoolExpr parse_or() {
    BoolExpr e = parse_and();
    while (accept("|")) e = BoolExpr::disj(std::move(e), parse_and());
    return e;
  }

  BoolExpr parse_and() {
    BoolExpr e = parse_unary();
    while (accept("&")) e = BoolExpr::conj(std::move(e), parse_unary());
    return e;
  }

  BoolExpr parse_unary() {
    if (accept("!")) return BoolExpr::negation(parse_unary());
    return parse_atom();
  }

  BoolExpr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BoolExpr e = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return e;
    }
    if (c == 'x') {
      const std::size_t start = ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto v = to_int(text_.substr(start, pos_ - start));
      if (!v || *v < 1 || *v > 1'000'000'000) {
        pos_ = start;
        fail("expected a positive variable index after 'x'");
      }
      return BoolExpr::var(static_cast<int>(*v));
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        fail("constants are 0 or 1");
      }
      return BoolExpr::constant(c == '1');
    }
    if (peek("->") || peek("<->")) fail("missing left operand");
    fail(fmt::format("unexpected '{}'", c));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BoolExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace qsat

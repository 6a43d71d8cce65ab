#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include <qsat/error.hpp>
#include <qsat/grover.hpp>
#include <qsat/mcx.hpp>
#include <qsat/oracle.hpp>
#include <qsat/qasm.hpp>
#include <qsat/resources.hpp>
#include <qsat/transform.hpp>

namespace qsat::cli {

std::optional<Encoding> parse_encoding(std::string_view s) {
  if (s == "cnf") return Encoding::Cnf;
  if (s == "ecnf") return Encoding::Ecnf;
  if (s == "both") return Encoding::Both;
  return std::nullopt;
}

std::optional<Emit> parse_emit(std::string_view s) {
  if (s == "qasm") return Emit::Qasm;
  if (s == "report-csv") return Emit::ReportCsv;
  if (s == "report-json") return Emit::ReportJson;
  if (s == "none") return Emit::None;
  return std::nullopt;
}

std::optional<AccountingMode> parse_accounting(std::string_view s) {
  if (s == "physical") return AccountingMode::Physical;
  if (s == "paper") return AccountingMode::Paper;
  return std::nullopt;
}

namespace {

struct UsageError : Error {
  using Error::Error;
};

// Raised when the pipeline's own output fails a self-check.
struct InvariantError : Error {
  using Error::Error;
};

struct Side {
  FormulaKind kind = FormulaKind::Cnf;
  Circuit unlowered;
  Circuit lowered;
  ResourceEstimate estimate;
  std::optional<GroverPlan> plan;
  std::optional<double> success;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(fmt::format("cannot read '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename Formula>
Side build(const Formula& f, FormulaKind kind, const RunConfig& cfg) {
  Side s;
  s.kind = kind;
  if (cfg.grover) {
    auto g = assemble_grover(f, cfg.models, cfg.iterations);
    s.plan = g.plan;
    s.unlowered = std::move(g.circuit);
    s.lowered = lower(s.unlowered);
    s.estimate = measure(s.lowered, cfg.accounting);
  } else {
    const auto o = synthesize_oracle(f);
    s.unlowered = o.circuit;
    s.lowered = lowered(o);
    s.estimate = measure_oracle(o, cfg.accounting);
  }
  if (s.lowered.has_mcx()) throw InvariantError("lowered circuit still contains MCX gates");
  if (cfg.simulate) {
    if (s.lowered.num_qubits() > cfg.sim_cap) {
      throw CapacityError(fmt::format("{} qubits exceed the simulation cap of {}", s.lowered.num_qubits(), cfg.sim_cap));
    }
    s.success = success_probability(run(s.lowered, 0, cfg.sim_cap), f);
  }
  return s;
}

void validate(const RunConfig& cfg, Encoding enc) {
  if (!cfg.grover && (cfg.simulate || cfg.iterations || cfg.models)) {
    throw UsageError("--simulate, --iterations and --models need --grover");
  }
  const bool report = cfg.emit == Emit::ReportCsv || cfg.emit == Emit::ReportJson;
  if (report && enc != Encoding::Both) throw UsageError("reports compare both encodings; pass --encoding both");
  if (cfg.emit == Emit::Qasm && enc == Encoding::Both) throw UsageError("--emit qasm needs a single encoding");
  if (cfg.sim_cap < 1) throw UsageError("--sim-cap must be positive");
}

std::vector<Side> build_sides(const RunConfig& cfg, SourceFormat format, Encoding enc, const std::string& text) {
  const bool want_cnf = enc != Encoding::Ecnf;
  const bool want_ecnf = enc != Encoding::Cnf;
  std::vector<Side> sides;
  switch (format) {
    case SourceFormat::DimacsCnf: {
      const auto f = parse_dimacs(text);
      if (want_cnf) sides.push_back(build(f, FormulaKind::Cnf, cfg));
      if (want_ecnf) sides.push_back(build(cnf_to_ecnf(f), FormulaKind::Ecnf, cfg));
      break;
    }
    case SourceFormat::EcnfText: {
      if (want_cnf) throw UsageError("an e-CNF input has no CNF side; use --encoding ecnf");
      sides.push_back(build(parse_ecnf(text), FormulaKind::Ecnf, cfg));
      break;
    }
    case SourceFormat::Expr: {
      const auto e = parse_expr(text);
      if (want_cnf) sides.push_back(build(tseitin_encode(e).formula, FormulaKind::Cnf, cfg));
      if (want_ecnf) sides.push_back(build(expr_to_ecnf(e), FormulaKind::Ecnf, cfg));
      break;
    }
  }
  return sides;
}

std::string qasm_artifact(const Side& s, const RunConfig& cfg) {
  const Circuit& c = cfg.allow_mcx ? s.unlowered : s.lowered;
  std::string text = emit_qasm(c, QasmOptions{cfg.allow_mcx});
  const auto summary = check_qasm(text);
  if (summary.register_size != c.num_qubits()) {
    throw InvariantError(fmt::format("QASM declares {} qubits, circuit has {}", summary.register_size, c.num_qubits()));
  }
  return text;
}

void summarize(const Side& s, std::ostream& log) {
  const auto& r = s.estimate;
  log << fmt::format("{}: #q={} #CX={} #T={} #D={} ({})\n", to_string(s.kind), r.qubits, r.cx, r.t, r.depth,
                     to_string(r.mode));
  if (s.plan) {
    const auto& p = *s.plan;
    log << fmt::format("{}: grover N={} M={} k={}\n", to_string(s.kind), p.N, p.M, p.k);
    if (p.over_half) log << fmt::format("{}: warning: M > N/2, amplification cannot help\n", to_string(s.kind));
  }
  if (s.success) {
    log << fmt::format("{}: success probability {:.9f} (expected {:.9f})\n", to_string(s.kind), *s.success,
                       s.plan->expected_success());
  }
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto format = cfg.format ? cfg.format : format_from_extension(cfg.input);
  if (!format) throw UsageError(fmt::format("cannot tell the format of '{}'; pass --format", cfg.input));
  const Encoding enc =
      cfg.encoding.value_or(*format == SourceFormat::DimacsCnf ? Encoding::Cnf : Encoding::Ecnf);
  validate(cfg, enc);

  const auto sides = build_sides(cfg, *format, enc, read_file(cfg.input));

  std::string artifact;
  if (cfg.emit == Emit::Qasm) {
    artifact = qasm_artifact(sides.front(), cfg);
  } else if (cfg.emit != Emit::None) {
    const auto name = std::filesystem::path(cfg.input).stem().string();
    const std::vector<ComparisonRow> rows{compare_estimates(name, sides[0].estimate, sides[1].estimate)};
    artifact = cfg.emit == Emit::ReportCsv ? to_csv(rows) : to_json(rows) + "\n";
  }

  if (cfg.emit != Emit::None) {
    if (cfg.output) {
      std::ofstream file(*cfg.output, std::ios::binary);
      if (!file || !(file << artifact)) throw UsageError(fmt::format("cannot write '{}'", *cfg.output));
    } else {
      out << artifact;
    }
  }
  std::ostream& log = cfg.emit != Emit::None && !cfg.output ? err : out;
  for (const auto& s : sides) summarize(s, log);
  return exit_code::kOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return execute(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_code::kParse;
  } catch (const UnsatError& e) {
    err << "unsatisfiable: " << e.what() << '\n';
    return exit_code::kUnsat;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return exit_code::kCapacity;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const SynthesisError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::kInternal;
  }
}

}  // namespace qsat::cli

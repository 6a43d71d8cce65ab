#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <qsat/circuit.hpp>
#include <qsat/parser.hpp>
#include <qsat/statevector.hpp>

namespace qsat::cli {

enum class Encoding { Cnf, Ecnf, Both };
enum class Emit { Qasm, ReportCsv, ReportJson, None };

std::optional<Encoding> parse_encoding(std::string_view s);
std::optional<Emit> parse_emit(std::string_view s);
std::optional<AccountingMode> parse_accounting(std::string_view s);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kUnsat = 2;
inline constexpr int kParse = 3;
inline constexpr int kCapacity = 4;
inline constexpr int kInternal = 5;
}  // namespace exit_code

struct RunConfig {
  std::string input;
  /// Guessed from the extension when unset.
  std::optional<SourceFormat> format;
  /// Unset means the input's own encoding: cnf for DIMACS, ecnf otherwise.
  std::optional<Encoding> encoding;
  AccountingMode accounting = AccountingMode::Physical;
  Emit emit = Emit::None;
  bool grover = false;
  /// Unset is auto: k from the model count.
  std::optional<std::uint64_t> iterations;
  std::optional<std::uint64_t> models;
  bool simulate = false;
  int sim_cap = kDefaultSimulatorCap;
  /// Artifact goes to stdout when unset.
  std::optional<std::string> output;
  /// Emit unlowered MCX gates as QASM comments.
  bool allow_mcx = false;
};

/// Runs the pipeline. The artifact goes to cfg.output or `out`; the summary
/// lines go to `out` unless the artifact is already there, then to `err`.
/// Errors are reported on `err` and mapped to exit_code values.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qsat::cli

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

using namespace qsat;

int main(int argc, char** argv) {
  CLI::App app{"Compile SAT formulas into Grover oracle circuits and compare CNF with e-CNF."};
  cli::RunConfig cfg;
  std::string format;
  std::string encoding;
  std::string accounting = "physical";
  std::string emit = "none";
  std::string iterations = "auto";
  std::uint64_t models = 0;
  std::string output;

  app.add_option("-i,--input", cfg.input, "Formula file (.cnf, .ecnf, .expr)")->required();
  app.add_option("-f,--format", format, "dimacs-cnf | ecnf-text | expr (default: from extension)");
  app.add_option("-e,--encoding", encoding, "cnf | ecnf | both (default: the input's own)");
  app.add_option("-a,--accounting", accounting, "physical | paper")->capture_default_str();
  app.add_option("--emit", emit, "qasm | report-csv | report-json | none")->capture_default_str();
  app.add_flag("--grover", cfg.grover, "Wrap the oracle in Grover iterations");
  app.add_option("--iterations", iterations, "auto | k")->capture_default_str();
  auto* models_opt = app.add_option("--models", models, "Model count M, skips brute-force counting");
  app.add_flag("--simulate", cfg.simulate, "Simulate the lowered Grover circuit from |0>");
  app.add_option("--sim-cap", cfg.sim_cap, "Largest simulated register")->envname("QSAT_SIM_CAP")->capture_default_str();
  auto* output_opt = app.add_option("-o,--output", output, "Artifact path (default: stdout)");
  app.add_flag("--allow-mcx", cfg.allow_mcx, "Emit unlowered MCX gates as QASM comments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::exit_code::kUsage;
  }

  auto bad = [](const std::string& what) {
    std::cerr << "error: " << what << '\n';
    return cli::exit_code::kUsage;
  };
  if (!format.empty()) {
    cfg.format = parse_source_format(format);
    if (!cfg.format) return bad("unknown --format '" + format + "'");
  }
  if (!encoding.empty()) {
    cfg.encoding = cli::parse_encoding(encoding);
    if (!cfg.encoding) return bad("unknown --encoding '" + encoding + "'");
  }
  const auto mode = cli::parse_accounting(accounting);
  if (!mode) return bad("unknown --accounting '" + accounting + "'");
  cfg.accounting = *mode;
  const auto em = cli::parse_emit(emit);
  if (!em) return bad("unknown --emit '" + emit + "'");
  cfg.emit = *em;
  if (iterations != "auto") {
    char* end = nullptr;
    const auto k = std::strtoull(iterations.c_str(), &end, 10);
    if (iterations.empty() || *end != '\0' || iterations.front() == '-') return bad("--iterations takes auto or a count");
    cfg.iterations = k;
  }
  if (models_opt->count() > 0) cfg.models = models;
  if (output_opt->count() > 0) cfg.output = output;

  return cli::run(cfg, std::cout, std::cerr);
}

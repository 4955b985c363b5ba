// Command orchestration and report rendering for the cellalg tool.

#ifndef CELLALG_CLI_HPP_
#define CELLALG_CLI_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "cellbasis.hpp"
#include "errors.hpp"
#include "crosscheck.hpp"
#include "exact.hpp"
#include "monoid.hpp"
#include "twist.hpp"
#include "verify.hpp"

namespace cellalg {

  enum class Command { analyze, twist, verify, export_tables };

  inline constexpr int exit_ok            = 0;
  inline constexpr int exit_input_error   = 1;
  inline constexpr int exit_check_failure = 2;

  class UsageError : public Error {
   public:
    using Error::Error;
  };

  struct RunConfig {
    Command                    command = Command::analyze;
    std::optional<Family>      family;
    std::size_t                n = 0;
    std::optional<std::string> cayley_path;
    std::optional<std::string> loops_path;
    FieldSpec                  field;
    std::optional<std::string> delta;
    std::optional<std::string> twist_file;
    std::optional<VerifyMode>  verify = VerifyMode::full;  // nullopt: off
    std::optional<std::string> report_path;
    std::size_t                cap = 5000;
    // D-class id -> custom group datum file.
    std::map<std::size_t, std::string> group_data;
    // export_tables only.
    std::optional<std::string> out_path;
    std::optional<std::string> loops_out_path;
  };

  // Throws UsageError on inconsistent options.
  void validate(RunConfig const& cfg);

  struct RunResult {
    int                    exit_code = exit_ok;
    nlohmann::ordered_json report;
    std::string            text;
  };

  // Runs a command. Input problems propagate as exceptions (exit code 1 in
  // the tool); failed mathematical checks are reported with exit code 2.
  RunResult run(RunConfig const& cfg);

  RunResult cmd_analyze(RunConfig const& cfg);
  RunResult cmd_twist(RunConfig const& cfg);
  RunResult cmd_verify(RunConfig const& cfg);
  RunResult cmd_export(RunConfig const& cfg);

  // Serialized report: two-space indented JSON with a trailing newline.
  std::string dump_report(nlohmann::ordered_json const& report);

  nlohmann::ordered_json analysis_json(MonoidCellDatum const& d, Analysis const& a);
  nlohmann::ordered_json dclasses_json(MonoidCellDatum const& d);
  nlohmann::ordered_json checks_json(std::vector<CheckResult> const& checks);
  nlohmann::ordered_json axioms_json(AxiomReport const& r, CellDatum const& d);
  nlohmann::ordered_json matrix_json(DenseMatrix const& m);

}  // namespace cellalg

#endif  // CELLALG_CLI_HPP_

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cellalg/cli.hpp"
#include "cellalg/errors.hpp"

namespace {

  using namespace cellalg;

  struct Options {
    std::string              family;
    std::size_t              n = 0;
    std::string              cayley;
    std::string              loops;
    std::string              field = "q";
    std::string              delta;
    std::string              twist_file;
    std::string              verify = "full";
    std::string              report;
    std::size_t              cap = 5000;
    std::vector<std::string> group_data;
    std::string              out;
    std::string              loops_out;
    bool                     quiet = false;
  };

  void add_source_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--family", o.family, "tfull, tpartial, syminv or jones")
        ->check(CLI::IsMember({"tfull", "tpartial", "syminv", "jones"}));
    cmd->add_option("--n", o.n, "family parameter");
    cmd->add_option("--cayley", o.cayley, "Cayley table JSON file");
    cmd->add_option("--loops", o.loops, "loop table JSON file for --cayley");
    cmd->add_option("--field", o.field, "q or fp:P");
    cmd->add_option("--cap", o.cap, "largest monoid accepted");
  }

  void add_analysis_options(CLI::App* cmd, Options& o) {
    add_source_options(cmd, o);
    cmd->add_option("--delta", o.delta, "loop twisting parameter");
    cmd->add_option("--twist-file", o.twist_file, "twisting table JSON file");
    cmd->add_option("--verify", o.verify, "full, generators or off")
        ->check(CLI::IsMember({"full", "generators", "off"}));
    cmd->add_option("--report", o.report, "write the JSON report here");
    cmd->add_option("--group-datum", o.group_data, "D:PATH custom cell datum for a D-class group");
    cmd->add_flag("--quiet", o.quiet, "suppress the text report");
  }

  std::optional<std::string> nonempty(std::string const& s) {
    return s.empty() ? std::nullopt : std::optional<std::string>(s);
  }

  RunConfig to_config(Command command, Options const& o) {
    RunConfig cfg;
    cfg.command = command;
    if (!o.family.empty()) {
      cfg.family = parse_family(o.family);
    }
    cfg.n              = o.n;
    cfg.cayley_path    = nonempty(o.cayley);
    cfg.loops_path     = nonempty(o.loops);
    cfg.field          = FieldSpec::parse(o.field);
    cfg.delta          = nonempty(o.delta);
    cfg.twist_file     = nonempty(o.twist_file);
    cfg.report_path    = nonempty(o.report);
    cfg.cap            = o.cap;
    cfg.out_path       = nonempty(o.out);
    cfg.loops_out_path = nonempty(o.loops_out);
    if (o.verify == "off") {
      cfg.verify = std::nullopt;
    } else {
      cfg.verify = o.verify == "full" ? VerifyMode::full : VerifyMode::generators;
    }
    for (auto const& spec : o.group_data) {
      auto colon = spec.find(':');
      if (colon == std::string::npos || colon == 0) {
        throw UsageError("--group-datum expects D:PATH, got " + spec);
      }
      std::size_t d = 0;
      try {
        d = std::stoul(spec.substr(0, colon));
      } catch (std::exception const&) {
        throw UsageError("--group-datum expects a numeric D-class id, got " + spec);
      }
      cfg.group_data[d] = spec.substr(colon + 1);
    }
    return cfg;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cell-algebra structure of finite monoid algebras"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "Gram matrices, quasi-heredity and semisimplicity");
  add_analysis_options(analyze, o);
  auto* twist = app.add_subcommand("twist", "the same analysis for a twisted monoid algebra");
  add_analysis_options(twist, o);
  auto* verify = app.add_subcommand("verify", "check the cell axioms on the standard datum");
  add_analysis_options(verify, o);
  auto* exp = app.add_subcommand("export", "write the Cayley table (and loop table) as JSON");
  add_source_options(exp, o);
  exp->add_option("--out", o.out, "Cayley table output file")->required();
  exp->add_option("--loops-out", o.loops_out, "loop table output file");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  Command command = Command::analyze;
  if (twist->parsed()) {
    command = Command::twist;
  } else if (verify->parsed()) {
    command = Command::verify;
  } else if (exp->parsed()) {
    command = Command::export_tables;
  }

  try {
    RunResult result = run(to_config(command, o));
    if (!o.quiet) {
      std::cout << result.text;
    }
    return result.exit_code;
  } catch (AxiomViolation const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_check_failure;
  } catch (IncompatibleTwisting const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_check_failure;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
}

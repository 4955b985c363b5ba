// Dual-path agreement checks run after an analysis: each result is stated
// two ways (or an implication is tested) and the outcome recorded.

#ifndef CELLALG_CROSSCHECK_HPP_
#define CELLALG_CROSSCHECK_HPP_

#include <string>
#include <vector>

#include "cellbasis.hpp"
#include "twist.hpp"

namespace cellalg {

  enum class CheckStatus { pass, fail, skipped };

  std::string check_status_name(CheckStatus s);

  struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
  };

  // Checks for R[M] with the analysis computed under the untwisted product.
  std::vector<CheckResult> cross_check(MonoidCellDatum const& d, Analysis const& a);

  // Checks for R^pi[M]; group-level implications only run for strongly
  // compatible twistings.
  std::vector<CheckResult> cross_check(TwistedCellDatum const& t, Analysis const& a);

  bool all_passed(std::vector<CheckResult> const& checks);

}  // namespace cellalg

#endif  // CELLALG_CROSSCHECK_HPP_

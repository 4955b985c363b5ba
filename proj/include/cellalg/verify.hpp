// Independent checks: the one-sided cell axioms for a datum under a
// multiplication, and the trace-form semisimplicity test in characteristic
// zero.

#ifndef CELLALG_VERIFY_HPP_
#define CELLALG_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "monoid.hpp"

namespace cellalg {

  enum class VerifyMode { full, generators };

  std::string verify_mode_name(VerifyMode mode);

  struct AxiomWitness {
    std::size_t acting;  // carrier index of the acting element
    std::size_t node;
    std::string side;  // "left" or "right"
    std::size_t s, t;
    std::string message;
  };

  struct AxiomReport {
    VerifyMode                  mode    = VerifyMode::full;
    bool                        ok      = true;
    std::size_t                 checked = 0;  // acting elements examined
    std::optional<AxiomWitness> witness;
  };

  // For each acting carrier element a and each node: a * _sC_t must reduce
  // modulo the higher nodes to a combination of the _{s'}C_t with
  // coefficients independent of t, and dually for _sC_t * a.
  AxiomReport verify_cell_axioms(MultiplicationOracle const& mult, CellDatum const& d,
                                 std::vector<std::size_t> const& acting, VerifyMode mode);

  // All carrier elements.
  std::vector<std::size_t> all_elements(std::size_t dim);

  // A generating set of M chosen greedily, from the top of the D-order
  // down and by index within a level.
  std::vector<std::size_t> greedy_generators(FiniteMonoid const& m);

  // Nonsingularity of B(x, y) = tr(left multiplication by xy) on the
  // regular representation. Throws WrongCharacteristic unless the field is Q.
  bool trace_form_semisimple(MultiplicationOracle const& mult);

}  // namespace cellalg

#endif  // CELLALG_VERIFY_HPP_

// Twistings pi: M x M -> R, their unit/cocycle and compatibility checks,
// and the twisted product x o y = pi(x, y) xy on the standard cell basis.

#ifndef CELLALG_TWIST_HPP_
#define CELLALG_TWIST_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "cellbasis.hpp"
#include "green.hpp"
#include "monoid.hpp"

namespace cellalg {

  enum class TwistSource { trivial, loop_delta, file };

  std::string twist_source_name(TwistSource source);

  struct Twisting {
    FieldSpec                        field;
    std::vector<std::vector<Scalar>> values;
    TwistSource                      source = TwistSource::trivial;
    std::optional<Scalar>            delta;  // loop_delta only

    Scalar const& operator()(element_index x, element_index y) const {
      return values[x][y];
    }
  };

  Twisting trivial_twisting(std::size_t size, FieldSpec field);
  // pi(x, y) = delta^loops[x][y], with delta^0 = 1 also for delta = 0.
  Twisting make_loop_twisting(LoopTable const& loops, Scalar const& delta);
  Twisting twisting_from_values(std::vector<std::vector<Scalar>> values, FieldSpec field);

  struct TwistWitness {
    std::string   kind;  // "unit" or "cocycle"
    element_index x, y, z;
  };

  // Exhaustive unit and cocycle check; the first failure.
  std::optional<TwistWitness> verify_twisting(FiniteMonoid const& m, Twisting const& pi);

  enum class Compatibility { incompatible, compatible, strongly_compatible };

  std::string compatibility_name(Compatibility c);

  struct CompatibilityWitness {
    std::string   side;  // "left" (a x D x) or "right" (x a D x)
    element_index a, x, y;
    std::string   reason;  // "unequal" or "zero"
  };

  struct CompatibilityReport {
    Compatibility                       cls = Compatibility::strongly_compatible;
    std::optional<CompatibilityWitness> witness;  // first failure of the strongest class missed
    bool                                lr = true;
  };

  CompatibilityReport compatibility_class(FiniteMonoid const& m, GreenStructure const& g,
                                          Twisting const& pi);

  AlgebraElement twisted_multiply(FiniteMonoid const& m, Twisting const& pi, AlgebraElement const& x,
                                  AlgebraElement const& y);

  MultiplicationOracle twisted_oracle(FiniteMonoid const& m, Twisting const& pi);

  // c(j, i) = pi(gamma b_j, a_i gamma) on matched pairs, per D-class,
  // indexed [j][i].
  using MatchScale = std::vector<std::vector<std::vector<std::optional<Scalar>>>>;

  // The twisted algebra keeps the datum of R[M]; only the product changes.
  struct TwistedCellDatum {
    MonoidCellDatum const* base = nullptr;
    Twisting               twisting;
    CompatibilityReport    compatibility;
    MultiplicationOracle   mult;
    MatchScale             scale;
  };

  // Throws IncompatibleTwisting when pi violates the unit/cocycle laws or
  // is not compatible.
  TwistedCellDatum build_twisted_cell_datum(MonoidCellDatum const& d, Twisting pi);

  // c(j, i) times the untwisted fast Gram entries, block by block.
  DenseMatrix scaled_gram(TwistedCellDatum const& t, std::size_t node);

  // Nodes (D, lambda) with a matched pair of nonzero scale and lambda in
  // (Lambda_D)_0.
  std::vector<std::size_t> twisted_lambda0_via_groups(TwistedCellDatum const& t);

  Analysis twisted_analyses(TwistedCellDatum const& t);

}  // namespace cellalg

#endif  // CELLALG_TWIST_HPP_

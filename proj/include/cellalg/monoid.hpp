// Finite monoids as Cayley tables.
//
// Products follow the right-action convention throughout: for maps and
// diagrams, x * y means "apply x, then y" (x stacked above y). With this
// convention Mx = My (the L-relation) is equality of images for
// transformations and xM = yM (the R-relation) is equality of kernels.

#ifndef CELLALG_MONOID_HPP_
#define CELLALG_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cellalg {

  using element_index = std::uint32_t;

  class FiniteMonoid {
   public:
    // Validates ranges, the identity law and associativity exhaustively.
    // Throws BadIdentity / NotAssociative with a witness.
    static FiniteMonoid from_cayley_table(std::size_t                             size,
                                          element_index                           identity,
                                          std::vector<std::vector<element_index>> table,
                                          std::vector<std::string>                labels);

    std::size_t size() const noexcept {
      return _size;
    }
    element_index identity() const noexcept {
      return _identity;
    }
    element_index product(element_index x, element_index y) const {
      return _table[static_cast<std::size_t>(x) * _size + y];
    }
    std::string const& label(element_index x) const {
      return _labels[x];
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::vector<std::vector<element_index>> table() const;

   private:
    FiniteMonoid() = default;

    std::size_t                _size     = 0;
    element_index              _identity = 0;
    std::vector<element_index> _table;
    std::vector<std::string>   _labels;
  };

  // loops[x][y]: closed loops removed when stacking diagram x above y.
  struct LoopTable {
    std::vector<std::vector<unsigned>> loops;
  };

  // A (partial) self-map of {0..r-1}; nullopt is "undefined".
  using PartialMap = std::vector<std::optional<unsigned>>;

  FiniteMonoid generate_from_maps(std::size_t r, std::vector<PartialMap> const& generators,
                                  std::size_t cap = 5000);

  enum class Family { tfull, tpartial, syminv, jones };

  Family      parse_family(std::string const& name);
  std::string family_name(Family f);

  // Closed-form element count of family(f, n).
  std::size_t family_size(Family f, std::size_t n);

  struct FamilyMonoid {
    FiniteMonoid             monoid;
    std::optional<LoopTable> loops;
  };

  // TFull = T_n, TPartial = PT_n, SymInverse = I_n, Jones = J_n (planar
  // diagrams; also returns the loop table). Throws SizeCapExceeded when the
  // family would exceed cap elements.
  FamilyMonoid family(Family f, std::size_t n, std::size_t cap = 5000);

  // The non-regular monoid {1, a, 0} with a^2 = 0.
  FiniteMonoid null_extension_monoid();

  std::vector<element_index> idempotents(FiniteMonoid const& m);
  bool                       is_regular(FiniteMonoid const& m);
  bool                       is_inverse(FiniteMonoid const& m);

  namespace diagram {
    // A planar perfect matching on 2n points: 0..n-1 top, n..2n-1 bottom,
    // partner[p] the point matched with p.
    using Matching = std::vector<unsigned>;

    Matching identity(std::size_t n);
    // Stacks x above y; returns the product and the number of closed loops.
    std::pair<Matching, unsigned> compose(Matching const& x, Matching const& y);
    std::string                   label(Matching const& x);
  }  // namespace diagram

}  // namespace cellalg

#endif  // CELLALG_MONOID_HPP_

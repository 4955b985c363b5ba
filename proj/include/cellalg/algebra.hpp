// Sparse algebra elements, multiplication oracles on a finite basis, and
// the generic cell datum (poset, index sets, basis) shared by group
// algebras and monoid algebras.

#ifndef CELLALG_ALGEBRA_HPP_
#define CELLALG_ALGEBRA_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "monoid.hpp"

namespace cellalg {

  // A linear combination of carrier basis elements (monoid or group
  // elements). Zero coefficients are never stored.
  class AlgebraElement {
   public:
    AlgebraElement() = default;
    explicit AlgebraElement(FieldSpec field) : _field(field) {}

    static AlgebraElement unit(FieldSpec field, std::size_t index);

    FieldSpec field() const noexcept {
      return _field;
    }
    std::map<std::size_t, Scalar> const& coeffs() const noexcept {
      return _coeffs;
    }
    bool is_zero() const noexcept {
      return _coeffs.empty();
    }
    Scalar coefficient(std::size_t index) const;

    void add(std::size_t index, Scalar const& c);
    AlgebraElement& operator+=(AlgebraElement const& other);
    AlgebraElement& operator*=(Scalar const& c);

    friend bool operator==(AlgebraElement const& a, AlgebraElement const& b) {
      return a._field == b._field && a._coeffs == b._coeffs;
    }

   private:
    FieldSpec                      _field;
    std::map<std::size_t, Scalar> _coeffs;
  };

  // Bilinear product determined on basis elements by
  // e_x * e_y = weight(x, y) e_{table(x, y)}.
  class MultiplicationOracle {
   public:
    static MultiplicationOracle monoid(FiniteMonoid const& m, FieldSpec field);
    // weights[x][y] multiplies the product x y (a twisting).
    static MultiplicationOracle twisted(FiniteMonoid const& m, FieldSpec field,
                                        std::vector<std::vector<Scalar>> const& weights);
    static MultiplicationOracle group(std::vector<std::vector<std::size_t>> const& mult,
                                      std::size_t identity, FieldSpec field);

    std::size_t dim() const noexcept {
      return _dim;
    }
    FieldSpec field() const noexcept {
      return _field;
    }
    std::size_t identity() const noexcept {
      return _identity;
    }
    bool is_twisted() const noexcept {
      return !_weights.empty();
    }
    std::size_t product_index(std::size_t x, std::size_t y) const {
      return _table[x * _dim + y];
    }
    Scalar weight(std::size_t x, std::size_t y) const;

    AlgebraElement multiply(AlgebraElement const& x, AlgebraElement const& y) const;

   private:
    MultiplicationOracle() = default;

    std::size_t              _dim      = 0;
    std::size_t              _identity = 0;
    FieldSpec                _field;
    std::vector<std::size_t> _table;
    std::vector<Scalar>      _weights;  // empty when untwisted
  };

  struct CellNode {
    std::string name;
    std::size_t lsize = 0;
    std::size_t rsize = 0;
  };

  struct BasisLabel {
    std::size_t node, s, t;
  };

  // A cell datum on a carrier of dimension dim: nodes with a strict order,
  // index sets L(node) = {0..lsize-1}, R(node) = {0..rsize-1}, and one basis
  // vector per (node, s, t), stored in the flat order node, s, t.
  //
  // Coordinates are computed by block solvers: the carrier is partitioned
  // into blocks, each basis vector must be supported in one block, and
  // within a block the basis vectors must form a basis of its span.
  class CellDatum {
   public:
    CellDatum() = default;
    // greater: pairs (a, b) meaning node a > node b; closed transitively.
    // blocks: a partition of the carrier; empty means a single block.
    // Throws NotABasis when the vectors fail to form a basis, and
    // std::invalid_argument on malformed shapes or a cyclic order.
    CellDatum(FieldSpec field, std::size_t dim, std::vector<CellNode> nodes,
              std::vector<std::pair<std::size_t, std::size_t>> const& greater,
              std::vector<AlgebraElement>                             basis,
              std::vector<std::vector<std::size_t>>                   blocks = {});

    FieldSpec field() const noexcept {
      return _field;
    }
    std::size_t dim() const noexcept {
      return _dim;
    }
    std::size_t num_nodes() const noexcept {
      return _nodes.size();
    }
    CellNode const& node(std::size_t k) const {
      return _nodes.at(k);
    }
    std::vector<CellNode> const& nodes() const noexcept {
      return _nodes;
    }
    // Strictly greater.
    bool greater(std::size_t a, std::size_t b) const {
      return _greater[a][b];
    }
    std::size_t size() const noexcept {
      return _basis.size();
    }
    std::size_t index(std::size_t node, std::size_t s, std::size_t t) const {
      return _offset[node] + s * _nodes[node].rsize + t;
    }
    BasisLabel const& label(std::size_t index) const {
      return _labels[index];
    }
    AlgebraElement const& basis(std::size_t index) const {
      return _basis[index];
    }
    AlgebraElement const& basis(std::size_t node, std::size_t s, std::size_t t) const {
      return _basis[index(node, s, t)];
    }
    std::vector<AlgebraElement> const& basis_vectors() const noexcept {
      return _basis;
    }
    // Pairs (a, b) with a > b, for serialization.
    std::vector<std::pair<std::size_t, std::size_t>> order_pairs() const;

    // Exact coordinates of x in the basis (flat index -> coefficient).
    std::map<std::size_t, Scalar> coordinates(AlgebraElement const& x) const;

   private:
    struct Block {
      std::vector<std::size_t> carrier;  // sorted
      std::vector<std::size_t> basis;    // flat indices
      DenseMatrix              inverse;  // carrier coords -> basis coords
    };

    FieldSpec                      _field;
    std::size_t                    _dim = 0;
    std::vector<CellNode>          _nodes;
    std::vector<std::vector<bool>> _greater;
    std::vector<std::size_t>       _offset;
    std::vector<BasisLabel>        _labels;
    std::vector<AlgebraElement>    _basis;
    std::vector<Block>             _blocks;
    std::vector<std::size_t>       _block_of;  // carrier index -> block
  };

  // <C_t, _sC> at node: the coefficient of _{ref_s}C_{ref_t} in
  // _{ref_s}C_t * _sC_{ref_t}, ignoring nodes strictly above node.
  Scalar bracket(MultiplicationOracle const& mult, CellDatum const& d, std::size_t node,
                 std::size_t t, std::size_t s, std::size_t ref_s = 0, std::size_t ref_t = 0);

  // Rows indexed by t in R(node), columns by s in L(node).
  DenseMatrix gram_matrix(MultiplicationOracle const& mult, CellDatum const& d, std::size_t node,
                          std::size_t ref_s = 0, std::size_t ref_t = 0);

  // Checks that every product _{s'}C_t * _sC_{t'} reduces mod the higher
  // nodes to a multiple of _{s'}C_{t'}, with a multiple that does not
  // depend on (s', t'). References are tried exhaustively when exhaustive
  // is set, otherwise only the last pair. Returns a description of the
  // first failure.
  std::optional<std::string> check_bracket(MultiplicationOracle const& mult, CellDatum const& d,
                                           std::size_t node, bool exhaustive);

}  // namespace cellalg

#endif  // CELLALG_ALGEBRA_HPP_

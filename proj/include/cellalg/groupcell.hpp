// Cell data on group algebras R[G]: the trivial group, the Murphy basis of
// R[S_n], and data loaded from JSON. Data are attached to a Schützenberger
// group by expressing their basis over its element indices.

#ifndef CELLALG_GROUPCELL_HPP_
#define CELLALG_GROUPCELL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "green.hpp"

namespace cellalg {

  using Partition = std::vector<unsigned>;
  // Rows of a Young tableau, entries 1..n.
  using Tableau = std::vector<std::vector<unsigned>>;
  // A permutation of {0..n-1}, acting on the right: p maps i to perm[i].
  using Permutation = std::vector<unsigned>;

  // Partitions of n, in decreasing lexicographic order: (n) first.
  std::vector<Partition> partitions(unsigned n);
  // lambda dominates mu (weakly).
  bool        dominates(Partition const& lambda, Partition const& mu);
  std::string partition_name(Partition const& lambda);

  // Standard tableaux of shape lambda, ordered lexicographically by their
  // row-reading words; the row-reading tableau t^lambda comes first.
  std::vector<Tableau>  standard_tableaux(Partition const& lambda);
  std::vector<unsigned> reading_word(Tableau const& t);

  // S_n with elements in lexicographic order of their image lists (the
  // identity first) and product "apply x, then y".
  class SymmetricGroup {
   public:
    explicit SymmetricGroup(unsigned n);

    unsigned degree() const noexcept {
      return _n;
    }
    std::size_t order() const noexcept {
      return _elements.size();
    }
    Permutation const& element(std::size_t k) const {
      return _elements[k];
    }
    std::size_t index(Permutation const& p) const;
    std::vector<std::vector<std::size_t>> const& mult() const noexcept {
      return _mult;
    }
    std::size_t inverse(std::size_t k) const {
      return _inverse[k];
    }

   private:
    unsigned                              _n;
    std::vector<Permutation>              _elements;
    std::vector<std::vector<std::size_t>> _mult;
    std::vector<std::size_t>              _inverse;
  };

  std::string permutation_name(Permutation const& p);

  enum class GroupKind { trivial, symmetric, custom };

  std::string group_kind_name(GroupKind kind);

  // A cell datum on R[G] whose carrier indices are the elements of a
  // specific group (a SchutzGroup, or a SymmetricGroup when standalone).
  struct GroupCellData {
    GroupKind kind   = GroupKind::trivial;
    unsigned  degree = 1;  // n for S_n
    CellDatum datum;
  };

  GroupCellData trivial_group_datum(FieldSpec field);

  // The Murphy basis m_st = d(s)^-1 x_lambda d(t) of R[S_n], over the
  // SymmetricGroup(n) element indices. Nodes are the partitions, ordered by
  // dominance. Throws SizeCapExceeded when n > cap.
  GroupCellData murphy_datum(unsigned n, FieldSpec field, unsigned cap = 5);

  // An isomorphism S_n -> G (images of the SymmetricGroup indices), found
  // by trying images of (1 2) and (1 2 ... n) in index order and checking
  // the full table. Throws GroupMismatch when there is none.
  std::vector<std::size_t> symmetric_isomorphism(SymmetricGroup const&                        sn,
                                                 std::vector<std::vector<std::size_t>> const& mult);

  // Re-expresses a datum through a bijection of carriers.
  CellDatum transport(CellDatum const& d, std::vector<std::size_t> const& carrier_map);

  // Trivial datum for order 1, transported Murphy datum when G is S_n with
  // n <= cap. Throws GroupMismatch otherwise.
  GroupCellData automatic_group_datum(SchutzGroup const& group, FieldSpec field, unsigned cap = 5);

  // The datum format: {"nodes": [...], "poset": [[a, b], ...] (a > b),
  // "L": {node: size}, "R": {node: size},
  // "basis": {"node/s/t": [[group_index, "scalar"], ...]}}.
  // Validates the basis (NotABasis), then the cell axioms over every group
  // element (AxiomViolation).
  GroupCellData load_custom_datum(nlohmann::json const& j, SchutzGroup const& group, FieldSpec field);
  nlohmann::ordered_json datum_to_json(CellDatum const& d);

  MultiplicationOracle group_oracle(SchutzGroup const& group, FieldSpec field);
  MultiplicationOracle group_oracle(SymmetricGroup const& group, FieldSpec field);

  Scalar group_bracket(MultiplicationOracle const& mult, CellDatum const& d, std::size_t node,
                       std::size_t t, std::size_t s);
  DenseMatrix group_gram(MultiplicationOracle const& mult, CellDatum const& d, std::size_t node);
  // Nodes with a nonzero Gram matrix.
  std::vector<std::size_t> group_lambda0(std::vector<DenseMatrix> const& grams);
  // Every Gram square and nonsingular.
  bool group_semisimple(std::vector<DenseMatrix> const& grams);

}  // namespace cellalg

#endif  // CELLALG_GROUPCELL_HPP_

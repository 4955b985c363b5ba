// The standard cell datum on R[M]: nodes (D, lambda), index sets
// (row, s) and (column, t), basis vectors a_i phi(_sC_t) b_j, and the
// bracket, radical and semisimplicity analyses built on it.

#ifndef CELLALG_CELLBASIS_HPP_
#define CELLALG_CELLBASIS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "green.hpp"
#include "groupcell.hpp"
#include "monoid.hpp"

namespace cellalg {

  struct DClassData {
    EggBox        box;
    SchutzGroup   group;
    GroupCellData gdata;
    // Gram matrix of the group datum per group node, and derived facts.
    std::vector<DenseMatrix> group_grams;
    std::vector<std::size_t> group_lambda0;
    bool                     group_semisimple = false;
    // matched[i][j]: r_{m(i,j)} when row i and column j are matched.
    std::vector<std::vector<std::optional<std::size_t>>> matched;
    bool                                                 has_matched = false;
    std::optional<std::vector<std::size_t>>              bijection;
    // Monoid node for each group node.
    std::vector<std::size_t> nodes;
  };

  struct MonoidCellDatum {
    FiniteMonoid            monoid;
    FieldSpec               field;
    GreenStructure          green;
    std::vector<DClassData> dclasses;
    CellDatum               datum;
    // Monoid node -> (D-class id, group node).
    std::vector<std::pair<std::size_t, std::size_t>> source;

    std::size_t num_nodes() const noexcept {
      return datum.num_nodes();
    }
    // Flattened index (row i, s) of L(D, lambda), and (column j, t) of R.
    std::size_t left_index(std::size_t node, std::size_t i, std::size_t s) const;
    std::size_t right_index(std::size_t node, std::size_t j, std::size_t t) const;
  };

  // Assembles the datum from per-D ingredients. group_data[d] must be a
  // datum over the element indices of groups[d].
  MonoidCellDatum build_cell_datum(FiniteMonoid const& m, GreenStructure green,
                                   std::vector<EggBox> boxes, std::vector<SchutzGroup> groups,
                                   std::vector<GroupCellData> group_data, FieldSpec field);

  struct StructureOptions {
    SectionChoice section    = SectionChoice::least;
    unsigned      murphy_cap = 5;
    // Custom group data per D-class id, in the datum JSON format.
    std::map<std::size_t, nlohmann::json> custom;
  };

  // Green structure, egg-boxes, groups, automatic or custom group data, and
  // the assembled datum. Throws UnsupportedGroup when a group has neither
  // an automatic nor a custom datum.
  MonoidCellDatum build_standard_structure(FiniteMonoid const& m, FieldSpec field,
                                           StructureOptions const& options = {});

  std::map<std::size_t, Scalar> to_cell_coordinates(MonoidCellDatum const& d,
                                                    AlgebraElement const&  x);

  // Rows (j, t), columns (i, s); products of basis vectors reduced modulo
  // the higher nodes. mult may be twisted.
  DenseMatrix gram_definition(MultiplicationOracle const& mult, MonoidCellDatum const& d,
                              std::size_t node);

  // Zero on unmatched blocks; on matched blocks the group bracket of C_t
  // against r_{m(i,j)} _sC.
  DenseMatrix gram_fast(MonoidCellDatum const& d, std::size_t node);

  // Nodes (D, lambda) where D has a matched pair and lambda has a nonzero
  // group Gram matrix.
  std::vector<std::size_t> lambda0_via_groups(MonoidCellDatum const& d);

  struct NodeResult {
    std::size_t node;
    DenseMatrix gram;
    std::size_t rank;
    bool        in_lambda0;
  };

  struct Analysis {
    std::vector<NodeResult>    nodes;
    std::vector<std::size_t>   lambda0;
    bool                       quasi_hereditary = false;
    std::vector<std::size_t>   qh_failing;  // nodes outside lambda0
    bool                       semisimple = false;
    std::optional<std::size_t> semisimple_failing;  // first node that is not square nonsingular
    std::size_t                sum_dims_squared = 0;
  };

  // Gram matrices by definition under mult, then Lambda_0, irreducible
  // dimensions (Gram ranks), quasi-heredity (Lambda_0 = Lambda) and
  // semisimplicity (every Gram square and nonsingular).
  Analysis analyze(MonoidCellDatum const& d, MultiplicationOracle const& mult);

  // Irreducible dimension per node of Lambda_0.
  std::map<std::size_t, std::size_t> irreducible_dims(Analysis const& a);

}  // namespace cellalg

#endif  // CELLALG_CELLBASIS_HPP_

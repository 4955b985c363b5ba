// Green's relations, egg-boxes with translation elements, right
// Schützenberger groups, and the action of M on the H-classes of a D-class.

#ifndef CELLALG_GREEN_HPP_
#define CELLALG_GREEN_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "monoid.hpp"

namespace cellalg {

  inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct GreenStructure {
    // Class ids per element; ids are assigned in order of least member.
    std::vector<std::size_t> lclass, rclass, hclass, dclass;
    // Members per class id, ascending.
    std::vector<std::vector<element_index>> lmembers, rmembers, hmembers, dmembers;
    // below[d1][d2]: D-class d1 lies strictly below d2 (d1 is in the ideal
    // generated by d2 and differs from it).
    std::vector<std::vector<bool>> below;

    std::size_t num_dclasses() const noexcept {
      return dmembers.size();
    }
    bool d_less(std::size_t d1, std::size_t d2) const {
      return below[d1][d2];
    }
  };

  // L, R from principal one-sided ideals, D = J from principal two-sided
  // ideals, H = L n R.
  GreenStructure compute_green(FiniteMonoid const& m);

  struct EggBox {
    std::size_t   d     = 0;
    element_index gamma = 0;  // least element of the D-class
    std::vector<std::size_t> rows;  // R-class ids, R_gamma first
    std::vector<std::size_t> cols;  // L-class ids, L_gamma first
    // cells[i][j]: sorted members of the H-class in row i, column j.
    std::vector<std::vector<std::vector<element_index>>> cells;
    // a[i] * h for h in row 0 moves to row i, abar[i] back; b[j], bbar[j]
    // do the same for columns by right multiplication.
    std::vector<element_index> a, abar, b, bbar;
    // Row / column of each element of the monoid (npos outside the class).
    std::vector<std::size_t> row_of, col_of;

    std::size_t num_rows() const noexcept {
      return rows.size();
    }
    std::size_t num_cols() const noexcept {
      return cols.size();
    }
    bool contains(element_index x) const {
      return row_of[x] != npos;
    }
    std::size_t h_size() const {
      return cells[0][0].size();
    }
    std::vector<element_index> const& cell(std::size_t i, std::size_t j) const {
      return cells.at(i).at(j);
    }
  };

  // Builds the egg-box of D-class d, searches the translation elements in
  // index order, and then checks the translation property on every cell
  // (throws TranslationNotFound if anything fails).
  EggBox build_eggbox(FiniteMonoid const& m, GreenStructure const& g, std::size_t d);

  enum class SectionChoice { least, greatest };

  // The right Schützenberger group of the base H-class H = H_gamma, as
  // permutations of H. Group elements are indices 0..order()-1 in order of
  // first appearance among RT(H); the product is composition of right
  // translations, mult[g][h] = "g then h", so r_m r_n = r_{mn}.
  struct SchutzGroup {
    std::vector<element_index>            hclass;  // sorted
    std::vector<std::vector<std::size_t>> perms;   // perms[g][pos] = image position
    std::vector<std::vector<std::size_t>> mult;
    std::vector<std::size_t>              inverse_of;
    std::size_t                           identity = 0;
    // section[g]: the chosen representative m in RT(H) with r_m = g.
    std::vector<element_index> section;
    // For every m in M: r_m when m is in RT(H).
    std::vector<std::optional<std::size_t>> right_element;
    // For every m in LT(H): the representative mbar in RT(H) with
    // m * gamma = gamma * mbar.
    std::vector<std::optional<element_index>> left_transfer;
    // phi[g] = gamma * section[g]; a bijection onto H.
    std::vector<element_index> phi;

    std::size_t order() const noexcept {
      return perms.size();
    }
    // The group element g with phi[g] == h (h must lie in H).
    std::size_t element_at(element_index h) const;
  };

  SchutzGroup schutzenberger(FiniteMonoid const& m, EggBox const& box,
                             SectionChoice section = SectionChoice::least);

  // Result of acting on a cell of the egg-box: nullopt is "falls below D".
  struct Within {
    std::size_t   k;      // new column (right action) or row (left action)
    element_index mstar;  // b_j m bbar_k, or abar_k m a_i
    std::size_t   g;      // r_{m*} or r_{mbar*} in the Schützenberger group
  };
  using ActionResult = std::optional<Within>;

  ActionResult right_action(FiniteMonoid const& m, EggBox const& box, SchutzGroup const& group,
                            std::size_t i, std::size_t j, element_index x);
  ActionResult left_action(FiniteMonoid const& m, EggBox const& box, SchutzGroup const& group,
                           std::size_t i, std::size_t j, element_index x);

  // R_i and L_j are matched iff (gamma b_j)(a_i gamma) stays in D; then the
  // group element r_{m(i,j)} with m(i,j) = b_j a_i gamma.
  std::optional<std::size_t> matched(FiniteMonoid const& m, EggBox const& box,
                                     SchutzGroup const& group, std::size_t i, std::size_t j);

  // F[j] = the unique row matched with column j, when the matched pattern
  // is a permutation matrix.
  std::optional<std::vector<std::size_t>> bijection_condition(FiniteMonoid const& m,
                                                              EggBox const&       box,
                                                              SchutzGroup const&  group);

}  // namespace cellalg

#endif  // CELLALG_GREEN_HPP_

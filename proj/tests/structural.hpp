// Structural checks on Green's relations and egg-boxes. Each returns an
// empty string on success or a description of the first failure.

#ifndef CELLALG_TESTS_STRUCTURAL_HPP_
#define CELLALG_TESTS_STRUCTURAL_HPP_

#include <string>

#include "cellalg/green.hpp"
#include "oracles.hpp"

namespace structural {

  using namespace cellalg;

  inline std::string at(char const* what, element_index x, element_index y) {
    return std::string(what) + " at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
  }

  // Class ids agree with equality of principal ideals.
  inline std::string green_matches_ideals(FiniteMonoid const& m, GreenStructure const& g) {
    std::vector<std::set<element_index>> l, r, j;
    for (element_index x = 0; x < m.size(); ++x) {
      l.push_back(oracle::left_ideal(m, x));
      r.push_back(oracle::right_ideal(m, x));
      j.push_back(oracle::two_sided_ideal(m, x));
    }
    for (element_index x = 0; x < m.size(); ++x) {
      for (element_index y = 0; y < m.size(); ++y) {
        if ((l[x] == l[y]) != (g.lclass[x] == g.lclass[y])) {
          return at("L mismatch", x, y);
        }
        if ((r[x] == r[y]) != (g.rclass[x] == g.rclass[y])) {
          return at("R mismatch", x, y);
        }
        if ((j[x] == j[y]) != (g.dclass[x] == g.dclass[y])) {
          return at("D mismatch", x, y);
        }
        bool h = l[x] == l[y] && r[x] == r[y];
        if (h != (g.hclass[x] == g.hclass[y])) {
          return at("H mismatch", x, y);
        }
        bool strictly_below = j[x] != j[y] && std::includes(j[y].begin(), j[y].end(),
                                                            j[x].begin(), j[x].end());
        if (strictly_below != g.d_less(g.dclass[x], g.dclass[y])) {
          return at("D-order mismatch", x, y);
        }
      }
    }
    return "";
  }

  // If an element of H is mapped into H by right multiplication, all of H
  // is; and dually on the left.
  inline std::string h_stability(FiniteMonoid const& m, GreenStructure const& g) {
    for (auto const& hm : g.hmembers) {
      auto hid = g.hclass[hm.front()];
      for (element_index x = 0; x < m.size(); ++x) {
        bool some_right = false, all_right = true, some_left = false, all_left = true;
        for (auto h : hm) {
          bool in_r = g.hclass[m.product(h, x)] == hid;
          bool in_l = g.hclass[m.product(x, h)] == hid;
          some_right |= in_r;
          all_right &= in_r;
          some_left |= in_l;
          all_left &= in_l;
        }
        if (some_right && !all_right) {
          return at("Hm leaves H", hm.front(), x);
        }
        if (some_left && !all_left) {
          return at("mH leaves H", hm.front(), x);
        }
      }
    }
    return "";
  }

  // D_a = D_am implies R_a = R_am; D_a = D_ma implies L_a = L_ma.
  inline std::string stable_products(FiniteMonoid const& m, GreenStructure const& g) {
    for (element_index a = 0; a < m.size(); ++a) {
      for (element_index x = 0; x < m.size(); ++x) {
        auto am = m.product(a, x), ma = m.product(x, a);
        if (g.dclass[a] == g.dclass[am] && g.rclass[a] != g.rclass[am]) {
          return at("R_a differs from R_am", a, x);
        }
        if (g.dclass[a] == g.dclass[ma] && g.lclass[a] != g.lclass[ma]) {
          return at("L_a differs from L_ma", a, x);
        }
      }
    }
    return "";
  }

  inline std::string rectangular(FiniteMonoid const& m, GreenStructure const& g, EggBox const& box) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < box.num_rows(); ++i) {
      for (std::size_t j = 0; j < box.num_cols(); ++j) {
        auto const& c = box.cell(i, j);
        if (c.size() != box.h_size()) {
          return "cells of unequal size in D" + std::to_string(box.d);
        }
        for (auto x : c) {
          if (g.rclass[x] != box.rows[i] || g.lclass[x] != box.cols[j]) {
            return "element in the wrong cell of D" + std::to_string(box.d);
          }
        }
        total += c.size();
      }
    }
    if (total != g.dmembers[box.d].size()
        || total != box.num_rows() * box.num_cols() * box.h_size()) {
      return "egg-box of D" + std::to_string(box.d) + " does not cover the class";
    }
    (void)m;
    return "";
  }

  inline std::string translations(FiniteMonoid const& m, EggBox const& box) {
    auto const one = m.identity();
    if (box.a[0] != one || box.abar[0] != one || box.b[0] != one || box.bbar[0] != one) {
      return "first translations are not the identity";
    }
    auto in = [&box](element_index x, std::size_t i, std::size_t j) {
      return box.row_of[x] == i && box.col_of[x] == j;
    };
    for (std::size_t i = 0; i < box.num_rows(); ++i) {
      for (std::size_t j = 0; j < box.num_cols(); ++j) {
        for (auto h : box.cell(0, j)) {
          auto ah = m.product(box.a[i], h);
          if (!in(ah, i, j) || m.product(box.abar[i], ah) != h) {
            return at("left translation fails", static_cast<element_index>(i), h);
          }
        }
        for (auto h : box.cell(i, 0)) {
          auto hb = m.product(h, box.b[j]);
          if (!in(hb, i, j) || m.product(hb, box.bbar[j]) != h) {
            return at("right translation fails", static_cast<element_index>(j), h);
          }
        }
      }
    }
    return "";
  }

  inline std::string group_laws(FiniteMonoid const& m, EggBox const& box, SchutzGroup const& grp) {
    auto const n = grp.order();
    if (n != box.h_size()) {
      return "group order differs from |H|";
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (grp.mult[grp.identity][g] != g || grp.mult[g][grp.inverse_of[g]] != grp.identity) {
        return "group identity or inverse fails";
      }
      if (grp.element_at(grp.phi[g]) != g || m.product(box.gamma, grp.section[g]) != grp.phi[g]) {
        return "phi is not consistent with the section";
      }
    }
    for (element_index x = 0; x < m.size(); ++x) {
      for (element_index y = 0; y < m.size(); ++y) {
        auto rx = grp.right_element[x], ry = grp.right_element[y];
        auto rxy = grp.right_element[m.product(x, y)];
        if (rx && ry && (!rxy || *rxy != grp.mult[*rx][*ry])) {
          return at("r_x r_y differs from r_xy", x, y);
        }
      }
      if (auto t = grp.left_transfer[x]) {
        if (m.product(x, box.gamma) != m.product(box.gamma, *t)) {
          return at("left transfer fails", x, *t);
        }
      }
    }
    return "";
  }

  inline element_index basis_element(FiniteMonoid const& m, EggBox const& box,
                                     SchutzGroup const& grp, std::size_t i, std::size_t g,
                                     std::size_t j) {
    return m.product(m.product(box.a[i], grp.phi[g]), box.b[j]);
  }

  // The action formulas reproduce the Cayley products on every cell, and
  // leaving D is all-or-nothing per cell.
  inline std::string action_maps(FiniteMonoid const& m, EggBox const& box, SchutzGroup const& grp) {
    for (std::size_t i = 0; i < box.num_rows(); ++i) {
      for (std::size_t j = 0; j < box.num_cols(); ++j) {
        for (element_index x = 0; x < m.size(); ++x) {
          auto right = right_action(m, box, grp, i, j, x);
          auto left  = left_action(m, box, grp, i, j, x);
          for (std::size_t g = 0; g < grp.order(); ++g) {
            auto h  = basis_element(m, box, grp, i, g, j);
            auto hx = m.product(h, x), xh = m.product(x, h);
            if (right) {
              if (hx != basis_element(m, box, grp, i, grp.mult[g][right->g], right->k)) {
                return at("right action formula fails", h, x);
              }
            } else if (box.contains(hx)) {
              return at("right action leaves D only partly", h, x);
            }
            if (left) {
              if (xh != basis_element(m, box, grp, left->k, grp.mult[left->g][g], j)) {
                return at("left action formula fails", x, h);
              }
            } else if (box.contains(xh)) {
              return at("left action leaves D only partly", x, h);
            }
          }
        }
      }
    }
    return "";
  }

  // Every check on one monoid; the first failure.
  inline std::string all_checks(FiniteMonoid const& m) {
    auto g = compute_green(m);
    for (auto const& f : {green_matches_ideals(m, g), h_stability(m, g), stable_products(m, g)}) {
      if (!f.empty()) {
        return f;
      }
    }
    for (std::size_t d = 0; d < g.num_dclasses(); ++d) {
      auto box = build_eggbox(m, g, d);
      auto grp = schutzenberger(m, box);
      for (auto const& f : {rectangular(m, g, box), translations(m, box), group_laws(m, box, grp),
                            action_maps(m, box, grp)}) {
        if (!f.empty()) {
          return f;
        }
      }
    }
    return "";
  }

}  // namespace structural

#endif  // CELLALG_TESTS_STRUCTURAL_HPP_

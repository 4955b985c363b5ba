#include "cellalg/green.hpp"

#include <algorithm>
#include <map>

#include "cellalg/errors.hpp"

namespace cellalg {

  namespace {
    using Ideal = std::vector<bool>;

    // Groups elements by equal key, numbering classes in order of least
    // member.
    void partition_by(std::vector<Ideal> const&                keys,
                      std::vector<std::size_t>&                 ids,
                      std::vector<std::vector<element_index>>& members) {
      std::map<Ideal, std::size_t> seen;
      ids.assign(keys.size(), 0);
      members.clear();
      for (std::size_t x = 0; x < keys.size(); ++x) {
        auto [it, inserted] = seen.emplace(keys[x], members.size());
        if (inserted) {
          members.emplace_back();
        }
        ids[x] = it->second;
        members[it->second].push_back(static_cast<element_index>(x));
      }
    }
  }  // namespace

  GreenStructure compute_green(FiniteMonoid const& m) {
    std::size_t const  n = m.size();
    std::vector<Ideal> left(n, Ideal(n, false)), right(n, Ideal(n, false)),
        two_sided(n, Ideal(n, false));
    for (element_index x = 0; x < n; ++x) {
      for (element_index y = 0; y < n; ++y) {
        left[x][m.product(y, x)]  = true;
        right[x][m.product(x, y)] = true;
      }
      for (element_index y = 0; y < n; ++y) {
        if (!left[x][y]) {
          continue;
        }
        for (element_index z = 0; z < n; ++z) {
          two_sided[x][m.product(y, z)] = true;
        }
      }
    }
    GreenStructure g;
    partition_by(left, g.lclass, g.lmembers);
    partition_by(right, g.rclass, g.rmembers);
    partition_by(two_sided, g.dclass, g.dmembers);

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> hid;
    g.hclass.assign(n, 0);
    for (element_index x = 0; x < n; ++x) {
      auto [it, inserted] = hid.emplace(std::make_pair(g.lclass[x], g.rclass[x]), g.hmembers.size());
      if (inserted) {
        g.hmembers.emplace_back();
      }
      g.hclass[x] = it->second;
      g.hmembers[it->second].push_back(x);
    }

    std::size_t const nd = g.dmembers.size();
    g.below.assign(nd, std::vector<bool>(nd, false));
    for (std::size_t d1 = 0; d1 < nd; ++d1) {
      for (std::size_t d2 = 0; d2 < nd; ++d2) {
        if (d1 != d2 && two_sided[g.dmembers[d2][0]][g.dmembers[d1][0]]) {
          g.below[d1][d2] = true;
        }
      }
    }
    return g;
  }

  EggBox build_eggbox(FiniteMonoid const& m, GreenStructure const& g, std::size_t d) {
    if (d >= g.num_dclasses()) {
      throw std::out_of_range("no such D-class");
    }
    std::size_t const n = m.size();
    EggBox            box;
    box.d     = d;
    box.gamma = g.dmembers[d].front();

    // Rows and columns: base class first, then by least member.
    box.rows.push_back(g.rclass[box.gamma]);
    box.cols.push_back(g.lclass[box.gamma]);
    for (auto x : g.dmembers[d]) {
      if (std::find(box.rows.begin(), box.rows.end(), g.rclass[x]) == box.rows.end()) {
        box.rows.push_back(g.rclass[x]);
      }
      if (std::find(box.cols.begin(), box.cols.end(), g.lclass[x]) == box.cols.end()) {
        box.cols.push_back(g.lclass[x]);
      }
    }
    box.row_of.assign(n, npos);
    box.col_of.assign(n, npos);
    box.cells.assign(box.rows.size(), std::vector<std::vector<element_index>>(box.cols.size()));
    for (auto x : g.dmembers[d]) {
      auto i       = static_cast<std::size_t>(
          std::find(box.rows.begin(), box.rows.end(), g.rclass[x]) - box.rows.begin());
      auto j = static_cast<std::size_t>(
          std::find(box.cols.begin(), box.cols.end(), g.lclass[x]) - box.cols.begin());
      box.row_of[x] = i;
      box.col_of[x] = j;
      box.cells[i][j].push_back(x);
    }

    element_index const gamma = box.gamma;
    for (std::size_t i = 0; i < box.rows.size(); ++i) {
      bool found = false;
      for (element_index a = 0; a < n && !found; ++a) {
        element_index h = m.product(a, gamma);
        if (box.row_of[h] != i || box.col_of[h] != 0) {
          continue;
        }
        for (element_index abar = 0; abar < n && !found; ++abar) {
          if (m.product(abar, h) == gamma) {
            box.a.push_back(a);
            box.abar.push_back(abar);
            found = true;
          }
        }
      }
      if (!found) {
        throw TranslationNotFound("no left translation to row " + std::to_string(i)
                                  + " of D-class " + std::to_string(d));
      }
    }
    for (std::size_t j = 0; j < box.cols.size(); ++j) {
      bool found = false;
      for (element_index b = 0; b < n && !found; ++b) {
        element_index h = m.product(gamma, b);
        if (box.row_of[h] != 0 || box.col_of[h] != j) {
          continue;
        }
        for (element_index bbar = 0; bbar < n && !found; ++bbar) {
          if (m.product(h, bbar) == gamma) {
            box.b.push_back(b);
            box.bbar.push_back(bbar);
            found = true;
          }
        }
      }
      if (!found) {
        throw TranslationNotFound("no right translation to column " + std::to_string(j)
                                  + " of D-class " + std::to_string(d));
      }
    }

    // Every cell has the size of the base cell, and the translations are
    // mutually inverse bijections between row 0 / column 0 and each cell.
    std::size_t const hsize = box.cells[0][0].size();
    for (std::size_t i = 0; i < box.rows.size(); ++i) {
      for (std::size_t j = 0; j < box.cols.size(); ++j) {
        if (box.cells[i][j].size() != hsize) {
          throw TranslationNotFound("egg-box of D-class " + std::to_string(d)
                                    + " is not rectangular");
        }
        for (auto h : box.cells[0][j]) {
          element_index ah = m.product(box.a[i], h);
          if (box.row_of[ah] != i || box.col_of[ah] != j || m.product(box.abar[i], ah) != h) {
            throw TranslationNotFound("left translation fails on cell (" + std::to_string(i)
                                      + "," + std::to_string(j) + ")");
          }
        }
        for (auto h : box.cells[i][0]) {
          element_index hb = m.product(h, box.b[j]);
          if (box.row_of[hb] != i || box.col_of[hb] != j || m.product(hb, box.bbar[j]) != h) {
            throw TranslationNotFound("right translation fails on cell (" + std::to_string(i)
                                      + "," + std::to_string(j) + ")");
          }
        }
      }
    }
    return box;
  }

  std::size_t SchutzGroup::element_at(element_index h) const {
    for (std::size_t g = 0; g < phi.size(); ++g) {
      if (phi[g] == h) {
        return g;
      }
    }
    throw std::out_of_range("element is not in the base H-class");
  }

  SchutzGroup schutzenberger(FiniteMonoid const& m, EggBox const& box, SectionChoice section) {
    std::size_t const n = m.size();
    SchutzGroup       group;
    group.hclass = box.cells[0][0];
    auto position = [&group](element_index x) -> std::size_t {
      auto it = std::lower_bound(group.hclass.begin(), group.hclass.end(), x);
      return (it != group.hclass.end() && *it == x)
                 ? static_cast<std::size_t>(it - group.hclass.begin())
                 : npos;
    };

    group.right_element.assign(n, std::nullopt);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (element_index x = 0; x < n; ++x) {
      std::vector<std::size_t> perm;
      for (auto h : group.hclass) {
        auto p = position(m.product(h, x));
        if (p == npos) {
          break;
        }
        perm.push_back(p);
      }
      if (perm.size() != group.hclass.size()) {
        continue;
      }
      auto [it, inserted] = index.emplace(perm, group.perms.size());
      if (inserted) {
        group.perms.push_back(perm);
        group.section.push_back(x);
      } else if (section == SectionChoice::greatest) {
        group.section[it->second] = x;
      }
      group.right_element[x] = it->second;
    }

    std::size_t const order = group.perms.size();
    group.identity          = *group.right_element[m.identity()];
    group.mult.assign(order, std::vector<std::size_t>(order, 0));
    group.inverse_of.assign(order, 0);
    for (std::size_t g = 0; g < order; ++g) {
      for (std::size_t h = 0; h < order; ++h) {
        std::vector<std::size_t> composite(group.hclass.size());
        for (std::size_t p = 0; p < composite.size(); ++p) {
          composite[p] = group.perms[h][group.perms[g][p]];
        }
        auto it = index.find(composite);
        if (it == index.end()) {
          throw std::logic_error("Schützenberger permutations are not closed");
        }
        group.mult[g][h] = it->second;
        if (it->second == group.identity) {
          group.inverse_of[g] = h;
        }
      }
    }

    group.phi.resize(order);
    for (std::size_t g = 0; g < order; ++g) {
      group.phi[g] = m.product(box.gamma, group.section[g]);
    }

    group.left_transfer.assign(n, std::nullopt);
    for (element_index x = 0; x < n; ++x) {
      bool stays = true;
      for (auto h : group.hclass) {
        if (position(m.product(x, h)) == npos) {
          stays = false;
          break;
        }
      }
      if (stays) {
        group.left_transfer[x] = group.section[group.element_at(m.product(x, box.gamma))];
      }
    }
    return group;
  }

  namespace {
    void check_cell(EggBox const& box, std::size_t i, std::size_t j) {
      if (i >= box.num_rows() || j >= box.num_cols()) {
        throw InvalidCell("cell (" + std::to_string(i) + "," + std::to_string(j)
                          + ") is outside the egg-box");
      }
    }
  }  // namespace

  ActionResult right_action(FiniteMonoid const& m, EggBox const& box, SchutzGroup const& group,
                            std::size_t i, std::size_t j, element_index x) {
    check_cell(box, i, j);
    element_index dx = m.product(box.cells[i][j].front(), x);
    if (!box.contains(dx)) {
      return std::nullopt;
    }
    std::size_t   k     = box.col_of[dx];
    element_index mstar = m.product(m.product(box.b[j], x), box.bbar[k]);
    auto          g     = group.right_element[mstar];
    if (!g) {
      throw std::logic_error("b_j m bbar_k is not in RT(H)");
    }
    return Within{k, mstar, *g};
  }

  ActionResult left_action(FiniteMonoid const& m, EggBox const& box, SchutzGroup const& group,
                           std::size_t i, std::size_t j, element_index x) {
    check_cell(box, i, j);
    element_index xd = m.product(x, box.cells[i][j].front());
    if (!box.contains(xd)) {
      return std::nullopt;
    }
    std::size_t   k     = box.row_of[xd];
    element_index mstar = m.product(m.product(box.abar[k], x), box.a[i]);
    auto          mbar  = group.left_transfer[mstar];
    if (!mbar) {
      throw std::logic_error("abar_k m a_i is not in LT(H)");
    }
    return Within{k, mstar, *group.right_element[*mbar]};
  }

  std::optional<std::size_t> matched(FiniteMonoid const& m, EggBox const& box,
                                     SchutzGroup const& group, std::size_t i, std::size_t j) {
    check_cell(box, i, j);
    element_index x = m.product(box.gamma, box.b[j]);
    element_index y = m.product(box.a[i], box.gamma);
    if (!box.contains(m.product(x, y))) {
      return std::nullopt;
    }
    element_index mij = m.product(m.product(box.b[j], box.a[i]), box.gamma);
    auto          g   = group.right_element[mij];
    if (!g) {
      throw std::logic_error("m(i,j) is not in RT(H)");
    }
    return g;
  }

  std::optional<std::vector<std::size_t>> bijection_condition(FiniteMonoid const& m,
                                                              EggBox const&       box,
                                                              SchutzGroup const&  group) {
    if (box.num_rows() != box.num_cols()) {
      return std::nullopt;
    }
    std::vector<std::size_t> f(box.num_cols(), npos);
    std::vector<bool>        row_used(box.num_rows(), false);
    for (std::size_t j = 0; j < box.num_cols(); ++j) {
      for (std::size_t i = 0; i < box.num_rows(); ++i) {
        if (!matched(m, box, group, i, j)) {
          continue;
        }
        if (f[j] != npos || row_used[i]) {
          return std::nullopt;
        }
        f[j]        = i;
        row_used[i] = true;
      }
      if (f[j] == npos) {
        return std::nullopt;
      }
    }
    return f;
  }

}  // namespace cellalg

#include "cellalg/cellbasis.hpp"

#include "cellalg/errors.hpp"

namespace cellalg {

  std::size_t MonoidCellDatum::left_index(std::size_t node, std::size_t i, std::size_t s) const {
    auto [d, lambda] = source[node];
    return i * dclasses[d].gdata.datum.node(lambda).lsize + s;
  }

  std::size_t MonoidCellDatum::right_index(std::size_t node, std::size_t j, std::size_t t) const {
    auto [d, lambda] = source[node];
    return j * dclasses[d].gdata.datum.node(lambda).rsize + t;
  }

  MonoidCellDatum build_cell_datum(FiniteMonoid const& m, GreenStructure green,
                                   std::vector<EggBox> boxes, std::vector<SchutzGroup> groups,
                                   std::vector<GroupCellData> group_data, FieldSpec field) {
    std::size_t const nd = green.num_dclasses();
    if (boxes.size() != nd || groups.size() != nd || group_data.size() != nd) {
      throw std::invalid_argument("one egg-box, group and group datum per D-class is required");
    }
    std::vector<DClassData>                          dclasses(nd);
    std::vector<CellNode>                            nodes;
    std::vector<std::pair<std::size_t, std::size_t>> source;
    for (std::size_t d = 0; d < nd; ++d) {
      auto& dc = dclasses[d];
      dc.box   = std::move(boxes[d]);
      dc.group = std::move(groups[d]);
      dc.gdata = std::move(group_data[d]);
      auto const& gd = dc.gdata.datum;
      if (gd.dim() != dc.group.order() || gd.field() != field) {
        throw GroupMismatch("group datum for D-class " + std::to_string(d)
                            + " does not match its Schützenberger group");
      }
      auto gmult = group_oracle(dc.group, field);
      for (std::size_t lambda = 0; lambda < gd.num_nodes(); ++lambda) {
        dc.group_grams.push_back(group_gram(gmult, gd, lambda));
      }
      dc.group_lambda0    = group_lambda0(dc.group_grams);
      dc.group_semisimple = group_semisimple(dc.group_grams);
      dc.matched.assign(dc.box.num_rows(),
                        std::vector<std::optional<std::size_t>>(dc.box.num_cols()));
      for (std::size_t i = 0; i < dc.box.num_rows(); ++i) {
        for (std::size_t j = 0; j < dc.box.num_cols(); ++j) {
          dc.matched[i][j] = matched(m, dc.box, dc.group, i, j);
          dc.has_matched   = dc.has_matched || dc.matched[i][j].has_value();
        }
      }
      dc.bijection = bijection_condition(m, dc.box, dc.group);
      for (std::size_t lambda = 0; lambda < gd.num_nodes(); ++lambda) {
        dc.nodes.push_back(nodes.size());
        source.emplace_back(d, lambda);
        nodes.push_back({"D" + std::to_string(d) + ":" + gd.node(lambda).name,
                         dc.box.num_rows() * gd.node(lambda).lsize,
                         dc.box.num_cols() * gd.node(lambda).rsize});
      }
    }

    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      for (std::size_t b = 0; b < nodes.size(); ++b) {
        auto [d1, l1] = source[a];
        auto [d2, l2] = source[b];
        if (green.d_less(d1, d2) || (d1 == d2 && dclasses[d1].gdata.datum.greater(l1, l2))) {
          order.emplace_back(a, b);
        }
      }
    }

    std::vector<AlgebraElement>           basis;
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      auto [d, lambda]  = source[k];
      auto const& dc    = dclasses[d];
      auto const& gd    = dc.gdata.datum;
      std::size_t ld    = gd.node(lambda).lsize;
      std::size_t rd    = gd.node(lambda).rsize;
      for (std::size_t sf = 0; sf < nodes[k].lsize; ++sf) {
        std::size_t i = sf / ld, s = sf % ld;
        for (std::size_t tf = 0; tf < nodes[k].rsize; ++tf) {
          std::size_t    j = tf / rd, t = tf % rd;
          AlgebraElement v(field);
          for (auto const& [g, c] : gd.basis(lambda, s, t).coeffs()) {
            element_index x = m.product(dc.box.a[i], dc.box.gamma);
            x = m.product(x, dc.group.section[g]);
            x = m.product(x, dc.box.b[j]);
            v.add(x, c);
          }
          basis.push_back(std::move(v));
        }
      }
    }
    for (auto const& dc : dclasses) {
      for (auto const& row : dc.box.cells) {
        for (auto const& cell : row) {
          blocks.emplace_back(cell.begin(), cell.end());
        }
      }
    }
    CellDatum datum(field, m.size(), std::move(nodes), order, std::move(basis), std::move(blocks));
    return {m, field, std::move(green), std::move(dclasses), std::move(datum), std::move(source)};
  }

  MonoidCellDatum build_standard_structure(FiniteMonoid const& m, FieldSpec field,
                                           StructureOptions const& options) {
    GreenStructure             green = compute_green(m);
    std::vector<EggBox>        boxes;
    std::vector<SchutzGroup>   groups;
    std::vector<GroupCellData> data;
    for (std::size_t d = 0; d < green.num_dclasses(); ++d) {
      boxes.push_back(build_eggbox(m, green, d));
      groups.push_back(schutzenberger(m, boxes.back(), options.section));
      auto custom = options.custom.find(d);
      if (custom != options.custom.end()) {
        data.push_back(load_custom_datum(custom->second, groups.back(), field));
        continue;
      }
      try {
        data.push_back(automatic_group_datum(groups.back(), field, options.murphy_cap));
      } catch (GroupMismatch const& e) {
        throw UnsupportedGroup("D-class " + std::to_string(d) + ": " + e.what()
                               + "; supply a custom group datum");
      }
    }
    return build_cell_datum(m, std::move(green), std::move(boxes), std::move(groups),
                            std::move(data), field);
  }

  std::map<std::size_t, Scalar> to_cell_coordinates(MonoidCellDatum const& d,
                                                    AlgebraElement const&  x) {
    return d.datum.coordinates(x);
  }

  DenseMatrix gram_definition(MultiplicationOracle const& mult, MonoidCellDatum const& d,
                              std::size_t node) {
    return gram_matrix(mult, d.datum, node);
  }

  DenseMatrix gram_fast(MonoidCellDatum const& d, std::size_t node) {
    auto [dc_id, lambda] = d.source.at(node);
    auto const& dc       = d.dclasses[dc_id];
    auto const& gd       = dc.gdata.datum;
    auto const& gram_d   = dc.group_grams[lambda];
    std::size_t ld = gd.node(lambda).lsize, rd = gd.node(lambda).rsize;
    auto const  gmult = group_oracle(dc.group, d.field);

    // action[g][s][s'']: coefficient of _{s''}C_0 in g * _sC_0 modulo the
    // higher group nodes.
    std::map<std::size_t, std::vector<Vector>> action;
    auto act = [&](std::size_t g) -> std::vector<Vector> const& {
      auto it = action.find(g);
      if (it != action.end()) {
        return it->second;
      }
      std::vector<Vector> rows(ld, zero_vector(d.field, ld));
      for (std::size_t s = 0; s < ld; ++s) {
        auto coords = gd.coordinates(gmult.multiply(AlgebraElement::unit(d.field, g),
                                                    gd.basis(lambda, s, 0)));
        for (auto const& [k, c] : coords) {
          auto const& lab = gd.label(k);
          if (lab.node == lambda && lab.t == 0) {
            rows[s][lab.s] = c;
          }
        }
      }
      return action.emplace(g, std::move(rows)).first->second;
    };

    auto const& n = d.datum.node(node);
    DenseMatrix g(d.field, n.rsize, n.lsize);
    for (std::size_t i = 0; i < dc.box.num_rows(); ++i) {
      for (std::size_t j = 0; j < dc.box.num_cols(); ++j) {
        if (!dc.matched[i][j]) {
          continue;
        }
        auto const& r = act(*dc.matched[i][j]);
        for (std::size_t t = 0; t < rd; ++t) {
          for (std::size_t s = 0; s < ld; ++s) {
            Scalar v = Scalar::zero(d.field);
            for (std::size_t s2 = 0; s2 < ld; ++s2) {
              v += r[s][s2] * gram_d(t, s2);
            }
            g(j * rd + t, i * ld + s) = v;
          }
        }
      }
    }
    return g;
  }

  std::vector<std::size_t> lambda0_via_groups(MonoidCellDatum const& d) {
    std::vector<std::size_t> result;
    for (std::size_t node = 0; node < d.num_nodes(); ++node) {
      auto [dc_id, lambda] = d.source[node];
      auto const& dc       = d.dclasses[dc_id];
      if (dc.has_matched && !dc.group_grams[lambda].is_zero()) {
        result.push_back(node);
      }
    }
    return result;
  }

  Analysis analyze(MonoidCellDatum const& d, MultiplicationOracle const& mult) {
    Analysis a;
    a.quasi_hereditary = true;
    a.semisimple       = true;
    for (std::size_t node = 0; node < d.num_nodes(); ++node) {
      DenseMatrix g   = gram_definition(mult, d, node);
      std::size_t r   = rank(g);
      bool        in0 = r > 0;
      if (in0) {
        a.lambda0.push_back(node);
        a.sum_dims_squared += r * r;
      } else {
        a.quasi_hereditary = false;
        a.qh_failing.push_back(node);
      }
      if ((g.rows() != g.cols() || r != g.rows()) && a.semisimple) {
        a.semisimple         = false;
        a.semisimple_failing = node;
      }
      a.nodes.push_back({node, std::move(g), r, in0});
    }
    return a;
  }

  std::map<std::size_t, std::size_t> irreducible_dims(Analysis const& a) {
    std::map<std::size_t, std::size_t> dims;
    for (auto const& n : a.nodes) {
      if (n.in_lambda0) {
        dims.emplace(n.node, n.rank);
      }
    }
    return dims;
  }

}  // namespace cellalg

#include "cellalg/twist.hpp"

#include "cellalg/errors.hpp"

namespace cellalg {

  std::string twist_source_name(TwistSource source) {
    switch (source) {
      case TwistSource::trivial:
        return "trivial";
      case TwistSource::loop_delta:
        return "loop_delta";
      case TwistSource::file:
        return "file";
    }
    return "";
  }

  std::string compatibility_name(Compatibility c) {
    switch (c) {
      case Compatibility::incompatible:
        return "incompatible";
      case Compatibility::compatible:
        return "compatible";
      case Compatibility::strongly_compatible:
        return "strongly_compatible";
    }
    return "";
  }

  Twisting trivial_twisting(std::size_t size, FieldSpec field) {
    return {field,
            std::vector<std::vector<Scalar>>(size, std::vector<Scalar>(size, Scalar::one(field))),
            TwistSource::trivial, std::nullopt};
  }

  Twisting make_loop_twisting(LoopTable const& loops, Scalar const& delta) {
    Twisting pi{delta.field(), {}, TwistSource::loop_delta, delta};
    for (auto const& row : loops.loops) {
      std::vector<Scalar> values;
      for (auto k : row) {
        values.push_back(delta.pow(k));
      }
      pi.values.push_back(std::move(values));
    }
    return pi;
  }

  Twisting twisting_from_values(std::vector<std::vector<Scalar>> values, FieldSpec field) {
    for (auto const& row : values) {
      if (row.size() != values.size()) {
        throw FormatError("twisting table is not square");
      }
      for (auto const& v : row) {
        if (v.field() != field) {
          throw FieldMismatch("twisting value outside " + field.to_string());
        }
      }
    }
    return {field, std::move(values), TwistSource::file, std::nullopt};
  }

  std::optional<TwistWitness> verify_twisting(FiniteMonoid const& m, Twisting const& pi) {
    std::size_t const n = m.size();
    if (pi.values.size() != n) {
      throw FormatError("twisting table has " + std::to_string(pi.values.size())
                        + " rows for a monoid of size " + std::to_string(n));
    }
    element_index const id = m.identity();
    for (element_index x = 0; x < n; ++x) {
      if (!pi(x, id).is_one() || !pi(id, x).is_one()) {
        return TwistWitness{"unit", x, id, id};
      }
    }
    for (element_index x = 0; x < n; ++x) {
      for (element_index y = 0; y < n; ++y) {
        element_index xy = m.product(x, y);
        for (element_index z = 0; z < n; ++z) {
          if (!(pi(x, y) * pi(xy, z) == pi(x, m.product(y, z)) * pi(y, z))) {
            return TwistWitness{"cocycle", x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  CompatibilityReport compatibility_class(FiniteMonoid const& m, GreenStructure const& g,
                                          Twisting const& pi) {
    CompatibilityReport report;
    std::size_t const   n = m.size();
    auto demote = [&report](Compatibility c, CompatibilityWitness w) {
      if (c < report.cls) {
        report.cls     = c;
        report.witness = std::move(w);
      }
    };
    for (element_index a = 0; a < n; ++a) {
      for (element_index x = 0; x < n; ++x) {
        auto const& hx = g.hmembers[g.hclass[x]];
        if (g.dclass[m.product(a, x)] == g.dclass[x]) {
          if (pi(a, x).is_zero()) {
            demote(Compatibility::compatible, {"left", a, x, x, "zero"});
          }
          for (auto y : hx) {
            if (!(pi(a, y) == pi(a, x))) {
              demote(Compatibility::incompatible, {"left", a, x, y, "unequal"});
            }
          }
        }
        if (g.dclass[m.product(x, a)] == g.dclass[x]) {
          if (pi(x, a).is_zero()) {
            demote(Compatibility::compatible, {"right", a, x, x, "zero"});
          }
          for (auto y : hx) {
            if (!(pi(y, a) == pi(x, a))) {
              demote(Compatibility::incompatible, {"right", a, x, y, "unequal"});
            }
          }
        }
      }
    }
    for (element_index x = 0; x < n && report.lr; ++x) {
      for (auto y : g.lmembers[g.lclass[x]]) {
        for (element_index z = 0; z < n && report.lr; ++z) {
          report.lr = pi(x, z) == pi(y, z);
        }
      }
      for (auto y : g.rmembers[g.rclass[x]]) {
        for (element_index z = 0; z < n && report.lr; ++z) {
          report.lr = pi(z, x) == pi(z, y);
        }
      }
    }
    return report;
  }

  AlgebraElement twisted_multiply(FiniteMonoid const& m, Twisting const& pi, AlgebraElement const& x,
                                  AlgebraElement const& y) {
    AlgebraElement z(pi.field);
    for (auto const& [i, a] : x.coeffs()) {
      for (auto const& [j, b] : y.coeffs()) {
        auto xi = static_cast<element_index>(i);
        auto yj = static_cast<element_index>(j);
        z.add(m.product(xi, yj), a * b * pi(xi, yj));
      }
    }
    return z;
  }

  MultiplicationOracle twisted_oracle(FiniteMonoid const& m, Twisting const& pi) {
    return MultiplicationOracle::twisted(m, pi.field, pi.values);
  }

  TwistedCellDatum build_twisted_cell_datum(MonoidCellDatum const& d, Twisting pi) {
    if (pi.field != d.field) {
      throw FieldMismatch("twisting over " + pi.field.to_string() + ", datum over "
                          + d.field.to_string());
    }
    if (auto w = verify_twisting(d.monoid, pi)) {
      throw IncompatibleTwisting("not a twisting: " + w->kind + " law fails at ("
                                 + std::to_string(w->x) + ", " + std::to_string(w->y) + ", "
                                 + std::to_string(w->z) + ")");
    }
    auto compat = compatibility_class(d.monoid, d.green, pi);
    if (compat.cls == Compatibility::incompatible) {
      auto const& w = *compat.witness;
      throw IncompatibleTwisting("twisting is not compatible: " + w.side + " condition fails for a = "
                                 + std::to_string(w.a) + ", x = " + std::to_string(w.x)
                                 + ", y = " + std::to_string(w.y));
    }
    TwistedCellDatum t{&d, pi, compat, twisted_oracle(d.monoid, pi), {}};
    for (auto const& dc : d.dclasses) {
      auto const& box = dc.box;
      std::vector<std::vector<std::optional<Scalar>>> c(
          box.num_cols(), std::vector<std::optional<Scalar>>(box.num_rows()));
      for (std::size_t i = 0; i < box.num_rows(); ++i) {
        for (std::size_t j = 0; j < box.num_cols(); ++j) {
          if (dc.matched[i][j]) {
            c[j][i] = pi(d.monoid.product(box.gamma, box.b[j]), d.monoid.product(box.a[i], box.gamma));
          }
        }
      }
      t.scale.push_back(std::move(c));
    }
    return t;
  }

  DenseMatrix scaled_gram(TwistedCellDatum const& t, std::size_t node) {
    auto const& d        = *t.base;
    auto [dc_id, lambda] = d.source.at(node);
    auto const& dc       = d.dclasses[dc_id];
    auto const& gn       = dc.gdata.datum.node(lambda);
    DenseMatrix g        = gram_fast(d, node);
    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t c = 0; c < g.cols(); ++c) {
        auto const& scale = t.scale[dc_id][r / gn.rsize][c / gn.lsize];
        g(r, c) *= scale ? *scale : Scalar::zero(d.field);
      }
    }
    return g;
  }

  std::vector<std::size_t> twisted_lambda0_via_groups(TwistedCellDatum const& t) {
    auto const&              d = *t.base;
    std::vector<std::size_t> result;
    for (std::size_t node = 0; node < d.num_nodes(); ++node) {
      auto [dc_id, lambda] = d.source[node];
      bool nonzero_pair    = false;
      for (auto const& row : t.scale[dc_id]) {
        for (auto const& c : row) {
          nonzero_pair = nonzero_pair || (c && !c->is_zero());
        }
      }
      if (nonzero_pair && !d.dclasses[dc_id].group_grams[lambda].is_zero()) {
        result.push_back(node);
      }
    }
    return result;
  }

  Analysis twisted_analyses(TwistedCellDatum const& t) {
    return analyze(*t.base, t.mult);
  }

}  // namespace cellalg

#include "cellalg/verify.hpp"

#include <algorithm>
#include <numeric>

#include "cellalg/errors.hpp"
#include "cellalg/green.hpp"

namespace cellalg {

  std::string verify_mode_name(VerifyMode mode) {
    return mode == VerifyMode::full ? "full" : "generators";
  }

  namespace {
    // Checks one side for one acting element and node. For the left side
    // the coefficient of _{s'}C_t in a * _sC_t is recorded as r[s][s'] and
    // must not depend on t; the right side is the mirror image.
    std::optional<AxiomWitness> check_side(MultiplicationOracle const& mult, CellDatum const& d,
                                           std::size_t a, std::size_t node, bool left) {
      auto const&    n = d.node(node);
      AlgebraElement x = AlgebraElement::unit(d.field(), a);
      std::size_t    outer = left ? n.lsize : n.rsize;  // s (left) or t (right)
      std::size_t    inner = left ? n.rsize : n.lsize;  // t (left) or s (right)
      std::string    side  = left ? "left" : "right";
      std::vector<std::vector<Scalar>> first(outer, std::vector<Scalar>(outer, Scalar::zero(d.field())));
      for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t i = 0; i < inner; ++i) {
          std::size_t s = left ? o : i;
          std::size_t t = left ? i : o;
          auto const  product = left ? mult.multiply(x, d.basis(node, s, t))
                                     : mult.multiply(d.basis(node, s, t), x);
          std::vector<Scalar> row(outer, Scalar::zero(d.field()));
          for (auto const& [k, c] : d.coordinates(product)) {
            auto const& lab = d.label(k);
            if (d.greater(lab.node, node)) {
              continue;
            }
            bool same_line = lab.node == node && (left ? lab.t == t : lab.s == s);
            if (!same_line) {
              return AxiomWitness{a, node, side, s, t,
                                  "product has a coefficient at " + d.node(lab.node).name
                                      + " outside the expected span"};
            }
            row[left ? lab.s : lab.t] = c;
          }
          if (i == 0) {
            first[o] = std::move(row);
          } else if (row != first[o]) {
            return AxiomWitness{a, node, side, s, t,
                                std::string("coefficients depend on the ")
                                    + (left ? "right index t" : "left index s")};
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  AxiomReport verify_cell_axioms(MultiplicationOracle const& mult, CellDatum const& d,
                                 std::vector<std::size_t> const& acting, VerifyMode mode) {
    AxiomReport report;
    report.mode = mode;
    for (auto a : acting) {
      ++report.checked;
      for (std::size_t node = 0; node < d.num_nodes(); ++node) {
        for (bool left : {true, false}) {
          if (auto w = check_side(mult, d, a, node, left)) {
            report.ok      = false;
            report.witness = std::move(w);
            return report;
          }
        }
      }
    }
    return report;
  }

  std::vector<std::size_t> all_elements(std::size_t dim) {
    std::vector<std::size_t> v(dim);
    for (std::size_t x = 0; x < dim; ++x) {
      v[x] = x;
    }
    return v;
  }

  std::vector<std::size_t> greedy_generators(FiniteMonoid const& m) {
    std::size_t const        n = m.size();
    std::vector<bool>        reached(n, false);
    std::vector<std::size_t> gens;
    std::vector<element_index> members{m.identity()};
    reached[m.identity()] = true;
    // Candidates from the top of the D-order down, then by index.
    auto const                 green = compute_green(m);
    std::vector<std::size_t>   height(green.num_dclasses(), 0);
    for (std::size_t d1 = 0; d1 < green.num_dclasses(); ++d1) {
      for (std::size_t d2 = 0; d2 < green.num_dclasses(); ++d2) {
        height[d2] += green.d_less(d1, d2);
      }
    }
    std::vector<element_index> order(n);
    std::iota(order.begin(), order.end(), element_index{0});
    std::stable_sort(order.begin(), order.end(), [&](element_index a, element_index b) {
      return height[green.dclass[a]] > height[green.dclass[b]];
    });
    for (auto x : order) {
      if (reached[x]) {
        continue;
      }
      gens.push_back(x);
      // Close the submonoid under right multiplication by generators.
      members.clear();
      std::fill(reached.begin(), reached.end(), false);
      members.push_back(m.identity());
      reached[m.identity()] = true;
      for (std::size_t q = 0; q < members.size(); ++q) {
        for (auto g : gens) {
          element_index y = m.product(members[q], static_cast<element_index>(g));
          if (!reached[y]) {
            reached[y] = true;
            members.push_back(y);
          }
        }
      }
    }
    return gens;
  }

  bool trace_form_semisimple(MultiplicationOracle const& mult) {
    if (!mult.field().is_rationals()) {
      throw WrongCharacteristic("the trace form criterion needs characteristic zero, not "
                                + mult.field().to_string());
    }
    std::size_t const n     = mult.dim();
    FieldSpec const   field = mult.field();
    // tau[k] = trace of left multiplication by e_k.
    Vector tau = zero_vector(field, n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (mult.product_index(k, j) == j) {
          tau[k] += mult.weight(k, j);
        }
      }
    }
    DenseMatrix b(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        b(i, j) = mult.weight(i, j) * tau[mult.product_index(i, j)];
      }
    }
    return rank(b) == n;
  }

}  // namespace cellalg

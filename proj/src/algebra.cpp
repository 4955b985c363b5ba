#include "cellalg/algebra.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cellalg/errors.hpp"

namespace cellalg {

  namespace {
    constexpr std::size_t npos_block = std::numeric_limits<std::size_t>::max();
  }

  AlgebraElement AlgebraElement::unit(FieldSpec field, std::size_t index) {
    AlgebraElement x(field);
    x._coeffs.emplace(index, Scalar::one(field));
    return x;
  }

  Scalar AlgebraElement::coefficient(std::size_t index) const {
    auto it = _coeffs.find(index);
    return it == _coeffs.end() ? Scalar::zero(_field) : it->second;
  }

  void AlgebraElement::add(std::size_t index, Scalar const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = _coeffs.emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        _coeffs.erase(it);
      }
    }
  }

  AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
    for (auto const& [k, c] : other._coeffs) {
      add(k, c);
    }
    return *this;
  }

  AlgebraElement& AlgebraElement::operator*=(Scalar const& c) {
    if (c.is_zero()) {
      _coeffs.clear();
      return *this;
    }
    for (auto& [k, v] : _coeffs) {
      v *= c;
    }
    return *this;
  }

  MultiplicationOracle MultiplicationOracle::monoid(FiniteMonoid const& m, FieldSpec field) {
    MultiplicationOracle o;
    o._dim      = m.size();
    o._identity = m.identity();
    o._field    = field;
    o._table.reserve(o._dim * o._dim);
    for (element_index x = 0; x < o._dim; ++x) {
      for (element_index y = 0; y < o._dim; ++y) {
        o._table.push_back(m.product(x, y));
      }
    }
    return o;
  }

  MultiplicationOracle MultiplicationOracle::twisted(FiniteMonoid const& m, FieldSpec field,
                                                     std::vector<std::vector<Scalar>> const& weights) {
    MultiplicationOracle o = monoid(m, field);
    if (weights.size() != o._dim) {
      throw std::invalid_argument("twisting has the wrong number of rows");
    }
    o._weights.reserve(o._dim * o._dim);
    for (auto const& row : weights) {
      if (row.size() != o._dim) {
        throw std::invalid_argument("twisting has a row of the wrong length");
      }
      for (auto const& w : row) {
        if (w.field() != field) {
          throw FieldMismatch("twisting values lie in " + w.field().to_string() + ", expected "
                              + field.to_string());
        }
        o._weights.push_back(w);
      }
    }
    return o;
  }

  MultiplicationOracle MultiplicationOracle::group(std::vector<std::vector<std::size_t>> const& mult,
                                                   std::size_t identity, FieldSpec field) {
    MultiplicationOracle o;
    o._dim      = mult.size();
    o._identity = identity;
    o._field    = field;
    for (auto const& row : mult) {
      o._table.insert(o._table.end(), row.begin(), row.end());
    }
    return o;
  }

  Scalar MultiplicationOracle::weight(std::size_t x, std::size_t y) const {
    return _weights.empty() ? Scalar::one(_field) : _weights[x * _dim + y];
  }

  AlgebraElement MultiplicationOracle::multiply(AlgebraElement const& x,
                                                AlgebraElement const& y) const {
    AlgebraElement z(_field);
    for (auto const& [i, a] : x.coeffs()) {
      for (auto const& [j, b] : y.coeffs()) {
        Scalar c = a * b;
        if (!_weights.empty()) {
          c *= _weights[i * _dim + j];
        }
        z.add(_table[i * _dim + j], c);
      }
    }
    return z;
  }

  CellDatum::CellDatum(FieldSpec field, std::size_t dim, std::vector<CellNode> nodes,
                       std::vector<std::pair<std::size_t, std::size_t>> const& greater,
                       std::vector<AlgebraElement> basis, std::vector<std::vector<std::size_t>> blocks)
      : _field(field), _dim(dim), _nodes(std::move(nodes)), _basis(std::move(basis)) {
    std::size_t const k = _nodes.size();
    _greater.assign(k, std::vector<bool>(k, false));
    for (auto [a, b] : greater) {
      if (a >= k || b >= k) {
        throw std::invalid_argument("order relation names an unknown node");
      }
      _greater[a][b] = true;
    }
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t a = 0; a < k; ++a) {
        if (!_greater[a][m]) {
          continue;
        }
        for (std::size_t b = 0; b < k; ++b) {
          if (_greater[m][b]) {
            _greater[a][b] = true;
          }
        }
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      if (_greater[a][a]) {
        throw std::invalid_argument("node order has a cycle through " + _nodes[a].name);
      }
    }

    std::size_t total = 0;
    for (std::size_t n = 0; n < k; ++n) {
      _offset.push_back(total);
      for (std::size_t s = 0; s < _nodes[n].lsize; ++s) {
        for (std::size_t t = 0; t < _nodes[n].rsize; ++t) {
          _labels.push_back({n, s, t});
        }
      }
      total += _nodes[n].lsize * _nodes[n].rsize;
    }
    if (total != _basis.size()) {
      throw NotABasis("index sets describe " + std::to_string(total) + " vectors but "
                      + std::to_string(_basis.size()) + " were given");
    }
    if (total != _dim) {
      throw NotABasis("basis has " + std::to_string(total) + " vectors, carrier has dimension "
                      + std::to_string(_dim));
    }

    if (blocks.empty()) {
      std::vector<std::size_t> all(_dim);
      for (std::size_t x = 0; x < _dim; ++x) {
        all[x] = x;
      }
      blocks.push_back(std::move(all));
    }
    _block_of.assign(_dim, npos_block);
    _blocks.resize(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      auto& carrier = blocks[b];
      std::sort(carrier.begin(), carrier.end());
      for (auto x : carrier) {
        if (x >= _dim || _block_of[x] != npos_block) {
          throw std::invalid_argument("solver blocks do not partition the carrier");
        }
        _block_of[x] = b;
      }
      _blocks[b].carrier = carrier;
    }
    for (std::size_t x = 0; x < _dim; ++x) {
      if (_block_of[x] == npos_block) {
        throw std::invalid_argument("solver blocks do not cover the carrier");
      }
    }
    for (std::size_t i = 0; i < _basis.size(); ++i) {
      auto const& v = _basis[i];
      if (v.field() != _field) {
        throw FieldMismatch("basis vector over the wrong field");
      }
      if (v.is_zero()) {
        throw NotABasis("basis vector " + std::to_string(i) + " is zero");
      }
      std::size_t b = _block_of.at(v.coeffs().begin()->first);
      for (auto const& [x, c] : v.coeffs()) {
        if (x >= _dim || _block_of[x] != b) {
          throw NotABasis("basis vector " + std::to_string(i) + " is not supported in one block");
        }
      }
      _blocks[b].basis.push_back(i);
    }
    for (auto& block : _blocks) {
      std::size_t const n = block.carrier.size();
      if (block.basis.size() != n) {
        throw NotABasis("a block of dimension " + std::to_string(n) + " carries "
                        + std::to_string(block.basis.size()) + " basis vectors");
      }
      DenseMatrix m(_field, n, n);
      for (std::size_t c = 0; c < n; ++c) {
        for (auto const& [x, v] : _basis[block.basis[c]].coeffs()) {
          auto r = static_cast<std::size_t>(
              std::lower_bound(block.carrier.begin(), block.carrier.end(), x)
              - block.carrier.begin());
          m(r, c) = v;
        }
      }
      auto inv = inverse(m);
      if (!inv) {
        throw NotABasis("basis vectors are linearly dependent");
      }
      block.inverse = std::move(*inv);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> CellDatum::order_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t a = 0; a < _nodes.size(); ++a) {
      for (std::size_t b = 0; b < _nodes.size(); ++b) {
        if (_greater[a][b]) {
          result.emplace_back(a, b);
        }
      }
    }
    return result;
  }

  std::map<std::size_t, Scalar> CellDatum::coordinates(AlgebraElement const& x) const {
    std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> by_block;
    for (auto const& [i, c] : x.coeffs()) {
      by_block[_block_of.at(i)].emplace_back(i, c);
    }
    std::map<std::size_t, Scalar> result;
    for (auto const& [b, entries] : by_block) {
      auto const& block = _blocks[b];
      std::size_t n     = block.carrier.size();
      Vector      v     = zero_vector(_field, n);
      for (auto const& [i, c] : entries) {
        auto r = static_cast<std::size_t>(
            std::lower_bound(block.carrier.begin(), block.carrier.end(), i) - block.carrier.begin());
        v[r] = c;
      }
      Vector w = block.inverse.apply(v);
      for (std::size_t k = 0; k < n; ++k) {
        if (!w[k].is_zero()) {
          result.emplace(block.basis[k], w[k]);
        }
      }
    }
    return result;
  }

  Scalar bracket(MultiplicationOracle const& mult, CellDatum const& d, std::size_t node,
                 std::size_t t, std::size_t s, std::size_t ref_s, std::size_t ref_t) {
    AlgebraElement product = mult.multiply(d.basis(node, ref_s, t), d.basis(node, s, ref_t));
    auto           coords  = d.coordinates(product);
    auto           it      = coords.find(d.index(node, ref_s, ref_t));
    return it == coords.end() ? Scalar::zero(d.field()) : it->second;
  }

  DenseMatrix gram_matrix(MultiplicationOracle const& mult, CellDatum const& d, std::size_t node,
                          std::size_t ref_s, std::size_t ref_t) {
    auto const& n = d.node(node);
    DenseMatrix g(d.field(), n.rsize, n.lsize);
    for (std::size_t t = 0; t < n.rsize; ++t) {
      for (std::size_t s = 0; s < n.lsize; ++s) {
        g(t, s) = bracket(mult, d, node, t, s, ref_s, ref_t);
      }
    }
    return g;
  }

  std::optional<std::string> check_bracket(MultiplicationOracle const& mult, CellDatum const& d,
                                           std::size_t node, bool exhaustive) {
    auto const& n = d.node(node);
    if (n.lsize == 0 || n.rsize == 0) {
      return std::nullopt;
    }
    DenseMatrix reference = gram_matrix(mult, d, node);
    for (std::size_t rs = 0; rs < n.lsize; ++rs) {
      for (std::size_t rt = 0; rt < n.rsize; ++rt) {
        bool last = rs + 1 == n.lsize && rt + 1 == n.rsize;
        if (!exhaustive && !last) {
          continue;
        }
        for (std::size_t t = 0; t < n.rsize; ++t) {
          for (std::size_t s = 0; s < n.lsize; ++s) {
            auto coords = d.coordinates(mult.multiply(d.basis(node, rs, t), d.basis(node, s, rt)));
            for (auto const& [k, c] : coords) {
              auto const& lab = d.label(k);
              if (d.greater(lab.node, node)) {
                continue;
              }
              if (lab.node == node && lab.s == rs && lab.t == rt) {
                if (!(c == reference(t, s))) {
                  return "bracket at " + n.name + " depends on the reference indices (t = "
                         + std::to_string(t) + ", s = " + std::to_string(s) + ")";
                }
              } else {
                return "product of " + n.name + " basis vectors leaves the expected line (t = "
                       + std::to_string(t) + ", s = " + std::to_string(s) + ")";
              }
            }
            if (!reference(t, s).is_zero()
                && coords.find(d.index(node, rs, rt)) == coords.end()) {
              return "bracket at " + n.name + " vanishes for another reference choice";
            }
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace cellalg

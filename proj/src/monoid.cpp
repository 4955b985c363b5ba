#include "cellalg/monoid.hpp"

#include "cellalg/errors.hpp"

namespace cellalg {

  FiniteMonoid FiniteMonoid::from_cayley_table(std::size_t                             size,
                                               element_index                           identity,
                                               std::vector<std::vector<element_index>> table,
                                               std::vector<std::string>                labels) {
    if (size == 0) {
      throw FormatError("a monoid needs at least one element");
    }
    if (identity >= size) {
      throw FormatError("identity index out of range");
    }
    if (table.size() != size) {
      throw FormatError("Cayley table has " + std::to_string(table.size())
                        + " rows, expected " + std::to_string(size));
    }
    if (labels.empty()) {
      for (std::size_t x = 0; x < size; ++x) {
        labels.push_back(std::to_string(x));
      }
    }
    if (labels.size() != size) {
      throw FormatError("label count does not match size");
    }
    FiniteMonoid m;
    m._size     = size;
    m._identity = identity;
    m._labels   = std::move(labels);
    m._table.reserve(size * size);
    for (auto const& row : table) {
      if (row.size() != size) {
        throw FormatError("Cayley table row has wrong length");
      }
      for (auto v : row) {
        if (v >= size) {
          throw FormatError("Cayley table entry out of range");
        }
        m._table.push_back(v);
      }
    }
    for (element_index x = 0; x < size; ++x) {
      if (m.product(identity, x) != x || m.product(x, identity) != x) {
        throw BadIdentity(x);
      }
    }
    for (element_index x = 0; x < size; ++x) {
      for (element_index y = 0; y < size; ++y) {
        element_index xy = m.product(x, y);
        for (element_index z = 0; z < size; ++z) {
          if (m.product(xy, z) != m.product(x, m.product(y, z))) {
            throw NotAssociative(x, y, z);
          }
        }
      }
    }
    return m;
  }

  std::vector<std::vector<element_index>> FiniteMonoid::table() const {
    std::vector<std::vector<element_index>> rows(_size);
    for (std::size_t x = 0; x < _size; ++x) {
      rows[x].assign(_table.begin() + x * _size, _table.begin() + (x + 1) * _size);
    }
    return rows;
  }

  FiniteMonoid null_extension_monoid() {
    // 0 = 1 (identity), 1 = a, 2 = zero
    return FiniteMonoid::from_cayley_table(
        3, 0, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, {"1", "a", "0"});
  }

  std::vector<element_index> idempotents(FiniteMonoid const& m) {
    std::vector<element_index> result;
    for (element_index x = 0; x < m.size(); ++x) {
      if (m.product(x, x) == x) {
        result.push_back(x);
      }
    }
    return result;
  }

  bool is_regular(FiniteMonoid const& m) {
    for (element_index x = 0; x < m.size(); ++x) {
      bool found = false;
      for (element_index y = 0; y < m.size() && !found; ++y) {
        found = m.product(m.product(x, y), x) == x;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool is_inverse(FiniteMonoid const& m) {
    for (element_index x = 0; x < m.size(); ++x) {
      std::size_t count = 0;
      for (element_index y = 0; y < m.size(); ++y) {
        if (m.product(m.product(x, y), x) == x && m.product(m.product(y, x), y) == y) {
          ++count;
        }
      }
      if (count != 1) {
        return false;
      }
    }
    return true;
  }

}  // namespace cellalg

#include <algorithm>
#include <map>
#include <numeric>

#include "cellalg/errors.hpp"
#include "cellalg/groupcell.hpp"

namespace cellalg {

  namespace {
    void partitions_into(unsigned remaining, unsigned largest, Partition& prefix,
                         std::vector<Partition>& out) {
      if (remaining == 0) {
        out.push_back(prefix);
        return;
      }
      for (unsigned part = std::min(remaining, largest); part >= 1; --part) {
        prefix.push_back(part);
        partitions_into(remaining - part, part, prefix, out);
        prefix.pop_back();
      }
    }

    // Fills the cells of lambda in reading order with the entries chosen so
    // far; entries are placed one at a time in increasing order.
    void tableaux_into(Partition const& lambda, unsigned next, unsigned n, Tableau& t,
                       std::vector<Tableau>& out) {
      if (next > n) {
        out.push_back(t);
        return;
      }
      for (std::size_t r = 0; r < lambda.size(); ++r) {
        std::size_t c = t[r].size();
        if (c == lambda[r]) {
          continue;
        }
        if (r > 0 && t[r - 1].size() <= c) {
          continue;
        }
        t[r].push_back(next);
        tableaux_into(lambda, next + 1, n, t, out);
        t[r].pop_back();
      }
    }

    Permutation compose(Permutation const& x, Permutation const& y) {
      Permutation z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = y[x[i]];
      }
      return z;
    }

    std::size_t element_order(std::vector<std::vector<std::size_t>> const& mult,
                              std::size_t identity, std::size_t g) {
      std::size_t k = 1;
      for (std::size_t x = g; x != identity; x = mult[x][g]) {
        ++k;
        if (k > mult.size()) {
          break;
        }
      }
      return k;
    }
  }  // namespace

  std::vector<Partition> partitions(unsigned n) {
    std::vector<Partition> out;
    Partition              prefix;
    partitions_into(n, n, prefix, out);
    return out;
  }

  bool dominates(Partition const& lambda, Partition const& mu) {
    unsigned a = 0, b = 0;
    for (std::size_t k = 0; k < std::max(lambda.size(), mu.size()); ++k) {
      a += k < lambda.size() ? lambda[k] : 0;
      b += k < mu.size() ? mu[k] : 0;
      if (a < b) {
        return false;
      }
    }
    return true;
  }

  std::string partition_name(Partition const& lambda) {
    std::string s = "(";
    for (std::size_t k = 0; k < lambda.size(); ++k) {
      s += (k > 0 ? "," : "") + std::to_string(lambda[k]);
    }
    return s + ")";
  }

  std::vector<Tableau> standard_tableaux(Partition const& lambda) {
    unsigned const       n = std::accumulate(lambda.begin(), lambda.end(), 0u);
    Tableau              t(lambda.size());
    std::vector<Tableau> out;
    tableaux_into(lambda, 1, n, t, out);
    std::sort(out.begin(), out.end(), [](Tableau const& x, Tableau const& y) {
      return reading_word(x) < reading_word(y);
    });
    return out;
  }

  std::vector<unsigned> reading_word(Tableau const& t) {
    std::vector<unsigned> w;
    for (auto const& row : t) {
      w.insert(w.end(), row.begin(), row.end());
    }
    return w;
  }

  SymmetricGroup::SymmetricGroup(unsigned n) : _n(n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0u);
    do {
      _elements.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::size_t const k = _elements.size();
    _mult.assign(k, std::vector<std::size_t>(k, 0));
    _inverse.assign(k, 0);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        _mult[x][y] = index(compose(_elements[x], _elements[y]));
        if (_mult[x][y] == 0) {
          _inverse[x] = y;
        }
      }
    }
  }

  std::size_t SymmetricGroup::index(Permutation const& p) const {
    auto it = std::lower_bound(_elements.begin(), _elements.end(), p);
    if (it == _elements.end() || *it != p) {
      throw std::invalid_argument("not a permutation of the right degree");
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  std::string permutation_name(Permutation const& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
      s += (i > 0 ? "," : "") + std::to_string(p[i] + 1);
    }
    return s + "]";
  }

  GroupCellData murphy_datum(unsigned n, FieldSpec field, unsigned cap) {
    if (n == 0) {
      throw std::invalid_argument("S_n needs n >= 1");
    }
    if (n > cap) {
      throw SizeCapExceeded("Murphy basis requested for S_" + std::to_string(n)
                            + ", above the cap of " + std::to_string(cap));
    }
    SymmetricGroup const sn(n);
    auto const           parts = partitions(n);

    std::vector<CellNode>                            nodes;
    std::vector<std::pair<std::size_t, std::size_t>> order;
    std::vector<AlgebraElement>                      basis;
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = 0; b < parts.size(); ++b) {
        if (a != b && dominates(parts[a], parts[b])) {
          order.emplace_back(a, b);
        }
      }
    }
    for (auto const& lambda : parts) {
      auto const tabs = standard_tableaux(lambda);
      nodes.push_back({partition_name(lambda), tabs.size(), tabs.size()});

      // x_lambda: the row stabilizer of t^lambda, whose rows are
      // consecutive runs of entries.
      std::vector<unsigned> row_of(n);
      unsigned              entry = 0;
      for (std::size_t r = 0; r < lambda.size(); ++r) {
        for (unsigned c = 0; c < lambda[r]; ++c) {
          row_of[entry++] = static_cast<unsigned>(r);
        }
      }
      std::vector<std::size_t> stabilizer;
      for (std::size_t g = 0; g < sn.order(); ++g) {
        auto const& p  = sn.element(g);
        bool        ok = true;
        for (unsigned i = 0; i < n && ok; ++i) {
          ok = row_of[p[i]] == row_of[i];
        }
        if (ok) {
          stabilizer.push_back(g);
        }
      }

      std::vector<std::size_t> d;
      for (auto const& t : tabs) {
        auto        w = reading_word(t);
        Permutation p(n);
        for (unsigned k = 0; k < n; ++k) {
          p[k] = w[k] - 1;
        }
        d.push_back(sn.index(p));
      }
      for (std::size_t s = 0; s < tabs.size(); ++s) {
        for (std::size_t t = 0; t < tabs.size(); ++t) {
          AlgebraElement m(field);
          for (auto w : stabilizer) {
            m.add(sn.mult()[sn.mult()[sn.inverse(d[s])][w]][d[t]], Scalar::one(field));
          }
          basis.push_back(std::move(m));
        }
      }
    }
    return {GroupKind::symmetric, n,
            CellDatum(field, sn.order(), std::move(nodes), order, std::move(basis))};
  }

  std::vector<std::size_t> symmetric_isomorphism(SymmetricGroup const&                        sn,
                                                 std::vector<std::vector<std::size_t>> const& mult) {
    std::size_t const k = sn.order();
    if (mult.size() != k) {
      throw GroupMismatch("group of order " + std::to_string(mult.size()) + " is not S_"
                          + std::to_string(sn.degree()));
    }
    unsigned const n = sn.degree();
    std::size_t    identity = 0;
    for (std::size_t g = 0; g < k; ++g) {
      bool is_identity = true;
      for (std::size_t h = 0; h < k && is_identity; ++h) {
        is_identity = mult[g][h] == h;
      }
      if (is_identity) {
        identity = g;
        break;
      }
    }
    Permutation transposition(n), cycle(n);
    std::iota(transposition.begin(), transposition.end(), 0u);
    std::swap(transposition[0], transposition[1]);
    for (unsigned i = 0; i < n; ++i) {
      cycle[i] = (i + 1) % n;
    }
    std::size_t const gens[2] = {sn.index(transposition), sn.index(cycle)};
    std::size_t const orders[2] = {2, n};

    for (std::size_t x = 0; x < k; ++x) {
      if (element_order(mult, identity, x) != orders[0]) {
        continue;
      }
      for (std::size_t y = 0; y < k; ++y) {
        if (element_order(mult, identity, y) != orders[1]) {
          continue;
        }
        std::size_t const        images[2] = {x, y};
        std::vector<std::size_t> f(k, k);
        f[0] = identity;
        std::vector<std::size_t> queue{0};
        for (std::size_t q = 0; q < queue.size(); ++q) {
          std::size_t w = queue[q];
          for (int g = 0; g < 2; ++g) {
            std::size_t v = sn.mult()[w][gens[g]];
            if (f[v] == k) {
              f[v] = mult[f[w]][images[g]];
              queue.push_back(v);
            }
          }
        }
        if (queue.size() != k) {
          continue;
        }
        std::vector<bool> hit(k, false);
        bool              ok = true;
        for (std::size_t a = 0; a < k && ok; ++a) {
          ok     = !hit[f[a]];
          hit[f[a]] = true;
        }
        for (std::size_t a = 0; a < k && ok; ++a) {
          for (std::size_t b = 0; b < k && ok; ++b) {
            ok = f[sn.mult()[a][b]] == mult[f[a]][f[b]];
          }
        }
        if (ok) {
          return f;
        }
      }
    }
    throw GroupMismatch("no isomorphism from S_" + std::to_string(n) + " onto the group");
  }

  CellDatum transport(CellDatum const& d, std::vector<std::size_t> const& carrier_map) {
    std::vector<AlgebraElement> basis;
    for (auto const& v : d.basis_vectors()) {
      AlgebraElement w(d.field());
      for (auto const& [x, c] : v.coeffs()) {
        w.add(carrier_map.at(x), c);
      }
      basis.push_back(std::move(w));
    }
    return CellDatum(d.field(), d.dim(), d.nodes(), d.order_pairs(), std::move(basis));
  }

}  // namespace cellalg

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "cellalg/errors.hpp"
#include "cellalg/monoid.hpp"

namespace cellalg {

  namespace {
    // Maps on {0..r-1}; the value r stands for "undefined".
    using Map = std::vector<unsigned>;

    Map compose_maps(Map const& x, Map const& y, unsigned r) {
      Map z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = x[i] == r ? r : y[x[i]];
      }
      return z;
    }

    std::string map_label(Map const& x, unsigned r, bool partial) {
      std::string s = "[";
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) {
          s += ",";
        }
        s += (partial && x[i] == r) ? std::string("-") : std::to_string(x[i] + 1);
      }
      return s + "]";
    }

    template <typename T, typename Compose, typename Label>
    FiniteMonoid tabulate(std::vector<T> const& elements, Compose&& compose, Label&& label) {
      std::map<T, element_index> index;
      for (std::size_t i = 0; i < elements.size(); ++i) {
        index.emplace(elements[i], static_cast<element_index>(i));
      }
      std::vector<std::vector<element_index>> table(elements.size());
      std::vector<std::string>                labels;
      for (std::size_t x = 0; x < elements.size(); ++x) {
        table[x].reserve(elements.size());
        for (std::size_t y = 0; y < elements.size(); ++y) {
          auto it = index.find(compose(elements[x], elements[y]));
          if (it == index.end()) {
            throw std::logic_error("element set is not closed under composition");
          }
          table[x].push_back(it->second);
        }
        labels.push_back(label(elements[x]));
      }
      return FiniteMonoid::from_cayley_table(elements.size(), 0, std::move(table),
                                             std::move(labels));
    }

    // All maps with values in [0, values), lexicographic, then filtered and
    // with the identity moved to the front.
    template <typename Keep>
    std::vector<Map> enumerate_maps(unsigned n, unsigned values, Keep&& keep) {
      std::vector<Map> result;
      Map              identity(n);
      for (unsigned i = 0; i < n; ++i) {
        identity[i] = i;
      }
      result.push_back(identity);
      Map x(n, 0);
      while (true) {
        if (x != identity && keep(x)) {
          result.push_back(x);
        }
        // increment, first coordinate most significant
        int pos = static_cast<int>(n) - 1;
        while (pos >= 0 && x[pos] + 1 == values) {
          x[pos] = 0;
          --pos;
        }
        if (pos < 0) {
          break;
        }
        ++x[pos];
      }
      return result;
    }

    std::size_t checked_mul(std::size_t a, std::size_t b) {
      if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
        return std::numeric_limits<std::size_t>::max();
      }
      return a * b;
    }

    std::size_t binomial(std::size_t n, std::size_t k) {
      std::size_t r = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i) / i;
      }
      return r;
    }
  }  // namespace

  FiniteMonoid generate_from_maps(std::size_t r, std::vector<PartialMap> const& generators,
                                  std::size_t cap) {
    auto const undefined = static_cast<unsigned>(r);
    bool       partial   = false;
    std::vector<Map> gens;
    for (auto const& g : generators) {
      if (g.size() != r) {
        throw FormatError("generator has " + std::to_string(g.size())
                          + " entries, expected " + std::to_string(r));
      }
      Map m(r);
      for (std::size_t i = 0; i < r; ++i) {
        if (!g[i]) {
          partial = true;
          m[i]    = undefined;
        } else if (*g[i] >= r) {
          throw FormatError("generator value out of range");
        } else {
          m[i] = *g[i];
        }
      }
      gens.push_back(std::move(m));
    }
    Map identity(r);
    for (unsigned i = 0; i < r; ++i) {
      identity[i] = i;
    }
    std::vector<Map>          elements{identity};
    std::map<Map, std::size_t> seen{{identity, 0}};
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : gens) {
        Map z = compose_maps(elements[i], g, undefined);
        if (seen.emplace(z, elements.size()).second) {
          elements.push_back(std::move(z));
          if (elements.size() > cap) {
            throw SizeCapExceeded("generated monoid exceeds " + std::to_string(cap)
                                  + " elements");
          }
        }
      }
    }
    return tabulate(
        elements,
        [undefined](Map const& x, Map const& y) { return compose_maps(x, y, undefined); },
        [undefined, partial](Map const& x) { return map_label(x, undefined, partial); });
  }

  Family parse_family(std::string const& name) {
    if (name == "tfull") {
      return Family::tfull;
    }
    if (name == "tpartial") {
      return Family::tpartial;
    }
    if (name == "syminv") {
      return Family::syminv;
    }
    if (name == "jones") {
      return Family::jones;
    }
    throw FormatError("unknown family \"" + name + "\"");
  }

  std::string family_name(Family f) {
    switch (f) {
      case Family::tfull:
        return "tfull";
      case Family::tpartial:
        return "tpartial";
      case Family::syminv:
        return "syminv";
      case Family::jones:
        return "jones";
    }
    return "";
  }

  std::size_t family_size(Family f, std::size_t n) {
    std::size_t result = 1;
    switch (f) {
      case Family::tfull:
        for (std::size_t i = 0; i < n; ++i) {
          result = checked_mul(result, n);
        }
        return result;
      case Family::tpartial:
        for (std::size_t i = 0; i < n; ++i) {
          result = checked_mul(result, n + 1);
        }
        return result;
      case Family::syminv: {
        result = 0;
        for (std::size_t k = 0; k <= n; ++k) {
          std::size_t c    = binomial(n, k);
          std::size_t term = checked_mul(c, c);
          for (std::size_t i = 2; i <= k; ++i) {
            term = checked_mul(term, i);
          }
          result += term;
        }
        return result;
      }
      case Family::jones:
        return binomial(2 * n, n) / (n + 1);
    }
    return 0;
  }

  namespace diagram {
    Matching identity(std::size_t n) {
      Matching m(2 * n);
      for (unsigned i = 0; i < n; ++i) {
        m[i]     = static_cast<unsigned>(n) + i;
        m[n + i] = i;
      }
      return m;
    }

    std::pair<Matching, unsigned> compose(Matching const& x, Matching const& y) {
      auto const        n = static_cast<unsigned>(x.size() / 2);
      std::vector<bool> middle_seen(n, false);
      // Follow a strand starting at point p of x (from_x) or of y until it
      // leaves through the top of x or the bottom of y.
      auto follow = [&](bool from_x, unsigned p) -> unsigned {
        while (true) {
          if (from_x) {
            unsigned q = x[p];
            if (q < n) {
              return q;
            }
            middle_seen[q - n] = true;
            p                  = q - n;
            from_x             = false;
          } else {
            unsigned q = y[p];
            if (q >= n) {
              return q;
            }
            middle_seen[q] = true;
            p              = n + q;
            from_x         = true;
          }
        }
      };
      Matching z(2 * n);
      for (unsigned p = 0; p < n; ++p) {
        z[p] = follow(true, p);
      }
      for (unsigned p = n; p < 2 * n; ++p) {
        z[p] = follow(false, p);
      }
      unsigned loops = 0;
      for (unsigned m = 0; m < n; ++m) {
        if (middle_seen[m]) {
          continue;
        }
        ++loops;
        unsigned cur = m;
        do {
          middle_seen[cur] = true;
          unsigned next    = x[n + cur] - n;
          middle_seen[next] = true;
          cur               = y[next];
        } while (cur != m);
      }
      return {z, loops};
    }

    std::string label(Matching const& x) {
      auto const n    = x.size() / 2;
      auto       name = [n](unsigned p) {
        return p < n ? std::to_string(p + 1) : std::to_string(p - n + 1) + "'";
      };
      std::string s = "{";
      bool        first = true;
      for (unsigned p = 0; p < x.size(); ++p) {
        if (p < x[p]) {
          if (!first) {
            s += ",";
          }
          first = false;
          s += name(p) + "-" + name(x[p]);
        }
      }
      return s + "}";
    }
  }  // namespace diagram

  FamilyMonoid family(Family f, std::size_t n, std::size_t cap) {
    if (n == 0) {
      throw std::invalid_argument("family parameter n must be at least 1");
    }
    std::size_t size = family_size(f, n);
    if (size > cap) {
      throw SizeCapExceeded(family_name(f) + "(" + std::to_string(n) + ") has " + std::to_string(size)
                            + " elements, above the cap of " + std::to_string(cap));
    }
    auto const r = static_cast<unsigned>(n);
    switch (f) {
      case Family::tfull: {
        auto elements = enumerate_maps(r, r, [](Map const&) { return true; });
        return {tabulate(
                    elements, [r](Map const& x, Map const& y) { return compose_maps(x, y, r); },
                    [r](Map const& x) { return map_label(x, r, false); }),
                std::nullopt};
      }
      case Family::tpartial: {
        auto elements = enumerate_maps(r, r + 1, [](Map const&) { return true; });
        return {tabulate(
                    elements, [r](Map const& x, Map const& y) { return compose_maps(x, y, r); },
                    [r](Map const& x) { return map_label(x, r, true); }),
                std::nullopt};
      }
      case Family::syminv: {
        auto injective = [r](Map const& x) {
          std::vector<bool> hit(r, false);
          for (auto v : x) {
            if (v == r) {
              continue;
            }
            if (hit[v]) {
              return false;
            }
            hit[v] = true;
          }
          return true;
        };
        auto elements = enumerate_maps(r, r + 1, injective);
        return {tabulate(
                    elements, [r](Map const& x, Map const& y) { return compose_maps(x, y, r); },
                    [r](Map const& x) { return map_label(x, r, true); }),
                std::nullopt};
      }
      case Family::jones: {
        std::vector<diagram::Matching> gens;
        for (unsigned i = 0; i + 1 < n; ++i) {
          diagram::Matching e = diagram::identity(n);
          e[i]                = i + 1;
          e[i + 1]            = i;
          e[r + i]            = r + i + 1;
          e[r + i + 1]        = r + i;
          gens.push_back(std::move(e));
        }
        std::vector<diagram::Matching>                elements{diagram::identity(n)};
        std::map<diagram::Matching, element_index>    seen{{elements[0], 0}};
        for (std::size_t i = 0; i < elements.size(); ++i) {
          for (auto const& g : gens) {
            auto z = diagram::compose(elements[i], g).first;
            if (seen.emplace(z, static_cast<element_index>(elements.size())).second) {
              elements.push_back(std::move(z));
            }
          }
        }
        FiniteMonoid monoid = tabulate(
            elements,
            [](diagram::Matching const& x, diagram::Matching const& y) {
              return diagram::compose(x, y).first;
            },
            [](diagram::Matching const& x) { return diagram::label(x); });
        LoopTable loops;
        loops.loops.assign(elements.size(), std::vector<unsigned>(elements.size(), 0));
        for (std::size_t x = 0; x < elements.size(); ++x) {
          for (std::size_t y = 0; y < elements.size(); ++y) {
            loops.loops[x][y] = diagram::compose(elements[x], elements[y]).second;
          }
        }
        return {std::move(monoid), std::move(loops)};
      }
    }
    throw std::invalid_argument("unknown family");
  }

}  // namespace cellalg

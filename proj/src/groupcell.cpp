#include "cellalg/groupcell.hpp"

#include <map>

#include "cellalg/errors.hpp"
#include "cellalg/verify.hpp"

namespace cellalg {

  std::string group_kind_name(GroupKind kind) {
    switch (kind) {
      case GroupKind::trivial:
        return "trivial";
      case GroupKind::symmetric:
        return "symmetric";
      case GroupKind::custom:
        return "custom";
    }
    return "";
  }

  GroupCellData trivial_group_datum(FieldSpec field) {
    return {GroupKind::trivial, 1,
            CellDatum(field, 1, {{"*", 1, 1}}, {}, {AlgebraElement::unit(field, 0)})};
  }

  GroupCellData automatic_group_datum(SchutzGroup const& group, FieldSpec field, unsigned cap) {
    if (group.order() == 1) {
      return trivial_group_datum(field);
    }
    std::size_t factorial = 1;
    for (unsigned n = 2; n <= cap; ++n) {
      factorial *= n;
      if (factorial == group.order()) {
        SymmetricGroup sn(n);
        auto           iso    = symmetric_isomorphism(sn, group.mult);
        auto           murphy = murphy_datum(n, field, cap);
        return {GroupKind::symmetric, n, transport(murphy.datum, iso)};
      }
      if (factorial > group.order()) {
        break;
      }
    }
    throw GroupMismatch("Schützenberger group of order " + std::to_string(group.order())
                        + " is neither trivial nor a symmetric group of degree at most "
                        + std::to_string(cap));
  }

  namespace {
    Scalar parse_scalar(nlohmann::json const& v, FieldSpec field) {
      if (v.is_string()) {
        return Scalar::parse(v.get<std::string>(), field);
      }
      if (v.is_number_integer()) {
        return Scalar(field, v.get<long long>());
      }
      throw FormatError("scalar must be a string or an integer");
    }
  }  // namespace

  GroupCellData load_custom_datum(nlohmann::json const& j, SchutzGroup const& group,
                                  FieldSpec field) {
    try {
      std::vector<CellNode>              nodes;
      std::map<std::string, std::size_t> index;
      for (auto const& name : j.at("nodes")) {
        auto s = name.get<std::string>();
        if (!index.emplace(s, nodes.size()).second) {
          throw FormatError("duplicate node \"" + s + "\"");
        }
        nodes.push_back({s, 0, 0});
      }
      auto lookup = [&index](std::string const& name) {
        auto it = index.find(name);
        if (it == index.end()) {
          throw FormatError("unknown node \"" + name + "\"");
        }
        return it->second;
      };
      std::vector<std::pair<std::size_t, std::size_t>> order;
      if (j.contains("poset")) {
        for (auto const& pair : j.at("poset")) {
          if (!pair.is_array() || pair.size() != 2) {
            throw FormatError("poset entries are [greater, smaller] pairs");
          }
          order.emplace_back(lookup(pair[0].get<std::string>()), lookup(pair[1].get<std::string>()));
        }
      }
      for (auto const& [name, size] : j.at("L").items()) {
        nodes[lookup(name)].lsize = size.get<std::size_t>();
      }
      for (auto const& [name, size] : j.at("R").items()) {
        nodes[lookup(name)].rsize = size.get<std::size_t>();
      }
      std::size_t total = 0;
      for (auto const& n : nodes) {
        total += n.lsize * n.rsize;
      }
      std::vector<std::optional<AlgebraElement>> slots(total);
      std::vector<std::size_t>                   offset;
      std::size_t                                running = 0;
      for (auto const& n : nodes) {
        offset.push_back(running);
        running += n.lsize * n.rsize;
      }
      for (auto const& [key, entries] : j.at("basis").items()) {
        auto first  = key.find('/');
        auto second = key.find('/', first == std::string::npos ? first : first + 1);
        if (first == std::string::npos || second == std::string::npos) {
          throw FormatError("basis key \"" + key + "\" is not node/s/t");
        }
        std::size_t node = lookup(key.substr(0, first));
        std::size_t s    = std::stoul(key.substr(first + 1, second - first - 1));
        std::size_t t    = std::stoul(key.substr(second + 1));
        if (s >= nodes[node].lsize || t >= nodes[node].rsize) {
          throw FormatError("basis key \"" + key + "\" is outside the index sets");
        }
        AlgebraElement v(field);
        for (auto const& entry : entries) {
          auto g = entry.at(0).get<std::size_t>();
          if (g >= group.order()) {
            throw FormatError("group index " + std::to_string(g) + " out of range");
          }
          v.add(g, parse_scalar(entry.at(1), field));
        }
        auto& slot = slots[offset[node] + s * nodes[node].rsize + t];
        if (slot) {
          throw FormatError("basis key \"" + key + "\" appears twice");
        }
        slot = std::move(v);
      }
      std::vector<AlgebraElement> basis;
      for (std::size_t k = 0; k < total; ++k) {
        if (!slots[k]) {
          throw FormatError("basis vector " + std::to_string(k) + " is missing");
        }
        basis.push_back(std::move(*slots[k]));
      }

      CellDatum   datum(field, group.order(), std::move(nodes), order, std::move(basis));
      auto        mult   = group_oracle(group, field);
      AxiomReport report = verify_cell_axioms(mult, datum, all_elements(group.order()), VerifyMode::full);
      if (!report.ok) {
        auto const& w = *report.witness;
        throw AxiomViolation("custom datum fails the " + w.side + " cell axiom at node "
                             + datum.node(w.node).name + " acting by group element "
                             + std::to_string(w.acting) + ": " + w.message);
      }
      return {GroupKind::custom, 0, std::move(datum)};
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(std::string("malformed datum file: ") + e.what());
    } catch (std::logic_error const& e) {
      throw FormatError(std::string("malformed datum file: ") + e.what());
    }
  }

  nlohmann::ordered_json datum_to_json(CellDatum const& d) {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    for (auto const& n : d.nodes()) {
      j["nodes"].push_back(n.name);
    }
    j["poset"] = nlohmann::ordered_json::array();
    for (auto [a, b] : d.order_pairs()) {
      j["poset"].push_back({d.node(a).name, d.node(b).name});
    }
    j["L"] = nlohmann::ordered_json::object();
    j["R"] = nlohmann::ordered_json::object();
    for (auto const& n : d.nodes()) {
      j["L"][n.name] = n.lsize;
      j["R"][n.name] = n.rsize;
    }
    j["basis"] = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < d.size(); ++k) {
      auto const& lab = d.label(k);
      auto        key = d.node(lab.node).name + "/" + std::to_string(lab.s) + "/" + std::to_string(lab.t);
      auto        entries = nlohmann::ordered_json::array();
      for (auto const& [g, c] : d.basis(k).coeffs()) {
        entries.push_back({g, c.to_string()});
      }
      j["basis"][key] = entries;
    }
    return j;
  }

  MultiplicationOracle group_oracle(SchutzGroup const& group, FieldSpec field) {
    return MultiplicationOracle::group(group.mult, group.identity, field);
  }

  MultiplicationOracle group_oracle(SymmetricGroup const& group, FieldSpec field) {
    return MultiplicationOracle::group(group.mult(), 0, field);
  }

  Scalar group_bracket(MultiplicationOracle const& mult, CellDatum const& d, std::size_t node,
                       std::size_t t, std::size_t s) {
    return bracket(mult, d, node, t, s);
  }

  DenseMatrix group_gram(MultiplicationOracle const& mult, CellDatum const& d, std::size_t node) {
    return gram_matrix(mult, d, node);
  }

  std::vector<std::size_t> group_lambda0(std::vector<DenseMatrix> const& grams) {
    std::vector<std::size_t> result;
    for (std::size_t k = 0; k < grams.size(); ++k) {
      if (!grams[k].is_zero()) {
        result.push_back(k);
      }
    }
    return result;
  }

  bool group_semisimple(std::vector<DenseMatrix> const& grams) {
    for (auto const& g : grams) {
      if (g.rows() != g.cols() || rank(g) != g.rows()) {
        return false;
      }
    }
    return true;
  }

}  // namespace cellalg

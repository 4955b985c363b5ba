#include "cellalg/io.hpp"

#include <fstream>
#include <sstream>

#include "cellalg/errors.hpp"

namespace cellalg {

  FiniteMonoid monoid_from_json(nlohmann::json const& j) {
    try {
      auto size     = j.at("size").get<std::size_t>();
      auto identity = j.at("identity").get<element_index>();
      auto table    = j.at("table").get<std::vector<std::vector<element_index>>>();
      std::vector<std::string> labels;
      if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
      }
      return FiniteMonoid::from_cayley_table(size, identity, std::move(table), std::move(labels));
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(std::string("malformed Cayley table: ") + e.what());
    }
  }

  nlohmann::ordered_json monoid_to_json(FiniteMonoid const& m) {
    nlohmann::ordered_json j;
    j["size"]     = m.size();
    j["identity"] = m.identity();
    j["table"]    = m.table();
    j["labels"]   = m.labels();
    return j;
  }

  LoopTable loops_from_json(nlohmann::json const& j, std::size_t size) {
    try {
      LoopTable t{j.at("loops").get<std::vector<std::vector<unsigned>>>()};
      if (t.loops.size() != size) {
        throw FormatError("loop table has " + std::to_string(t.loops.size()) + " rows, expected "
                          + std::to_string(size));
      }
      for (auto const& row : t.loops) {
        if (row.size() != size) {
          throw FormatError("loop table row has the wrong length");
        }
      }
      return t;
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(std::string("malformed loop table: ") + e.what());
    }
  }

  nlohmann::ordered_json loops_to_json(LoopTable const& loops) {
    nlohmann::ordered_json j;
    j["loops"] = loops.loops;
    return j;
  }

  Twisting twisting_from_json(nlohmann::json const& j, FieldSpec field) {
    try {
      std::vector<std::vector<Scalar>> values;
      for (auto const& row : j.at("values")) {
        std::vector<Scalar> r;
        for (auto const& v : row) {
          r.push_back(v.is_string() ? Scalar::parse(v.get<std::string>(), field)
                                    : Scalar(field, v.get<long long>()));
        }
        values.push_back(std::move(r));
      }
      return twisting_from_values(std::move(values), field);
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(std::string("malformed twisting table: ") + e.what());
    }
  }

  nlohmann::ordered_json twisting_to_json(Twisting const& pi) {
    nlohmann::ordered_json j;
    j["values"] = nlohmann::ordered_json::array();
    for (auto const& row : pi.values) {
      auto r = nlohmann::ordered_json::array();
      for (auto const& v : row) {
        r.push_back(v.to_string());
      }
      j["values"].push_back(r);
    }
    return j;
  }

  nlohmann::json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw FormatError("cannot open " + path);
    }
    try {
      return nlohmann::json::parse(in);
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(path + ": " + e.what());
    }
  }

  void write_text_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw FormatError("cannot write " + path);
    }
    out << text;
  }

}  // namespace cellalg

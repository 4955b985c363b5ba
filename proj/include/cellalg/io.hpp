// JSON files: Cayley tables, loop tables and twisting tables.

#ifndef CELLALG_IO_HPP_
#define CELLALG_IO_HPP_

#include <string>

#include <json.hpp>

#include "monoid.hpp"
#include "twist.hpp"

namespace cellalg {

  // {"size": n, "identity": i, "table": [[...]], "labels": [...]}
  FiniteMonoid           monoid_from_json(nlohmann::json const& j);
  nlohmann::ordered_json monoid_to_json(FiniteMonoid const& m);

  // {"loops": [[...]]}
  LoopTable              loops_from_json(nlohmann::json const& j, std::size_t size);
  nlohmann::ordered_json loops_to_json(LoopTable const& loops);

  // {"values": [["1", "2", ...], ...]}
  Twisting               twisting_from_json(nlohmann::json const& j, FieldSpec field);
  nlohmann::ordered_json twisting_to_json(Twisting const& pi);

  // Throws FormatError when the file is unreadable or not JSON.
  nlohmann::json read_json_file(std::string const& path);
  void           write_text_file(std::string const& path, std::string const& text);

}  // namespace cellalg

#endif  // CELLALG_IO_HPP_

#pragma once

#include <nlohmann/json.hpp>

#include "tng/lediagram.hpp"

namespace tng {

using json = nlohmann::json;

// Text format: optional first line "k n", then one line per row made of
// 'D' (dot) and '.' (empty); an empty line is a zero-length row. Without the
// header, k = number of lines and n = k + length of the first line.
LeDiagram parse_le_diagram(const std::string& text);
std::string render_le_diagram(const LeDiagram& d);

// "3 4 1 2" plus optional "col: {i:-1, j:1}" line ("col: {}" allowed).
DecoratedPermutation parse_decperm(const std::string& text);
std::string render_decperm(const DecoratedPermutation& dp);

// "{1,2} {2,3} {3,4} {1,4}"
GrassmannNecklace parse_necklace(const std::string& text);
std::string render_necklace(const GrassmannNecklace& neck);

json le_diagram_to_json(const LeDiagram& d);
LeDiagram le_diagram_from_json(const json& j);
json decperm_to_json(const DecoratedPermutation& dp);
DecoratedPermutation decperm_from_json(const json& j);
json necklace_to_json(const GrassmannNecklace& neck);
GrassmannNecklace necklace_from_json(const json& j);
json plucker_to_json(const PluckerIndex& idx);
PluckerIndex plucker_from_json(const json& j);

}  // namespace tng

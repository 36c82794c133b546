#pragma once

// JSON and CSV serialization of exact matrices. Every scalar is a decimal
// string (integers) or a "p/q" string (rationals), so no consumer ever sees a
// lossy JSON number.
//
// JSON layout:
//   {"rows": r, "cols": c, "entries": [["..", ..], ..],
//    "index": {"n": n, "d": d, "order": "lex", "members": [[..], ..]}}
// "index" is omitted when the matrix carries no exponent set.
//
// CSV layout: one line per row, entries separated by ',', no header.

#include "ppm/matrix.hpp"

#include <json.hpp>

#include <string>

namespace ppm {

using Json = nlohmann::ordered_json;

Json to_json(const ExponentSet& set);
ExponentSet exponent_set_from_json(const Json& j);

Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);

std::string to_csv(const IntMatrix& m);
std::string to_csv(const RatMatrix& m);
IntMatrix int_matrix_from_csv(const std::string& text);
RatMatrix rat_matrix_from_csv(const std::string& text);

}  // namespace ppm

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hyptri/plane.hpp"

namespace hyptri {

// One populated cell of the distance and angle tables, realized by an
// explicit configuration whose auxiliary distance (or angle) is `d`.
struct TableCell {
  std::string name;  // e.g. "T1:RId"
  std::string configuration;
  bool is_length = true;  // imaginary parts must then match a quantum exactly
  ExtPair expected;
  ExtPair actual;
  double re_error = 0.0;
  double im_error = 0.0;
  bool quanta_match = true;
  bool pass = false;
};

std::vector<std::string> table_case_names();
// `name` is a case name or "all". Throws UnknownIdentity for other names and
// OutOfDomain when d is outside the case's range.
std::vector<TableCell> table_cases(const std::string& name, double d);

void to_json(nlohmann::json& j, const TableCell& c);

}  // namespace hyptri

#pragma once

#include <gmpxx.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace graphbits {

using ordered_json = nlohmann::ordered_json;

// Floating-point report fields are rendered as strings with 17 significant
// digits: byte-stable output that parses back to the identical double.
inline std::string fp17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return std::string(buffer);
}

inline std::string mpz_str(const mpz_class& value) { return value.get_str(10); }

inline std::string mpq_str(const mpq_class& value) {
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

}  // namespace graphbits

#pragma once

#include <cstdio>
#include <string>

namespace gravab::detail {

/// printf-style %.*g; locale-independent for the C locale the tools run in.
inline std::string format_g(double value, int precision = 9) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace gravab::detail

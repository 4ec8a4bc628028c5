#pragma once

#include <cstdio>
#include <string>

namespace ybe {

/// 12 significant digits, shortest of %e/%f.
inline std::string fmt12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Round-trip precision.
inline std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace ybe

#pragma once

#include <cstdio>
#include <string>

namespace noma {

// Shortest round-trippable decimal form; snprintf keeps it locale-free and
// byte-stable across runs.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace noma

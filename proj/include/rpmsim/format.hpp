#pragma once

#include <string>

namespace rpmsim {

// Shortest decimal string that round-trips the double (to_chars).
std::string format_double(double value);

}  // namespace rpmsim

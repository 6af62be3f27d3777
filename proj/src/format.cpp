#include "rpmsim/format.hpp"

#include <charconv>

namespace rpmsim {

std::string format_double(const double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

}  // namespace rpmsim

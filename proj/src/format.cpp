#include "hamrel/format.hpp"

#include <charconv>

namespace hamrel {

std::string format_real(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

}  // namespace hamrel

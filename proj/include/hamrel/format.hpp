#pragma once

#include <string>

namespace hamrel {

// 17 significant digits, '.' decimal point, shortest exponent-free form where
// possible. Round-trips through strtod.
std::string format_real(double x);

}  // namespace hamrel

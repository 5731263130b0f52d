#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace cskew {

// 17 significant digits, '.' decimal point, independent of the global locale.
// Infinities print as "inf"/"-inf", NaN as "nan".
std::string fmt17(double v);

std::optional<double> parse_double(std::string_view s);

}  // namespace cskew

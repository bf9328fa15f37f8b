#pragma once

#include <string>

namespace sqwell {

/// Shortest decimal that round-trips to the same double, "." separator,
/// locale independent. Non-finite values print as nan, inf, -inf.
std::string format_number(double value);

}  // namespace sqwell

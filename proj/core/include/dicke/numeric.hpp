#pragma once

#include <string>

namespace dicke {

// ln cosh(x) without overflow: |x| + ln((1 + e^{-2|x|}) / 2).
double log_cosh(double x) noexcept;

// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

// `value` rounded to `digits` significant decimal digits (digits >= 1).
double round_significant(double value, int digits);

}  // namespace dicke

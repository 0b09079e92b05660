#include "dicke/numeric.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <system_error>

namespace dicke {

double log_cosh(double x) noexcept {
    const double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

double round_significant(double value, int digits) {
    if (!std::isfinite(value) || digits < 1) return value;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return std::strtod(buf, nullptr);
}

}  // namespace dicke

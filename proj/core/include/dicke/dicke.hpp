#pragma once

#include "dicke/errors.hpp"
#include "dicke/exact.hpp"
#include "dicke/meanfield.hpp"
#include "dicke/model.hpp"
#include "dicke/numeric.hpp"
#include "dicke/sweep.hpp"

namespace dicke {

inline constexpr const char* kVersion = "0.3.0";

}  // namespace dicke

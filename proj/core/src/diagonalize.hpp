#pragma once

#include "dicke/exact.hpp"

namespace dicke::exact::detail {

// Hermiticity check followed by a dense symmetric eigensolve.
SpectralData diagonalize(const Eigen::MatrixXd& h, BasisTag basis, int atoms, int n_max,
                         Vectors vectors);

}  // namespace dicke::exact::detail

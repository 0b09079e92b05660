#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "diagonalize.hpp"
#include "dicke/errors.hpp"
#include "dicke/exact.hpp"

namespace dicke::exact {

namespace detail {

SpectralData diagonalize(const Eigen::MatrixXd& h, BasisTag basis, int atoms, int n_max,
                         Vectors vectors) {
    const double asym = max_asymmetry(h);
    if (!(asym < kHermiticityTol)) {
        throw HermiticityError("Hamiltonian not symmetric: max |H - H^T| = " +
                               std::to_string(asym));
    }
    const auto options =
        vectors == Vectors::Keep ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, options);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("symmetric eigensolver did not converge");
    }

    SpectralData out;
    const auto& ev = solver.eigenvalues();
    out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    out.dimension = static_cast<std::size_t>(h.rows());
    out.basis = basis;
    out.atoms = atoms;
    out.n_max = n_max;
    if (vectors == Vectors::Keep) out.eigenvectors = solver.eigenvectors();
    return out;
}

}  // namespace detail

namespace {

void check_atoms(int atoms) {
    if (atoms < 1 || atoms > kMaxAtomsFull) {
        throw DimensionError("atom count must lie in [1, 12], got " + std::to_string(atoms));
    }
}

void check_cutoff(int n_max) {
    if (n_max < 1) throw DomainError("n_max", "must be >= 1");
}

bool valid_two_j(int atoms, int two_j) {
    return two_j >= 0 && two_j <= atoms && (atoms - two_j) % 2 == 0;
}

}  // namespace

int seed_cutoff(const ModelParams& params, const Thermo& thermo) {
    const double g = params.g1 + params.g2;
    const double thermal = std::max(1.0, 1.0 / (thermo.beta * params.omega0));
    const double seed = 8.0 * g * g / (params.omega0 * params.omega0) + 10.0 * thermal;
    return static_cast<int>(std::ceil(seed));
}

double max_asymmetry(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    return (m - m.transpose()).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd full_hamiltonian(const ModelParams& params, int atoms, int n_max) {
    check_atoms(atoms);
    check_cutoff(n_max);
    const std::size_t spins = std::size_t{1} << atoms;
    const std::size_t nb = static_cast<std::size_t>(n_max) + 1;
    const std::size_t dim = spins * nb;
    if (dim > kMaxFullDimension) {
        throw DimensionError("product-basis dimension " + std::to_string(dim) +
                             " exceeds 3e4");
    }

    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(atoms));
    const double c1 = params.g1 * inv_sqrt_n;
    const double c2 = params.g2 * inv_sqrt_n;
    const double dipole = params.lambda / atoms;

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t s = 0; s < spins; ++s) {
        const int up = std::popcount(s);
        for (std::size_t n = 0; n < nb; ++n) {
            const std::size_t col = s * nb + n;
            const double dn = static_cast<double>(n);
            h(col, col) += 0.5 * params.Omega * (2 * up - atoms) + params.omega0 * dn;

            for (int i = 0; i < atoms; ++i) {
                const std::size_t bit = std::size_t{1} << i;
                if ((s & bit) == 0) {
                    const std::size_t row_spin = (s | bit) * nb;
                    // g1 b s+ and g2 b^dag s+
                    if (n > 0) h(row_spin + n - 1, col) += c1 * std::sqrt(dn);
                    if (n + 1 < nb) h(row_spin + n + 1, col) += c2 * std::sqrt(dn + 1.0);
                } else {
                    const std::size_t row_spin = (s & ~bit) * nb;
                    // g1 b^dag s- and g2 b s-
                    if (n + 1 < nb) h(row_spin + n + 1, col) += c1 * std::sqrt(dn + 1.0);
                    if (n > 0) h(row_spin + n - 1, col) += c2 * std::sqrt(dn);
                }
            }

            if (dipole != 0.0) {
                // s+_i s-_j, i != j: lower an up spin j, raise a down spin i.
                for (int j = 0; j < atoms; ++j) {
                    const std::size_t bj = std::size_t{1} << j;
                    if ((s & bj) == 0) continue;
                    for (int i = 0; i < atoms; ++i) {
                        const std::size_t bi = std::size_t{1} << i;
                        if (i == j || (s & bi) != 0) continue;
                        h((s ^ bj ^ bi) * nb + n, col) += dipole;
                    }
                }
            }
        }
    }
    return h;
}

Eigen::MatrixXd collective_hamiltonian(const ModelParams& params, int atoms, int two_j, int n_max) {
    if (atoms < 1) throw DomainError("N", "must be >= 1");
    if (!valid_two_j(atoms, two_j)) {
        throw DomainError("j", "2j = " + std::to_string(two_j) + " is not a sector of N = " +
                                   std::to_string(atoms) + " spins");
    }
    check_cutoff(n_max);
    const std::size_t levels = static_cast<std::size_t>(two_j) + 1;
    const std::size_t nb = static_cast<std::size_t>(n_max) + 1;
    const std::size_t dim = levels * nb;
    if (dim > kMaxSectorDimension) {
        throw DimensionError("sector dimension " + std::to_string(dim) + " exceeds 1e5");
    }

    const double j = 0.5 * two_j;
    const double jj = j * (j + 1.0);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(atoms));
    const double c1 = params.g1 * inv_sqrt_n;
    const double c2 = params.g2 * inv_sqrt_n;
    const double dipole = params.lambda / atoms;

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t k = 0; k < levels; ++k) {
        const double m = -j + static_cast<double>(k);
        // Jz = 2 Sz, J+J- = S+S- (diagonal in m).
        const double jp_jm = jj - m * (m - 1.0);
        const double spin_diag = dipole * (jp_jm - 0.5 * (atoms + 2.0 * m)) + params.Omega * m;
        const double raise = std::sqrt(std::max(0.0, jj - m * (m + 1.0)));
        const double lower = std::sqrt(std::max(0.0, jp_jm));

        for (std::size_t n = 0; n < nb; ++n) {
            const std::size_t col = k * nb + n;
            const double dn = static_cast<double>(n);
            h(col, col) += spin_diag + params.omega0 * dn;
            if (k + 1 < levels) {
                const std::size_t row_spin = (k + 1) * nb;
                if (n > 0) h(row_spin + n - 1, col) += c1 * raise * std::sqrt(dn);
                if (n + 1 < nb) h(row_spin + n + 1, col) += c2 * raise * std::sqrt(dn + 1.0);
            }
            if (k > 0) {
                const std::size_t row_spin = (k - 1) * nb;
                if (n + 1 < nb) h(row_spin + n + 1, col) += c1 * lower * std::sqrt(dn + 1.0);
                if (n > 0) h(row_spin + n - 1, col) += c2 * lower * std::sqrt(dn);
            }
        }
    }
    return h;
}

Eigen::MatrixXd site_sigma_plus(int atoms, int site) {
    check_atoms(atoms);
    const std::size_t dim = std::size_t{1} << atoms;
    const std::size_t bit = std::size_t{1} << site;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t s = 0; s < dim; ++s) {
        if ((s & bit) == 0) m(s | bit, s) = 1.0;
    }
    return m;
}

Eigen::MatrixXd site_sigma_z(int atoms, int site) {
    check_atoms(atoms);
    const std::size_t dim = std::size_t{1} << atoms;
    const std::size_t bit = std::size_t{1} << site;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t s = 0; s < dim; ++s) m(s, s) = (s & bit) ? 1.0 : -1.0;
    return m;
}

Eigen::MatrixXd collective_plus(int atoms) {
    Eigen::MatrixXd m = site_sigma_plus(atoms, 0);
    for (int i = 1; i < atoms; ++i) m += site_sigma_plus(atoms, i);
    return m;
}

Eigen::MatrixXd collective_z(int atoms) {
    Eigen::MatrixXd m = site_sigma_z(atoms, 0);
    for (int i = 1; i < atoms; ++i) m += site_sigma_z(atoms, i);
    return m;
}

Eigen::MatrixXd pair_exchange(int atoms) {
    check_atoms(atoms);
    const std::size_t dim = std::size_t{1} << atoms;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t s = 0; s < dim; ++s) {
        for (int i = 0; i < atoms; ++i) {
            for (int j = 0; j < atoms; ++j) {
                const std::size_t bi = std::size_t{1} << i;
                const std::size_t bj = std::size_t{1} << j;
                if (i != j && (s & bj) && !(s & bi)) m(s ^ bi ^ bj, s) += 1.0;
            }
        }
    }
    return m;
}

SpectralData build_full(const ModelParams& params, int atoms, const TruncationConfig& trunc,
                        Vectors vectors) {
    validate(params);
    return detail::diagonalize(full_hamiltonian(params, atoms, trunc.n_max), FullProduct{}, atoms,
                               trunc.n_max, vectors);
}

SpectralData build_collective(const ModelParams& params, int atoms, int two_j,
                              const TruncationConfig& trunc, Vectors vectors) {
    validate(params);
    return detail::diagonalize(collective_hamiltonian(params, atoms, two_j, trunc.n_max),
                               CollectiveSector{two_j}, atoms, trunc.n_max, vectors);
}

std::int64_t sector_multiplicity(int atoms, int two_j) {
    if (atoms < 1) throw DomainError("N", "must be >= 1");
    if (!valid_two_j(atoms, two_j)) throw DomainError("j", "not a sector of N spins");
    auto choose = [](int n, int k) -> std::int64_t {
        if (k < 0 || k > n) return 0;
        std::int64_t c = 1;
        for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
        return c;
    };
    const int k = (atoms - two_j) / 2;  // N/2 - j
    return choose(atoms, k) - choose(atoms, k - 1);
}

std::vector<int> sector_spins(int atoms) {
    std::vector<int> out;
    for (int two_j = atoms; two_j >= 0; two_j -= 2) out.push_back(two_j);
    return out;
}

}  // namespace dicke::exact

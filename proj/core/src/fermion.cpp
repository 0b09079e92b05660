#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "diagonalize.hpp"
#include "dicke/errors.hpp"
#include "dicke/exact.hpp"

namespace dicke::exact {

namespace {

constexpr int kMaxFermionAtoms = 2;

void check_fermion_atoms(int atoms) {
    if (atoms < 1 || atoms > kMaxFermionAtoms) {
        throw DimensionError("fermionic construction supports N in {1, 2}, got " +
                             std::to_string(atoms));
    }
}

std::size_t alpha_bit(int site) { return std::size_t{1} << (2 * site); }
std::size_t beta_bit(int site) { return std::size_t{1} << (2 * site + 1); }

// Same-site bilinears. Both are parity-even, so no ordering sign appears and
// the amplitude is +1 whenever the target state exists.
//   s+ -> alpha^dag beta : (a=0, b=1) -> (a=1, b=0)
//   s- -> beta^dag alpha : (a=1, b=0) -> (a=0, b=1)
bool can_raise(std::size_t occ, int site) {
    return (occ & alpha_bit(site)) == 0 && (occ & beta_bit(site)) != 0;
}
bool can_lower(std::size_t occ, int site) {
    return (occ & alpha_bit(site)) != 0 && (occ & beta_bit(site)) == 0;
}
std::size_t flip(std::size_t occ, int site) { return occ ^ alpha_bit(site) ^ beta_bit(site); }

}  // namespace

std::vector<int> fermion_number(int atoms, int n_max) {
    check_fermion_atoms(atoms);
    const std::size_t modes = std::size_t{1} << (2 * atoms);
    const std::size_t nb = static_cast<std::size_t>(n_max) + 1;
    std::vector<int> out(modes * nb);
    for (std::size_t occ = 0; occ < modes; ++occ) {
        for (std::size_t n = 0; n < nb; ++n) out[occ * nb + n] = std::popcount(occ);
    }
    return out;
}

Eigen::MatrixXd fermion_hamiltonian(const ModelParams& params, int atoms, int n_max,
                                    PairSum pairs) {
    check_fermion_atoms(atoms);
    if (n_max < 1) throw DomainError("n_max", "must be >= 1");
    const std::size_t modes = std::size_t{1} << (2 * atoms);
    const std::size_t nb = static_cast<std::size_t>(n_max) + 1;
    const std::size_t dim = modes * nb;

    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(atoms));
    const double c1 = params.g1 * inv_sqrt_n;
    const double c2 = params.g2 * inv_sqrt_n;
    const double dipole = params.lambda / atoms;

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t occ = 0; occ < modes; ++occ) {
        double sz = 0.0;
        for (int i = 0; i < atoms; ++i) {
            sz += ((occ & alpha_bit(i)) ? 1.0 : 0.0) - ((occ & beta_bit(i)) ? 1.0 : 0.0);
        }
        for (std::size_t n = 0; n < nb; ++n) {
            const std::size_t col = occ * nb + n;
            const double dn = static_cast<double>(n);
            h(col, col) += 0.5 * params.Omega * sz + params.omega0 * dn;

            for (int i = 0; i < atoms; ++i) {
                if (can_raise(occ, i)) {
                    const std::size_t row = flip(occ, i) * nb;
                    if (n > 0) h(row + n - 1, col) += c1 * std::sqrt(dn);
                    if (n + 1 < nb) h(row + n + 1, col) += c2 * std::sqrt(dn + 1.0);
                } else if (can_lower(occ, i)) {
                    const std::size_t row = flip(occ, i) * nb;
                    if (n + 1 < nb) h(row + n + 1, col) += c1 * std::sqrt(dn + 1.0);
                    if (n > 0) h(row + n - 1, col) += c2 * std::sqrt(dn);
                }
            }

            if (dipole == 0.0) continue;
            // (alpha_i^dag beta_i)(beta_j^dag alpha_j)
            for (int j = 0; j < atoms; ++j) {
                if (!can_lower(occ, j)) continue;
                const std::size_t lowered = flip(occ, j);
                for (int i = 0; i < atoms; ++i) {
                    if (i == j && pairs == PairSum::Distinct) continue;
                    if (!can_raise(lowered, i)) continue;
                    h(flip(lowered, i) * nb + n, col) += dipole;
                }
            }
        }
    }
    return h;
}

SpectralData build_fermion(const ModelParams& params, int atoms, const TruncationConfig& trunc,
                           PairSum pairs) {
    validate(params);
    return detail::diagonalize(fermion_hamiltonian(params, atoms, trunc.n_max, pairs),
                               FermionFock{}, atoms, trunc.n_max, Vectors::Discard);
}

FermionCheck fermionic_identity_check(const ModelParams& params, int atoms, const Thermo& thermo,
                                      const TruncationConfig& trunc, PairSum pairs) {
    validate(params);
    validate(thermo);
    check_fermion_atoms(atoms);

    const Eigen::MatrixXd h = fermion_hamiltonian(params, atoms, trunc.n_max, pairs);
    const std::vector<int> nf = fermion_number(atoms, trunc.n_max);
    const auto dim = static_cast<Eigen::Index>(nf.size());

    FermionCheck out;
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            const double entry = h(r, c) * (nf[static_cast<std::size_t>(c)] -
                                            nf[static_cast<std::size_t>(r)]);
            out.commutator_norm = std::max(out.commutator_norm, std::abs(entry));
        }
    }
    if (!(out.commutator_norm < kCommutatorTol)) {
        throw CommutationError("[H_F, N_F] does not vanish: " +
                               std::to_string(out.commutator_norm));
    }

    // N_F is diagonal, so H_F splits into blocks of fixed fermion number.
    std::vector<std::vector<double>> block_spectra(static_cast<std::size_t>(2 * atoms + 1));
    double e_min = std::numeric_limits<double>::infinity();
    for (int count = 0; count <= 2 * atoms; ++count) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index i = 0; i < dim; ++i) {
            if (nf[static_cast<std::size_t>(i)] == count) idx.push_back(i);
        }
        const auto bdim = static_cast<Eigen::Index>(idx.size());
        Eigen::MatrixXd block(bdim, bdim);
        for (Eigen::Index a = 0; a < bdim; ++a) {
            for (Eigen::Index b = 0; b < bdim; ++b) block(a, b) = h(idx[a], idx[b]);
        }
        auto spectrum = detail::diagonalize(block, FermionFock{}, atoms, trunc.n_max,
                                            Vectors::Discard);
        e_min = std::min(e_min, spectrum.eigenvalues.front());
        block_spectra[static_cast<std::size_t>(count)] = std::move(spectrum.eigenvalues);
    }

    // i^N exp(-i pi n / 2) = i^(N - n)
    static const std::complex<double> kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> trace{0.0, 0.0};
    for (int count = 0; count <= 2 * atoms; ++count) {
        double sum = 0.0;
        for (double e : block_spectra[static_cast<std::size_t>(count)]) {
            sum += std::exp(-thermo.beta * (e - e_min));
        }
        trace += kPowersOfI[((atoms - count) % 4 + 4) % 4] * sum;
    }

    const auto spin = partition_function(build_full(params, atoms, trunc), thermo);
    out.log_z = spin.log_z(thermo.beta);
    // trace * exp(-beta e_min) / Z
    out.ratio = trace * std::exp(-thermo.beta * (e_min - spin.e_min) - spin.log_sum);
    out.discrepancy = std::abs(out.ratio - 1.0);
    return out;
}

}  // namespace dicke::exact

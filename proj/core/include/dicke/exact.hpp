#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "dicke/model.hpp"

// Finite-N exact diagonalization on a truncated boson Fock space. Serves as
// the oracle against which the thermodynamic-limit results are checked.
//
// Basis conventions: the boson occupation is always the fastest index, so a
// basis index decomposes as idx = spin_part * (n_max + 1) + n. Spin-1/2 sites
// are bits of a mask (1 = up, sz = +1). Fermion sites own two bits each,
// bit 2i for the alpha mode and bit 2i+1 for the beta mode.
namespace dicke::exact {

struct TruncationConfig {
    int n_max = 32;       // highest retained boson occupation
    double tol = 1e-8;    // absolute free-energy change accepted by adaptive growth
    int max_doublings = 5;
};

// Starting cutoff for the adaptive loop:
// ceil(8 (g1+g2)^2 / omega0^2 + 10 max(1, 1 / (beta omega0))).
int seed_cutoff(const ModelParams& params, const Thermo& thermo);

struct FullProduct {
    friend bool operator==(FullProduct, FullProduct) = default;
};
struct CollectiveSector {
    int two_j = 0;  // twice the total spin
    friend bool operator==(CollectiveSector, CollectiveSector) = default;
};
struct FermionFock {
    friend bool operator==(FermionFock, FermionFock) = default;
};
using BasisTag = std::variant<FullProduct, CollectiveSector, FermionFock>;

struct SpectralData {
    std::vector<double> eigenvalues;  // ascending
    std::size_t dimension = 0;
    BasisTag basis = FullProduct{};
    int atoms = 0;
    int n_max = 0;
    Eigen::MatrixXd eigenvectors;  // columns; empty unless requested

    bool has_eigenvectors() const noexcept { return eigenvectors.cols() > 0; }
};

enum class Vectors { Discard, Keep };

inline constexpr int kMaxAtomsFull = 12;
inline constexpr std::size_t kMaxFullDimension = 30'000;
inline constexpr std::size_t kMaxSectorDimension = 100'000;
inline constexpr double kHermiticityTol = 1e-12;

// --- operator builders ----------------------------------------------------

// Hamiltonian in the spin-1/2 product basis, dimension 2^N (n_max + 1).
Eigen::MatrixXd full_hamiltonian(const ModelParams& params, int atoms, int n_max);

// Hamiltonian on the total-spin-j ladder (j = two_j / 2) tensored with the
// boson, using sum_{i!=j} s+_i s-_j = J+J- - (N + Jz) / 2.
Eigen::MatrixXd collective_hamiltonian(const ModelParams& params, int atoms, int two_j, int n_max);

// Spin-only operators on 2^N states, used for operator-identity checks.
Eigen::MatrixXd site_sigma_plus(int atoms, int site);
Eigen::MatrixXd site_sigma_z(int atoms, int site);
Eigen::MatrixXd collective_plus(int atoms);
Eigen::MatrixXd collective_z(int atoms);
// sum_{i != j} s+_i s-_j, assembled directly from pair flips.
Eigen::MatrixXd pair_exchange(int atoms);

double max_asymmetry(const Eigen::MatrixXd& m);

// --- spectra --------------------------------------------------------------

// 1 <= N <= 12 and 2^N (n_max + 1) <= 3e4, else DimensionError.
SpectralData build_full(const ModelParams& params, int atoms, const TruncationConfig& trunc,
                        Vectors vectors = Vectors::Discard);

// two_j in {N, N-2, ..., N mod 2}, else DomainError.
SpectralData build_collective(const ModelParams& params, int atoms, int two_j,
                              const TruncationConfig& trunc, Vectors vectors = Vectors::Discard);

// Spectrum of the fermionic Hamiltonian over the whole 4^N (n_max + 1) Fock space.
enum class PairSum { Distinct, All };
SpectralData build_fermion(const ModelParams& params, int atoms, const TruncationConfig& trunc,
                           PairSum pairs = PairSum::Distinct);

// Multiplicity of the spin-j irrep in N spin-1/2: C(N, N/2 - j) - C(N, N/2 - j - 1).
std::int64_t sector_multiplicity(int atoms, int two_j);

// Allowed 2j values for N atoms, largest first.
std::vector<int> sector_spins(int atoms);

// --- thermal quantities ---------------------------------------------------

// Z = exp(-beta e_min) * sum_k exp(-beta (E_k - e_min)); log_sum holds the log
// of the shifted sum.
struct LogPartition {
    double e_min = 0.0;
    double log_sum = 0.0;

    double log_z(double beta) const noexcept { return -beta * e_min + log_sum; }
};

LogPartition partition_function(const SpectralData& spectrum, const Thermo& thermo);

// <b^dag b> / N. Requires eigenvectors.
double boson_occupation(const SpectralData& spectrum, const Thermo& thermo);

// Degeneracy-weighted collection of spectra sharing one thermal ensemble,
// e.g. the collective sectors of N atoms.
class ThermalEnsemble {
public:
    explicit ThermalEnsemble(int atoms) : atoms_(atoms) {}

    void add(SpectralData spectrum, double multiplicity);

    LogPartition partition_function(const Thermo& thermo) const;
    double boson_occupation(const Thermo& thermo) const;  // per atom

    int atoms() const noexcept { return atoms_; }

private:
    int atoms_;
    std::vector<SpectralData> spectra_;
    std::vector<double> weights_;
};

enum class Route { Sectors, Full };

// Collective sectors (or the product basis) at a fixed cutoff.
ThermalEnsemble assemble_ensemble(const ModelParams& params, int atoms, int n_max, Route route,
                                  Vectors vectors = Vectors::Discard);

struct ExactFreeEnergy {
    double f_diff = 0.0;  // f - f0
    double f = 0.0;       // -(1 / (N beta)) ln Z
    double f0 = 0.0;      // lambda = g1 = g2 = 0, same truncation
    int n_max = 0;        // cutoff that was accepted
    double boson_occupation = 0.0;  // per atom; 0 unless requested
};

struct ExactOptions {
    Route route = Route::Sectors;
    bool with_occupation = false;
};

// Fixed cutoff, no adaptive growth.
ExactFreeEnergy free_energy_at_cutoff(const ModelParams& params, int atoms, const Thermo& thermo,
                                      int n_max, const ExactOptions& options = {});

// Doubles the cutoff from trunc.n_max until f_N moves by less than trunc.tol.
// Throws TruncationError if that does not happen within trunc.max_doublings.
ExactFreeEnergy free_energy_exact(const ModelParams& params, int atoms, const Thermo& thermo,
                                  const TruncationConfig& trunc, const ExactOptions& options = {});

// --- fermionic trace identity --------------------------------------------

struct FermionCheck {
    double discrepancy = 0.0;       // |Z - i^N Tr e^{-beta H_F - i pi N_F / 2}| / |Z|
    double commutator_norm = 0.0;   // max |[H_F, N_F]| entry
    double log_z = 0.0;             // ln Z of the spin model
    std::complex<double> ratio{};   // fermionic trace divided by Z
};

inline constexpr double kCommutatorTol = 1e-12;

// N in {1, 2}. Compares the phase-weighted fermionic trace against Z from
// build_full at the same boson cutoff.
FermionCheck fermionic_identity_check(const ModelParams& params, int atoms, const Thermo& thermo,
                                      const TruncationConfig& trunc,
                                      PairSum pairs = PairSum::Distinct);

Eigen::MatrixXd fermion_hamiltonian(const ModelParams& params, int atoms, int n_max,
                                    PairSum pairs = PairSum::Distinct);

// Diagonal of N_F in the occupation basis.
std::vector<int> fermion_number(int atoms, int n_max);

}  // namespace dicke::exact

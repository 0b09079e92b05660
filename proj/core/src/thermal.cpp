#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dicke/errors.hpp"
#include "dicke/exact.hpp"

namespace dicke::exact {

namespace {

// Shifted Boltzmann weights exp(-beta (E_k - e_min)).
Eigen::ArrayXd boltzmann(const SpectralData& s, double beta, double e_min) {
    Eigen::ArrayXd w(static_cast<Eigen::Index>(s.eigenvalues.size()));
    for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
        w[static_cast<Eigen::Index>(k)] = std::exp(-beta * (s.eigenvalues[k] - e_min));
    }
    return w;
}

// <k| b^dag b |k> for every retained eigenvector.
Eigen::ArrayXd eigenstate_occupations(const SpectralData& s) {
    if (!s.has_eigenvectors()) {
        throw DomainError("spectrum", "boson occupation needs eigenvectors (Vectors::Keep)");
    }
    const Eigen::Index dim = s.eigenvectors.rows();
    const Eigen::Index nb = s.n_max + 1;
    Eigen::ArrayXd n(dim);
    for (Eigen::Index i = 0; i < dim; ++i) n[i] = static_cast<double>(i % nb);
    return (s.eigenvectors.array().square().colwise() * n).colwise().sum().transpose();
}

ModelParams non_interacting(const ModelParams& p) {
    ModelParams q = p;
    q.g1 = 0.0;
    q.g2 = 0.0;
    q.lambda = 0.0;
    return q;
}

}  // namespace

LogPartition partition_function(const SpectralData& spectrum, const Thermo& thermo) {
    if (spectrum.eigenvalues.empty()) throw DomainError("spectrum", "no eigenvalues");
    const double e_min = spectrum.eigenvalues.front();
    return {e_min, std::log(boltzmann(spectrum, thermo.beta, e_min).sum())};
}

double boson_occupation(const SpectralData& spectrum, const Thermo& thermo) {
    const auto w = boltzmann(spectrum, thermo.beta, spectrum.eigenvalues.front());
    const auto n = eigenstate_occupations(spectrum);
    return (w * n).sum() / w.sum() / spectrum.atoms;
}

void ThermalEnsemble::add(SpectralData spectrum, double multiplicity) {
    if (spectrum.eigenvalues.empty()) throw DomainError("spectrum", "no eigenvalues");
    spectra_.push_back(std::move(spectrum));
    weights_.push_back(multiplicity);
}

LogPartition ThermalEnsemble::partition_function(const Thermo& thermo) const {
    if (spectra_.empty()) throw DomainError("ensemble", "empty");
    double e_min = std::numeric_limits<double>::infinity();
    for (const auto& s : spectra_) e_min = std::min(e_min, s.eigenvalues.front());
    double sum = 0.0;
    for (std::size_t i = 0; i < spectra_.size(); ++i) {
        sum += weights_[i] * boltzmann(spectra_[i], thermo.beta, e_min).sum();
    }
    return {e_min, std::log(sum)};
}

double ThermalEnsemble::boson_occupation(const Thermo& thermo) const {
    if (spectra_.empty()) throw DomainError("ensemble", "empty");
    double e_min = std::numeric_limits<double>::infinity();
    for (const auto& s : spectra_) e_min = std::min(e_min, s.eigenvalues.front());
    double z = 0.0;
    double n = 0.0;
    for (std::size_t i = 0; i < spectra_.size(); ++i) {
        const auto w = boltzmann(spectra_[i], thermo.beta, e_min);
        z += weights_[i] * w.sum();
        n += weights_[i] * (w * eigenstate_occupations(spectra_[i])).sum();
    }
    return n / z / atoms_;
}

ThermalEnsemble assemble_ensemble(const ModelParams& params, int atoms, int n_max, Route route,
                                  Vectors vectors) {
    ThermalEnsemble ensemble(atoms);
    const TruncationConfig trunc{n_max};
    if (route == Route::Full) {
        ensemble.add(build_full(params, atoms, trunc, vectors), 1.0);
        return ensemble;
    }
    for (int two_j : sector_spins(atoms)) {
        ensemble.add(build_collective(params, atoms, two_j, trunc, vectors),
                     static_cast<double>(sector_multiplicity(atoms, two_j)));
    }
    return ensemble;
}

ExactFreeEnergy free_energy_at_cutoff(const ModelParams& params, int atoms, const Thermo& thermo,
                                      int n_max, const ExactOptions& options) {
    validate(params);
    validate(thermo);
    const auto vectors = options.with_occupation ? Vectors::Keep : Vectors::Discard;
    const auto ensemble = assemble_ensemble(params, atoms, n_max, options.route, vectors);
    const auto reference =
        assemble_ensemble(non_interacting(params), atoms, n_max, options.route, Vectors::Discard);

    const double scale = -1.0 / (atoms * thermo.beta);
    ExactFreeEnergy out;
    out.f = scale * ensemble.partition_function(thermo).log_z(thermo.beta);
    out.f0 = scale * reference.partition_function(thermo).log_z(thermo.beta);
    out.f_diff = out.f - out.f0;
    out.n_max = n_max;
    if (options.with_occupation) out.boson_occupation = ensemble.boson_occupation(thermo);
    return out;
}

ExactFreeEnergy free_energy_exact(const ModelParams& params, int atoms, const Thermo& thermo,
                                  const TruncationConfig& trunc, const ExactOptions& options) {
    if (trunc.n_max < 1) throw DomainError("n_max", "must be >= 1");
    if (!(trunc.tol > 0.0)) throw DomainError("tol", "must be > 0");

    int n_max = trunc.n_max;
    ExactFreeEnergy previous = free_energy_at_cutoff(params, atoms, thermo, n_max, options);
    double change = std::numeric_limits<double>::infinity();
    for (int d = 0; d < trunc.max_doublings; ++d) {
        n_max *= 2;
        ExactFreeEnergy current;
        try {
            current = free_energy_at_cutoff(params, atoms, thermo, n_max, options);
        } catch (const DimensionError& e) {
            throw TruncationError(std::string("cutoff growth stopped: ") + e.what());
        }
        change = std::abs(current.f - previous.f);
        if (change < trunc.tol) return current;
        previous = current;
    }
    throw TruncationError("free energy did not stabilise within " +
                          std::to_string(trunc.max_doublings) + " doublings (last change " +
                          std::to_string(change) + ")");
}

}  // namespace dicke::exact

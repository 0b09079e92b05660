#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace dicke {

// Couplings of the Dicke Hamiltonian with all-to-all dipole exchange:
//
//   H = (lambda/N) sum_{i!=j} s+_i s-_j + (Omega/2) sum_i sz_i + omega0 b^dag b
//     + (g1/sqrt N) sum_i (b s+_i + b^dag s-_i)
//     + (g2/sqrt N) sum_i (b s-_i + b^dag s+_i)
//
// Natural units (hbar = k_B = 1).
struct ModelParams {
    double omega0 = 1.0;  // boson mode frequency
    double Omega = 1.0;   // atomic splitting
    double g1 = 0.0;      // rotating coupling
    double g2 = 0.0;      // counter-rotating coupling
    double lambda = 0.0;  // dipole-dipole strength, either sign

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// Inverse temperature. Zero temperature is never encoded as beta = inf; the
// mean-field layer has dedicated zero-temperature entry points instead.
struct Thermo {
    double beta = 1.0;
};

// G = (g1 + g2)^2 - omega0 * lambda. Cached derived quantity; always rebuilt
// from ModelParams via effective_coupling().
struct EffectiveCoupling {
    double G = 0.0;
};

inline constexpr double kMaxParameterMagnitude = 1e12;

// Throws DomainError naming the first offending field.
ModelParams validate(const ModelParams& params);
Thermo validate(const Thermo& thermo);

EffectiveCoupling effective_coupling(const ModelParams& params) noexcept;

// Parameter object as read from JSON or flags: every key is optional until a
// subcommand asks for it.
struct ParamSet {
    std::optional<double> omega0;
    std::optional<double> Omega;
    std::optional<double> g1;
    std::optional<double> g2;
    std::optional<double> lambda;
    std::optional<double> beta;

    // Fields present in `overrides` replace ours.
    ParamSet merged_with(const ParamSet& overrides) const;

    // Throws DomainError("<key>", "missing") for the first absent coupling.
    ModelParams require_model() const;
    Thermo require_thermo() const;
};

// Accepts a JSON object whose keys are a subset of
// {omega0, Omega, g1, g2, lambda, beta}, all numbers. Anything else throws
// DomainError.
ParamSet parse_params_json(std::string_view text);

// Inverse of parse_params_json; absent fields are omitted.
std::string dump_params_json(const ParamSet& params);

}  // namespace dicke

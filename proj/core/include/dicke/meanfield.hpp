#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dicke/model.hpp"

// Thermodynamic-limit (N -> inf) saddle point of the Dicke model with dipole
// exchange: gap equation, critical temperature, free energy.
namespace dicke::meanfield {

enum class PhaseLabel { Normal, Superradiant, NoFiniteTransition };

// "normal", "superradiant", "no_transition"
std::string_view to_string(PhaseLabel phase) noexcept;
std::optional<PhaseLabel> phase_from_string(std::string_view text) noexcept;

// Stationary point of the saddle-point system, real branch with b0 >= 0.
//
// For lambda < 0 the auxiliary field value sqrt(lambda) * r0 is imaginary.
// In that case `r0` holds the rescaled value r0 / sqrt(lambda) = delta * omega0 / G,
// `r0_rescaled` is set, and the solution is flagged as extrapolated. Every
// physical output depends on lambda only, not on sqrt(lambda).
struct GapSolution {
    double omega_delta = 0.0;  // sqrt(Omega^2 + 4 delta^2)
    double delta = 0.0;        // (g1 + g2) b0 - sqrt(lambda) r0
    double b0 = 0.0;
    double r0 = 0.0;
    PhaseLabel phase = PhaseLabel::Normal;
    bool r0_rescaled = false;
    bool extrapolated = false;

    bool condensed() const noexcept { return phase == PhaseLabel::Superradiant; }
};

struct FreeEnergyResult {
    double f_diff = 0.0;  // F - F0 per atom
    double f0 = 0.0;      // non-interacting reference per atom
};

// Residuals (left minus right) of the four stationary equations for b0, b0*,
// r0, r0*, the reduced relation sqrt(lambda) omega0 b0 = g1 r0* + g2 r0, and
// the consistency of the stored gap with the one implied by (b0, r0).
struct StationaryResiduals {
    double boson = 0.0;
    double boson_conj = 0.0;
    double aux = 0.0;
    double aux_conj = 0.0;
    double reduction = 0.0;
    double gap_definition = 0.0;

    double max_abs() const noexcept;
};

struct SolverOptions {
    double bisection_rel_tol = 1e-13;
    double residual_tol = 1e-10;
    int max_doublings = 200;
};

// omega0 * Omega / G, +inf when G <= 0. A finite-temperature transition exists
// iff 0 < ratio < 1.
double transition_ratio(const ModelParams& params) noexcept;

// beta_c = (2 / Omega) artanh(omega0 Omega / G); nullopt when no finite
// transition exists.
std::optional<double> critical_inverse_temperature(const ModelParams& params);

struct CriticalCouplingQuery {
    double omega0 = 1.0;
    double Omega = 1.0;
    double lambda = 0.0;
    double g_ratio = 1.0;  // g2 / g1
};

// Quantum critical point: the g1 at which (g1 (1 + g_ratio))^2 = omega0 (Omega + lambda).
double critical_coupling_zero_T(const CriticalCouplingQuery& query);

GapSolution solve_gap(const ModelParams& params, const Thermo& thermo,
                      const SolverOptions& options = {});

// tanh -> 1 limit of solve_gap, evaluated analytically.
GapSolution solve_gap_zero_temperature(const ModelParams& params);

StationaryResiduals stationary_residuals(const ModelParams& params, const Thermo& thermo,
                                         const GapSolution& solution);

FreeEnergyResult free_energy_diff(const ModelParams& params, const Thermo& thermo,
                                  const GapSolution& solution);

struct CurvePoint {
    double beta = 0.0;
    double b0 = 0.0;
    double omega_delta = 0.0;
};

// Element-wise solve_gap over strictly increasing inverse temperatures.
std::vector<CurvePoint> order_parameter_curve(const ModelParams& params,
                                              std::span<const double> betas,
                                              const SolverOptions& options = {});

}  // namespace dicke::meanfield

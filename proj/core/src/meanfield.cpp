#include "dicke/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dicke/errors.hpp"
#include "dicke/numeric.hpp"

namespace dicke::meanfield {

std::string_view to_string(PhaseLabel phase) noexcept {
    switch (phase) {
        case PhaseLabel::Normal: return "normal";
        case PhaseLabel::Superradiant: return "superradiant";
        case PhaseLabel::NoFiniteTransition: return "no_transition";
    }
    return "normal";
}

std::optional<PhaseLabel> phase_from_string(std::string_view text) noexcept {
    for (auto p : {PhaseLabel::Normal, PhaseLabel::Superradiant, PhaseLabel::NoFiniteTransition}) {
        if (text == to_string(p)) return p;
    }
    return std::nullopt;
}

double StationaryResiduals::max_abs() const noexcept {
    return std::max({std::abs(boson), std::abs(boson_conj), std::abs(aux), std::abs(aux_conj),
                     std::abs(reduction), std::abs(gap_definition)});
}

double transition_ratio(const ModelParams& params) noexcept {
    const double G = effective_coupling(params).G;
    if (G <= 0.0) return std::numeric_limits<double>::infinity();
    return params.omega0 * params.Omega / G;
}

std::optional<double> critical_inverse_temperature(const ModelParams& params) {
    validate(params);
    const double ratio = transition_ratio(params);
    if (!(ratio > 0.0 && ratio < 1.0)) return std::nullopt;
    return 2.0 / params.Omega * std::atanh(ratio);
}

double critical_coupling_zero_T(const CriticalCouplingQuery& q) {
    if (!(q.omega0 > 0.0) || !std::isfinite(q.omega0)) throw DomainError("omega0", "must be > 0");
    if (!(q.Omega > 0.0) || !std::isfinite(q.Omega)) throw DomainError("Omega", "must be > 0");
    if (!(q.g_ratio >= 0.0) || !std::isfinite(q.g_ratio)) {
        throw DomainError("g_ratio", "must be >= 0");
    }
    if (!std::isfinite(q.lambda)) throw DomainError("lambda", "must be finite");
    const double rhs = q.omega0 * (q.Omega + q.lambda);
    if (rhs <= 0.0) {
        throw DomainError("lambda", "omega0 * (Omega + lambda) <= 0, no transition at any coupling");
    }
    return std::sqrt(rhs) / (1.0 + q.g_ratio);
}

namespace {

GapSolution uncondensed(const ModelParams& params, PhaseLabel phase) {
    GapSolution s;
    s.omega_delta = params.Omega;
    s.phase = phase;
    s.r0_rescaled = params.lambda < 0.0;
    s.extrapolated = params.lambda < 0.0;
    return s;
}

GapSolution condensed(const ModelParams& params, double G, double omega_delta) {
    GapSolution s;
    s.phase = PhaseLabel::Superradiant;
    s.omega_delta = omega_delta;
    // (x - W)(x + W) keeps precision when omega_delta is just above Omega.
    s.delta = 0.5 * std::sqrt((omega_delta - params.Omega) * (omega_delta + params.Omega));
    s.b0 = (params.g1 + params.g2) * s.delta / G;
    const double r0_tilde = s.delta * params.omega0 / G;
    if (params.lambda >= 0.0) {
        s.r0 = std::sqrt(params.lambda) * r0_tilde;
    } else {
        s.r0 = r0_tilde;
        s.r0_rescaled = true;
        s.extrapolated = true;
    }
    return s;
}

// sqrt(lambda) * r0, real for either sign of lambda given the storage convention.
double sqrt_lambda_r0(const ModelParams& params, const GapSolution& s) {
    return s.r0_rescaled ? params.lambda * s.r0 : std::sqrt(params.lambda) * s.r0;
}

}  // namespace

GapSolution solve_gap(const ModelParams& params, const Thermo& thermo,
                      const SolverOptions& options) {
    validate(params);
    validate(thermo);

    const double G = effective_coupling(params).G;
    const double ratio = transition_ratio(params);
    if (!(ratio < 1.0)) return uncondensed(params, PhaseLabel::NoFiniteTransition);

    const double beta = thermo.beta;
    const double target = params.omega0 / G;
    // Strictly decreasing in x > 0, so the root on [Omega, inf) is unique.
    auto g = [&](double x) { return std::tanh(0.5 * beta * x) / x - target; };

    if (!(g(params.Omega) > 0.0)) return uncondensed(params, PhaseLabel::Normal);

    double lo = params.Omega;
    double hi = 2.0 * std::max(params.Omega, G / params.omega0);
    int doublings = 0;
    while (!(g(hi) < 0.0)) {
        if (++doublings > options.max_doublings || !std::isfinite(hi)) {
            throw ConvergenceError("solve_gap: failed to bracket the gap root");
        }
        lo = hi;
        hi *= 2.0;
    }

    for (int it = 0; it < 4096 && hi - lo > options.bisection_rel_tol * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (g(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return condensed(params, G, 0.5 * (lo + hi));
}

GapSolution solve_gap_zero_temperature(const ModelParams& params) {
    validate(params);
    const double ratio = transition_ratio(params);
    if (!(ratio < 1.0)) return uncondensed(params, PhaseLabel::NoFiniteTransition);
    const double G = effective_coupling(params).G;
    return condensed(params, G, G / params.omega0);
}

StationaryResiduals stationary_residuals(const ModelParams& params, const Thermo& thermo,
                                         const GapSolution& s) {
    const double g1 = params.g1;
    const double g2 = params.g2;
    const double b = s.b0;
    const double b_conj = s.b0;  // real branch
    const double lr = sqrt_lambda_r0(params, s);
    const double lr_conj = lr;

    // The two combinations appearing in the saddle-point equations.
    const double x = g1 * b + g2 * b_conj - lr_conj;
    const double x_conj = g1 * b_conj + g2 * b - lr;

    const double gap = std::sqrt(params.Omega * params.Omega + 4.0 * x * x);
    const double t = std::tanh(0.5 * thermo.beta * gap) / gap;

    StationaryResiduals r;
    r.boson = params.omega0 * b - (g1 * x + g2 * x_conj) * t;
    r.boson_conj = params.omega0 * b_conj - (g1 * x_conj + g2 * x) * t;
    if (s.r0_rescaled) {
        // Both sides divided by sqrt(lambda).
        r.aux = s.r0 - x_conj * t;
        r.aux_conj = s.r0 - x * t;
        r.reduction = params.omega0 * b - (g1 * s.r0 + g2 * s.r0);
    } else {
        const double sl = std::sqrt(params.lambda);
        r.aux = s.r0 - sl * x_conj * t;
        r.aux_conj = s.r0 - sl * x * t;
        r.reduction = sl * params.omega0 * b - (g1 * s.r0 + g2 * s.r0);
    }
    r.gap_definition = s.omega_delta - gap;
    return r;
}

FreeEnergyResult free_energy_diff(const ModelParams& params, const Thermo& thermo,
                                  const GapSolution& s) {
    const double beta = thermo.beta;
    FreeEnergyResult out;
    out.f0 = -(std::log(2.0) + log_cosh(0.5 * beta * params.Omega)) / beta;
    if (!s.condensed()) return out;

    const double G = effective_coupling(params).G;
    const double w = s.omega_delta;
    const double W = params.Omega;
    const double condensate = params.omega0 * (w - W) * (w + W) / (4.0 * G);
    const double entropy = (log_cosh(0.5 * beta * w) - log_cosh(0.5 * beta * W)) / beta;
    out.f_diff = condensate - entropy;
    return out;
}

std::vector<CurvePoint> order_parameter_curve(const ModelParams& params,
                                              std::span<const double> betas,
                                              const SolverOptions& options) {
    validate(params);
    for (std::size_t i = 1; i < betas.size(); ++i) {
        if (!(betas[i] > betas[i - 1])) {
            throw DomainError("beta_list", "must be strictly increasing");
        }
    }
    std::vector<CurvePoint> out;
    out.reserve(betas.size());
    for (std::size_t i = 0; i < betas.size(); ++i) {
        try {
            const auto s = solve_gap(params, Thermo{betas[i]}, options);
            out.push_back({betas[i], s.b0, s.omega_delta});
        } catch (const ConvergenceError& e) {
            throw ConvergenceError("beta_list[" + std::to_string(i) + "]: " + e.what());
        } catch (const DomainError& e) {
            throw DomainError("beta_list[" + std::to_string(i) + "]", e.what());
        }
    }
    return out;
}

}  // namespace dicke::meanfield

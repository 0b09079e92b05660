#include "dicke/sweep.hpp"

#include <cmath>
#include <string>

#include "dicke/errors.hpp"
#include "parallel.hpp"

namespace dicke::sweep {

namespace {

constexpr Parameter kAllParameters[] = {Parameter::omega0, Parameter::Omega, Parameter::g1,
                                        Parameter::g2,     Parameter::lambda, Parameter::beta,
                                        Parameter::g};

void assign(ParamSet& set, Parameter p, double value) {
    switch (p) {
        case Parameter::omega0: set.omega0 = value; break;
        case Parameter::Omega: set.Omega = value; break;
        case Parameter::g1: set.g1 = value; break;
        case Parameter::g2: set.g2 = value; break;
        case Parameter::lambda: set.lambda = value; break;
        case Parameter::beta: set.beta = value; break;
        case Parameter::g:
            set.g1 = value;
            set.g2 = value;
            break;
    }
}

bool overlaps(Parameter a, Parameter b) {
    if (a == b) return true;
    auto is_g = [](Parameter p) { return p == Parameter::g1 || p == Parameter::g2; };
    return (a == Parameter::g && is_g(b)) || (b == Parameter::g && is_g(a));
}

void validate_axis(const Axis& axis, const char* name) {
    const std::string field = name;
    if (axis.count < 1) throw DomainError(field + ".count", "must be >= 1");
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max)) {
        throw DomainError(field, "bounds must be finite");
    }
    if (!(axis.min < axis.max)) throw DomainError(field, "requires min < max");
    if (axis.scale == AxisScale::Log && !(axis.min > 0.0)) {
        throw DomainError(field, "log axis requires min > 0");
    }
}

// Rethrows the active exception with grid coordinates prefixed.
[[noreturn]] void rethrow_at(const std::string& where) {
    try {
        throw;
    } catch (const DomainError& e) {
        throw DomainError(where + " " + e.field(), e.what());
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(where + ": " + e.what());
    }
}

}  // namespace

void check_record(const SweepRecord& r) {
    const double fields[] = {r.params.omega0, r.params.Omega, r.params.g1, r.params.g2,
                             r.params.lambda, r.beta,        r.b0,        r.omega_delta,
                             r.f_diff};
    for (double v : fields) {
        if (!std::isfinite(v)) throw DomainError("record", "non-finite field");
    }
    if ((r.b0 > 0.0) != (r.phase == PhaseLabel::Superradiant)) {
        throw DomainError("record", "b0 > 0 must coincide with the superradiant phase");
    }
}

SweepRecord evaluate_point(const ModelParams& params, const Thermo& thermo) {
    const auto sol = meanfield::solve_gap(params, thermo);
    const auto fe = meanfield::free_energy_diff(params, thermo, sol);
    return {params, thermo.beta, sol.phase, sol.b0, sol.omega_delta, fe.f_diff};
}

std::string_view to_string(Parameter p) noexcept {
    switch (p) {
        case Parameter::omega0: return "omega0";
        case Parameter::Omega: return "Omega";
        case Parameter::g1: return "g1";
        case Parameter::g2: return "g2";
        case Parameter::lambda: return "lambda";
        case Parameter::beta: return "beta";
        case Parameter::g: return "g";
    }
    return "g";
}

std::optional<Parameter> parameter_from_string(std::string_view name) noexcept {
    for (auto p : kAllParameters) {
        if (name == to_string(p)) return p;
    }
    return std::nullopt;
}

std::vector<double> Axis::values() const {
    std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
    if (count == 1) {
        out[0] = min;
        return out;
    }
    const double steps = count - 1;
    for (int i = 0; i < count; ++i) {
        const double t = i / steps;
        if (scale == AxisScale::Log) {
            out[static_cast<std::size_t>(i)] =
                std::exp(std::log(min) + t * (std::log(max) - std::log(min)));
        } else {
            out[static_cast<std::size_t>(i)] = min + t * (max - min);
        }
    }
    // Endpoints exactly as given.
    out.front() = min;
    out.back() = max;
    return out;
}

std::size_t GridSpec::size() const noexcept {
    const auto c1 = static_cast<std::size_t>(std::max(axis1.count, 0));
    const auto c2 = axis2 ? static_cast<std::size_t>(std::max(axis2->count, 0)) : 1;
    return c1 * c2;
}

void validate_axes(const GridSpec& spec) {
    validate_axis(spec.axis1, "axis1");
    if (spec.axis2) {
        validate_axis(*spec.axis2, "axis2");
        if (overlaps(spec.axis1.parameter, spec.axis2->parameter)) {
            throw DomainError("axis2", "drives the same parameter as axis1");
        }
    }
    if (spec.size() > kMaxGridPoints) throw DomainError("grid", "more than 1e7 points");
}

void validate(const GridSpec& spec) {
    validate_axes(spec);

    // Every parameter must be supplied by an axis or by `fixed`.
    ParamSet probe = spec.fixed;
    assign(probe, spec.axis1.parameter, spec.axis1.min);
    if (spec.axis2) assign(probe, spec.axis2->parameter, spec.axis2->min);
    (void)probe.require_model();
    (void)probe.require_thermo();
}

std::vector<SweepRecord> run_grid(const GridSpec& spec, int jobs) {
    validate(spec);
    const auto v1 = spec.axis1.values();
    const auto v2 = spec.axis2 ? spec.axis2->values() : std::vector<double>{0.0};
    const std::size_t n2 = v2.size();

    std::vector<SweepRecord> out(spec.size());
    detail::parallel_for(out.size(), jobs, [&](std::size_t k) {
        const std::size_t i = k / n2;
        const std::size_t j = k % n2;
        ParamSet point = spec.fixed;
        assign(point, spec.axis1.parameter, v1[i]);
        if (spec.axis2) assign(point, spec.axis2->parameter, v2[j]);
        try {
            out[k] = evaluate_point(point.require_model(), point.require_thermo());
        } catch (const Error&) {
            rethrow_at("grid point (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    });
    return out;
}

std::vector<BoundaryPoint> phase_boundary(const ModelParams& params, double lambda_min,
                                          double lambda_max, int count) {
    const Axis axis{Parameter::lambda, lambda_min, lambda_max, count, AxisScale::Linear};
    validate_axis(axis, "lambda");

    std::vector<BoundaryPoint> out;
    for (double lambda : axis.values()) {
        ModelParams p = params;
        p.lambda = lambda;
        BoundaryPoint point{lambda, std::nullopt};
        if (const auto beta_c = meanfield::critical_inverse_temperature(p)) {
            point.T_c = 1.0 / *beta_c;
        }
        out.push_back(point);
    }
    return out;
}

std::vector<OracleRow> oracle_table(const ModelParams& params, const Thermo& thermo,
                                    std::span<const int> atoms,
                                    const exact::TruncationConfig& trunc, int jobs) {
    validate(params);
    validate(thermo);
    const auto sol = meanfield::solve_gap(params, thermo);
    const double f_mf = meanfield::free_energy_diff(params, thermo, sol).f_diff;
    const double b0_sq = sol.b0 * sol.b0;

    std::vector<OracleRow> rows(atoms.size() + 1);
    detail::parallel_for(atoms.size(), jobs, [&](std::size_t k) {
        const auto result = exact::free_energy_exact(params, atoms[k], thermo, trunc,
                                                     {exact::Route::Sectors, true});
        rows[k] = {atoms[k], result.f_diff, result.boson_occupation, f_mf, b0_sq, result.n_max};
    });
    rows.back() = {std::nullopt, f_mf, b0_sq, f_mf, b0_sq, 0};
    return rows;
}

}  // namespace dicke::sweep

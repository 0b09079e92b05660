#include "dicke/model.hpp"

#include <cmath>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

void check_finite(const char* field, double value) {
    if (!std::isfinite(value)) {
        throw DomainError(field, "must be finite");
    }
    if (std::abs(value) > kMaxParameterMagnitude) {
        throw DomainError(field, "magnitude exceeds 1e12");
    }
}

}  // namespace

ModelParams validate(const ModelParams& params) {
    check_finite("omega0", params.omega0);
    check_finite("Omega", params.Omega);
    check_finite("g1", params.g1);
    check_finite("g2", params.g2);
    check_finite("lambda", params.lambda);

    if (params.omega0 <= 0.0) throw DomainError("omega0", "must be > 0");
    if (params.Omega <= 0.0) throw DomainError("Omega", "must be > 0");
    if (params.g1 < 0.0) throw DomainError("g1", "must be >= 0");
    if (params.g2 < 0.0) throw DomainError("g2", "must be >= 0");
    return params;
}

Thermo validate(const Thermo& thermo) {
    check_finite("beta", thermo.beta);
    if (thermo.beta <= 0.0) throw DomainError("beta", "must be > 0");
    return thermo;
}

EffectiveCoupling effective_coupling(const ModelParams& params) noexcept {
    const double g = params.g1 + params.g2;
    return {g * g - params.omega0 * params.lambda};
}

ParamSet ParamSet::merged_with(const ParamSet& overrides) const {
    ParamSet out = *this;
    if (overrides.omega0) out.omega0 = overrides.omega0;
    if (overrides.Omega) out.Omega = overrides.Omega;
    if (overrides.g1) out.g1 = overrides.g1;
    if (overrides.g2) out.g2 = overrides.g2;
    if (overrides.lambda) out.lambda = overrides.lambda;
    if (overrides.beta) out.beta = overrides.beta;
    return out;
}

ModelParams ParamSet::require_model() const {
    auto need = [](const std::optional<double>& v, const char* name) {
        if (!v) throw DomainError(name, "missing");
        return *v;
    };
    ModelParams p;
    p.omega0 = need(omega0, "omega0");
    p.Omega = need(Omega, "Omega");
    p.g1 = need(g1, "g1");
    p.g2 = need(g2, "g2");
    p.lambda = need(lambda, "lambda");
    return validate(p);
}

Thermo ParamSet::require_thermo() const {
    if (!beta) throw DomainError("beta", "missing");
    return validate(Thermo{*beta});
}

}  // namespace dicke

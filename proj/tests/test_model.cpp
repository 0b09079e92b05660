#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "dicke/errors.hpp"
#include "dicke/model.hpp"
#include "oracles.hpp"

using namespace dicke;

namespace {

std::string failing_field(const ModelParams& p) {
    try {
        validate(p);
    } catch (const DomainError& e) {
        return e.field();
    }
    return {};
}

}  // namespace

TEST(Validate, AcceptsCanonicalPoint) {
    const ModelParams p{1.0, 1.0, 0.6, 0.6, 0.0};
    EXPECT_EQ(validate(p), p);
}

TEST(Validate, RejectsNonPositiveFrequencies) {
    EXPECT_EQ(failing_field({0.0, 1.0, 0.0, 0.0, 0.0}), "omega0");
    EXPECT_EQ(failing_field({1.0, -1.0, 0.0, 0.0, 0.0}), "Omega");
}

TEST(Validate, NegativeLambdaIsAllowed) {
    EXPECT_NO_THROW(validate(ModelParams{1.0, 1.0, 1.0, 1.0, -0.5}));
}

TEST(Validate, RejectsNegativeCouplings) {
    EXPECT_EQ(failing_field({1.0, 1.0, -0.1, 0.0, 0.0}), "g1");
    EXPECT_EQ(failing_field({1.0, 1.0, 0.0, -0.1, 0.0}), "g2");
}

TEST(Validate, RejectsNonFiniteAndHugeValues) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_EQ(failing_field({1.0, 1.0, 0.0, 0.0, nan}), "lambda");
    EXPECT_EQ(failing_field({1.0, INFINITY, 0.0, 0.0, 0.0}), "Omega");
    EXPECT_EQ(failing_field({1.0, 1.0, 2e12, 0.0, 0.0}), "g1");
    EXPECT_THROW(validate(Thermo{0.0}), DomainError);
    EXPECT_THROW(validate(Thermo{-1.0}), DomainError);
}

TEST(EffectiveCoupling, DirectArithmetic) {
    EXPECT_DOUBLE_EQ(effective_coupling({1.0, 1.0, 0.6, 0.6, 0.0}).G, 1.44);
    EXPECT_DOUBLE_EQ(effective_coupling({1.0, 1.0, 0.6, 0.6, 0.4}).G, 1.04);
    EXPECT_DOUBLE_EQ(effective_coupling({2.0, 1.0, 1.0, 0.0, 1.0}).G, -1.0);
}

TEST(EffectiveCoupling, SymmetricInCouplings) {
    oracle::Sampler rng(11);
    for (int k = 0; k < 200; ++k) {
        auto p = rng.any_params();
        auto q = p;
        std::swap(q.g1, q.g2);
        EXPECT_EQ(effective_coupling(p).G, effective_coupling(q).G);
    }
}

TEST(EffectiveCoupling, ScalesAsEnergySquared) {
    oracle::Sampler rng(12);
    for (double s : {0.1, 7.3}) {
        for (int k = 0; k < 100; ++k) {
            const auto p = rng.any_params();
            const ModelParams q{s * p.omega0, s * p.Omega, s * p.g1, s * p.g2, s * p.lambda};
            const double G = effective_coupling(p).G;
            EXPECT_NEAR(effective_coupling(q).G, s * s * G, 1e-12 * s * s * (1.0 + std::abs(G)));
        }
    }
}

TEST(ParamsJson, ParsesKnownKeys) {
    const auto set = parse_params_json(
        R"({"omega0": 1, "Omega": 2.5, "g1": 0.6, "g2": 0.6, "lambda": -0.2, "beta": 3})");
    EXPECT_EQ(set.require_model(), (ModelParams{1.0, 2.5, 0.6, 0.6, -0.2}));
    EXPECT_EQ(set.require_thermo().beta, 3.0);
}

TEST(ParamsJson, RejectsUnknownKeysAndNonNumbers) {
    try {
        parse_params_json(R"({"omega0": 1, "kappa": 2})");
        FAIL() << "unknown key accepted";
    } catch (const DomainError& e) {
        EXPECT_EQ(e.field(), "kappa");
    }
    EXPECT_THROW(parse_params_json(R"({"g1": "0.5"})"), DomainError);
    EXPECT_THROW(parse_params_json("[1, 2]"), DomainError);
    EXPECT_THROW(parse_params_json("{"), DomainError);
}

TEST(ParamsJson, MissingFieldIsNamed) {
    const auto set = parse_params_json(R"({"omega0": 1, "g1": 0.6, "g2": 0.6, "lambda": 0})");
    try {
        set.require_model();
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.field(), "Omega");
    }
}

TEST(ParamsJson, DumpReparsesIdentically) {
    oracle::Sampler rng(13);
    for (int k = 0; k < 50; ++k) {
        const auto p = rng.any_params();
        ParamSet set{p.omega0, p.Omega, p.g1, p.g2, p.lambda, rng.uniform(0.1, 50.0)};
        const auto back = parse_params_json(dump_params_json(set));
        EXPECT_EQ(back.require_model(), set.require_model());
        EXPECT_EQ(*back.beta, *set.beta);
    }
}

TEST(ParamSet, OverridesWin) {
    ParamSet file{1.0, 1.0, 0.5, 0.5, 0.0, 2.0};
    ParamSet flags;
    flags.g1 = 0.9;
    const auto merged = file.merged_with(flags);
    EXPECT_EQ(*merged.g1, 0.9);
    EXPECT_EQ(*merged.g2, 0.5);
}

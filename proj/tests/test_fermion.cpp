#include <gtest/gtest.h>

#include <cmath>

#include "dicke/errors.hpp"
#include "dicke/exact.hpp"
#include "oracles.hpp"

using namespace dicke;
using namespace dicke::exact;

TEST(FermionIdentity, SingleAtom) {
    const auto c = fermionic_identity_check({1.0, 1.0, 0.7, 0.2, 0.0}, 1, Thermo{2.0}, {12});
    EXPECT_LT(c.discrepancy, 1e-10);
    EXPECT_EQ(c.commutator_norm, 0.0);
    EXPECT_LT(std::abs(c.ratio.imag()), 1e-12);
}

TEST(FermionIdentity, SingleAtomLambdaIrrelevant) {
    const auto a = fermionic_identity_check({1.0, 1.0, 0.7, 0.2, 0.0}, 1, Thermo{2.0}, {12});
    const auto b = fermionic_identity_check({1.0, 1.0, 0.7, 0.2, 3.0}, 1, Thermo{2.0}, {12});
    EXPECT_EQ(a.log_z, b.log_z);
    EXPECT_LT(b.discrepancy, 1e-10);
}

TEST(FermionIdentity, TwoAtomsWithDipole) {
    const auto c = fermionic_identity_check({1.0, 1.0, 0.5, 0.5, 0.3}, 2, Thermo{1.0}, {12});
    EXPECT_LT(c.discrepancy, 1e-10);
}

TEST(FermionIdentity, NonInteractingFactorises) {
    const ModelParams p{0.8, 1.3, 0.0, 0.0, 0.0};
    const Thermo t{1.7};
    for (int atoms : {1, 2}) {
        const auto c = fermionic_identity_check(p, atoms, t, {10});
        EXPECT_LT(c.discrepancy, 1e-12);
        const double expected =
            atoms * std::log(2.0 * std::cosh(0.5 * 1.7 * 1.3)) + oracle::log_boson_sum(1.7, 0.8, 10);
        EXPECT_NEAR(c.log_z, expected, 1e-12);
    }
}

TEST(FermionIdentity, RandomDraws) {
    oracle::Sampler rng(41);
    for (int atoms : {1, 2}) {
        for (int k = 0; k < 5; ++k) {
            const auto p = rng.any_params();
            const Thermo t{rng.uniform(0.2, 4.0)};
            EXPECT_LT(fermionic_identity_check(p, atoms, t, {10}).discrepancy, 1e-10);
        }
    }
}

TEST(FermionIdentity, DiagonalPairTermShiftsTheSplitting) {
    // Keeping i = j in the dipole sum adds (lambda/N) sum_i (1 + sz_i)/2 on the
    // physical subspace: Omega -> Omega + lambda/N plus a constant lambda/2.
    const ModelParams p{1.0, 1.0, 0.5, 0.5, 0.3};
    const Thermo t{1.0};
    const int atoms = 2;
    const auto c = fermionic_identity_check(p, atoms, t, {12}, PairSum::All);
    EXPECT_GT(c.discrepancy, 1e-3);

    auto shifted = p;
    shifted.Omega += p.lambda / atoms;
    const double lz = partition_function(build_full(shifted, atoms, {12}), t).log_z(t.beta);
    const double expected_ratio = std::exp(-t.beta * p.lambda / 2 + lz - c.log_z);
    EXPECT_NEAR(c.ratio.real(), expected_ratio, 1e-10 * expected_ratio);
}

TEST(FermionHamiltonian, CommutesWithNumber) {
    const auto h = fermion_hamiltonian({1.0, 0.9, 0.6, 0.8, -0.4}, 2, 5);
    const auto nf = fermion_number(2, 5);
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
        for (Eigen::Index c = 0; c < h.cols(); ++c) {
            if (h(r, c) != 0.0) EXPECT_EQ(nf[static_cast<std::size_t>(r)], nf[static_cast<std::size_t>(c)]);
        }
    }
    EXPECT_LT(max_asymmetry(h), kHermiticityTol);
}

TEST(FermionHamiltonian, Dimensions) {
    const ModelParams p{1.0, 1.0, 0.5, 0.5, 0.3};
    EXPECT_EQ(build_fermion(p, 1, {7}).dimension, 4u * 8u);
    EXPECT_EQ(build_fermion(p, 2, {7}).dimension, 16u * 8u);
    EXPECT_THROW(build_fermion(p, 3, {2}), DimensionError);
    EXPECT_THROW(fermionic_identity_check(p, 3, Thermo{1.0}, {2}), DimensionError);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "dicke/errors.hpp"
#include "dicke/exact.hpp"
#include "dicke/meanfield.hpp"
#include "oracles.hpp"

using namespace dicke;
using namespace dicke::exact;

namespace {

std::vector<double> merged_sector_spectrum(const ModelParams& p, int atoms, int n_max) {
    std::vector<double> all;
    for (int two_j : sector_spins(atoms)) {
        const auto s = build_collective(p, atoms, two_j, {n_max});
        for (std::int64_t d = 0; d < sector_multiplicity(atoms, two_j); ++d) {
            all.insert(all.end(), s.eigenvalues.begin(), s.eigenvalues.end());
        }
    }
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

TEST(FullHamiltonian, MatchesKroneckerConstruction) {
    oracle::Sampler rng(31);
    for (int atoms = 1; atoms <= 3; ++atoms) {
        for (int k = 0; k < 3; ++k) {
            const auto p = rng.any_params();
            const auto h = full_hamiltonian(p, atoms, 6);
            const auto ref = oracle::kron_hamiltonian(p, atoms, 6);
            EXPECT_LT((h - ref).cwiseAbs().maxCoeff(), 1e-14) << "N=" << atoms;
        }
    }
}

TEST(FullHamiltonian, IsSymmetric) {
    oracle::Sampler rng(32);
    for (int atoms = 1; atoms <= 5; ++atoms) {
        EXPECT_LT(max_asymmetry(full_hamiltonian(rng.any_params(), atoms, 5)), kHermiticityTol);
        EXPECT_LT(max_asymmetry(collective_hamiltonian(rng.any_params(), atoms, atoms, 5)),
                  kHermiticityTol);
    }
    Eigen::MatrixXd skew = Eigen::MatrixXd::Zero(2, 2);
    skew(0, 1) = 1e-6;
    EXPECT_GT(max_asymmetry(skew), kHermiticityTol);
}

TEST(BuildFull, SingleAtomIgnoresDipole) {
    const ModelParams p{1.0, 1.2, 0.7, 0.3, 0.0};
    auto q = p;
    q.lambda = 5.0;
    EXPECT_EQ(build_full(p, 1, {15}).eigenvalues, build_full(q, 1, {15}).eigenvalues);
}

TEST(BuildFull, NonInteractingTensorSum) {
    const ModelParams p{0.7, 1.3, 0.0, 0.0, 0.0};
    const auto s = build_full(p, 2, {1});
    ASSERT_EQ(s.dimension, 8u);
    std::vector<double> expected;
    for (double spin : {-1.3, 0.0, 0.0, 1.3}) {
        for (double boson : {0.0, 0.7}) expected.push_back(spin + boson);
    }
    std::sort(expected.begin(), expected.end());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_NEAR(s.eigenvalues[k], expected[k], 1e-14);
    }
}

TEST(BuildFull, DimensionCaps) {
    const ModelParams p{1.0, 1.0, 0.5, 0.5, 0.3};
    EXPECT_THROW(build_full(p, 13, {1}), DimensionError);
    EXPECT_THROW(build_full(p, 0, {1}), DimensionError);
    EXPECT_THROW(build_full(p, 10, {29}), DimensionError);  // 1024 * 30 > 3e4
    EXPECT_THROW(build_full(p, 2, {0}), DomainError);
    EXPECT_EQ(build_full(p, 3, {4}).dimension, 8u * 5u);
}

TEST(BuildCollective, GroundStateMatchesProductBasis) {
    const ModelParams p{1.0, 1.0, 0.5, 0.5, 0.3};
    const auto full = build_full(p, 2, {20});
    const auto sector = build_collective(p, 2, 2, {20});
    EXPECT_EQ(sector.dimension, 3u * 21u);
    EXPECT_NEAR(full.eigenvalues.front(), sector.eigenvalues.front(), 1e-10);
}

TEST(BuildCollective, SectorsTileTheProductSpectrum) {
    oracle::Sampler rng(33);
    for (int atoms = 2; atoms <= 4; ++atoms) {
        const auto p = rng.any_params();
        const auto full = build_full(p, atoms, {6});
        const auto merged = merged_sector_spectrum(p, atoms, 6);
        ASSERT_EQ(merged.size(), full.eigenvalues.size());
        for (std::size_t k = 0; k < merged.size(); ++k) {
            EXPECT_NEAR(merged[k], full.eigenvalues[k], 1e-10);
        }
    }
}

TEST(BuildCollective, SingletSectorIsShiftedBosonLadder) {
    const ModelParams p{0.8, 1.0, 0.9, 0.4, 0.6};
    const auto s = build_collective(p, 2, 0, {10});
    for (int n = 0; n <= 10; ++n) {
        EXPECT_NEAR(s.eigenvalues[static_cast<std::size_t>(n)], 0.8 * n - 0.3, 1e-13);
    }
    // And those levels appear in the N = 2 product spectrum.
    const auto full = build_full(p, 2, {10});
    for (int n = 0; n <= 3; ++n) {
        const double target = 0.8 * n - 0.3;
        const bool found = std::any_of(full.eigenvalues.begin(), full.eigenvalues.end(),
                                       [&](double e) { return std::abs(e - target) < 1e-10; });
        EXPECT_TRUE(found) << target;
    }
}

TEST(BuildCollective, DiagonalCase) {
    const ModelParams p{0.7, 1.1, 0.0, 0.0, 0.0};
    const int atoms = 3;
    const auto s = build_collective(p, atoms, atoms, {4});
    std::vector<double> expected;
    for (int k = 0; k <= atoms; ++k) {
        for (int n = 0; n <= 4; ++n) expected.push_back(1.1 * (k - 1.5) + 0.7 * n);
    }
    std::sort(expected.begin(), expected.end());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_NEAR(s.eigenvalues[k], expected[k], 1e-13);
    }
}

TEST(BuildCollective, InvalidSector) {
    const ModelParams p{1.0, 1.0, 0.5, 0.5, 0.3};
    EXPECT_THROW(build_collective(p, 4, 1, {4}), DomainError);
    EXPECT_THROW(build_collective(p, 4, 6, {4}), DomainError);
    EXPECT_THROW(build_collective(p, 3, -1, {4}), DomainError);
}

TEST(CollectiveIdentity, PairExchangeEqualsLadderForm) {
    for (int atoms = 2; atoms <= 6; ++atoms) {
        const double lam = 0.37;
        const Eigen::MatrixXd jp = collective_plus(atoms);
        const Eigen::MatrixXd jz = collective_z(atoms);
        const auto dim = jp.rows();
        const Eigen::MatrixXd ladder =
            (lam / atoms) * (jp * jp.transpose() -
                             0.5 * (atoms * Eigen::MatrixXd::Identity(dim, dim) + jz));
        const Eigen::MatrixXd direct = (lam / atoms) * pair_exchange(atoms);
        EXPECT_LT((ladder - direct).cwiseAbs().maxCoeff(), 1e-12) << "N=" << atoms;
    }
}

TEST(SectorMultiplicity, SmallExamples) {
    EXPECT_EQ(sector_multiplicity(2, 2), 1);
    EXPECT_EQ(sector_multiplicity(2, 0), 1);
    EXPECT_EQ(sector_multiplicity(4, 4), 1);
    EXPECT_EQ(sector_multiplicity(4, 2), 3);
    EXPECT_EQ(sector_multiplicity(4, 0), 2);
    EXPECT_EQ(sector_multiplicity(3, 1), 2);
    EXPECT_THROW(sector_multiplicity(4, 3), DomainError);
}

TEST(SectorMultiplicity, AgreesWithTotalSpinDiagonalization) {
    for (int atoms = 1; atoms <= 8; ++atoms) {
        const auto degeneracies = oracle::total_spin_degeneracies(atoms);
        std::int64_t total = 0;
        for (int two_j : sector_spins(atoms)) {
            const auto d = sector_multiplicity(atoms, two_j);
            total += d * (two_j + 1);
            EXPECT_EQ(degeneracies.at(two_j), d * (two_j + 1)) << "N=" << atoms << " 2j=" << two_j;
        }
        EXPECT_EQ(total, std::int64_t{1} << atoms);
    }
}

TEST(PartitionFunction, SingleLevel) {
    SpectralData s;
    s.eigenvalues = {-2.5};
    s.dimension = 1;
    const auto z = partition_function(s, Thermo{3.0});
    EXPECT_DOUBLE_EQ(z.log_z(3.0), 7.5);
}

TEST(PartitionFunction, FreeAtomAndBoson) {
    const ModelParams p{0.9, 1.4, 0.0, 0.0, 0.0};
    const Thermo t{2.0};
    const int n_max = 60;
    const double expected = std::log(2.0 * std::cosh(1.4)) + oracle::log_boson_sum(2.0, 0.9, n_max);
    EXPECT_NEAR(partition_function(build_full(p, 1, {n_max}), t).log_z(2.0), expected, 1e-12);
    // Untruncated geometric series.
    const double untruncated = std::log(2.0 * std::cosh(1.4)) - std::log1p(-std::exp(-1.8));
    EXPECT_NEAR(partition_function(build_full(p, 1, {n_max}), t).log_z(2.0), untruncated, 1e-8);
}

TEST(PartitionFunction, HighTemperatureCountsStates) {
    const ModelParams p{1.0, 1.0, 0.5, 0.3, 0.2};
    const auto s = build_full(p, 2, {5});
    const auto z = partition_function(s, Thermo{1e-12});
    EXPECT_NEAR(std::exp(z.log_z(1e-12)), static_cast<double>(s.dimension), 1e-6);
}

TEST(PartitionFunction, NondecreasingInCutoff) {
    oracle::Sampler rng(34);
    for (int k = 0; k < 5; ++k) {
        const auto p = rng.any_params();
        const Thermo t{rng.uniform(0.2, 5.0)};
        double prev = -INFINITY;
        for (int n_max = 1; n_max <= 24; n_max += 3) {
            const double lz = partition_function(build_full(p, 2, {n_max}), t).log_z(t.beta);
            EXPECT_GE(lz, prev - 1e-12);
            prev = lz;
        }
    }
}

TEST(BosonOccupation, FreeBoson) {
    const ModelParams p{0.6, 1.0, 0.0, 0.0, 0.0};
    const Thermo t{1.5};
    const int n_max = 40;
    const auto s = build_full(p, 2, {n_max}, Vectors::Keep);
    double num = 0.0, den = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        num += n * std::exp(-1.5 * 0.6 * n);
        den += std::exp(-1.5 * 0.6 * n);
    }
    EXPECT_NEAR(boson_occupation(s, t), num / den / 2.0, 1e-12);
}

TEST(BosonOccupation, InfiniteTemperatureFlatLadder) {
    const ModelParams p{1.0, 1.0, 0.4, 0.2, 0.1};
    const auto s = build_full(p, 2, {4}, Vectors::Keep);
    EXPECT_NEAR(boson_occupation(s, Thermo{1e-10}), 4.0 / 2.0 / 2.0, 1e-8);
}

TEST(BosonOccupation, RequiresEigenvectors) {
    const auto s = build_full({1.0, 1.0, 0.4, 0.2, 0.1}, 2, {4});
    EXPECT_FALSE(s.has_eigenvectors());
    EXPECT_THROW(boson_occupation(s, Thermo{1.0}), DomainError);
}

TEST(BosonOccupation, SectorEnsembleMatchesProductBasis) {
    const ModelParams p{1.0, 0.8, 0.7, 0.5, 0.4};
    const Thermo t{1.7};
    const auto full = assemble_ensemble(p, 3, 12, Route::Full, Vectors::Keep);
    const auto sectors = assemble_ensemble(p, 3, 12, Route::Sectors, Vectors::Keep);
    EXPECT_NEAR(full.boson_occupation(t), sectors.boson_occupation(t), 1e-11);
}

TEST(FreeEnergyExact, NonInteractingIsExactlyZero) {
    for (int atoms : {1, 2, 5}) {
        const auto r = free_energy_exact({1.0, 1.3, 0.0, 0.0, 0.0}, atoms, Thermo{2.0}, {16});
        EXPECT_EQ(r.f_diff, 0.0);
    }
}

TEST(FreeEnergyExact, RoutesAgree) {
    oracle::Sampler rng(35);
    for (int atoms = 2; atoms <= 4; ++atoms) {
        const auto p = rng.any_params();
        const Thermo t{rng.uniform(0.3, 4.0)};
        const auto a = free_energy_at_cutoff(p, atoms, t, 10, {Route::Full});
        const auto b = free_energy_at_cutoff(p, atoms, t, 10, {Route::Sectors});
        EXPECT_NEAR(a.f, b.f, 1e-10 * std::abs(a.f));
    }
}

TEST(FreeEnergyExact, AdaptiveCutoffGrows) {
    const ModelParams p{1.0, 1.0, 1.0, 1.0, 0.0};
    const Thermo t{5.0};
    const auto r = free_energy_exact(p, 2, t, {4, 1e-8});
    EXPECT_GT(r.n_max, 4);
    const auto finer = free_energy_at_cutoff(p, 2, t, 2 * r.n_max);
    EXPECT_NEAR(r.f, finer.f, 1e-8);
}

TEST(FreeEnergyExact, TruncationErrorWhenBudgetExhausted) {
    const ModelParams p{1.0, 1.0, 1.0, 1.0, 0.0};
    EXPECT_THROW(free_energy_exact(p, 2, Thermo{5.0}, {2, 1e-14, 1}), TruncationError);
    EXPECT_THROW(free_energy_exact(p, 2, Thermo{5.0}, {0, 1e-8}), DomainError);
}

TEST(FreeEnergyExact, SeedCutoffHeuristic) {
    EXPECT_EQ(seed_cutoff({1.0, 1.0, 1.0, 1.0, 0.5}, Thermo{5.0}), 42);
    EXPECT_EQ(seed_cutoff({1.0, 1.0, 0.0, 0.0, 0.0}, Thermo{0.1}), 100);
}

TEST(FreeEnergyExact, MovesTowardMeanField) {
    const ModelParams p{1.0, 1.0, 1.0, 1.0, 0.5};
    const Thermo t{5.0};
    const double mf =
        meanfield::free_energy_diff(p, t, meanfield::solve_gap(p, t)).f_diff;
    const exact::TruncationConfig trunc{seed_cutoff(p, t), 1e-8};
    const double d2 = std::abs(free_energy_exact(p, 2, t, trunc).f_diff - mf);
    const double d4 = std::abs(free_energy_exact(p, 4, t, trunc).f_diff - mf);
    EXPECT_LT(d4, d2);
}

TEST(FiniteN, NotSymmetricUnderCouplingExchange) {
    const ModelParams p{1.0, 1.0, 0.9, 0.2, 0.3};
    auto q = p;
    std::swap(q.g1, q.g2);
    const auto a = build_full(p, 2, {12});
    const auto b = build_full(q, 2, {12});
    double diff = 0.0;
    for (std::size_t k = 0; k < a.eigenvalues.size(); ++k) {
        diff = std::max(diff, std::abs(a.eigenvalues[k] - b.eigenvalues[k]));
    }
    EXPECT_GT(diff, 1e-3);
}

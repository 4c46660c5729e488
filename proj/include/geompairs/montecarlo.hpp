/**
 * @file montecarlo.hpp
 * @brief Simulation estimates of the pair statistics, with standard errors.
 *
 * Reproducibility contract: every sample index s draws its word from its own
 * generator seeded with word_seed(seed, s), so the set of simulated words is
 * a function of (params, n, samples, seed) alone.  Splitting the index range
 * across W workers only reassociates the accumulation; fixed (seed, W) gives
 * bit-identical results, and varying W moves the mean by at most floating
 * reassociation.
 */
#pragma once

#include "geompairs/model.hpp"

#include <cstdint>

namespace geompairs::montecarlo {

using model::GeomParams;

struct EstimateCI {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Per-sample seed: SplitMix64 finalizer applied to seed + (s+1) * golden.
std::uint64_t word_seed(std::uint64_t seed, std::uint64_t sample_index);

/// Sample mean and standard error of the distinct-pair count over
/// independent words of length n.  Requires samples >= 2.
EstimateCI estimate_expected_pairs(const GeomParams& params, std::size_t n,
                                   std::uint64_t samples, std::uint64_t seed,
                                   unsigned workers = 1);

/// Empirical frequency of "the pair ij occurs at least once", with the
/// Bernoulli standard error.  Requires samples >= 2 and i, j >= 1.
EstimateCI estimate_pair_presence(const GeomParams& params, std::int64_t i, std::int64_t j,
                                  std::size_t n, std::uint64_t samples, std::uint64_t seed,
                                  unsigned workers = 1);

}  // namespace geompairs::montecarlo

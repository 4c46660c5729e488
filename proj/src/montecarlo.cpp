#include "geompairs/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace geompairs::montecarlo {

using model::SplitMix64;
using model::Word;

std::uint64_t word_seed(std::uint64_t seed, std::uint64_t sample_index) {
    return SplitMix64::mix(seed + (sample_index + 1) * 0x9e3779b97f4a7c15ULL);
}

namespace {

struct BlockMoments {
    double sum = 0.0;
    double sum_sq = 0.0;
};

// Runs `statistic` over the sample index range [begin, end).
template <typename Statistic>
BlockMoments run_block(const GeomParams& params, std::size_t n, std::uint64_t seed,
                       std::uint64_t begin, std::uint64_t end, const Statistic& statistic) {
    BlockMoments m;
    const double log_q = std::log(params.q_double());  // validated before spawning
    Word word;
    word.letters.resize(n);
    std::vector<std::pair<std::int64_t, std::int64_t>> scratch;
    scratch.reserve(n);
    for (std::uint64_t s = begin; s < end; ++s) {
        SplitMix64 rng(word_seed(seed, s));
        for (std::size_t k = 0; k < n; ++k) {
            word.letters[k] = 1 + static_cast<std::int64_t>(std::log(rng.next_unit()) / log_q);
        }
        const double x = statistic(word, scratch);
        m.sum += x;
        m.sum_sq += x * x;
    }
    return m;
}

template <typename Statistic>
EstimateCI estimate(const GeomParams& params, std::size_t n, std::uint64_t samples,
                    std::uint64_t seed, unsigned workers, const Statistic& statistic) {
    if (samples < 2) {
        throw std::invalid_argument("monte carlo: need at least 2 samples");
    }
    if (!(std::log(params.q_double()) < 0)) {
        throw std::invalid_argument("monte carlo: q rounds to 1 in double precision");
    }
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, samples));

    std::vector<BlockMoments> blocks(workers);
    if (workers == 1) {
        blocks[0] = run_block(params, n, seed, 0, samples, statistic);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = samples * w / workers;
            const std::uint64_t end = samples * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                blocks[w] = run_block(params, n, seed, begin, end, statistic);
            });
        }
        for (auto& t : pool) t.join();
    }

    // Combine in worker order so the reduction is deterministic per W.
    double sum = 0.0, sum_sq = 0.0;
    for (const BlockMoments& b : blocks) {
        sum += b.sum;
        sum_sq += b.sum_sq;
    }

    EstimateCI ci;
    ci.samples = samples;
    ci.seed = seed;
    const double count = static_cast<double>(samples);
    ci.mean = sum / count;
    const double variance = std::max(0.0, (sum_sq - count * ci.mean * ci.mean) / (count - 1.0));
    ci.stderr_ = std::sqrt(variance / count);
    return ci;
}

}  // namespace

EstimateCI estimate_expected_pairs(const GeomParams& params, std::size_t n,
                                   std::uint64_t samples, std::uint64_t seed, unsigned workers) {
    return estimate(params, n, samples, seed, workers,
                    [](const Word& word, auto& scratch) {
                        return static_cast<double>(model::count_distinct_pairs(word, scratch));
                    });
}

EstimateCI estimate_pair_presence(const GeomParams& params, std::int64_t i, std::int64_t j,
                                  std::size_t n, std::uint64_t samples, std::uint64_t seed,
                                  unsigned workers) {
    if (i < 1 || j < 1) {
        throw std::domain_error("letter index must be >= 1");
    }
    return estimate(params, n, samples, seed, workers,
                    [i, j](const Word& word, auto&) {
                        for (std::size_t k = 0; k + 1 < word.letters.size(); ++k) {
                            if (word.letters[k] == i && word.letters[k + 1] == j) return 1.0;
                        }
                        return 0.0;
                    });
}

}  // namespace geompairs::montecarlo

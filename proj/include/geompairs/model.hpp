/**
 * @file model.hpp
 * @brief Geometrically distributed random words and their distinct adjacent
 *        letter pairs.
 *
 * A word of length n is a sequence of n i.i.d. letters with
 * P(letter = i) = p q^{i-1}, q = 1 - p.  Letters are unbounded positive
 * integers.  All operations are pure; values are immutable once built and
 * safe to share across threads.
 */
#pragma once

#include "geompairs/numerics.hpp"

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace geompairs::model {

using numerics::BigRational;
using numerics::Real;

/**
 * The distribution parameter pair (p, q).  q is stored as an exact rational
 * and p derived as 1 - q, so p + q = 1 holds exactly in either mode.  The
 * `exact` flag records how the parameter was supplied (fraction vs decimal)
 * and selects the exact-rational code paths downstream.
 */
class GeomParams {
public:
    static GeomParams from_q(const BigRational& q, bool exact = true);
    /// "a/b" selects exact mode, a decimal ("0.5", "1e-9") float mode.
    static GeomParams from_q_text(const std::string& text);

    const BigRational& q_exact() const { return q_; }
    const BigRational& p_exact() const { return p_; }
    bool exact() const { return exact_; }

    Real q() const { return numerics::to_real(q_); }
    Real p() const { return numerics::to_real(p_); }
    double q_double() const;
    double p_double() const;

    /// a_i = p q^{i-1}, the probability of letter i.  Requires i >= 1.
    Real letter_weight(std::int64_t i) const;
    BigRational letter_weight_exact(std::int64_t i) const;

private:
    GeomParams(BigRational q, bool exact);
    BigRational q_;
    BigRational p_;
    bool exact_;
};

struct Word {
    std::vector<std::int64_t> letters;
    std::size_t size() const { return letters.size(); }
};

struct PairTally {
    std::set<std::pair<std::int64_t, std::int64_t>> pairs;
    std::size_t distinct_count = 0;
};

/// P(letter = i) = p q^{i-1}.  Throws std::domain_error for i < 1.
Real letter_pmf(const GeomParams& params, std::int64_t i);
BigRational letter_pmf_exact(const GeomParams& params, std::int64_t i);

/**
 * SplitMix64: state advances by the golden-ratio increment and each output is
 * the mixed state.  Small, fast, and trivially seekable, which keeps every
 * sampling path reproducible from a single integer seed.
 */
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in the open interval (0,1): (raw53 + 0.5) * 2^-53.
    double next_unit() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }
};

/**
 * Draws n letters by inversion: letter = 1 + floor(log U / log q) with U
 * uniform in (0,1) from SplitMix64(seed).  The j-th letter consumes exactly
 * the j-th output of the stream, so the seed-to-word mapping is stable.
 */
Word sample_word(const GeomParams& params, std::size_t n, std::uint64_t seed);

/// The set { (w_k, w_{k+1}) } of adjacent ordered pairs and its cardinality.
PairTally distinct_pairs(const Word& word);

/// Count-only variant for hot loops; scratch is reused between calls.
std::size_t count_distinct_pairs(const Word& word,
                                 std::vector<std::pair<std::int64_t, std::int64_t>>& scratch);

}  // namespace geompairs::model

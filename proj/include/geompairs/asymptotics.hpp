/**
 * @file asymptotics.hpp
 * @brief Large-n expansions of the equal-pair and unequal-pair expectations,
 *        their oscillating pole contributions, and the direct harmonic-sum
 *        oracles they approximate.
 */
#pragma once

#include "geompairs/model.hpp"

#include <cstdint>

namespace geompairs::asymptotics {

using model::GeomParams;
using numerics::Complex;
using numerics::Real;

/// One expansion, with the displayed terms reported separately.
struct AsymptoticBreakdown {
    Real leading;
    Real secondary;
    Real constant;
    Real fluctuation;
    Real total;  // sum of the four
};

/**
 * The oscillation phase of the equal-pair expansion.  The underlying
 * harmonic sum is sum_i (1 - e^{-n (1-q)^2 q^{2i-2}}), a function of
 * y = n (1-q)^2 sampled on powers of q^2, so the natural scale is
 *   x = log_{1/q^2}( n (1-q)^2 ).
 * Isolated here so an alternate convention can be swapped in one place.
 */
Real s_fluctuation_scale(const GeomParams& params, std::uint64_t n);

/// The unequal-pair expansion oscillates on the scale x = n (the q-power
/// normalization is carried by the (1-q)^{-2 chi} prefactor instead).
Real t_fluctuation_scale(const GeomParams& params, std::uint64_t n);

/**
 * Truncated fluctuation sums, assembled from conjugate pole pairs k and -k
 * so the imaginary part cancels; returned as Complex so callers can check
 * the residual imaginary part (tests assert it below 1e-15).
 */
Complex s_fluctuation_complex(const GeomParams& params, std::uint64_t n, unsigned K);
Complex t_fluctuation_complex(const GeomParams& params, std::uint64_t n, unsigned K);

/**
 * Equal-pair expansion:
 *   (1/2) log_{1/q} n + 1/2 - (gamma + 2 ln(1-q)) / (2 ln q)
 *   + (1/(2 ln q)) sum_{0<|k|<=K} Gamma(2 pi i k / ln q^2) e^{2 k pi i x}.
 * The poles sit at the even family of q^2 (period one in x).  Requires n >= 2.
 */
AsymptoticBreakdown s_n_asymptotic(const GeomParams& params, std::uint64_t n, unsigned K);

/**
 * Unequal-pair expansion:
 *   (1/2) (log_q n)^2
 *   + (2 gamma + 4 ln p - ln q) (log_q n) / (2 ln q)
 *   + (6 gamma^2 + pi^2 + 24 (ln p)^2 + 12 ln p (2 gamma - ln q)
 *      - 6 gamma ln q - (ln q)^2) / (12 (ln q)^2)
 *   + sum_{0<|k|<=K} [ 3 (1-q)^{-2 chi_k} x^{-chi_k} Gamma(chi_k)
 *                      + (1-q)^{-2 chihat_k} x^{-chihat_k} Gamma(chihat_k) ]
 *                    / (2 ln q),
 * with chi_k the even and chihat_k the odd pole families.  Requires n >= 2.
 */
AsymptoticBreakdown t_n_asymptotic(const GeomParams& params, std::uint64_t n, unsigned K);

/**
 * Direct summation of sum_{i>=1} (1 - e^{-n (1-q)^2 q^{2i-2}}), truncated
 * once the summand drops below 1e-16.  The equal-pair expansion is the
 * asymptotic of exactly this sum.  Requires n >= 1.
 */
double harmonic_sum_oracle(const GeomParams& params, std::uint64_t n);

/**
 * Direct summation of 2 sum_{i>=1} sum_{j>i} (1 - e^{-n p^2 q^{i+j-2}}),
 * same truncation rule; the unequal-pair expansion approximates this.
 */
double double_harmonic_oracle(const GeomParams& params, std::uint64_t n);

}  // namespace geompairs::asymptotics

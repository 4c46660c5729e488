/**
 * @file closedform.hpp
 * @brief Exact per-pair occurrence probabilities, their truncated infinite
 *        sums with certified tails, and the finite binomial-sum formulas.
 *
 * Notation, for letters i and j of a word with parameters (p, q):
 *   a = p q^{i-1},  b = sqrt(1 + 2a - 3a^2),
 *   c = p^2 q^{i+j-2},  d = sqrt(1 - 4c).
 *
 * Every power of a near-unit quantity is evaluated through expm1/log1p with
 * the base rewritten free of cancellation (e.g. 1 - (1+b-a)/2 = 2a^2/(1+a+b)),
 * which keeps the results accurate up to n ~ 2^20 and beyond.
 */
#pragma once

#include "geompairs/model.hpp"

#include <cstdint>

namespace geompairs::closedform {

using model::GeomParams;
using numerics::BigRational;
using numerics::Real;

/// A truncated-sum value plus a rigorous bound on the omitted remainder.
struct CertifiedValue {
    Real value;
    Real tail_bound;
};

/// The (a, b, c, d) auxiliaries for an unequal pair; requires i != j so that
/// c <= p^2 q < 1/4 and d stays real.
struct PairAuxiliaries {
    Real a;
    Real b;
    Real c;
    Real d;
    static PairAuxiliaries make(const GeomParams& params, std::int64_t i, std::int64_t j);
};

/// P(the pair ii occurs in a word of length n).  Requires i >= 1.
Real p_ii(const GeomParams& params, std::int64_t i, std::uint64_t n);

/// P(the pair ij occurs, i != j).  Throws std::invalid_argument when i == j.
Real p_ij(const GeomParams& params, std::int64_t i, std::int64_t j, std::uint64_t n);

/**
 * S_n = sum_i P_ii(n), truncated at M letters with the union-bound tail
 * (n-1) p^2 q^{2M} / (1 - q^2) <= eps.
 */
CertifiedValue s_n_sum(const GeomParams& params, std::uint64_t n, double eps);

/**
 * T_n = 2 sum_{i<j} P_ij(n), truncated along diagonals i+j-2 <= S with tail
 * (n-1) p^2 q^{S+1} ((S+2) - (S+1) q) / (1-q)^2 <= eps.
 */
CertifiedValue t_n_sum(const GeomParams& params, std::uint64_t n, double eps);

/// E(n) = S_n + T_n with the tails added; each part receives eps/2.
CertifiedValue expected_pairs(const GeomParams& params, std::uint64_t n, double eps);

/**
 * S_n by the alternating double binomial sum.  Exact rationals in exact mode;
 * float mode escalates the working precision to n + 64 mantissa bits since
 * the summands grow to ~2^n before cancelling.  Requires 2 <= n <= 512.
 */
Real s_n_binomial(const GeomParams& params, std::uint64_t n);
BigRational s_n_binomial_exact(const GeomParams& params, std::uint64_t n);

/**
 * T_n = 2 sum_{k=1}^{floor(n/2)} (-1)^{k-1} p^{2k} q^k C(n-k,k)
 *       / ((1-q^k)^2 (1+q^k)), same gates and precision policy.
 */
Real t_n_binomial(const GeomParams& params, std::uint64_t n);
BigRational t_n_binomial_exact(const GeomParams& params, std::uint64_t n);

}  // namespace geompairs::closedform

/**
 * @file series.hpp
 * @brief Coefficient extraction for the zero-occurrence generating functions
 *        of single pairs, by linear recurrence.
 *
 * Recurrences are an algebraically independent route from the partial
 * fraction closed forms, which is what makes them usable as an oracle for
 * those formulas.
 */
#pragma once

#include "geompairs/closedform.hpp"
#include "geompairs/model.hpp"

#include <cstdint>

namespace geompairs::series {

using closedform::CertifiedValue;
using model::GeomParams;
using numerics::Real;

/**
 * A rational generating function (n0 + n1 z) / (d0 + d1 z + d2 z^2) with
 * d0 != 0; coeff(n) walks the induced linear recurrence
 *   d0 g_m = [m == 0] n0 + [m == 1] n1 - d1 g_{m-1} - d2 g_{m-2}.
 */
struct Lcc2 {
    Real n0, n1;
    Real d0, d1, d2;

    Lcc2(Real num0, Real num1, Real den0, Real den1, Real den2);
    Real coeff(std::uint64_t n) const;
};

/**
 * P(at least one occurrence of the pair ij), i != j, with c the pair weight:
 * 1 - f_n for the coefficients f of 1/(1 - z + c z^2), i.e.
 * f_0 = f_1 = 1, f_n = f_{n-1} - c f_{n-2}.  Requires 0 <= c < 1/4.
 */
Real coeff_at_least_one_ij(const Real& c, std::uint64_t n);

/**
 * P(at least one occurrence of the pair ii) with a the letter weight.
 * The zero-occurrence GF is 1 / (1 - z + a^2 z^2/(1 + a z)); clearing the
 * inner denominator,
 *   (1 + a z) / ((1 - z)(1 + a z) + a^2 z^2)
 *     = (1 + a z) / (1 + (a-1) z + a(a-1) z^2),
 * whose coefficients satisfy g_0 = g_1 = 1 and
 * g_n = (1-a) g_{n-1} + a(1-a) g_{n-2}.  The cleared form reproduces the
 * hand-computed length-2 and length-3 probabilities a^2 and 2a^2 - a^3,
 * which pins the sign of the a z term in the cluster denominator.
 * Requires 0 < a < 1.
 */
Real coeff_at_least_one_ii(const Real& a, std::uint64_t n);

/**
 * The same per-letter quantity as a finite double binomial sum,
 *   sum_{s=1..n} C(n,s) a^s (-1)^{s+1}
 *     - sum_{s=1..n} (1-a)^{s-1} a^{n-s+1} C(s, n-s+1);
 * must equal coeff_at_least_one_ii(a, n).  Gated to 2 <= n <= 512 with the
 * n + 64 bit precision policy (summands reach ~2^n before cancelling).
 */
Real binomial_coeff_ii(const Real& a, std::uint64_t n);

/**
 * [z^n] of the expected-distinct-pairs generating function: the sum of the
 * at-least-one coefficients over all letters and ordered letter pairs,
 * truncated with the same certified tails as the closed-form sums.
 */
CertifiedValue q_coeff(const GeomParams& params, std::uint64_t n, double eps);

}  // namespace geompairs::series

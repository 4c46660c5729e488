#include "geompairs/series.hpp"

#include <algorithm>

namespace geompairs::series {

using numerics::binomial;

Lcc2::Lcc2(Real num0, Real num1, Real den0, Real den1, Real den2)
    : n0(std::move(num0)), n1(std::move(num1)),
      d0(std::move(den0)), d1(std::move(den1)), d2(std::move(den2)) {
    if (d0 == 0) {
        throw std::invalid_argument("Lcc2: constant denominator coefficient must be nonzero");
    }
}

Real Lcc2::coeff(std::uint64_t n) const {
    Real prev2 = n0 / d0;  // g_0
    if (n == 0) return prev2;
    Real prev1 = (n1 - d1 * prev2) / d0;  // g_1
    if (n == 1) return prev1;
    for (std::uint64_t m = 2; m <= n; ++m) {
        Real next = -(d1 * prev1 + d2 * prev2) / d0;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

Real coeff_at_least_one_ij(const Real& c, std::uint64_t n) {
    if (!(c >= 0 && 4 * c < 1)) {
        throw std::invalid_argument("coeff_at_least_one_ij: need 0 <= c < 1/4");
    }
    if (n < 2) return Real(0);
    // f_n = f_{n-1} - c f_{n-2}, f_0 = f_1 = 1
    Real prev2 = 1, prev1 = 1;
    for (std::uint64_t m = 2; m <= n; ++m) {
        Real next = prev1 - c * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return 1 - prev1;
}

Real coeff_at_least_one_ii(const Real& a, std::uint64_t n) {
    if (!(a > 0 && a < 1)) {
        throw std::invalid_argument("coeff_at_least_one_ii: need 0 < a < 1");
    }
    if (n < 2) return Real(0);
    // g_n = (1-a) (g_{n-1} + a g_{n-2}), g_0 = g_1 = 1
    const Real one_minus_a = 1 - a;
    Real prev2 = 1, prev1 = 1;
    for (std::uint64_t m = 2; m <= n; ++m) {
        Real next = one_minus_a * (prev1 + a * prev2);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return 1 - prev1;
}

Real binomial_coeff_ii(const Real& a_in, std::uint64_t n) {
    if (n < 2 || n > 512) {
        throw std::invalid_argument("binomial_coeff_ii is gated to 2 <= n <= 512");
    }
    numerics::PrecisionGuard guard(
        std::max<unsigned>(numerics::kDefaultMantissaBits, static_cast<unsigned>(n) + 64));
    const Real a(a_in);
    const std::int64_t n_i = static_cast<std::int64_t>(n);

    Real first = 0;
    Real a_pow = 1;
    for (std::int64_t s = 1; s <= n_i; ++s) {
        a_pow *= a;
        const Real term = Real(binomial(n_i, s)) * a_pow;
        first = (s % 2 == 1) ? first + term : first - term;
    }

    Real second = 0;
    const Real one_minus_a = 1 - a;
    for (std::int64_t s = 1; s <= n_i; ++s) {
        const numerics::BigInt choose = binomial(s, n_i - s + 1);
        if (choose == 0) continue;
        Real term = Real(choose);
        for (std::int64_t e = 0; e < s - 1; ++e) term *= one_minus_a;
        for (std::int64_t e = 0; e < n_i - s + 1; ++e) term *= a;
        second += term;
    }
    return first - second;
}

CertifiedValue q_coeff(const GeomParams& params, std::uint64_t n, double eps) {
    if (eps <= 0) {
        throw std::invalid_argument("q_coeff: eps must be positive");
    }
    if (n < 2) return {Real(0), Real(0)};
    const Real q = params.q();
    const Real p = params.p();
    const Real half_eps = Real(eps) / 2;

    // Equal pairs: same union-bound truncation as the closed-form sum.
    Real sum = 0;
    Real tail_equal;
    {
        const Real factor = Real(n - 1) * p * p / (1 - q * q);
        Real q_2m = 1;
        std::int64_t i = 0;
        do {
            ++i;
            sum += coeff_at_least_one_ii(params.letter_weight(i), n);
            q_2m *= q * q;
            tail_equal = factor * q_2m;
        } while (tail_equal > half_eps);
    }

    // Unequal pairs along diagonals i+j-2 = s; the weight c = p^2 q^s is
    // shared by the floor((s+1)/2) pairs with i < j on a diagonal.
    Real tail_unequal;
    {
        const Real prefactor = Real(n - 1) * p * p / ((1 - q) * (1 - q));
        std::int64_t s = 0;
        Real q_s = Real(1);
        Real q_s1 = q;
        do {
            ++s;
            q_s *= q;
            q_s1 *= q;
            const Real c = p * p * q_s;
            sum += Real(2 * ((s + 1) / 2)) * coeff_at_least_one_ij(c, n);
            tail_unequal = prefactor * q_s1 * (Real(s + 2) - Real(s + 1) * q);
        } while (tail_unequal > half_eps);
    }

    return {sum, tail_equal + tail_unequal};
}

}  // namespace geompairs::series

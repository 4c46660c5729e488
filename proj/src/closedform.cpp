#include "geompairs/closedform.hpp"

#include <algorithm>
#include <vector>

namespace geompairs::closedform {

using boost::multiprecision::expm1;
using boost::multiprecision::log1p;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;
using numerics::BigInt;
using numerics::binomial;

namespace {

Real clamp_unit(Real v) {
    if (v < 0) return Real(0);
    if (v > 1) return Real(1);
    return v;
}

// Equal-pair auxiliaries with all the cancellation-prone differences
// rewritten:  1-a is q exactly when i = 1, b^2 = (1+3a)(1-a),
// 1 - (1+b-a)/2 = 2a^2/(1+a+b)  and  (1-a-b)/2 = -2a(1-a)/(1-a+b).
struct EqualAux {
    Real a;
    Real one_minus_a;
    Real b;
};

EqualAux make_equal_aux(const GeomParams& params, std::int64_t i) {
    EqualAux aux;
    aux.a = params.letter_weight(i);
    aux.one_minus_a = (i == 1) ? params.q() : Real(1 - aux.a);
    aux.b = sqrt((1 + 3 * aux.a) * aux.one_minus_a);
    return aux;
}

Real p_ii_from_aux(const EqualAux& aux, std::uint64_t n) {
    if (n < 2) return Real(0);
    const Real& a = aux.a;
    const Real& b = aux.b;
    const Real one_plus_a_plus_b = 1 + a + b;
    const Real coeff_plus = one_plus_a_plus_b / (2 * b);          // (1+b+a)/(2b)
    const Real coeff_minus = 2 * a * a / (b * one_plus_a_plus_b); // (1-b+a)/(2b)
    const Real gap_plus = 2 * a * a / one_plus_a_plus_b;          // 1 - (1+b-a)/2
    const Real root_minus = -2 * a * aux.one_minus_a / (aux.one_minus_a + b);

    // P = 1 + coeff_minus r_-^n - coeff_plus r_+^n, with
    // coeff_plus - coeff_minus = 1 used to keep every term small:
    const Real term_plus = -expm1(static_cast<long>(n) * log1p(-gap_plus));
    const Real term_minus = 1 - pow(root_minus, static_cast<int>(n));
    return clamp_unit(coeff_plus * term_plus - coeff_minus * term_minus);
}

struct UnequalAux {
    Real c;
    Real d;
    Real one_minus_d;  // 4c/(1+d)
};

UnequalAux make_unequal_aux(const GeomParams& params, std::int64_t i, std::int64_t j) {
    UnequalAux aux;
    aux.c = params.letter_weight(i) * params.letter_weight(j);
    aux.d = sqrt(1 - 4 * aux.c);
    aux.one_minus_d = 4 * aux.c / (1 + aux.d);
    return aux;
}

Real p_ij_from_aux(const UnequalAux& aux, std::uint64_t n) {
    if (n < 2) return Real(0);
    // Reciprocal roots of 1 - z + c z^2: rho_+ = (1+d)/2 = 2c/(1-d) and
    // rho_- = (1-d)/2 = 2c/(1+d).
    const Real coeff_plus = (1 + aux.d) / (2 * aux.d);
    const Real coeff_minus = aux.one_minus_d / (2 * aux.d);
    const Real rho_minus = aux.one_minus_d / 2;

    const Real term_plus = -expm1(static_cast<long>(n) * log1p(-rho_minus));
    const Real term_minus = 1 - pow(rho_minus, static_cast<int>(n));
    return clamp_unit(coeff_plus * term_plus - coeff_minus * term_minus);
}

}  // namespace

PairAuxiliaries PairAuxiliaries::make(const GeomParams& params, std::int64_t i, std::int64_t j) {
    if (i == j) {
        throw std::invalid_argument("PairAuxiliaries: i and j must differ");
    }
    const EqualAux eq = make_equal_aux(params, i);
    const UnequalAux uneq = make_unequal_aux(params, i, j);
    return PairAuxiliaries{eq.a, eq.b, uneq.c, uneq.d};
}

Real p_ii(const GeomParams& params, std::int64_t i, std::uint64_t n) {
    return p_ii_from_aux(make_equal_aux(params, i), n);
}

Real p_ij(const GeomParams& params, std::int64_t i, std::int64_t j, std::uint64_t n) {
    if (i == j) {
        throw std::invalid_argument("p_ij: i == j (use p_ii)");
    }
    if (i < 1 || j < 1) {
        throw std::domain_error("letter index must be >= 1");
    }
    return p_ij_from_aux(make_unequal_aux(params, i, j), n);
}

CertifiedValue s_n_sum(const GeomParams& params, std::uint64_t n, double eps) {
    if (eps <= 0) {
        throw std::invalid_argument("s_n_sum: eps must be positive");
    }
    if (n < 2) return {Real(0), Real(0)};
    const Real q = params.q();
    const Real p = params.p();
    const Real eps_r(eps);
    const Real factor = Real(n - 1) * p * p / (1 - q * q);

    Real sum = 0;
    Real q_2m = 1;  // q^{2M}
    Real tail;
    std::int64_t i = 0;
    do {
        ++i;
        sum += p_ii(params, i, n);
        q_2m *= q * q;
        tail = factor * q_2m;  // union bound over the omitted letters
    } while (tail > eps_r);
    return {sum, tail};
}

CertifiedValue t_n_sum(const GeomParams& params, std::uint64_t n, double eps) {
    if (eps <= 0) {
        throw std::invalid_argument("t_n_sum: eps must be positive");
    }
    if (n < 2) return {Real(0), Real(0)};
    const Real q = params.q();
    const Real p = params.p();
    const Real eps_r(eps);
    const Real prefactor = Real(n - 1) * p * p / ((1 - q) * (1 - q));

    // The pair weight c = p^2 q^{i+j-2} depends on the pair only through the
    // diagonal s = i+j-2, so one evaluation covers the whole diagonal: there
    // are floor((s+1)/2) pairs with i < j on it.
    Real sum = 0;
    Real tail;
    std::int64_t s = 0;
    Real q_s = Real(1);  // q^s
    Real q_s1 = q;       // q^{s+1}
    do {
        ++s;
        q_s *= q;
        q_s1 *= q;
        UnequalAux aux;
        aux.c = p * p * q_s;
        aux.d = sqrt(1 - 4 * aux.c);
        aux.one_minus_d = 4 * aux.c / (1 + aux.d);
        sum += Real(2 * ((s + 1) / 2)) * p_ij_from_aux(aux, n);
        // sum over omitted diagonals of (count on diagonal) * (n-1) c
        tail = prefactor * q_s1 * (Real(s + 2) - Real(s + 1) * q);
    } while (tail > eps_r);
    return {sum, tail};
}

CertifiedValue expected_pairs(const GeomParams& params, std::uint64_t n, double eps) {
    if (n < 2) return {Real(0), Real(0)};
    const CertifiedValue s = s_n_sum(params, n, eps / 2);
    const CertifiedValue t = t_n_sum(params, n, eps / 2);
    return {s.value + t.value, s.tail_bound + t.tail_bound};
}

// ---------------------------------------------------------------------------
// Finite binomial-sum formulas
// ---------------------------------------------------------------------------

namespace {

void check_binomial_gate(std::uint64_t n) {
    if (n < 2 || n > 512) {
        throw std::invalid_argument("binomial formulas are gated to 2 <= n <= 512");
    }
}

// Shared evaluation of the equal-pair double sum over a field-like type.
//   sum_{s=1..n} C(n,s) (-1)^{s+1} p^s/(1-q^s)
//   - sum_{s=1..n} C(s,n-s+1) (p/q)^{n-s+1}
//       sum_{k=0..s-1} C(s-1,k) (-p/q)^k q^{k+n+1-s}/(1-q^{k+n+1-s})
template <typename Field>
Field s_n_binomial_impl(const Field& p, const Field& q, std::uint64_t n) {
    const std::int64_t n_i = static_cast<std::int64_t>(n);

    std::vector<Field> q_pow(n + 2);  // q^0 .. q^{n+1}
    q_pow[0] = Field(1);
    for (std::uint64_t e = 1; e <= n + 1; ++e) q_pow[e] = q_pow[e - 1] * q;

    Field first(0);
    {
        Field p_pow = Field(1);
        for (std::int64_t s = 1; s <= n_i; ++s) {
            p_pow = p_pow * p;
            const Field term = Field(binomial(n_i, s)) * p_pow /
                               (Field(1) - q_pow[static_cast<std::uint64_t>(s)]);
            first = (s % 2 == 1) ? first + term : first - term;
        }
    }

    const Field p_over_q = p / q;
    Field second(0);
    for (std::int64_t s = 1; s <= n_i; ++s) {
        const BigInt outer = binomial(s, n_i - s + 1);
        if (outer == 0) continue;
        Field inner(0);
        Field signed_pq_pow = Field(1);  // (-p/q)^k
        BigInt inner_binom = 1;          // C(s-1, k)
        for (std::int64_t k = 0; k <= s - 1; ++k) {
            if (k > 0) {
                signed_pq_pow = signed_pq_pow * (-p_over_q);
                inner_binom = inner_binom * (s - k) / k;  // C(s-1,k) from C(s-1,k-1)
            }
            const std::uint64_t e = static_cast<std::uint64_t>(k + n_i + 1 - s);
            inner = inner + Field(inner_binom) * signed_pq_pow * q_pow[e] /
                                (Field(1) - q_pow[e]);
        }
        Field outer_pow = Field(1);  // (p/q)^{n-s+1}
        for (std::int64_t e = 0; e < n_i - s + 1; ++e) outer_pow = outer_pow * p_over_q;
        second = second + Field(outer) * outer_pow * inner;
    }
    return first - second;
}

template <typename Field>
Field t_n_binomial_impl(const Field& p, const Field& q, std::uint64_t n) {
    const std::int64_t n_i = static_cast<std::int64_t>(n);
    Field total(0);
    Field pq_pow = Field(1);  // (p^2 q)^k
    Field q_pow = Field(1);   // q^k
    const Field p2q = p * p * q;
    for (std::int64_t k = 1; k <= n_i / 2; ++k) {
        pq_pow = pq_pow * p2q;
        q_pow = q_pow * q;
        const Field denom = (Field(1) - q_pow) * (Field(1) - q_pow) * (Field(1) + q_pow);
        const Field term = Field(binomial(n_i - k, k)) * pq_pow / denom;
        total = (k % 2 == 1) ? total + term : total - term;
    }
    return Field(2) * total;
}

}  // namespace

BigRational s_n_binomial_exact(const GeomParams& params, std::uint64_t n) {
    check_binomial_gate(n);
    return s_n_binomial_impl<BigRational>(params.p_exact(), params.q_exact(), n);
}

BigRational t_n_binomial_exact(const GeomParams& params, std::uint64_t n) {
    check_binomial_gate(n);
    return t_n_binomial_impl<BigRational>(params.p_exact(), params.q_exact(), n);
}

Real s_n_binomial(const GeomParams& params, std::uint64_t n) {
    check_binomial_gate(n);
    if (params.exact()) {
        const BigRational exact = s_n_binomial_exact(params, n);
        return numerics::to_real(exact);
    }
    numerics::PrecisionGuard guard(
        std::max<unsigned>(numerics::kDefaultMantissaBits, static_cast<unsigned>(n) + 64));
    return s_n_binomial_impl<Real>(params.p(), params.q(), n);
}

Real t_n_binomial(const GeomParams& params, std::uint64_t n) {
    check_binomial_gate(n);
    if (params.exact()) {
        const BigRational exact = t_n_binomial_exact(params, n);
        return numerics::to_real(exact);
    }
    numerics::PrecisionGuard guard(
        std::max<unsigned>(numerics::kDefaultMantissaBits, static_cast<unsigned>(n) + 64));
    return t_n_binomial_impl<Real>(params.p(), params.q(), n);
}

}  // namespace geompairs::closedform

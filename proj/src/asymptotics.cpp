#include "geompairs/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>

namespace geompairs::asymptotics {

using boost::multiprecision::log;
using numerics::chi_k;
using numerics::complex_gamma;
using numerics::PoleParity;

namespace {

void check_n(std::uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("asymptotic expansions require n >= 2");
    }
}

Real euler_gamma() { return boost::math::constants::euler<Real>(); }

}  // namespace

Real s_fluctuation_scale(const GeomParams& params, std::uint64_t n) {
    const Real p = params.p();
    const Real q = params.q();
    // log_{1/q^2}( n (1-q)^2 )
    return log(Real(n) * p * p) / (-2 * log(q));
}

Real t_fluctuation_scale(const GeomParams&, std::uint64_t n) {
    return Real(n);
}

Complex s_fluctuation_complex(const GeomParams& params, std::uint64_t n, unsigned K) {
    check_n(n);
    const Real q = params.q();
    const Real lq = log(q);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    const Real x = s_fluctuation_scale(params, n);

    Complex acc;
    const Real q_squared = q * q;
    for (unsigned k = 1; k <= K; ++k) {
        for (int sign : {+1, -1}) {
            const Complex chi = chi_k(q_squared, sign * static_cast<int>(k), PoleParity::even);
            const Complex phase = numerics::exp(Complex{Real(0), sign * Real(k) * two_pi * x});
            acc = acc + complex_gamma(chi) * phase;
        }
    }
    return Complex{Real(1) / (2 * lq), Real(0)} * acc;
}

Complex t_fluctuation_complex(const GeomParams& params, std::uint64_t n, unsigned K) {
    check_n(n);
    const Real q = params.q();
    const Real p = params.p();
    const Real lq = log(q);
    const Real ln_p = log(p);
    const Real ln_x = log(t_fluctuation_scale(params, n));

    auto pole_term = [&](const Complex& chi) {
        // (1-q)^{-2 chi} x^{-chi} Gamma(chi) via complex exponentials
        const Complex exponent = Complex{Real(0), -chi.im} * Complex{2 * ln_p + ln_x, Real(0)};
        return numerics::exp(exponent) * complex_gamma(chi);
    };

    Complex acc;
    for (unsigned k = 1; k <= K; ++k) {
        for (int sign : {+1, -1}) {
            const int signed_k = sign * static_cast<int>(k);
            acc = acc + Real(3) * pole_term(chi_k(q, signed_k, PoleParity::even));
            acc = acc + pole_term(chi_k(q, signed_k, PoleParity::odd));
        }
    }
    return Complex{Real(1) / (2 * lq), Real(0)} * acc;
}

AsymptoticBreakdown s_n_asymptotic(const GeomParams& params, std::uint64_t n, unsigned K) {
    check_n(n);
    const Real q = params.q();
    const Real p = params.p();
    const Real lq = log(q);

    AsymptoticBreakdown out;
    out.leading = log(Real(n)) / (2 * log(1 / q));
    out.secondary = 0;
    out.constant = Real(1) / 2 - (euler_gamma() + 2 * log(p)) / (2 * lq);
    out.fluctuation = (K == 0) ? Real(0) : s_fluctuation_complex(params, n, K).re;
    out.total = out.leading + out.secondary + out.constant + out.fluctuation;
    return out;
}

AsymptoticBreakdown t_n_asymptotic(const GeomParams& params, std::uint64_t n, unsigned K) {
    check_n(n);
    const Real q = params.q();
    const Real p = params.p();
    const Real lq = log(q);
    const Real lp = log(p);
    const Real g = euler_gamma();
    const Real pi = boost::math::constants::pi<Real>();
    const Real log_q_n = log(Real(n)) / lq;

    AsymptoticBreakdown out;
    out.leading = log_q_n * log_q_n / 2;
    out.secondary = (2 * g + 4 * lp - lq) * log_q_n / (2 * lq);
    out.constant = (6 * g * g + pi * pi + 24 * lp * lp + 12 * lp * (2 * g - lq) -
                    6 * g * lq - lq * lq) /
                   (12 * lq * lq);
    out.fluctuation = (K == 0) ? Real(0) : t_fluctuation_complex(params, n, K).re;
    out.total = out.leading + out.secondary + out.constant + out.fluctuation;
    return out;
}

namespace {

// Kahan-compensated accumulator for the double-precision oracles.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double harmonic_sum_oracle(const GeomParams& params, std::uint64_t n) {
    if (n < 1) {
        throw std::invalid_argument("harmonic_sum_oracle: n must be >= 1");
    }
    const double q = params.q_double();
    const double p = params.p_double();
    const double q2 = q * q;
    Kahan acc;
    double exponent = static_cast<double>(n) * p * p;  // n (1-q)^2 q^{2i-2}
    while (exponent >= 1e-16) {
        acc.add(-std::expm1(-exponent));
        exponent *= q2;
    }
    return acc.sum;
}

double double_harmonic_oracle(const GeomParams& params, std::uint64_t n) {
    if (n < 1) {
        throw std::invalid_argument("double_harmonic_oracle: n must be >= 1");
    }
    const double q = params.q_double();
    const double p = params.p_double();
    Kahan acc;
    double row_base = static_cast<double>(n) * p * p * q;  // exponent at (i, j=i+1)
    while (row_base >= 1e-16) {
        double exponent = row_base;
        while (exponent >= 1e-16) {
            acc.add(-2.0 * std::expm1(-exponent));
            exponent *= q;
        }
        row_base *= q * q;
    }
    return acc.sum;
}

}  // namespace geompairs::asymptotics

#include "geompairs/numerics.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <vector>

namespace geompairs::numerics {

unsigned digits10_for_bits(unsigned bits) {
    // bits * log10(2), rounded up, plus guard digits
    return static_cast<unsigned>(bits * 0.30103) + 3;
}

unsigned current_precision_digits10() {
    return Real::default_precision();
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits10_(Real::default_precision()) {
    const unsigned wanted = digits10_for_bits(bits);
    if (wanted > saved_digits10_) {
        Real::default_precision(wanted);
    }
}

PrecisionGuard::~PrecisionGuard() {
    Real::default_precision(saved_digits10_);
}

Real to_real(const BigRational& x) {
    return Real(numerator(x)) / Real(denominator(x));
}

BigRational rational_from_text(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    if (text.find('/') != std::string::npos) {
        BigRational r(text);  // GMP validates "a/b"
        return r;
    }
    // Plain or scientific decimal, parsed exactly.
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = (text[pos] == '-');
        ++pos;
    }
    BigInt mantissa = 0;
    long frac_digits = 0;
    bool seen_digit = false, seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch >= '0' && ch <= '9') {
            mantissa = mantissa * 10 + (ch - '0');
            if (seen_point) ++frac_digits;
            seen_digit = true;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    long exponent = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        exponent = std::stol(text.substr(pos + 1));
        pos = text.size();
    }
    if (!seen_digit || pos != text.size()) {
        throw std::invalid_argument("malformed numeric literal: " + text);
    }
    BigRational value(mantissa);
    const long net = exponent - frac_digits;
    BigInt scale = 1;
    for (long k = 0; k < std::labs(net); ++k) scale *= 10;
    if (net >= 0) {
        value *= BigRational(scale);
    } else {
        value /= BigRational(scale);
    }
    return negative ? -value : value;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be non-negative");
    }
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return result;
}

// ---------------------------------------------------------------------------
// Complex arithmetic
// ---------------------------------------------------------------------------

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }

Complex operator/(const Complex& a, const Complex& b) {
    const Real n = b.re * b.re + b.im * b.im;
    if (n == 0) {
        throw std::domain_error("complex division by zero");
    }
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real abs(const Complex& z) {
    using boost::multiprecision::hypot;
    return hypot(z.re, z.im);
}

Complex exp(const Complex& z) {
    using boost::multiprecision::exp;
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;
    const Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) {
    using boost::multiprecision::log;
    using boost::multiprecision::atan2;
    return {log(abs(z)), atan2(z.im, z.re)};
}

Complex sin(const Complex& z) {
    using boost::multiprecision::sin;
    using boost::multiprecision::cos;
    using boost::multiprecision::sinh;
    using boost::multiprecision::cosh;
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

Complex pow(const Complex& base, const Complex& exponent) {
    return exp(exponent * log(base));
}

// ---------------------------------------------------------------------------
// Gamma via Spouge's series
// ---------------------------------------------------------------------------

namespace {

// Gamma(z) = (z-1+a)^(z-1/2) e^{-(z-1+a)} [ c0 + sum_{k=1}^{a-1} c_k/(z-1+k) ],
// c0 = sqrt(2*pi), c_k = (-1)^{k-1} (a-k)^{k-1/2} e^{a-k} / (k-1)!,
// relative truncation error below a^{-1/2} (2*pi)^{-(a+1/2)}.
Complex spouge_gamma(const Complex& z, unsigned a) {
    using boost::multiprecision::exp;
    using boost::multiprecision::sqrt;
    using boost::multiprecision::pow;

    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    const Complex w{z.re - 1, z.im};

    Complex series{sqrt(two_pi), Real(0)};
    Real factorial = 1;  // (k-1)!
    for (unsigned k = 1; k < a; ++k) {
        if (k > 1) factorial *= (k - 1);
        const Real ak = Real(a) - k;
        const Real ck = pow(ak, Real(k) - Real(1) / 2) * exp(ak) / factorial;
        const Complex denom{w.re + k, w.im};
        const Complex term = Complex(ck) / denom;
        if (k % 2 == 1) {
            series = series + term;
        } else {
            series = series - term;
        }
    }

    const Complex shifted{w.re + a, w.im};
    const Complex prefix =
        numerics::exp(Complex{w.re + Real(1) / 2, w.im} * numerics::log(shifted) - shifted);
    return prefix * series;
}

bool is_nonpositive_integer(const Complex& z) {
    using boost::multiprecision::floor;
    return z.im == 0 && z.re <= 0 && floor(z.re) == z.re;
}

}  // namespace

Complex complex_gamma(const Complex& s) {
    if (is_nonpositive_integer(s)) {
        throw std::domain_error("complex_gamma: pole at non-positive integer");
    }

    const unsigned target_digits = current_precision_digits10();
    // ln(10)/ln(2*pi) = 1.2529; one Spouge term buys a factor 2*pi of accuracy.
    const unsigned a = static_cast<unsigned>((target_digits + 10) * 1.2529) + 2;
    // Coefficients alternate and peak near e^{1.25 a}; reserve headroom for
    // the cancellation plus the usual guard bits.
    const unsigned work_bits =
        static_cast<unsigned>(target_digits * 3.33) + 2 * a + 32;
    PrecisionGuard guard(work_bits);

    Complex z{Real(s.re), Real(s.im)};  // re-round inputs at working precision
    if (z.re < Real(1) / 2) {
        // Reflection: Gamma(z) = pi / (sin(pi z) * Gamma(1 - z)).
        const Real pi = boost::math::constants::pi<Real>();
        const Complex one_minus{1 - z.re, -z.im};
        const Complex s_pi = numerics::sin(pi * z);
        return Complex(pi) / (s_pi * spouge_gamma(one_minus, a));
    }
    return spouge_gamma(z, a);
}

Complex chi_k(const Real& q, int k, PoleParity parity) {
    using boost::multiprecision::log;
    if (k == 0) {
        throw std::invalid_argument("chi_k: k must be nonzero");
    }
    if (!(q > 0 && q < 1)) {
        throw std::invalid_argument("chi_k: q must lie in (0,1)");
    }
    const Real pi = boost::math::constants::pi<Real>();
    const Real lq = log(q);
    if (parity == PoleParity::even) {
        return {Real(0), 2 * pi * k / lq};
    }
    const int sign = k > 0 ? 1 : -1;
    const int magnitude = 2 * (k > 0 ? k : -k) - 1;
    return {Real(0), sign * magnitude * pi / lq};
}

}  // namespace geompairs::numerics

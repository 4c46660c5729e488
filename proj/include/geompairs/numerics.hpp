/**
 * @file numerics.hpp
 * @brief Arbitrary-precision integers/rationals, variable-precision reals,
 *        binomial coefficients, and the complex gamma function.
 *
 * Exact arithmetic is backed by GMP, floating arithmetic by MPFR (both via
 * Boost.Multiprecision).  Real carries a per-value mantissa precision; fresh
 * values pick up the thread's current default, which PrecisionGuard manages
 * in bits.
 */
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace geompairs::numerics {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Library-wide default mantissa size.
inline constexpr unsigned kDefaultMantissaBits = 128;

/// Decimal digits guaranteeing at least `bits` of mantissa.
unsigned digits10_for_bits(unsigned bits);

/// Current default precision, in decimal digits.
unsigned current_precision_digits10();

/**
 * Floors the thread's default Real precision at `bits` of mantissa for the
 * lifetime of the guard (never lowers an already higher setting).
 */
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_digits10_;
};

/// Rounds an exact rational to a Real at the current default precision.
Real to_real(const BigRational& x);

/// Parses "a/b" or a plain/scientific decimal ("0.25", "1e-9") exactly.
BigRational rational_from_text(const std::string& text);

/// C(n,k), exact; zero for k < 0 or k > n.  Requires n >= 0.
BigInt binomial(std::int64_t n, std::int64_t k);

// ---------------------------------------------------------------------------
// Complex arithmetic on high-precision reals
// ---------------------------------------------------------------------------

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im(0) {}
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);

Complex conj(const Complex& z);
Real abs(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);          // principal branch
Complex sin(const Complex& z);
Complex pow(const Complex& base, const Complex& exponent);

/**
 * Gamma function on the complex plane, accurate to well beyond 12 significant
 * digits for |Im s| <= 100 at the default precision.  Uses Spouge's series
 * with the parameter (and hence the coefficient set) chosen from the active
 * precision; the reflection formula covers Re s < 1/2.  Throws
 * std::domain_error at the poles (non-positive integers).
 */
Complex complex_gamma(const Complex& s);

enum class PoleParity { even, odd };

/**
 * Imaginary pole locations of the geometric Dirichlet factors:
 *   even -> 2*pi*i*k / ln q
 *   odd  -> sign(k) * (2|k|-1) * pi * i / ln q
 * The odd family is indexed symmetrically so chi_k(q,-k) is always the
 * conjugate of chi_k(q,k).  Requires 0 < q < 1 and k != 0.
 */
Complex chi_k(const Real& q, int k, PoleParity parity);

}  // namespace geompairs::numerics

/**
 * @file symbolic.hpp
 * @brief Exact univariate polynomial and rational-function arithmetic in the
 *        variable q.
 *
 * The probability p is eliminated symbolically as 1 - q throughout, so every
 * identity lives in a single variable and canonical-form equality is
 * decidable.  Canonical form: numerator and denominator coprime, scaled to
 * integer coefficients with joint content 1, and the denominator's
 * lowest-order nonzero coefficient positive (the ascending-power writing
 * style, so 1 - q stays 1 - q).
 */
#pragma once

#include "geompairs/numerics.hpp"

#include <string>
#include <utility>
#include <vector>

namespace geompairs::symbolic {

using numerics::BigInt;
using numerics::BigRational;

/// Dense polynomial in q over the rationals; coefficient index = power of q.
class PolyQ {
public:
    PolyQ() = default;  // zero polynomial
    PolyQ(const BigRational& constant);
    PolyQ(long long constant);
    explicit PolyQ(std::vector<BigRational> coeffs);

    static PolyQ variable();  // q
    static PolyQ monomial(unsigned degree, const BigRational& coeff);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, with degree(0) = -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigRational coeff(std::size_t i) const;
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    BigRational leading() const;

    PolyQ operator-() const;
    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    PolyQ operator*(const BigRational& scalar) const;
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

    PolyQ pow(unsigned e) const;
    BigRational evaluate(const BigRational& x) const;

    /// Quotient and remainder; throws std::domain_error when b is zero.
    static std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
    /// Exact quotient; throws std::domain_error when the remainder is nonzero.
    static PolyQ exact_div(const PolyQ& a, const PolyQ& b);
    /// Monic gcd by the rational Euclidean algorithm; gcd(0,0) = 0.
    static PolyQ gcd(PolyQ a, PolyQ b);

private:
    std::vector<BigRational> coeffs_;  // invariant: back() != 0 unless empty
    void trim();
};

/// 1 - q^m
PolyQ one_minus_q_pow(unsigned m);

/// Ratio of two PolyQ in canonical form; equality is coefficient equality.
class RationalFunction {
public:
    RationalFunction();  // zero
    RationalFunction(PolyQ num, PolyQ den);
    static RationalFunction constant(const BigRational& value);
    static RationalFunction from_int_coeffs(const std::vector<long long>& num,
                                            const std::vector<long long>& den);

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Exact evaluation; throws std::domain_error when the denominator vanishes.
    BigRational evaluate_exact(const BigRational& q) const;

    /// "n0,n1,...;d0,d1,..." with exact integer coefficients.
    std::string serialize() const;
    static RationalFunction deserialize(const std::string& text);

private:
    PolyQ num_;
    PolyQ den_;
    void canonicalize();
};

enum class RfOp { add, sub, mul, div };

/// Enum-dispatched arithmetic; div throws std::domain_error when b is zero.
RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op);

/**
 * Closed form of the ordered sum
 *   sum over 1 <= v_1 < v_2 < ... < v_k of q^(m_1 v_1 + ... + m_k v_k),
 * which telescopes to prod_t q^{M_t} / (1 - q^{M_t}) with the suffix sums
 * M_t = m_t + ... + m_k.  Each multiplicity must be positive.
 */
RationalFunction ordered_geometric_sum(const std::vector<unsigned>& multiplicities);

/// Expected number of distinct pairs in a four-letter word, as a function of q.
RationalFunction f4_closed_form();

}  // namespace geompairs::symbolic

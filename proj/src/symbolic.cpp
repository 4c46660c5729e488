#include "geompairs/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace geompairs::symbolic {

// ---------------------------------------------------------------------------
// PolyQ
// ---------------------------------------------------------------------------

PolyQ::PolyQ(const BigRational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

PolyQ::PolyQ(long long constant) : PolyQ(BigRational(constant)) {}

PolyQ::PolyQ(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::variable() { return monomial(1, 1); }

PolyQ PolyQ::monomial(unsigned degree, const BigRational& coeff) {
    if (coeff == 0) return {};
    std::vector<BigRational> c(degree + 1, BigRational(0));
    c[degree] = coeff;
    return PolyQ(std::move(c));
}

void PolyQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational PolyQ::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

BigRational PolyQ::leading() const {
    return coeffs_.empty() ? BigRational(0) : coeffs_.back();
}

PolyQ PolyQ::operator-() const {
    PolyQ r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return PolyQ(std::move(c));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return PolyQ(std::move(c));
}

PolyQ PolyQ::operator*(const BigRational& scalar) const {
    if (scalar == 0) return {};
    PolyQ r = *this;
    for (auto& c : r.coeffs_) c *= scalar;
    return r;
}

PolyQ PolyQ::pow(unsigned e) const {
    PolyQ result(1);
    PolyQ base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

BigRational PolyQ::evaluate(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    PolyQ rem = a;
    std::vector<BigRational> quot;
    const int db = b.degree();
    if (rem.degree() >= db) {
        quot.assign(rem.degree() - db + 1, BigRational(0));
    }
    const BigRational lead_b = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int shift = rem.degree() - db;
        const BigRational factor = rem.leading() / lead_b;
        quot[shift] = factor;
        rem = rem - monomial(static_cast<unsigned>(shift), factor) * b;
    }
    return {PolyQ(std::move(quot)), rem};
}

PolyQ PolyQ::exact_div(const PolyQ& a, const PolyQ& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw std::domain_error("polynomial division is not exact");
    }
    return q;
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (BigRational(1) / a.leading());  // monic
}

PolyQ one_minus_q_pow(unsigned m) {
    std::vector<BigRational> c(m + 1, BigRational(0));
    c[0] = 1;
    c[m] = -1;
    return PolyQ(std::move(c));
}

// ---------------------------------------------------------------------------
// RationalFunction
// ---------------------------------------------------------------------------

RationalFunction::RationalFunction() : num_(), den_(1) {}

RationalFunction::RationalFunction(PolyQ num, PolyQ den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    canonicalize();
}

RationalFunction RationalFunction::constant(const BigRational& value) {
    return RationalFunction(PolyQ(value), PolyQ(1));
}

RationalFunction RationalFunction::from_int_coeffs(const std::vector<long long>& num,
                                                   const std::vector<long long>& den) {
    std::vector<BigRational> n(num.begin(), num.end());
    std::vector<BigRational> d(den.begin(), den.end());
    return RationalFunction(PolyQ(std::move(n)), PolyQ(std::move(d)));
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = PolyQ(1);
        return;
    }
    const PolyQ g = PolyQ::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = PolyQ::exact_div(num_, g);
        den_ = PolyQ::exact_div(den_, g);
    }
    // Scale to coprime integer coefficients.
    BigInt lcm_den = 1;
    for (const auto& c : num_.coeffs()) lcm_den = lcm(lcm_den, denominator(c));
    for (const auto& c : den_.coeffs()) lcm_den = lcm(lcm_den, denominator(c));
    num_ = num_ * BigRational(lcm_den);
    den_ = den_ * BigRational(lcm_den);
    BigInt content = 0;
    for (const auto& c : num_.coeffs()) content = gcd(content, numerator(c));
    for (const auto& c : den_.coeffs()) content = gcd(content, numerator(c));
    if (content > 1) {
        const BigRational inv = BigRational(1) / BigRational(content);
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
    // Sign convention: lowest-order nonzero denominator coefficient positive.
    for (const auto& c : den_.coeffs()) {
        if (c != 0) {
            if (c < 0) {
                num_ = -num_;
                den_ = -den_;
            }
            break;
        }
    }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) {
        throw std::domain_error("rational function division by zero");
    }
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op) {
    switch (op) {
        case RfOp::add: return a + b;
        case RfOp::sub: return a - b;
        case RfOp::mul: return a * b;
        case RfOp::div: return a / b;
    }
    throw std::invalid_argument("rf_arith: unknown operation");
}

BigRational RationalFunction::evaluate_exact(const BigRational& q) const {
    const BigRational d = den_.evaluate(q);
    if (d == 0) {
        throw std::domain_error("rational function evaluated at a pole");
    }
    return num_.evaluate(q) / d;
}

std::string RationalFunction::serialize() const {
    std::ostringstream out;
    auto emit = [&out](const PolyQ& poly) {
        if (poly.is_zero()) {
            out << "0";
            return;
        }
        for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
            if (i) out << ",";
            out << poly.coeffs()[i].str();
        }
    };
    emit(num_);
    out << ";";
    emit(den_);
    return out.str();
}

RationalFunction RationalFunction::deserialize(const std::string& text) {
    const auto split = text.find(';');
    if (split == std::string::npos) {
        throw std::invalid_argument("rational function literal needs 'num;den'");
    }
    auto parse_poly = [](const std::string& part) {
        std::vector<BigRational> coeffs;
        std::istringstream in(part);
        std::string item;
        while (std::getline(in, item, ',')) {
            coeffs.emplace_back(item);
        }
        return PolyQ(std::move(coeffs));
    };
    return RationalFunction(parse_poly(text.substr(0, split)),
                            parse_poly(text.substr(split + 1)));
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

RationalFunction ordered_geometric_sum(const std::vector<unsigned>& multiplicities) {
    if (multiplicities.empty()) {
        throw std::invalid_argument("ordered_geometric_sum: need at least one multiplicity");
    }
    unsigned total = 0;
    for (unsigned m : multiplicities) {
        if (m == 0) {
            throw std::invalid_argument("ordered_geometric_sum: multiplicities must be positive");
        }
        total += m;
    }
    // Substituting v_t = u_1 + ... + u_t (u >= 1) factors the sum over each u
    // independently, one geometric series q^{M_t}/(1-q^{M_t}) per suffix sum.
    PolyQ den(1);
    unsigned exponent = 0;  // sum of the M_t
    unsigned suffix = total;
    for (std::size_t t = 0; t < multiplicities.size(); ++t) {
        exponent += suffix;
        den = den * one_minus_q_pow(suffix);
        suffix -= multiplicities[t];
    }
    return RationalFunction(PolyQ::monomial(exponent, 1), std::move(den));
}

RationalFunction f4_closed_form() {
    // (1 + 9q + 15q^2 + 20q^3 + 17q^4 + 11q^5 - q^6) / ((1+q)^2 (1+q^2) (1+q+q^2))
    const PolyQ num(std::vector<BigRational>{1, 9, 15, 20, 17, 11, -1});
    const PolyQ den = PolyQ(std::vector<BigRational>{1, 1}).pow(2) *
                      PolyQ(std::vector<BigRational>{1, 0, 1}) *
                      PolyQ(std::vector<BigRational>{1, 1, 1});
    return RationalFunction(num, den);
}

}  // namespace geompairs::symbolic

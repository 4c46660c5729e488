#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geompairs/model.hpp"
#include "geompairs/symbolic.hpp"

#include <cmath>
#include <functional>

using namespace geompairs::symbolic;
using geompairs::model::SplitMix64;

namespace {

RationalFunction rf(std::vector<long long> num, std::vector<long long> den) {
    return RationalFunction::from_int_coeffs(num, den);
}

}  // namespace

TEST_CASE("polynomial arithmetic and gcd") {
    const PolyQ x = PolyQ::variable();
    const PolyQ a = (x + PolyQ(1)) * (x + PolyQ(1));  // (1+q)^2
    CHECK(a.degree() == 2);
    CHECK(a.coeff(0) == 1);
    CHECK(a.coeff(1) == 2);
    CHECK(a.coeff(2) == 1);

    const PolyQ b = (x + PolyQ(1)) * (x - PolyQ(1));  // q^2 - 1
    const PolyQ g = PolyQ::gcd(a, b);
    CHECK(g.degree() == 1);  // monic q + 1
    CHECK(g.coeff(0) == 1);
    CHECK(g.coeff(1) == 1);

    auto [quot, rem] = PolyQ::divmod(a, b);
    CHECK(quot == PolyQ(1));
    CHECK(rem == x * BigRational(2) + PolyQ(2));

    CHECK(PolyQ::gcd(PolyQ(), PolyQ()).is_zero());
    CHECK_THROWS_AS(PolyQ::divmod(a, PolyQ()), std::domain_error);

    CHECK(one_minus_q_pow(4).evaluate(BigRational(1) / 2) == BigRational(15) / 16);
    CHECK((x.pow(5)).degree() == 5);
}

TEST_CASE("canonical form matches the written style") {
    // q/(1-q) + 1/(1-q) = (q+1)/(1-q)
    const RationalFunction sum = rf({0, 1}, {1, -1}) + rf({1}, {1, -1});
    CHECK(sum == rf({1, 1}, {1, -1}));
    CHECK(sum.serialize() == "1,1;1,-1");

    // x * (1/x) = 1 for x = (1+q)/(1+q^2)
    const RationalFunction x = rf({1, 1}, {1, 0, 1});
    CHECK(x * (RationalFunction::constant(1) / x) == RationalFunction::constant(1));

    // (2q+2)/(2-2q) -> (q+1)/(1-q)
    CHECK(rf({2, 2}, {2, -2}) == rf({1, 1}, {1, -1}));

    // zero handling
    CHECK((x - x).is_zero());
    CHECK((x - x) == RationalFunction());
    CHECK_THROWS_AS(x / RationalFunction(), std::domain_error);
    CHECK_THROWS_AS(RationalFunction(PolyQ(1), PolyQ()), std::domain_error);
}

TEST_CASE("rf_arith enum dispatch") {
    const RationalFunction a = rf({0, 1}, {1, -1});
    const RationalFunction b = rf({1}, {1, -1});
    CHECK(rf_arith(a, b, RfOp::add) == rf({1, 1}, {1, -1}));
    CHECK(rf_arith(a, b, RfOp::sub) == rf({-1, 1}, {1, -1}));
    CHECK(rf_arith(a, b, RfOp::mul) == rf({0, 1}, {1, -2, 1}));
    CHECK(rf_arith(a, b, RfOp::div) == rf({0, 1}, {1}));
    CHECK_THROWS_AS(rf_arith(a, RationalFunction(), RfOp::div), std::domain_error);
}

TEST_CASE("serialization round trip") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<BigRational> num, den;
        const auto count = 1 + rng.next() % 5;
        for (std::uint64_t i = 0; i <= count; ++i) {
            num.emplace_back(static_cast<std::int64_t>(rng.next() % 19) - 9);
            den.emplace_back(static_cast<std::int64_t>(rng.next() % 19) - 9);
        }
        den.back() = den.back() == 0 ? 1 : den.back();
        const RationalFunction original{PolyQ(num), PolyQ(den)};
        CHECK(RationalFunction::deserialize(original.serialize()) == original);
    }
    CHECK_THROWS_AS(RationalFunction::deserialize("1,2"), std::invalid_argument);
}

TEST_CASE("ordered geometric sum closed forms") {
    // single letter repeated four times: q^4/(1-q^4)
    CHECK(ordered_geometric_sum({4}) == rf({0, 0, 0, 0, 1}, {1, 0, 0, 0, -1}));

    // two distinct letters, weight one each: q^3/((1-q^2)(1-q))
    const RationalFunction two = ordered_geometric_sum({1, 1});
    const RationalFunction want(PolyQ::monomial(3, 1), one_minus_q_pow(2) * one_minus_q_pow(1));
    CHECK(two == want);

    CHECK_THROWS_AS(ordered_geometric_sum({1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ordered_geometric_sum({}), std::invalid_argument);
}

TEST_CASE("ordered geometric sum against direct series") {
    // Direct truncated summation over 1 <= v_1 < ... < v_k <= 60 at q = 1/2.
    const double q = 0.5;
    const std::vector<std::vector<unsigned>> cases{{1}, {3}, {1, 1}, {2, 1}, {1, 2}, {1, 1, 1},
                                                   {3, 1, 2}};
    for (const auto& m : cases) {
        double direct = 0.0;
        const int cap = 60;
        std::vector<int> v(m.size());
        // odometer over increasing tuples
        std::function<void(std::size_t, int)> recurse = [&](std::size_t t, int lo) {
            if (t == m.size()) {
                double e = 0.0;
                for (std::size_t u = 0; u < m.size(); ++u) e += m[u] * v[u];
                direct += std::pow(q, e);
                return;
            }
            for (int value = lo; value <= cap; ++value) {
                v[t] = value;
                recurse(t + 1, value + 1);
            }
        };
        recurse(0, 1);

        const BigRational exact =
            ordered_geometric_sum(m).evaluate_exact(BigRational(1) / 2);
        const double closed = geompairs::numerics::to_real(exact).convert_to<double>();
        // Tail: every omitted tuple has some v > 60, total weight < k 2^-60 side sums;
        // 1e-12 is far above it.
        CHECK(std::abs(closed - direct) < 1e-12);
    }
}

TEST_CASE("f4 closed form") {
    const RationalFunction f4 = f4_closed_form();
    CHECK(f4.evaluate_exact(BigRational(0)) == 1);
    CHECK(f4.evaluate_exact(BigRational(1) / 2) == BigRational(841) / 315);
    CHECK(f4.num().coeff(6) == -1);
    CHECK(f4.num().coeff(5) == 11);
    CHECK(f4.den() == PolyQ(std::vector<BigRational>{1, 3, 5, 6, 5, 3, 1}));
}

TEST_CASE("type-B and type-C closed forms from ordered sums") {
    // abab-type: both orderings of (2,2), prefactor p^4/q^4, equals
    // 2 q^2 p^2 / ((1+q)^2 (1+q^2)).
    const RationalFunction prefactor(PolyQ(std::vector<BigRational>{1, -1}).pow(4),
                                     PolyQ::monomial(4, 1));
    const RationalFunction type_b =
        prefactor * (ordered_geometric_sum({2, 2}) + ordered_geometric_sum({2, 2}));
    CHECK(type_b == rf({0, 0, 2, -4, 2}, {1, 2, 2, 2, 1}));

    // aaab-type: orderings (3,1) and (1,3), equals p^4 q (1+q+2q^2) / (1-q^3-q^4+q^7).
    const RationalFunction type_c =
        prefactor * (ordered_geometric_sum({3, 1}) + ordered_geometric_sum({1, 3}));
    const RationalFunction want(
        PolyQ(std::vector<BigRational>{1, -1}).pow(4) *
            PolyQ(std::vector<BigRational>{0, 1, 1, 2}),
        PolyQ(std::vector<BigRational>{1, 0, 0, -1, -1, 0, 0, 1}));
    CHECK(type_c == want);
}

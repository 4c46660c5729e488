#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geompairs/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <vector>

using namespace geompairs::patterns;
using geompairs::numerics::BigRational;
using geompairs::symbolic::PolyQ;
using geompairs::symbolic::RationalFunction;

TEST_CASE("rgs validation and parsing") {
    CHECK_NOTHROW(Rgs::parse("abab"));
    CHECK_NOTHROW(Rgs::parse("1212"));
    CHECK(Rgs::parse("abab").symbols == std::vector<int>{1, 2, 1, 2});
    CHECK(Rgs::parse("abcd").num_classes() == 4);
    CHECK(Rgs::parse("aabb").class_multiplicities() == std::vector<unsigned>{2, 2});
    CHECK(Rgs::parse("abab").to_letters() == "abab");

    CHECK_THROWS_AS(Rgs::parse("ba"), std::invalid_argument);    // must start at class 1
    CHECK_THROWS_AS(Rgs::parse("acb"), std::invalid_argument);   // skips class 2
    CHECK_THROWS_AS(Rgs::parse("a!b"), std::invalid_argument);
}

TEST_CASE("bell numbers") {
    const std::vector<std::uint64_t> want{1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (int n = 0; n <= 10; ++n) CHECK(bell_number(n) == want[static_cast<std::size_t>(n)]);
    CHECK_THROWS_AS(bell_number(-1), std::invalid_argument);
    CHECK_THROWS_AS(bell_number(26), std::invalid_argument);
}

TEST_CASE("enumeration counts and order") {
    CHECK(enumerate_rgs(1).size() == 1);
    CHECK(enumerate_rgs(1).front().to_letters() == "a");
    CHECK(enumerate_rgs(4).size() == 15);
    CHECK(enumerate_rgs(8).size() == 4140);
    CHECK_THROWS_AS(enumerate_rgs(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_rgs(11), std::invalid_argument);

    // Bell counts through the supported range, against the triangle recurrence.
    for (int n = 1; n <= 10; ++n) {
        CHECK(enumerate_rgs(n).size() == bell_number(n));
    }
    // Lexicographic order.
    for (int n = 1; n <= 7; ++n) {
        const auto all = enumerate_rgs(n);
        for (std::size_t i = 1; i < all.size(); ++i) {
            CHECK(all[i - 1].symbols < all[i].symbols);
        }
    }

    const auto text = patterns_to_text(enumerate_rgs(2));
    CHECK(text == "aa\nab\n");
}

TEST_CASE("distinct pairs per pattern") {
    CHECK(pattern_distinct_pairs(Rgs::parse("aaaa")) == 1);
    CHECK(pattern_distinct_pairs(Rgs::parse("abab")) == 2);
    CHECK(pattern_distinct_pairs(Rgs::parse("abcd")) == 3);
    CHECK(pattern_distinct_pairs(Rgs::parse("a")) == 0);

    // Table 1, all fifteen rows.
    const std::map<std::string, int> table{
        {"aaaa", 1}, {"abab", 2}, {"aaab", 2}, {"abbb", 2}, {"abaa", 3},
        {"aaba", 3}, {"aabb", 3}, {"abba", 3}, {"aabc", 3}, {"abac", 3},
        {"abca", 3}, {"abbc", 3}, {"abcb", 3}, {"abcc", 3}, {"abcd", 3}};
    for (const auto& [pattern, pairs] : table) {
        CHECK(pattern_distinct_pairs(Rgs::parse(pattern)) == pairs);
    }
}

TEST_CASE("pattern probabilities reproduce the five types") {
    const RationalFunction prefactor(PolyQ(std::vector<BigRational>{1, -1}).pow(4),
                                     PolyQ::monomial(4, 1));

    // aaaa: p^4/(1-q^4)
    CHECK(pattern_probability(Rgs::parse("aaaa")) ==
          RationalFunction(PolyQ(std::vector<BigRational>{1, -1}).pow(4),
                           geompairs::symbolic::one_minus_q_pow(4)));

    // abab: 2 q^2 p^2 / ((1+q)^2 (1+q^2))
    CHECK(pattern_probability(Rgs::parse("abab")) ==
          RationalFunction::from_int_coeffs({0, 0, 2, -4, 2}, {1, 2, 2, 2, 1}));

    // aaab: p^4 q (1+q+2q^2) / (1-q^3-q^4+q^7)
    CHECK(pattern_probability(Rgs::parse("aaab")) ==
          RationalFunction(PolyQ(std::vector<BigRational>{1, -1}).pow(4) *
                               PolyQ(std::vector<BigRational>{0, 1, 1, 2}),
                           PolyQ(std::vector<BigRational>{1, 0, 0, -1, -1, 0, 0, 1})));

    // aabc: 2 p q^3 (1+2q+3q^2) / ((1+q)^2 (1+q^2) (1+q+q^2))
    const PolyQ denominator = PolyQ(std::vector<BigRational>{1, 1}).pow(2) *
                              PolyQ(std::vector<BigRational>{1, 0, 1}) *
                              PolyQ(std::vector<BigRational>{1, 1, 1});
    CHECK(pattern_probability(Rgs::parse("aabc")) ==
          RationalFunction(PolyQ(std::vector<BigRational>{1, -1}) *
                               PolyQ(std::vector<BigRational>{0, 0, 0, 2, 4, 6}),
                           denominator));

    // abcd: 24 q^6 / ((1+q)^2 (1+q^2) (1+q+q^2))
    CHECK(pattern_probability(Rgs::parse("abcd")) ==
          RationalFunction(PolyQ::monomial(6, 24), denominator));

    // Patterns of the same type share a probability.
    for (const char* b_type : {"abab", "aabb", "abba"}) {
        CHECK(pattern_probability(Rgs::parse(b_type)) == pattern_probability(Rgs::parse("abab")));
    }
    for (const char* c_type : {"aaab", "abbb", "abaa", "aaba"}) {
        CHECK(pattern_probability(Rgs::parse(c_type)) == pattern_probability(Rgs::parse("aaab")));
    }
}

TEST_CASE("probabilities sum to one") {
    // Per-pattern accumulation where the pattern count is small...
    for (int n = 1; n <= 5; ++n) {
        RationalFunction sum;
        for (const auto& rgs : enumerate_rgs(n)) {
            sum = sum + pattern_probability(rgs);
        }
        CHECK(sum == RationalFunction::constant(1));
    }
    // ...and grouped by multiplicity multiset beyond that (patterns of one
    // type share a probability, so the total is sum of count * probability).
    for (int n = 6; n <= 7; ++n) {
        std::map<std::vector<unsigned>, std::pair<long long, RationalFunction>> groups;
        for (const auto& rgs : enumerate_rgs(n)) {
            std::vector<unsigned> key = rgs.class_multiplicities();
            std::sort(key.begin(), key.end());
            auto it = groups.find(key);
            if (it == groups.end()) {
                groups.emplace(key, std::make_pair(1LL, pattern_probability(rgs)));
            } else {
                it->second.first++;
            }
        }
        RationalFunction sum;
        for (const auto& [key, group] : groups) {
            sum = sum + RationalFunction::constant(BigRational(group.first)) * group.second;
        }
        CHECK(sum == RationalFunction::constant(1));
    }
}

TEST_CASE("group probabilities by pair count for n = 4") {
    // P_4(1) = S_A, P_4(2) = S_B + 2 S_C, P_4(3) = 2 S_B + 2 S_C + 6 S_D + S_E
    const RationalFunction s_a = pattern_probability(Rgs::parse("aaaa"));
    const RationalFunction s_b = pattern_probability(Rgs::parse("abab"));
    const RationalFunction s_c = pattern_probability(Rgs::parse("aaab"));
    const RationalFunction s_d = pattern_probability(Rgs::parse("aabc"));
    const RationalFunction s_e = pattern_probability(Rgs::parse("abcd"));

    std::map<int, RationalFunction> grouped;
    for (const auto& rgs : enumerate_rgs(4)) {
        const int pairs = pattern_distinct_pairs(rgs);
        grouped[pairs] = grouped[pairs] + pattern_probability(rgs);
    }
    const RationalFunction two = RationalFunction::constant(2);
    const RationalFunction six = RationalFunction::constant(6);
    CHECK(grouped[1] == s_a);
    CHECK(grouped[2] == s_b + two * s_c);
    CHECK(grouped[3] == two * s_b + two * s_c + six * s_d + s_e);
}

TEST_CASE("expected pairs by direct enumeration") {
    CHECK(expected_pairs_direct(2) == RationalFunction::constant(1));
    CHECK(expected_pairs_direct(4) == geompairs::symbolic::f4_closed_form());
    CHECK_THROWS_AS(expected_pairs_direct(1), std::invalid_argument);
    CHECK_THROWS_AS(expected_pairs_direct(9), std::invalid_argument);

    // Frozen exact values computed independently via the per-pair recurrence
    // route; the enumeration route must match them exactly.
    const std::map<int, std::vector<std::pair<const char*, const char*>>> frozen{
        {3, {{"1/3", "22/13"}, {"1/2", "13/7"}, {"2/3", "37/19"}}},
        {5, {{"1/3", "89949/31460"}, {"1/2", "3693/1085"}, {"2/3", "4895889/1302925"}}},
        {8,
         {{"1/3", "2609841232519/641466725900"},
          {"1/2", "3895546969/737892225"},
          {"2/3", "2808094679170799/449927451220975"}}}};
    for (const auto& [n, rows] : frozen) {
        const RationalFunction direct = expected_pairs_direct(n);
        for (const auto& [q_text, value_text] : rows) {
            CHECK(direct.evaluate_exact(BigRational(q_text)) == BigRational(value_text));
        }
    }
}

TEST_CASE("direct expectation against brute-force word enumeration") {
    // Independent oracle: enumerate every word over the alphabet {1..18} of
    // length 4 in double arithmetic; letters above the cap carry total
    // probability below 4 * 2^-18, so at most ~5e-5 of expectation is missing.
    const double q = 0.5;
    const int cap = 18;
    double brute = 0.0;
    std::vector<int> w(4);
    for (w[0] = 1; w[0] <= cap; ++w[0])
        for (w[1] = 1; w[1] <= cap; ++w[1])
            for (w[2] = 1; w[2] <= cap; ++w[2])
                for (w[3] = 1; w[3] <= cap; ++w[3]) {
                    double prob = 1.0;
                    for (int letter : w) prob *= 0.5 * std::pow(q, letter - 1);
                    std::set<std::pair<int, int>> pairs;
                    for (int k = 0; k < 3; ++k) pairs.emplace(w[k], w[k + 1]);
                    brute += prob * static_cast<double>(pairs.size());
                }
    const double exact = geompairs::numerics::to_real(
                             expected_pairs_direct(4).evaluate_exact(BigRational(1) / 2))
                             .convert_to<double>();
    CHECK(std::abs(exact - brute) < 1e-4);
}

TEST_CASE("golden serialized probabilities") {
    std::ifstream golden(std::string(TEST_DATA_DIR) + "/table1_probabilities.txt");
    REQUIRE(golden.good());
    std::string pattern, serialized;
    int rows = 0;
    while (golden >> pattern >> serialized) {
        ++rows;
        const RationalFunction want = RationalFunction::deserialize(serialized);
        if (pattern == "f4") {
            CHECK(geompairs::symbolic::f4_closed_form() == want);
            CHECK(geompairs::symbolic::f4_closed_form().serialize() == serialized);
        } else {
            CHECK(pattern_probability(Rgs::parse(pattern)) == want);
            CHECK(pattern_probability(Rgs::parse(pattern)).serialize() == serialized);
        }
    }
    CHECK(rows == 16);
}

TEST_CASE("class count guard") {
    // A 9-class pattern is rejected by the cost guard (length 9 needed).
    std::vector<int> nine(9);
    for (int i = 0; i < 9; ++i) nine[static_cast<std::size_t>(i)] = i + 1;
    CHECK_THROWS_AS(pattern_probability(Rgs::from_symbols(nine)), std::invalid_argument);
}

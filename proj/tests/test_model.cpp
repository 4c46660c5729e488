#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geompairs/model.hpp"

#include <cmath>
#include <map>
#include <set>

using namespace geompairs::model;
using geompairs::numerics::BigRational;
using geompairs::numerics::PrecisionGuard;
using geompairs::numerics::Real;

namespace {

Word word_of(std::initializer_list<std::int64_t> letters) {
    Word w;
    w.letters = letters;
    return w;
}

}  // namespace

TEST_CASE("GeomParams construction and modes") {
    const GeomParams half = GeomParams::from_q_text("1/2");
    CHECK(half.exact());
    CHECK(half.q_exact() == BigRational(1) / 2);
    CHECK(half.p_exact() + half.q_exact() == 1);

    const GeomParams dec = GeomParams::from_q_text("0.25");
    CHECK_FALSE(dec.exact());
    CHECK(dec.q_exact() == BigRational(1) / 4);
    CHECK(dec.p_exact() + dec.q_exact() == 1);

    CHECK_THROWS_AS(GeomParams::from_q_text("0"), std::invalid_argument);
    CHECK_THROWS_AS(GeomParams::from_q_text("1"), std::invalid_argument);
    CHECK_THROWS_AS(GeomParams::from_q_text("3/2"), std::invalid_argument);
    CHECK_THROWS_AS(GeomParams::from_q_text("-1/2"), std::invalid_argument);
}

TEST_CASE("letter pmf") {
    PrecisionGuard guard(geompairs::numerics::kDefaultMantissaBits);
    const GeomParams half = GeomParams::from_q_text("1/2");
    CHECK(letter_pmf_exact(half, 1) == BigRational(1) / 2);
    CHECK(letter_pmf_exact(half, 3) == BigRational(1) / 8);

    const GeomParams third = GeomParams::from_q_text("1/3");
    CHECK(letter_pmf_exact(third, 2) == BigRational(2) / 9);

    CHECK_THROWS_AS(letter_pmf(half, 0), std::domain_error);
    CHECK_THROWS_AS(letter_pmf_exact(half, 0), std::domain_error);

    // pmf sums to 1 up to a geometric tail
    Real total = 0;
    for (int i = 1; i <= 200; ++i) total += letter_pmf(half, i);
    CHECK(abs(total - 1) < Real("1e-55"));
}

TEST_CASE("distinct pairs on concrete words") {
    const auto tally = distinct_pairs(word_of({1, 2, 4, 1, 2, 4, 1, 3}));
    CHECK(tally.distinct_count == 4);
    const std::set<std::pair<std::int64_t, std::int64_t>> want{{1, 2}, {2, 4}, {4, 1}, {1, 3}};
    CHECK(tally.pairs == want);

    CHECK(distinct_pairs(word_of({1, 1, 1, 1, 1})).distinct_count == 1);
    CHECK(distinct_pairs(word_of({1, 2, 1, 2})).distinct_count == 2);
    CHECK(distinct_pairs(word_of({})).distinct_count == 0);
    CHECK(distinct_pairs(word_of({7})).distinct_count == 0);

    std::vector<std::pair<std::int64_t, std::int64_t>> scratch;
    CHECK(count_distinct_pairs(word_of({1, 2, 4, 1, 2, 4, 1, 3}), scratch) == 4);
    CHECK(count_distinct_pairs(word_of({42}), scratch) == 0);
}

TEST_CASE("distinct pair invariants on random words") {
    SplitMix64 rng(11);
    std::vector<std::pair<std::int64_t, std::int64_t>> scratch;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng.next() % 40;
        Word word;
        for (std::size_t k = 0; k < n; ++k) {
            word.letters.push_back(1 + static_cast<std::int64_t>(rng.next() % 5));
        }
        const auto tally = distinct_pairs(word);
        const std::size_t alphabet =
            std::set<std::int64_t>(word.letters.begin(), word.letters.end()).size();
        CHECK(tally.distinct_count <= (n == 0 ? 0 : n - 1));
        CHECK(tally.distinct_count <= alphabet * alphabet);
        CHECK(tally.distinct_count == count_distinct_pairs(word, scratch));

        // Appending an already-present pair leaves the count unchanged.
        if (!tally.pairs.empty()) {
            Word extended = word;
            const auto& pair = *tally.pairs.begin();
            extended.letters.push_back(pair.first);
            extended.letters.push_back(pair.second);
            // The splice can only add the (last, pair.first) junction pair.
            const auto grown = distinct_pairs(extended);
            Word with_junction = word;
            with_junction.letters.push_back(pair.first);
            CHECK(grown.distinct_count == distinct_pairs(with_junction).distinct_count);
        }
    }
}

TEST_CASE("sampling is deterministic and inversion-correct") {
    const GeomParams half = GeomParams::from_q_text("1/2");
    const Word a = sample_word(half, 64, 123);
    const Word b = sample_word(half, 64, 123);
    CHECK(a.letters == b.letters);
    const Word c = sample_word(half, 64, 124);
    CHECK(a.letters != c.letters);

    CHECK(sample_word(half, 0, 1).letters.empty());
    for (std::int64_t letter : a.letters) CHECK(letter >= 1);

    // Inversion contract: letter = 1 + floor(log U / log q) against the
    // documented SplitMix64 unit stream.
    SplitMix64 rng(123);
    for (std::size_t k = 0; k < a.letters.size(); ++k) {
        const double u = rng.next_unit();
        CHECK(a.letters[k] == 1 + static_cast<std::int64_t>(std::log(u) / std::log(0.5)));
    }
}

TEST_CASE("degenerate q forces letter 1") {
    const GeomParams degen = GeomParams::from_q_text("1e-9");
    const Word w = sample_word(degen, 5, 7);
    for (std::int64_t letter : w.letters) CHECK(letter == 1);
}

TEST_CASE("empirical letter frequencies match the pmf") {
    // 4-sigma law-of-large-numbers check at one million draws.
    const GeomParams half = GeomParams::from_q_text("1/2");
    const std::size_t n = 1000000;
    const Word w = sample_word(half, n, 20260810);
    std::map<std::int64_t, std::size_t> counts;
    for (std::int64_t letter : w.letters) counts[letter]++;

    const double freq1 = static_cast<double>(counts[1]) / static_cast<double>(n);
    CHECK(std::abs(freq1 - 0.5) < 0.002);  // 4 sigma = 4*sqrt(.25/1e6) = 0.002

    for (std::int64_t i = 2; i <= 6; ++i) {
        const double expect = std::pow(0.5, static_cast<double>(i));
        const double sigma = std::sqrt(expect * (1 - expect) / static_cast<double>(n));
        const double freq = static_cast<double>(counts[i]) / static_cast<double>(n);
        CHECK(std::abs(freq - expect) < 4 * sigma);
    }
}

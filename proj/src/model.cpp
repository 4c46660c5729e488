#include "geompairs/model.hpp"

#include <algorithm>
#include <cmath>

namespace geompairs::model {

GeomParams::GeomParams(BigRational q, bool exact)
    : q_(std::move(q)), p_(1 - q_), exact_(exact) {}

GeomParams GeomParams::from_q(const BigRational& q, bool exact) {
    if (!(q > 0 && q < 1)) {
        throw std::invalid_argument("GeomParams: q must lie strictly in (0,1)");
    }
    return GeomParams(q, exact);
}

GeomParams GeomParams::from_q_text(const std::string& text) {
    const bool exact = text.find('/') != std::string::npos;
    return from_q(numerics::rational_from_text(text), exact);
}

double GeomParams::q_double() const { return numerics::to_real(q_).convert_to<double>(); }
double GeomParams::p_double() const { return numerics::to_real(p_).convert_to<double>(); }

Real GeomParams::letter_weight(std::int64_t i) const {
    using boost::multiprecision::pow;
    if (i < 1) {
        throw std::domain_error("letter index must be >= 1");
    }
    return p() * pow(q(), static_cast<unsigned>(i - 1));
}

BigRational GeomParams::letter_weight_exact(std::int64_t i) const {
    if (i < 1) {
        throw std::domain_error("letter index must be >= 1");
    }
    BigRational w = p_;
    for (std::int64_t k = 1; k < i; ++k) w *= q_;
    return w;
}

Real letter_pmf(const GeomParams& params, std::int64_t i) {
    return params.letter_weight(i);
}

BigRational letter_pmf_exact(const GeomParams& params, std::int64_t i) {
    return params.letter_weight_exact(i);
}

Word sample_word(const GeomParams& params, std::size_t n, std::uint64_t seed) {
    const double log_q = std::log(params.q_double());
    if (!(log_q < 0)) {
        throw std::invalid_argument("sample_word: q rounds to 1 in double precision");
    }
    Word word;
    word.letters.reserve(n);
    SplitMix64 rng(seed);
    for (std::size_t j = 0; j < n; ++j) {
        const double u = rng.next_unit();
        const double r = std::log(u) / log_q;  // >= 0
        word.letters.push_back(1 + static_cast<std::int64_t>(r));
    }
    return word;
}

PairTally distinct_pairs(const Word& word) {
    PairTally tally;
    for (std::size_t k = 0; k + 1 < word.letters.size(); ++k) {
        tally.pairs.emplace(word.letters[k], word.letters[k + 1]);
    }
    tally.distinct_count = tally.pairs.size();
    return tally;
}

std::size_t count_distinct_pairs(const Word& word,
                                 std::vector<std::pair<std::int64_t, std::int64_t>>& scratch) {
    scratch.clear();
    for (std::size_t k = 0; k + 1 < word.letters.size(); ++k) {
        scratch.emplace_back(word.letters[k], word.letters[k + 1]);
    }
    std::sort(scratch.begin(), scratch.end());
    return static_cast<std::size_t>(
        std::unique(scratch.begin(), scratch.end()) - scratch.begin());
}

}  // namespace geompairs::model

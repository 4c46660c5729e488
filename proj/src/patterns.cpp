#include "geompairs/patterns.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace geompairs::patterns {

using symbolic::BigRational;
using symbolic::PolyQ;

Rgs Rgs::from_symbols(std::vector<int> symbols) {
    int running_max = 0;
    for (std::size_t k = 0; k < symbols.size(); ++k) {
        const int s = symbols[k];
        if (s < 1 || s > running_max + 1) {
            throw std::invalid_argument("not a restricted growth string");
        }
        running_max = std::max(running_max, s);
    }
    Rgs rgs;
    rgs.symbols = std::move(symbols);
    return rgs;
}

Rgs Rgs::parse(const std::string& text) {
    std::vector<int> symbols;
    symbols.reserve(text.size());
    for (char ch : text) {
        if (ch >= 'a' && ch <= 'z') {
            symbols.push_back(ch - 'a' + 1);
        } else if (ch >= '1' && ch <= '9') {
            symbols.push_back(ch - '0');
        } else {
            throw std::invalid_argument("unrecognized pattern symbol");
        }
    }
    return from_symbols(std::move(symbols));
}

int Rgs::num_classes() const {
    return symbols.empty() ? 0 : *std::max_element(symbols.begin(), symbols.end());
}

std::vector<unsigned> Rgs::class_multiplicities() const {
    std::vector<unsigned> counts(static_cast<std::size_t>(num_classes()), 0);
    for (int s : symbols) counts[static_cast<std::size_t>(s - 1)]++;
    return counts;
}

std::string Rgs::to_letters() const {
    std::string out;
    out.reserve(symbols.size());
    for (int s : symbols) out.push_back(static_cast<char>('a' + s - 1));
    return out;
}

std::uint64_t bell_number(int n) {
    if (n < 0 || n > 25) {
        throw std::invalid_argument("bell_number: supported range is 0..25");
    }
    // Bell triangle: each row starts with the previous row's last entry.
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

std::vector<Rgs> enumerate_rgs(int n) {
    if (n < 1 || n > 10) {
        throw std::invalid_argument("enumerate_rgs: supported range is 1..10");
    }
    std::vector<Rgs> out;
    out.reserve(bell_number(n));
    std::vector<int> current(static_cast<std::size_t>(n), 1);
    // Lexicographic generation: advance the rightmost symbol that can grow.
    auto running_max_before = [&current](int pos) {
        int m = 0;
        for (int k = 0; k < pos; ++k) m = std::max(m, current[static_cast<std::size_t>(k)]);
        return m;
    };
    while (true) {
        Rgs rgs;
        rgs.symbols = current;
        out.push_back(std::move(rgs));
        int pos = n - 1;
        while (pos > 0) {
            if (current[static_cast<std::size_t>(pos)] <= running_max_before(pos)) {
                current[static_cast<std::size_t>(pos)]++;
                std::fill(current.begin() + pos + 1, current.end(), 1);
                break;
            }
            current[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

std::string patterns_to_text(const std::vector<Rgs>& patterns) {
    std::ostringstream out;
    for (const Rgs& rgs : patterns) out << rgs.to_letters() << "\n";
    return out.str();
}

int pattern_distinct_pairs(const Rgs& rgs) {
    std::set<std::pair<int, int>> pairs;
    for (std::size_t k = 0; k + 1 < rgs.symbols.size(); ++k) {
        pairs.emplace(rgs.symbols[k], rgs.symbols[k + 1]);
    }
    return static_cast<int>(pairs.size());
}

namespace {

// Probability shared by all patterns with this multiset of class
// multiplicities: p^n/q^n times the sum of ordered geometric sums over all
// assignments of classes to value ranks.  Assignments inducing the same
// multiplicity sequence contribute equal terms, so iterate distinct
// permutations and scale by the number of class relabelings.
RationalFunction multiset_probability(std::vector<unsigned> multiplicities) {
    const std::size_t k = multiplicities.size();
    if (k == 0 || k > 8) {
        throw std::invalid_argument("pattern probability: class count must be 1..8");
    }
    unsigned n = 0;
    for (unsigned m : multiplicities) n += m;

    std::sort(multiplicities.begin(), multiplicities.end());
    BigRational repeats(1);
    for (std::size_t i = 0; i < k;) {
        std::size_t j = i;
        while (j < k && multiplicities[j] == multiplicities[i]) ++j;
        for (std::size_t r = 2; r <= j - i; ++r) repeats *= static_cast<long>(r);
        i = j;
    }

    RationalFunction sum;
    do {
        sum = sum + symbolic::ordered_geometric_sum(multiplicities);
    } while (std::next_permutation(multiplicities.begin(), multiplicities.end()));
    sum = sum * RationalFunction::constant(repeats);

    // p^n / q^n with p = 1 - q
    const RationalFunction prefactor(
        PolyQ(std::vector<BigRational>{1, -1}).pow(n), PolyQ::monomial(n, 1));
    return prefactor * sum;
}

}  // namespace

RationalFunction pattern_probability(const Rgs& rgs) {
    return multiset_probability(rgs.class_multiplicities());
}

RationalFunction expected_pairs_direct(int n) {
    if (n < 2 || n > 8) {
        throw std::invalid_argument("expected_pairs_direct: supported range is 2..8");
    }
    // Group patterns by sorted multiplicity multiset; each group needs one
    // probability and contributes its summed distinct-pair count.
    std::map<std::vector<unsigned>, long long> pair_weight;
    for (const Rgs& rgs : enumerate_rgs(n)) {
        std::vector<unsigned> key = rgs.class_multiplicities();
        std::sort(key.begin(), key.end());
        pair_weight[key] += pattern_distinct_pairs(rgs);
    }
    RationalFunction expectation;
    for (const auto& [multiplicities, weight] : pair_weight) {
        expectation = expectation + multiset_probability(multiplicities) *
                                        RationalFunction::constant(BigRational(weight));
    }
    return expectation;
}

}  // namespace geompairs::patterns

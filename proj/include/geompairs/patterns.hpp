/**
 * @file patterns.hpp
 * @brief Word patterns as restricted growth strings: enumeration, exact
 *        pattern probabilities, and the direct expectation for small n.
 */
#pragma once

#include "geompairs/symbolic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace geompairs::patterns {

using symbolic::RationalFunction;

/**
 * A restricted growth string: symbols[0] = 1 and each symbol exceeds the
 * running maximum by at most one.  Length-n strings are in bijection with the
 * set partitions of an n-set, so there are Bell(n) of them.
 */
struct Rgs {
    std::vector<int> symbols;

    /// Validates the growth property; throws std::invalid_argument otherwise.
    static Rgs from_symbols(std::vector<int> symbols);
    /// Parses letter form ("abab") or digit form ("1212").
    static Rgs parse(const std::string& text);

    std::size_t length() const { return symbols.size(); }
    int num_classes() const;  // number of distinct symbols
    /// Occurrences of each class, indexed by class id - 1.
    std::vector<unsigned> class_multiplicities() const;
    std::string to_letters() const;  // 'a' for class 1, 'b' for 2, ...
};

/// Bell numbers by the triangle recurrence; valid through n = 25.
std::uint64_t bell_number(int n);

/// All RGS of length n in lexicographic order.  Requires 1 <= n <= 10.
std::vector<Rgs> enumerate_rgs(int n);

/// One RGS per line, in letter form.
std::string patterns_to_text(const std::vector<Rgs>& patterns);

/// Number of distinct adjacent symbol pairs in the pattern.
int pattern_distinct_pairs(const Rgs& rgs);

/**
 * Exact probability that a random geometric word realizes this pattern with
 * its k symbol classes mapped to k distinct letter values:
 *   p^n/q^n * sum over the k! class-to-rank assignments of the ordered
 *   geometric sum of the permuted multiplicities,
 * returned canonically with p = 1 - q.  Requires k <= 8 (cost guard).
 */
RationalFunction pattern_probability(const Rgs& rgs);

/**
 * Sum over all length-n patterns of (distinct pairs) x (pattern probability).
 * Patterns sharing a multiset of class multiplicities share a probability,
 * which the implementation computes once per multiset.  Requires 2 <= n <= 8.
 */
RationalFunction expected_pairs_direct(int n);

}  // namespace geompairs::patterns

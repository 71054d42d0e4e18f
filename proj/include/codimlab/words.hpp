#pragma once

/*
 * Finitely described infinite binary words: periodic patterns, mechanical
 * words of rational slope, and characteristic Sturmian words built from a
 * continued-fraction directive by the standard-word substitution
 *   s_0 = 0,  s_1 = 0^{d_1} 1,  s_k = s_{k-1}^{d_k} s_{k-2}.
 * Everything is integer-exact; irrational slopes are only ever reported as
 * intervals between consecutive convergents.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace codimlab::words {

enum class WordKind { Periodic, SturmianRational, SturmianDirective };

struct WordSpec {
    WordKind kind = WordKind::Periodic;
    std::vector<std::uint8_t> pattern;      // Periodic: one period, nonempty
    long long p = 0, q = 1;                 // SturmianRational: reduced p/q in [0,1]
    std::vector<long long> directive;       // SturmianDirective: positive quotients

    static WordSpec periodic(std::string_view bits);
    static WordSpec periodic(std::vector<std::uint8_t> bits);
    static WordSpec mechanical(long long p, long long q);
    static WordSpec sturmian(std::vector<long long> directive);

    // True for the two kinds that describe an eventually periodic word.
    bool is_periodic_kind() const { return kind != WordKind::SturmianDirective; }
    // Period length for periodic kinds.
    std::size_t period() const;

    std::string to_string() const;  // shorthand: periodic:0110 | mechanical:2/5 | sturmian:1,1,1
    static WordSpec parse(std::string_view shorthand);
};

struct Slope {
    mpq_class lo, hi;
    bool exact() const { return lo == hi; }
};

// w_1 ... w_length. Coherent across lengths: prefix(L) is a prefix of prefix(L+1).
std::vector<std::uint8_t> prefix(const WordSpec& spec, std::size_t length);

// Longest prefix the description determines (SIZE_MAX for periodic kinds).
std::size_t representable_horizon(const WordSpec& spec);

// Number of 1 bits.
std::size_t height(const std::vector<std::uint8_t>& bits);

// Distinct length-n factors, found by scanning prefixes until the count is
// stable across two consecutive doublings. Sorted lexicographically.
std::vector<std::vector<std::uint8_t>> distinct_factors(const WordSpec& spec, std::size_t n);

// 1-based start position of the first occurrence of each distinct length-n
// factor (same saturation rule as distinct_factors). Sorted ascending.
std::vector<std::size_t> factor_first_positions(const WordSpec& spec, std::size_t n);

std::size_t complexity(const WordSpec& spec, std::size_t n);

Slope slope(const WordSpec& spec);

// max over 1 <= n <= n_max and length-n factors x, y of |h(x) - h(y)|.
std::size_t balance_constant(const WordSpec& spec, std::size_t n_max);

// max over length-n factors u of the distance from h(u)/n to the slope
// enclosure (exact for periodic kinds).
mpq_class factor_height_deviation(const WordSpec& spec, std::size_t n);

nlohmann::json to_json(const WordSpec& spec);
WordSpec from_json(const nlohmann::json& j);

} // namespace codimlab::words

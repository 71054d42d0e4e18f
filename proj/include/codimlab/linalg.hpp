#pragma once

/*
 * Exact rank machinery for sparse 0/1 matrices: elimination over word-sized
 * prime fields (a certified lower bound on the rational rank), a fraction-free
 * Bareiss elimination for exact confirmation, and a rational RREF used to
 * extract kernel data for cocharacter traces.
 */

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace codimlab::linalg {

// Two fixed 62-bit primes (verified by the test suite).
inline constexpr std::uint64_t kPrime62a = 4611686018427387847ull;  // 2^62 - 57
inline constexpr std::uint64_t kPrime62b = 4611686018427387817ull;  // 2^62 - 87

struct SparseMat01 {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<std::vector<std::uint32_t>> rows;  // sorted column indices of the 1 entries

    SparseMat01 transposed() const;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
bool is_prime_u64(std::uint64_t n);  // deterministic Miller-Rabin

std::size_t modular_rank(const SparseMat01& mat, std::uint64_t prime);

// Exact rank over the integers (equivalently over Q) by fraction-free
// elimination with smallest-pivot selection.
std::size_t bareiss_rank(const SparseMat01& mat);

// Reduced row echelon form over Q. Only the pivot rows are kept.
struct RationalRref {
    std::size_t n_cols = 0;
    std::vector<std::vector<mpq_class>> rows;   // rank rows, fully reduced, pivot = 1
    std::vector<std::uint32_t> pivot_cols;      // ascending

    std::size_t rank() const { return rows.size(); }
    std::vector<std::uint32_t> free_cols() const;
};

RationalRref rational_rref(const SparseMat01& mat);

} // namespace codimlab::linalg

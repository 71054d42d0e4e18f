#pragma once

/*
 * Partitions, Young diagrams and hook-length dimensions, symmetric-group
 * characters at small degree, and the Phi machinery on the probability
 * simplex:
 *   Phi(x_1..x_d) = (x_1^{x_1} ... x_d^{x_d})^{-1}, with 0^0 = 1,
 *   Phi(lambda)   = Phi(lambda_1/n, ..., lambda_d/n),
 *   phi_d(gamma)  = Phi(theta, ..., theta, gamma) with d thetas, d*theta+gamma = 1.
 */

#include <string>
#include <vector>

#include <gmpxx.h>

#include "codimlab/interval.hpp"

namespace codimlab::repr {

struct Partition {
    std::vector<long long> parts;  // non-increasing, positive

    Partition() = default;
    explicit Partition(std::vector<long long> p);  // validates

    long long n() const;
    int height() const { return static_cast<int>(parts.size()); }
    // 1-based row length, 0 beyond the last row.
    long long part(int row) const;

    bool operator==(const Partition& other) const { return parts == other.parts; }
    bool operator<(const Partition& other) const { return parts < other.parts; }

    std::string to_string() const;                 // "3,2,1"
    static Partition parse(const std::string& s);
};

// All partitions of n (optionally of height <= max_height), in decreasing
// lexicographic order. max_height = 0 means unbounded.
std::vector<Partition> partitions_of(long long n, int max_height = 0);

// Number of standard Young tableaux of the shape, by the hook-length formula.
mpz_class hook_dimension(const Partition& shape);

// Irreducible character chi_lambda evaluated on the conjugacy class of the
// given cycle type (Murnaghan-Nakayama).
long long character_value(const Partition& lambda, const Partition& cycle_type);

mpz_class conjugacy_class_size(const Partition& cycle_type);

struct Tableau {
    std::vector<std::vector<int>> rows;  // entries 1..n, shape = row lengths

    static Tableau row_major(const Partition& shape);
    Partition shape() const;
    int size() const;
};

struct PhiPoint {
    std::vector<mpq_class> coords;  // each in [0,1], exact sum 1

    static PhiPoint of(std::vector<mpq_class> coords);  // validates
};

Interval phi(const PhiPoint& point, mpfr_prec_t prec = kDefaultPrec);

// Interval-coordinate variant (coordinates need not sum to 1 exactly; the
// caller guarantees the true point lies inside). Exact-zero coordinates are
// skipped per the 0^0 = 1 convention.
Interval phi_interval(const std::vector<Interval>& coords, mpfr_prec_t prec = kDefaultPrec);

// Phi at the normalized partition; requires d >= height (zero padding).
Interval phi_of_partition(const Partition& shape, int d, mpfr_prec_t prec = kDefaultPrec);

// Phi(theta,...,theta,gamma) with d thetas and d*theta + gamma = 1.
Interval phi_d(const mpq_class& gamma, int d, mpfr_prec_t prec = kDefaultPrec);
Interval phi_d(const mpq_class& gamma_lo, const mpq_class& gamma_hi, int d,
               mpfr_prec_t prec = kDefaultPrec);

struct L1Check {
    bool hypothesis_ok = false;  // n >= 100 (advisory; the bounds are evaluated regardless)
    bool lower_ok = false;       // Phi(lambda)^n / n^{d^2+d} <= d_lambda
    bool upper_ok = false;       // d_lambda <= n * Phi(lambda)^n
    Interval lower_margin;       // d_lambda * n^{d^2+d} / Phi^n
    Interval upper_margin;       // n * Phi^n / d_lambda
};

L1Check check_L1(const Partition& shape, int d, mpfr_prec_t prec = kDefaultPrec);

// One-cell push-down: row `from_row` loses a cell, row `to_row` gains one
// (to_row == height+1 starts a new row of length 1). Validates the result and
// certifies Phi(result) >= Phi(input) with adaptive-precision intervals.
Partition push_down(const Partition& shape, int from_row, int to_row);

struct AddedRowMax {
    double t_star;          // a/(a+1)
    double value;           // a+1
    double t_numeric;       // golden-section argmax
    double value_numeric;   // golden-section max
};

// max over t in [0,1] of Phi(t z_1, ..., t z_d, 1-t) given Phi(z) = a; the
// closed form is cross-validated by golden-section search.
AddedRowMax maximize_added_row(double a);

// Integers k with n/beta - 1 <= k <= n/beta.
std::vector<long long> optimal_added_row_length(long long n, const mpq_class& beta);

} // namespace codimlab::repr

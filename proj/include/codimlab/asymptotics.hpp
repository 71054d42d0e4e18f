#pragma once

/*
 * Growth-rate targets and finite-degree evidence: the exponent value
 * phi_d(1/(m+alpha)) a model is headed for, the witness partitions that carry
 * the lower bound, per-degree sandwich rows comparing computed c_n against
 * both sides, and the density scan that realizes prescribed unital exponents
 * with periodic words. No limits are extrapolated; reports show finite-n data
 * next to the target.
 */

#include <string>
#include <vector>

#include <gmpxx.h>

#include "codimlab/codim.hpp"
#include "codimlab/interval.hpp"
#include "codimlab/repr.hpp"
#include "codimlab/words.hpp"

namespace codimlab::asymptotics {

struct ExponentTarget {
    int m = 0, d = 0;
    words::Slope alpha;
    Interval value;         // phi_d(1/(m+alpha)); exact point at symmetric parameters
    Interval unital_value;  // value + 1
};

ExponentTarget target(int m, int d, const words::Slope& alpha, mpfr_prec_t prec = kDefaultPrec);
ExponentTarget target(const algebra::AlgebraParams& params, mpfr_prec_t prec = kDefaultPrec);

struct WitnessPartitionInfo {
    repr::Partition lambda;  // lambda_1=..=lambda_d = m_1+..+m_t - t, lambda_{d+1} = td, lambda_{d+2} = 1
    long long degree = 0;    // n(t) = (m_1+..+m_t) d + 1
    mpq_class beta;          // lambda_{d+1} / n
};

WitnessPartitionInfo witness_partition(int m, int d, const words::WordSpec& word, int t);

struct TrajectoryRow {
    int n = 0;
    long long c_n = 0;
    double root = 0.0;        // c_n^{1/n}
    mpz_class lower;          // d_{lambda^{(n)}} at witness degrees, else 1
    mpz_class upper;          // l_n * max d_lambda when cocharacter data exists, else dim P_n
    bool witness_degree = false;
    bool cocharacter_upper = false;
};

struct TrajectoryReport {
    ExponentTarget goal;
    std::vector<TrajectoryRow> rows;
    bool monotone = true;  // c_n nondecreasing over the computed window
};

TrajectoryReport trajectory(const algebra::AlgebraModel& model, int n_max,
                            const codim::CodimOptions& opt = {}, bool with_cocharacter = true);

// Row insertions of length k into the witness shape (k <= t*d): after row d+1,
// after the first d rows, and in front. Shapes that fail to be partitions are
// dropped; k = 0 returns the input shape.
std::vector<repr::Partition> unital_witness_partitions(const repr::Partition& lambda,
                                                       long long k);

struct ScanResult {
    int m = 0, d = 0;
    mpq_class q;              // rational slope, realizable by a periodic word
    Interval achieved;        // phi_d(1/(m+q)) + 1
    bool boundary = false;    // gamma == 2 endpoint, documented rather than constructed
    std::string note;
};

// Finds (m, d, q) with |phi_d(1/(m+q)) + 1 - gamma| <= eps, bisecting on the
// monotone slope parameter. gamma < 2 is not representable; gamma == 2 is the
// documented family endpoint.
ScanResult density_scan(const mpq_class& gamma, const mpq_class& eps,
                        mpfr_prec_t prec = kDefaultPrec);

} // namespace codimlab::asymptotics

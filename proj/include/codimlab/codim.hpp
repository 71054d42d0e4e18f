#pragma once

/*
 * Codimension c_n, cocharacter multiplicities m_lambda and colength l_n of a
 * model, by exact rank of the evaluation pairing between the multilinear
 * monomial basis and the relevant substitutions, plus the structural checks
 * (shape bounds, colength bounds, b-degree density) that go with them.
 */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "codimlab/algebra.hpp"
#include "codimlab/interval.hpp"
#include "codimlab/linalg.hpp"
#include "codimlab/multilinear.hpp"
#include "codimlab/repr.hpp"

namespace codimlab::codim {

enum class RankMode { Auto, Full, LeftNormed };

struct EvaluationMatrix {
    int n = 0;
    multilinear::BasisMode mode = multilinear::BasisMode::LeftNormed;
    std::vector<multilinear::Monomial> monomials;
    std::vector<multilinear::Substitution> subs;

    struct ColKey {
        std::uint32_t sub = 0;
        algebra::Elem out;
        auto operator<=>(const ColKey&) const = default;
    };
    std::vector<ColKey> columns;   // canonical order
    linalg::SparseMat01 mat;       // rows = monomials, cols = columns
};

struct CodimOptions {
    multilinear::Caps caps;
    std::array<std::uint64_t, 2> primes{linalg::kPrime62a, linalg::kPrime62b};
    std::size_t exact_threshold = 2000;  // run Bareiss when dim P_n <= threshold
    int threads = 1;
    mpfr_prec_t prec = kDefaultPrec;
};

struct RankCertificate {
    std::vector<std::uint64_t> primes;
    std::vector<std::size_t> prime_ranks;
    bool exact_confirmed = false;
    std::size_t rank = 0;  // max of prime ranks; equals the exact rank when confirmed
};

struct CodimReport {
    int n = 0;
    multilinear::BasisMode mode = multilinear::BasisMode::LeftNormed;
    long long c_n = 0;
    std::size_t dim_p_n = 0;
    RankCertificate cert;
    std::optional<std::map<repr::Partition, long long>> multiplicities;
    std::optional<long long> colength;
};

EvaluationMatrix build_evaluation_matrix(const algebra::AlgebraModel& model, int n,
                                         multilinear::BasisMode mode,
                                         const CodimOptions& opt = {});

CodimReport codimension(const algebra::AlgebraModel& model, int n,
                        RankMode mode = RankMode::Auto, const CodimOptions& opt = {});

// Codimension plus exact multiplicities and colength, via traces on the
// quotient: tr(sigma | P_n(A)) = tr(sigma | P_n) - tr(sigma | kernel), with
// the kernel taken from a rational RREF of the evaluation pairing.
CodimReport cocharacter(const algebra::AlgebraModel& model, int n,
                        const CodimOptions& opt = {});

// Every contributing shape obeys the height/last-row constraints:
// h(lambda) <= d+2 and lambda_{d+2} <= 1 for plain models, h(lambda) <= d+3
// for unital ones.
bool verify_shape_bounds(const CodimReport& report, int d, bool unital);

// l_n <= 2 d^2 (m+1) n^{(d+1)(d+3)} (n+1) for plain models;
// l_n <= (n+1)^{3(d+3)^2} for unital ones.
bool verify_colength_bound(const CodimReport& report, const algebra::AlgebraParams& params,
                           bool unital);
mpz_class colength_bound(const algebra::AlgebraParams& params, bool unital, int n);

struct BDegreeReport {
    int n = 0;
    mpq_class max_ratio;        // max over nonzero degree-n evaluations of deg_b / n
    mpq_class bound_lo, bound_hi;  // enclosure of 1/(m + alpha)
    mpq_class slack_hi;         // max_ratio - bound_lo (upper bound on the excess)
};

BDegreeReport max_b_degree(const algebra::AlgebraModel& model, int n);

// Degree where the b-density trend window starts: d(m+1) + 2.
int b_degree_trend_start(const algebra::AlgebraParams& params);

struct BDegreeTrend {
    std::vector<BDegreeReport> rows;  // degrees 1..n_max
    int window_start = 0;
    bool bounded = true;   // every ratio <= 1
    bool trending = true;  // max slack over the later half of the window does
                           // not exceed the max over the earlier half
};

// The slack sequence has no closed form; this reports it over 1..n_max and
// applies the soft trend check on the window [d(m+1)+2, n_max].
BDegreeTrend b_degree_trend(const algebra::AlgebraModel& model, int n_max);

nlohmann::json report_to_json(const CodimReport& report, mpfr_prec_t prec = kDefaultPrec);

} // namespace codimlab::codim

#include "codimlab/codim.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "codimlab/error.hpp"
#include "codimlab/util.hpp"

namespace codimlab::codim {

using algebra::AlgebraModel;
using algebra::Elem;
using multilinear::BasisMode;
using multilinear::Monomial;
using multilinear::Substitution;

namespace {

int rank_cap(const CodimOptions& opt, BasisMode mode) {
    return mode == BasisMode::Full ? opt.caps.full : opt.caps.left_normed;
}

int cochar_cap(const CodimOptions& opt, BasisMode mode) {
    return mode == BasisMode::Full ? opt.caps.cochar_full : opt.caps.cochar_left_normed;
}

BasisMode resolve_mode(const AlgebraModel& model, RankMode mode) {
    switch (mode) {
        case RankMode::Auto:
            return model.unital() ? BasisMode::Full : BasisMode::LeftNormed;
        case RankMode::Full:
            return BasisMode::Full;
        case RankMode::LeftNormed:
            require(!model.unital(), ErrorCode::ModeUnsound,
                    "left-normed mode is unsound for unital models");
            return BasisMode::LeftNormed;
    }
    fail(ErrorCode::Internal, "unreachable rank mode");
}

// The left-normed basis only spans the quotient when x(yz) == 0 holds.
void check_left_normed_sound(const AlgebraModel& model) {
    static std::mutex mutex;
    static std::map<std::uint64_t, bool> cache;
    const std::uint64_t key = model.descriptor_hash();
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            require(it->second, ErrorCode::ModeUnsound,
                    "model does not satisfy x(yz) == 0; left-normed mode unsound");
            return;
        }
    }
    const bool ok = model.verify_left_annihilator_identity();
    {
        std::lock_guard<std::mutex> lock(mutex);
        cache[key] = ok;
    }
    require(ok, ErrorCode::ModeUnsound,
            "model does not satisfy x(yz) == 0; left-normed mode unsound");
}

std::size_t monomial_row_index(const Monomial& m, BasisMode mode) {
    return mode == BasisMode::Full ? multilinear::monomial_index_full(m)
                                   : multilinear::monomial_index_left_normed(m);
}

} // namespace

EvaluationMatrix build_evaluation_matrix(const AlgebraModel& model, int n, BasisMode mode,
                                         const CodimOptions& opt) {
    EvaluationMatrix em;
    em.n = n;
    em.mode = mode;
    em.monomials = multilinear::monomial_basis(n, mode, opt.caps);
    em.subs = multilinear::relevant_substitutions(n, model);

    // one evaluation pass per substitution; assembled in canonical order below
    std::vector<std::vector<std::pair<std::uint32_t, Elem>>> hits(em.subs.size());
    parallel_for(0, em.subs.size(), opt.threads, [&](std::size_t s) {
        auto& local = hits[s];
        for (std::size_t r = 0; r < em.monomials.size(); ++r) {
            const Elem out = multilinear::evaluate(em.monomials[r], em.subs[s], model);
            if (!out.is_zero()) local.emplace_back(static_cast<std::uint32_t>(r), out);
        }
    });

    em.mat.n_rows = em.monomials.size();
    em.mat.rows.assign(em.monomials.size(), {});
    for (std::size_t s = 0; s < em.subs.size(); ++s) {
        // distinct outputs of this substitution, in canonical order
        std::map<Elem, std::uint32_t> col_of;
        for (const auto& hit : hits[s]) col_of.emplace(hit.second, 0);
        for (auto& [out, col] : col_of) {
            col = static_cast<std::uint32_t>(em.columns.size());
            em.columns.push_back({static_cast<std::uint32_t>(s), out});
        }
        for (const auto& [row, out] : hits[s])
            em.mat.rows[row].push_back(col_of.at(out));
    }
    em.mat.n_cols = em.columns.size();
    for (auto& row : em.mat.rows) std::sort(row.begin(), row.end());
    return em;
}

CodimReport codimension(const AlgebraModel& model, int n, RankMode mode,
                        const CodimOptions& opt) {
    opt.caps.validate();
    require(n >= 1, ErrorCode::InvalidParams, "degree must be >= 1");
    const BasisMode basis_mode = resolve_mode(model, mode);
    require(n <= rank_cap(opt, basis_mode), ErrorCode::CapExceeded,
            "degree " + std::to_string(n) + " exceeds the cap for this mode");
    if (basis_mode == BasisMode::LeftNormed) check_left_normed_sound(model);

    const EvaluationMatrix em = build_evaluation_matrix(model, n, basis_mode, opt);

    CodimReport report;
    report.n = n;
    report.mode = basis_mode;
    report.dim_p_n = em.monomials.size();
    report.cert.primes.assign(opt.primes.begin(), opt.primes.end());
    report.cert.prime_ranks.assign(report.cert.primes.size(), 0);
    require(report.cert.primes[0] != report.cert.primes[1], ErrorCode::InvalidParams,
            "rank primes must be distinct");
    for (std::uint64_t p : report.cert.primes) {
        require(linalg::is_prime_u64(p), ErrorCode::InvalidParams,
                "rank modulus " + std::to_string(p) + " is not prime");
        require(p > em.monomials.size(), ErrorCode::InvalidParams,
                "rank primes must exceed dim P_n");
    }

    parallel_for(0, report.cert.primes.size(), opt.threads, [&](std::size_t i) {
        report.cert.prime_ranks[i] = linalg::modular_rank(em.mat, report.cert.primes[i]);
    });
    std::size_t rank = *std::max_element(report.cert.prime_ranks.begin(),
                                         report.cert.prime_ranks.end());

    if (em.monomials.size() <= opt.exact_threshold) {
        const std::size_t exact = linalg::bareiss_rank(em.mat);
        require(exact >= rank, ErrorCode::Internal,
                "exact rank fell below a prime-field rank");
        rank = exact;
        report.cert.exact_confirmed = true;
    }
    report.cert.rank = rank;
    report.c_n = static_cast<long long>(rank);
    return report;
}

CodimReport cocharacter(const AlgebraModel& model, int n, const CodimOptions& opt) {
    opt.caps.validate();
    require(n >= 1, ErrorCode::InvalidParams, "degree must be >= 1");
    const BasisMode basis_mode = resolve_mode(model, RankMode::Auto);
    require(n <= cochar_cap(opt, basis_mode), ErrorCode::CapExceeded,
            "degree " + std::to_string(n) + " exceeds the cocharacter cap");

    // rank certificate via the standard path (also reuses the prime engines)
    CodimReport report = codimension(model, n, RankMode::Auto, opt);

    const EvaluationMatrix em = build_evaluation_matrix(model, n, basis_mode, opt);
    const linalg::RationalRref rref = linalg::rational_rref(em.mat.transposed());
    require(static_cast<long long>(rref.rank()) == report.c_n, ErrorCode::Internal,
            "rational kernel rank disagrees with the certified rank");

    const std::size_t dim = em.monomials.size();
    // free-column lookup
    std::vector<int> free_index(dim, -1);
    {
        const auto free_cols = rref.free_cols();
        for (std::size_t i = 0; i < free_cols.size(); ++i) free_index[free_cols[i]] = static_cast<int>(i);
    }

    // trace of each conjugacy class on the kernel of the evaluation pairing
    const auto classes = repr::partitions_of(n);
    mpz_class n_factorial;
    mpz_fac_ui(n_factorial.get_mpz_t(), static_cast<unsigned long>(n));

    std::vector<mpq_class> kernel_trace(classes.size(), 0);
    std::vector<mpq_class> quotient_trace(classes.size(), 0);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const repr::Partition& cycle_type = classes[ci];
        // canonical representative: consecutive cycles
        std::vector<int> sigma(static_cast<std::size_t>(n));
        {
            int at = 0;
            for (long long len : cycle_type.parts) {
                for (long long s = 0; s < len; ++s) {
                    const int from = at + static_cast<int>(s);
                    const int to = at + static_cast<int>((s + 1) % len);
                    sigma[static_cast<std::size_t>(from)] = to + 1;
                }
                at += static_cast<int>(len);
            }
        }
        const bool is_identity =
            static_cast<long long>(cycle_type.parts.size()) == static_cast<long long>(n);

        mpq_class tr_kernel = 0;
        if (is_identity) {
            tr_kernel = static_cast<long>(dim - rref.rank());
        } else {
            // tr = sum over pivot rows i with sigma(monomial at pivot_i) landing
            // on a free column f of -R[i, f]
            for (std::size_t i = 0; i < rref.pivot_cols.size(); ++i) {
                const Monomial& pivot_monomial = em.monomials[rref.pivot_cols[i]];
                const Monomial image = multilinear::act(sigma, pivot_monomial);
                const std::size_t f = monomial_row_index(image, basis_mode);
                if (free_index[f] >= 0) tr_kernel -= rref.rows[i][f];
            }
        }
        kernel_trace[ci] = tr_kernel;
        quotient_trace[ci] = (is_identity ? mpq_class(static_cast<long>(dim)) : mpq_class(0)) -
                             tr_kernel;
    }

    // m_lambda = (1/n!) sum_mu |class mu| chi_lambda(mu) tr(mu | quotient)
    std::map<repr::Partition, long long> multiplicities;
    mpz_class dim_check = 0;
    long long colength = 0;
    for (const auto& lambda : repr::partitions_of(n)) {
        mpq_class acc = 0;
        for (std::size_t ci = 0; ci < classes.size(); ++ci) {
            const long long chi = repr::character_value(lambda, classes[ci]);
            if (chi == 0 || quotient_trace[ci] == 0) continue;
            acc += mpq_class(repr::conjugacy_class_size(classes[ci])) *
                   mpq_class(static_cast<long>(chi)) * quotient_trace[ci];
        }
        acc /= mpq_class(n_factorial);
        acc.canonicalize();
        require(acc.get_den() == 1, ErrorCode::Internal, "multiplicity is not an integer");
        require(acc >= 0, ErrorCode::Internal, "multiplicity is negative");
        const long long m_lambda = static_cast<long long>(acc.get_num().get_si());
        if (m_lambda > 0) {
            multiplicities[lambda] = m_lambda;
            dim_check += mpz_class(static_cast<long>(m_lambda)) * repr::hook_dimension(lambda);
            colength += m_lambda;
        }
    }
    require(dim_check == mpz_class(static_cast<long>(report.c_n)), ErrorCode::Internal,
            "sum of m_lambda * d_lambda does not match c_n");

    report.multiplicities = std::move(multiplicities);
    report.colength = colength;
    return report;
}

bool verify_shape_bounds(const CodimReport& report, int d, bool unital) {
    require(report.multiplicities.has_value(), ErrorCode::InvalidParams,
            "report carries no multiplicities");
    for (const auto& [lambda, m] : *report.multiplicities) {
        if (m == 0) continue;
        if (unital) {
            if (lambda.height() > d + 3) return false;
        } else {
            if (lambda.height() > d + 2) return false;
            if (lambda.part(d + 2) > 1) return false;
        }
    }
    return true;
}

mpz_class colength_bound(const algebra::AlgebraParams& params, bool unital, int n) {
    mpz_class bound;
    if (unital) {
        // (n+1)^{3(d+3)^2}
        const unsigned long e = 3ul * static_cast<unsigned long>(params.d + 3) *
                                static_cast<unsigned long>(params.d + 3);
        mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(n + 1), e);
    } else {
        // 2 d^2 (m+1) n^{(d+1)(d+3)} (n+1)
        mpz_class npow;
        mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(params.d + 1) *
                          static_cast<unsigned long>(params.d + 3));
        bound = 2 * mpz_class(params.d) * params.d * (params.m + 1) * npow * (n + 1);
    }
    return bound;
}

bool verify_colength_bound(const CodimReport& report, const algebra::AlgebraParams& params,
                           bool unital) {
    require(report.colength.has_value(), ErrorCode::InvalidParams,
            "report carries no colength");
    return mpz_class(static_cast<long>(*report.colength)) <=
           colength_bound(params, unital, report.n);
}

BDegreeReport max_b_degree(const AlgebraModel& model, int n) {
    require(!model.unital(), ErrorCode::ModeUnsound,
            "b-degree density is defined for non-unital models");
    require(n >= 1, ErrorCode::InvalidParams, "degree must be >= 1");

    BDegreeReport out;
    out.n = n;
    const words::Slope alpha = words::slope(model.params().word);
    out.bound_lo = 1 / (mpq_class(model.params().m) + alpha.hi);
    out.bound_hi = 1 / (mpq_class(model.params().m) + alpha.lo);
    out.bound_lo.canonicalize();
    out.bound_hi.canonicalize();

    mpq_class best = 0;
    bool any = false;
    if (n == 1) {
        // single variable: b itself is a nonzero value of degree 1
        best = 1;
        any = true;
    } else {
        for (const Elem& start : model.z_representatives(n)) {
            Elem cur = start;
            long long b_count = 0;
            bool alive = true;
            for (int step = 0; step < n - 1 && alive; ++step) {
                const int mk = model.m_at(cur.k);
                Elem next;
                if (cur.j < mk) {
                    next = model.multiply(cur, Elem::a(cur.i));
                } else {
                    next = model.multiply(cur, Elem::b());
                    ++b_count;
                }
                if (next.is_zero()) alive = false;
                cur = next;
            }
            if (!alive) continue;
            any = true;
            mpq_class ratio(static_cast<long>(b_count), static_cast<long>(n));
            ratio.canonicalize();
            best = std::max(best, ratio);
        }
    }
    out.max_ratio = any ? best : mpq_class(0);
    out.slack_hi = out.max_ratio - out.bound_lo;
    return out;
}

int b_degree_trend_start(const algebra::AlgebraParams& params) {
    return params.d * (params.m + 1) + 2;
}

BDegreeTrend b_degree_trend(const algebra::AlgebraModel& model, int n_max) {
    require(n_max >= 1, ErrorCode::InvalidParams, "n_max must be >= 1");
    BDegreeTrend out;
    out.window_start = b_degree_trend_start(model.params());
    for (int n = 1; n <= n_max; ++n) {
        out.rows.push_back(max_b_degree(model, n));
        if (out.rows.back().max_ratio > 1) out.bounded = false;
    }
    if (out.window_start <= n_max) {
        const int mid = (out.window_start + n_max) / 2;
        mpq_class early(-1), late(-1);
        bool have_late = false;
        for (int n = out.window_start; n <= n_max; ++n) {
            const mpq_class& slack = out.rows[static_cast<std::size_t>(n - 1)].slack_hi;
            if (n <= mid) {
                early = std::max(early, slack);
            } else {
                late = have_late ? std::max(late, slack) : slack;
                have_late = true;
            }
        }
        if (have_late) out.trending = late <= early;
    }
    return out;
}

nlohmann::json report_to_json(const CodimReport& report, mpfr_prec_t prec) {
    nlohmann::json j;
    j["n"] = report.n;
    j["mode"] = report.mode == BasisMode::Full ? "full" : "left-normed";
    j["c_n"] = report.c_n;
    j["dim_P_n"] = report.dim_p_n;
    j["primes"] = report.cert.primes;
    j["prime_ranks"] = report.cert.prime_ranks;
    j["exact_confirmed"] = report.cert.exact_confirmed;
    if (report.colength) j["l_n"] = *report.colength;
    if (report.multiplicities) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [lambda, m] : *report.multiplicities) {
            nlohmann::json row;
            row["lambda"] = lambda.to_string();
            row["m_lambda"] = m;
            row["d_lambda"] = repr::hook_dimension(lambda).get_str();
            row["phi"] = repr::phi_of_partition(lambda, lambda.height(), prec).to_string();
            rows.push_back(std::move(row));
        }
        j["multiplicities"] = std::move(rows);
    }
    return j;
}

} // namespace codimlab::codim

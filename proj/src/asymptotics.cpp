#include "codimlab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "codimlab/error.hpp"
#include "codimlab/util.hpp"

namespace codimlab::asymptotics {

using repr::Partition;

namespace {

Interval intersect(const Interval& a, const Interval& b) {
    Real lo(a.prec()), hi(a.prec());
    mpfr_max(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
    mpfr_min(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
    require(mpfr_cmp(lo.get(), hi.get()) <= 0, ErrorCode::Internal,
            "exponent target routes produced disjoint enclosures");
    return Interval(std::move(lo), std::move(hi));
}

} // namespace

ExponentTarget target(int m, int d, const words::Slope& alpha, mpfr_prec_t prec) {
    require(m >= 2 && d >= 1 && d <= m - 1, ErrorCode::InvalidParams,
            "target needs m >= 2 and 1 <= d <= m-1");
    require(alpha.lo >= 0 && alpha.hi <= 1 && alpha.lo <= alpha.hi, ErrorCode::InvalidParams,
            "slope must lie in [0,1]");

    const mpq_class gamma_lo = 1 / (mpq_class(m) + alpha.hi);
    const mpq_class gamma_hi = 1 / (mpq_class(m) + alpha.lo);

    // route one: the theta-balanced section phi_d
    const Interval via_phi_d = repr::phi_d(gamma_lo, gamma_hi, d, prec);

    // route two: the closed-form point ((m+alpha-1)/(d(m+alpha)), ..., 1/(m+alpha))
    Interval via_closed(prec);
    if (alpha.exact()) {
        const mpq_class ma = mpq_class(m) + alpha.lo;
        mpq_class theta = (ma - 1) / (mpq_class(d) * ma);
        theta.canonicalize();
        mpq_class gamma = 1 / ma;
        gamma.canonicalize();
        std::vector<mpq_class> coords(static_cast<std::size_t>(d), theta);
        coords.push_back(gamma);
        via_closed = repr::phi(repr::PhiPoint::of(std::move(coords)), prec);
    } else {
        const Interval ma = Interval::of_rational_bounds(mpq_class(m) + alpha.lo,
                                                         mpq_class(m) + alpha.hi, prec);
        const Interval one = Interval::point_si(1, prec);
        const Interval theta = (ma - one) / (Interval::point_si(d, prec) * ma);
        std::vector<Interval> coords(static_cast<std::size_t>(d), theta);
        coords.push_back(one / ma);
        via_closed = repr::phi_interval(coords, prec);
    }

    ExponentTarget out;
    out.m = m;
    out.d = d;
    out.alpha = alpha;
    out.value = intersect(via_phi_d, via_closed);
    {
        // one extra bit makes the shift by 1 exact at both endpoints
        Real ulo(out.value.prec() + 1), uhi(out.value.prec() + 1);
        mpfr_add_ui(ulo.get(), out.value.lo().get(), 1, MPFR_RNDD);
        mpfr_add_ui(uhi.get(), out.value.hi().get(), 1, MPFR_RNDU);
        out.unital_value = Interval(std::move(ulo), std::move(uhi));
    }

    // d < value <= d+1
    require(!out.value.certainly_le(mpz_class(d)), ErrorCode::Internal,
            "exponent target fell to d or below");
    require(!(out.value.lo().cmp(mpz_class(d + 1)) > 0), ErrorCode::Internal,
            "exponent target exceeded d+1");
    return out;
}

ExponentTarget target(const algebra::AlgebraParams& params, mpfr_prec_t prec) {
    return target(params.m, params.d, words::slope(params.word), prec);
}

WitnessPartitionInfo witness_partition(int m, int d, const words::WordSpec& word, int t) {
    require(t >= 1, ErrorCode::InvalidParams, "witness index t must be >= 1");
    require(m >= 2 && d >= 1 && d <= m - 1, ErrorCode::InvalidParams, "bad (m,d)");
    const auto bits = words::prefix(word, static_cast<std::size_t>(t));
    long long msum = 0;
    for (auto b : bits) msum += m + b;

    WitnessPartitionInfo out;
    std::vector<long long> parts(static_cast<std::size_t>(d), msum - t);
    parts.push_back(static_cast<long long>(t) * d);
    parts.push_back(1);
    out.lambda = Partition(std::move(parts));
    out.degree = msum * d + 1;
    out.beta = mpq_class(static_cast<long>(t) * d, static_cast<long>(out.degree));
    out.beta.canonicalize();
    return out;
}

TrajectoryReport trajectory(const algebra::AlgebraModel& model, int n_max,
                            const codim::CodimOptions& opt, bool with_cocharacter) {
    require(n_max >= 1, ErrorCode::InvalidParams, "n_max must be >= 1");
    TrajectoryReport report;
    report.goal = target(model.params(), opt.prec);

    // witness degrees n(t) <= n_max
    std::map<long long, Partition> witness_at;
    for (int t = 1;; ++t) {
        WitnessPartitionInfo info;
        try {
            info = witness_partition(model.params().m, model.params().d, model.params().word, t);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::DirectiveExhausted) break;
            throw;
        }
        if (info.degree > n_max) break;
        witness_at.emplace(info.degree, info.lambda);
    }

    const bool unital = model.unital();
    const int cochar_limit =
        unital ? opt.caps.cochar_full : opt.caps.cochar_left_normed;

    long long prev_c = 0;
    for (int n = 1; n <= n_max; ++n) {
        const bool cochar = with_cocharacter && n <= cochar_limit;
        const codim::CodimReport cr = cochar ? codim::cocharacter(model, n, opt)
                                             : codim::codimension(model, n, codim::RankMode::Auto, opt);
        TrajectoryRow row;
        row.n = n;
        row.c_n = cr.c_n;
        row.root = cr.c_n > 0 ? std::pow(static_cast<double>(cr.c_n), 1.0 / n) : 0.0;
        if (auto it = witness_at.find(n); it != witness_at.end()) {
            row.witness_degree = true;
            row.lower = repr::hook_dimension(it->second);
        } else {
            row.lower = 1;
        }
        if (cr.multiplicities && cr.colength) {
            mpz_class max_d = 0;
            for (const auto& [lambda, mult] : *cr.multiplicities) {
                if (mult == 0) continue;
                max_d = std::max(max_d, repr::hook_dimension(lambda));
            }
            row.upper = mpz_class(static_cast<long>(*cr.colength)) * max_d;
            row.cocharacter_upper = true;
        } else {
            row.upper = static_cast<long>(cr.dim_p_n);
        }
        if (n > 1 && cr.c_n < prev_c) report.monotone = false;
        prev_c = cr.c_n;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<Partition> unital_witness_partitions(const Partition& lambda, long long k) {
    const int h = lambda.height();
    require(h >= 3, ErrorCode::InvalidParams,
            "witness shapes have height d+2 >= 3");
    const int d = h - 2;
    const long long td = lambda.part(d + 1);
    require(k >= 0 && k <= td, ErrorCode::InvalidParams,
            "row length k must satisfy 0 <= k <= t*d");
    if (k == 0) return {lambda};

    std::vector<std::vector<long long>> shapes;
    // after row d+1: (l_1..l_d, l_{d+1}, k, 1)
    {
        std::vector<long long> s(lambda.parts.begin(), lambda.parts.begin() + d + 1);
        s.push_back(k);
        s.push_back(1);
        shapes.push_back(std::move(s));
    }
    // after the first d rows: (l_1..l_d, k, l_{d+1}, 1)
    {
        std::vector<long long> s(lambda.parts.begin(), lambda.parts.begin() + d);
        s.push_back(k);
        s.push_back(lambda.part(d + 1));
        s.push_back(1);
        shapes.push_back(std::move(s));
    }
    // in front: (k, l_1, .., l_{d+2})
    {
        std::vector<long long> s;
        s.push_back(k);
        s.insert(s.end(), lambda.parts.begin(), lambda.parts.end());
        shapes.push_back(std::move(s));
    }

    std::vector<Partition> out;
    for (auto& s : shapes) {
        bool valid = true;
        for (std::size_t i = 0; valid && i < s.size(); ++i) {
            if (s[i] <= 0) valid = false;
            if (i + 1 < s.size() && s[i] < s[i + 1]) valid = false;
        }
        if (!valid) continue;
        Partition p(std::move(s));
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

ScanResult density_scan(const mpq_class& gamma, const mpq_class& eps, mpfr_prec_t prec) {
    require(eps > 0, ErrorCode::InvalidParams, "eps must be positive");
    require(gamma >= 2, ErrorCode::NotRepresentable,
            "unital exponents below 2 are not representable in this family");

    ScanResult out;
    if (gamma == 2) {
        out.m = 2;
        out.d = 1;
        out.q = 0;
        out.achieved = Interval::point_si(2, prec);
        out.boundary = true;
        out.note = "gamma = 2 is the family endpoint (exp -> 1 end is outside the family); "
                   "associative realizations exist";
        return out;
    }

    const mpq_class v = gamma - 1;  // wanted phi_d value, in (d, d+1]
    long long d_ll;
    if (v.get_den() == 1) {
        d_ll = v.get_num().get_si() - 1;
    } else {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
        d_ll = fl.get_si();
    }
    const int d = static_cast<int>(d_ll);
    out.d = d;

    if (v == mpq_class(static_cast<long>(d) + 1)) {
        out.m = d + 1;
        out.q = 0;
        out.achieved = Interval::point_si(d + 2, prec);
        return out;
    }

    // find m >= d+1 with phi_d(1/(m+1)) <= v <= phi_d(1/m)
    constexpr long long kMaxM = 1000000;
    long long m = d + 1;
    for (; m <= kMaxM; ++m) {
        const Interval at_q1 = repr::phi_d(mpq_class(1, static_cast<long>(m + 1)), d, prec);
        if (at_q1.mid_double() <= mpq_class(v).get_d()) break;
    }
    require(m <= kMaxM, ErrorCode::CapExceeded, "slope parameter search exceeded its cap");
    out.m = static_cast<int>(m);

    // bisect q in [0,1]; phi_d(1/(m+q)) decreases as q grows
    mpq_class q_lo = 0, q_hi = 1;
    const mpq_class lo_target = gamma - eps, hi_target = gamma + eps;
    for (int iter = 0; iter < 512; ++iter) {
        mpq_class q_mid = (q_lo + q_hi) / 2;
        q_mid.canonicalize();
        mpq_class g = 1 / (mpq_class(static_cast<long>(m)) + q_mid);
        g.canonicalize();
        const Interval achieved = repr::phi_d(g, d, prec).add_si(1);
        if (achieved.lo().cmp(lo_target) >= 0 && achieved.hi().cmp(hi_target) <= 0) {
            out.q = q_mid;
            out.achieved = achieved;
            return out;
        }
        if (achieved.mid_double() > mpq_class(gamma).get_d())
            q_lo = q_mid;
        else
            q_hi = q_mid;
    }
    // also try the endpoints before giving up
    for (const mpq_class& q : {mpq_class(0), mpq_class(1)}) {
        mpq_class g = 1 / (mpq_class(static_cast<long>(m)) + q);
        g.canonicalize();
        const Interval achieved = repr::phi_d(g, d, prec).add_si(1);
        if (achieved.lo().cmp(lo_target) >= 0 && achieved.hi().cmp(hi_target) <= 0) {
            out.q = q;
            out.achieved = achieved;
            return out;
        }
    }
    fail(ErrorCode::Internal, "density scan bisection failed to converge");
}

} // namespace codimlab::asymptotics

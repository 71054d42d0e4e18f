// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "codimlab/asymptotics.hpp"
#include "codimlab/codim.hpp"
#include "codimlab/error.hpp"
#include "codimlab/util.hpp"

using namespace codimlab;
using algebra::AlgebraModel;
using algebra::AlgebraParams;
using algebra::Elem;
using multilinear::BasisMode;
using repr::Partition;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int id, std::string title)
        : id_(id), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            all_ok_ = false;
            details_ += (details_.empty() ? "" : "; ") + detail;
        }
    }

    ~Criterion() {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", all_ok_ ? "PASS" : "FAIL", id_,
                    title_.c_str(), static_cast<double>(elapsed) / 1000.0,
                    details_.empty() ? "" : " -- ", details_.c_str());
        std::fflush(stdout);
        if (!all_ok_) ++failures;
    }

private:
    int id_;
    std::string title_;
    std::string details_;
    bool all_ok_ = true;
    std::chrono::steady_clock::time_point start_;
};

codim::CodimOptions options() {
    codim::CodimOptions opt;
    opt.threads = hardware_threads_default();
    return opt;
}

AlgebraParams params_2_1_zero() {
    return AlgebraParams::of(2, 1, words::WordSpec::periodic("0"));
}

AlgebraModel windowed_for(const AlgebraParams& params, int degree) {
    return AlgebraModel::windowed(params,
                                  AlgebraModel::recommended_depth(params.word, degree));
}

words::WordSpec fibonacci_directive() {
    return words::WordSpec::sturmian(std::vector<long long>(16, 1));
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace

// 1. |monomial_basis(n, full)| = (1/n) C(2n-2, n-1) n! for n = 1..7, exact.
static void criterion_1() {
    Criterion c(1, "free-algebra dimension formula, n = 1..7");
    for (int n = 1; n <= 7; ++n) {
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        const mpz_class expect =
            binom(2 * static_cast<unsigned long>(n) - 2, static_cast<unsigned long>(n) - 1) *
            fact / n;
        const auto basis = multilinear::monomial_basis(n, BasisMode::Full);
        c.expect(mpz_class(static_cast<long>(basis.size())) == expect,
                 "count mismatch at n=" + std::to_string(n));
    }
}

// 2. Fibonacci directive: complexity(n) = n+1 for n = 1..12; balance constant 1.
static void criterion_2() {
    Criterion c(2, "Sturmian complexity n+1 and balance 1, n = 1..12");
    const auto fib = fibonacci_directive();
    for (std::size_t n = 1; n <= 12; ++n)
        c.expect(words::complexity(fib, n) == n + 1,
                 "complexity(" + std::to_string(n) + ") != n+1");
    c.expect(words::balance_constant(fib, 12) == 1, "balance constant != 1");
}

// 3. The degree-3 witness evaluates to +- z^1_{1,2} exactly, sign included.
static void criterion_3() {
    Criterion c(3, "witness f_1 evaluates to +z(1,1,2) exactly");
    const auto params = params_2_1_zero();
    const auto witness = multilinear::build_witness(params, 1);
    const auto model = windowed_for(params, witness.degree);
    const auto image = multilinear::evaluate_polynomial(witness.f, witness.phi, model);
    c.expect(image.size() == 1, "image is not a single basis element");
    if (image.size() == 1) {
        c.expect(image.begin()->first == Elem::z(1, 1, 2), "wrong basis element");
        const mpq_class& coeff = image.begin()->second;
        c.expect(coeff == 1 || coeff == -1, "coefficient is not a sign");
        c.expect(coeff == 1, "sign differs from the left-normed expansion (+1)");
    }
}

// 4. c_n(A(2,1,0...)) for n = 1..7: two-prime agreement, exact confirmation for
//    n <= 5, nondecreasing, root column increasing and below the upper bound,
//    target exactly 2.
static void criterion_4() {
    Criterion c(4, "codimension pipeline for A(2,1,0...), n = 1..7");
    const auto opt = options();
    const auto params = params_2_1_zero();
    const auto model = windowed_for(params, 7);
    const auto goal = asymptotics::target(params);
    c.expect(goal.value.is_point() && goal.value.lo().cmp(mpz_class(2)) == 0,
             "target is not exactly 2");

    long long prev = 0;
    double prev_root = 0.0;
    for (int n = 1; n <= 7; ++n) {
        const bool cochar = n <= opt.caps.cochar_left_normed;
        const auto r = cochar ? codim::cocharacter(model, n, opt)
                              : codim::codimension(model, n, codim::RankMode::Auto, opt);
        c.expect(r.mode == BasisMode::LeftNormed, "left-normed mode not selected");
        c.expect(r.cert.prime_ranks.size() == 2 &&
                     r.cert.prime_ranks[0] == r.cert.prime_ranks[1],
                 "prime ranks disagree at n=" + std::to_string(n));
        if (n <= 5)
            c.expect(r.cert.exact_confirmed, "no exact confirmation at n=" + std::to_string(n));
        c.expect(r.c_n >= prev, "c_n decreased at n=" + std::to_string(n));
        const double root = std::pow(static_cast<double>(r.c_n), 1.0 / n);
        c.expect(root >= prev_root - 1e-12, "root column decreased at n=" + std::to_string(n));
        mpz_class upper;
        if (r.multiplicities) {
            mpz_class max_d = 0;
            for (const auto& [lambda, m] : *r.multiplicities)
                if (m > 0) max_d = std::max(max_d, repr::hook_dimension(lambda));
            upper = mpz_class(static_cast<long>(*r.colength)) * max_d;
        } else {
            upper = static_cast<long>(r.dim_p_n);
        }
        c.expect(mpz_class(static_cast<long>(r.c_n)) <= upper,
                 "c_n exceeds the upper bound at n=" + std::to_string(n));
        prev = r.c_n;
        prev_root = root;
    }
}

// 5. Unital comparison for n = 1..5 plus the shape constraints on both sides.
static void criterion_5() {
    Criterion c(5, "unital comparison and shape bounds");
    const auto opt = options();
    const auto params = params_2_1_zero();
    const auto plain = windowed_for(params, 6);
    const auto unital = plain.adjoin_unit();
    for (int n = 1; n <= 5; ++n) {
        const auto ru = codim::codimension(unital, n, codim::RankMode::Auto, opt);
        const auto rp = codim::codimension(plain, n, codim::RankMode::Auto, opt);
        c.expect(ru.mode == BasisMode::Full, "unital rank not in full mode");
        c.expect(ru.c_n >= rp.c_n, "c_n(A#) < c_n(A) at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 5; ++n) {
        const auto ru = codim::cocharacter(unital, n, opt);
        c.expect(codim::verify_shape_bounds(ru, params.d, true),
                 "unital shape bound failed at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 6; ++n) {
        const auto rp = codim::cocharacter(plain, n, opt);
        c.expect(codim::verify_shape_bounds(rp, params.d, false),
                 "plain shape bound failed at n=" + std::to_string(n));
    }
}

// 6. Sum m_lambda d_lambda = c_n, c_n <= l_n max d_lambda, and the colength
//    bound, on every cocharacter report.
static void criterion_6() {
    Criterion c(6, "cocharacter consistency and colength bounds");
    const auto opt = options();
    const auto params = params_2_1_zero();
    const auto plain = windowed_for(params, 6);
    const auto unital = plain.adjoin_unit();
    for (int n = 1; n <= 6; ++n) {
        const auto r = codim::cocharacter(plain, n, opt);
        mpz_class sum = 0, max_d = 0;
        long long l = 0;
        for (const auto& [lambda, m] : *r.multiplicities) {
            const mpz_class d = repr::hook_dimension(lambda);
            sum += mpz_class(static_cast<long>(m)) * d;
            max_d = std::max(max_d, d);
            l += m;
        }
        c.expect(sum == mpz_class(static_cast<long>(r.c_n)),
                 "sum m_lambda d_lambda != c_n at n=" + std::to_string(n));
        c.expect(l == *r.colength, "colength mismatch at n=" + std::to_string(n));
        c.expect(mpz_class(static_cast<long>(r.c_n)) <=
                     mpz_class(static_cast<long>(l)) * max_d,
                 "c_n > l_n max d_lambda at n=" + std::to_string(n));
        c.expect(codim::verify_colength_bound(r, params, false),
                 "colength bound failed at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 5; ++n) {
        const auto r = codim::cocharacter(unital, n, opt);
        mpz_class sum = 0;
        for (const auto& [lambda, m] : *r.multiplicities)
            sum += mpz_class(static_cast<long>(m)) * repr::hook_dimension(lambda);
        c.expect(sum == mpz_class(static_cast<long>(r.c_n)),
                 "unital sum m_lambda d_lambda != c_n at n=" + std::to_string(n));
        c.expect(codim::verify_colength_bound(r, params, true),
                 "unital colength bound failed at n=" + std::to_string(n));
    }
}

// 7. Exhaustive Lemma-1 check over lambda |- 100 with height <= 3, d = 3,
//    with rigorous outward rounding at 128 bits.
static void criterion_7() {
    Criterion c(7, "dimension bounds for all shapes of 100 with height <= 3");
    std::size_t count = 0;
    for (const auto& lambda : repr::partitions_of(100, 3)) {
        const auto check = repr::check_L1(lambda, 3, 128);
        if (!(check.hypothesis_ok && check.lower_ok && check.upper_ok)) {
            c.expect(false, "bound failed for " + lambda.to_string());
            return;
        }
        ++count;
    }
    c.expect(count == 884, "unexpected shape count " + std::to_string(count));
}

// 8. 1000 random push-down moves never decrease Phi (rigorous certificates).
static void criterion_8() {
    Criterion c(8, "1000 random push-down moves never decrease Phi");
    Rng rng(2718281828ull);
    std::map<long long, std::vector<Partition>> cache;
    int performed = 0;
    while (performed < 1000) {
        const long long n = 2 + static_cast<long long>(rng.below(50));
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, repr::partitions_of(n)).first;
        const auto& shapes = it->second;
        const auto& shape = shapes[rng.below(shapes.size())];
        const int h = shape.height();
        const int from = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(h)));
        const int to =
            from + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(h - from + 1)));
        try {
            (void)repr::push_down(shape, from, to);  // throws if the certificate fails
            ++performed;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InvalidMove) {
                c.expect(false, "certificate failed for " + shape.to_string());
                return;
            }
        }
    }
}

// 9. Added-row maximum: closed form matches golden-section search to 1e-9.
static void criterion_9() {
    Criterion c(9, "added-row maximum closed form vs numeric search");
    for (double a : {1.0, 1.5, 2.0, std::exp(1.0), 3.5, 10.0}) {
        const auto r = repr::maximize_added_row(a);
        c.expect(std::abs(r.value - r.value_numeric) <= 1e-9,
                 "value mismatch at a=" + std::to_string(a));
        c.expect(std::abs(r.t_star - a / (a + 1.0)) <= 1e-15,
                 "t* mismatch at a=" + std::to_string(a));
    }
}

// 10. Exponent targets: (3,2,0) -> 3 and 4; (2,1,0) -> 2 and 3; the two
//     evaluation routes agree to 1e-20.
static void criterion_10() {
    Criterion c(10, "exponent targets exact, two routes agree to 1e-20");
    const words::Slope zero{mpq_class(0), mpq_class(0)};
    const auto t32 = asymptotics::target(3, 2, zero);
    c.expect(t32.value.is_point() && t32.value.lo().cmp(mpz_class(3)) == 0,
             "target(3,2,0) != 3");
    c.expect(t32.unital_value.lo().cmp(mpz_class(4)) == 0, "unital target(3,2,0) != 4");
    const auto t21 = asymptotics::target(2, 1, zero);
    c.expect(t21.value.is_point() && t21.value.lo().cmp(mpz_class(2)) == 0,
             "target(2,1,0) != 2");
    c.expect(t21.unital_value.lo().cmp(mpz_class(3)) == 0, "unital target(2,1,0) != 3");

    // evaluate the two routes separately on a grid including a generic slope
    const struct {
        int m, d;
        mpq_class alpha;
    } cases[] = {{2, 1, mpq_class(0)}, {3, 2, mpq_class(0)}, {2, 1, mpq_class(1)},
                 {3, 1, mpq_class(1, 2)}, {4, 2, mpq_class(1, 3)}};
    for (const auto& cs : cases) {
        const mpq_class ma = mpq_class(cs.m) + cs.alpha;
        mpq_class gamma = 1 / ma;
        gamma.canonicalize();
        const auto via_phi_d = repr::phi_d(gamma, cs.d);
        mpq_class theta = (ma - 1) / (mpq_class(cs.d) * ma);
        theta.canonicalize();
        std::vector<mpq_class> coords(static_cast<std::size_t>(cs.d), theta);
        coords.push_back(gamma);
        const auto closed = repr::phi(repr::PhiPoint::of(std::move(coords)));
        c.expect(std::abs(via_phi_d.mid_double() - closed.mid_double()) <= 1e-20,
                 "routes disagree at m=" + std::to_string(cs.m));
    }
}

// 11. Density scan hits gamma within 1e-4 with a realizable rational slope.
static void criterion_11() {
    Criterion c(11, "density scan for gamma in {2.25, 2.5, 2.75, 3.5}");
    const mpq_class eps(1, 10000);
    for (const char* text : {"2.25", "2.5", "2.75", "3.5"}) {
        const auto start = std::chrono::steady_clock::now();
        const mpq_class gamma = rational_from_decimal(text);
        const auto res = asymptotics::density_scan(gamma, eps);
        c.expect(res.achieved.lo().cmp(gamma - eps) >= 0 &&
                     res.achieved.hi().cmp(gamma + eps) <= 0,
                 std::string("missed gamma=") + text);
        // q must be realizable by a periodic word whose slope is exactly q
        words::WordSpec word = res.q == 0   ? words::WordSpec::periodic("0")
                               : res.q == 1 ? words::WordSpec::periodic("1")
                                            : words::WordSpec::mechanical(
                                                  res.q.get_num().get_si(),
                                                  res.q.get_den().get_si());
        const auto s = words::slope(word);
        c.expect(s.exact() && s.lo == res.q, std::string("slope not exact at gamma=") + text);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        c.expect(ms < 60000, std::string("scan too slow at gamma=") + text);
    }
}

// 12. PI-equivalence at computed degrees: windowed vs wrapped for the word 01.
static void criterion_12() {
    Criterion c(12, "windowed and wrapped models agree for n = 1..6 (word 01)");
    const auto opt = options();
    const auto params = AlgebraParams::of(2, 1, words::WordSpec::periodic("01"));
    const auto windowed = windowed_for(params, 6);
    const auto wrapped = AlgebraModel::periodic_wrap(params);
    for (int n = 1; n <= 6; ++n) {
        const auto a = codim::codimension(windowed, n, codim::RankMode::Auto, opt);
        const auto b = codim::codimension(wrapped, n, codim::RankMode::Auto, opt);
        c.expect(a.c_n == b.c_n, "mismatch at n=" + std::to_string(n));
    }
}

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}

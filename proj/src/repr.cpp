#include "codimlab/repr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "codimlab/error.hpp"

namespace codimlab::repr {

Partition::Partition(std::vector<long long> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] > 0, ErrorCode::InvalidParams, "partition parts must be positive");
        if (i > 0)
            require(parts[i - 1] >= parts[i], ErrorCode::InvalidParams,
                    "partition parts must be non-increasing");
    }
}

long long Partition::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0ll);
}

long long Partition::part(int row) const {
    if (row < 1 || row > height()) return 0;
    return parts[static_cast<std::size_t>(row - 1)];
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::vector<long long> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stoll(item));
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(long long n, int max_height) {
    require(n >= 0, ErrorCode::InvalidParams, "partition target must be >= 0");
    std::vector<Partition> out;
    std::vector<long long> cur;
    // decreasing lexicographic order
    auto rec = [&](auto&& self, long long rem, long long max_part) -> void {
        if (rem == 0) {
            out.emplace_back();
            out.back().parts = cur;
            return;
        }
        if (max_height > 0 && static_cast<int>(cur.size()) == max_height) return;
        for (long long p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

mpz_class hook_dimension(const Partition& shape) {
    const long long n = shape.n();
    if (n == 0) return 1;
    const auto& parts = shape.parts;
    const int h = shape.height();
    // column heights (conjugate partition)
    std::vector<long long> col_height(static_cast<std::size_t>(parts[0]), 0);
    for (int r = 0; r < h; ++r)
        for (long long c = 0; c < parts[static_cast<std::size_t>(r)]; ++c)
            col_height[static_cast<std::size_t>(c)] = r + 1;

    mpz_class numerator;
    mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class hooks = 1;
    for (int r = 0; r < h; ++r) {
        for (long long c = 0; c < parts[static_cast<std::size_t>(r)]; ++c) {
            const long hook = static_cast<long>((parts[static_cast<std::size_t>(r)] - c) +
                                                (col_height[static_cast<std::size_t>(c)] - r) - 1);
            hooks *= hook;
        }
    }
    mpz_class result = numerator / hooks;
    if (result * hooks != numerator)
        fail(ErrorCode::Internal, "hook length product does not divide n!");
    return result;
}

namespace {

// Murnaghan-Nakayama via beta numbers: removing a border strip of size r from
// lambda is subtracting r from one beta number b_i = lambda_i + (L - i) so the
// results stay distinct and nonnegative; the strip height is the number of
// beta numbers jumped over.
long long mn_character(std::vector<long long> lambda, std::vector<long long> rho,
                       std::map<std::pair<std::vector<long long>, std::vector<long long>>,
                                long long>& memo) {
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    if (lambda.empty()) return rho.empty() ? 1 : 0;
    if (rho.empty()) return 0;
    auto key = std::make_pair(lambda, rho);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const long long strip = rho.front();
    std::vector<long long> rho_rest(rho.begin() + 1, rho.end());
    const std::size_t len = lambda.size();
    std::vector<long long> beta(len);
    for (std::size_t i = 0; i < len; ++i)
        beta[i] = lambda[i] + static_cast<long long>(len - 1 - i);  // strictly decreasing

    long long total = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const long long target = beta[i] - strip;
        if (target < 0) continue;
        bool clash = false;
        int jumped = 0;
        for (std::size_t j = 0; j < len; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { clash = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++jumped;
        }
        if (clash) continue;
        std::vector<long long> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<long long> next(len);
        for (std::size_t j = 0; j < len; ++j)
            next[j] = nb[j] - static_cast<long long>(len - 1 - j);
        const long long sign = (jumped % 2 == 0) ? 1 : -1;
        total += sign * mn_character(next, rho_rest, memo);
    }
    memo[key] = total;
    return total;
}

} // namespace

long long character_value(const Partition& lambda, const Partition& cycle_type) {
    require(lambda.n() == cycle_type.n(), ErrorCode::DegreeMismatch,
            "character argument sizes differ");
    static thread_local std::map<std::pair<std::vector<long long>, std::vector<long long>>,
                                 long long>
        memo;
    return mn_character(lambda.parts, cycle_type.parts, memo);
}

mpz_class conjugacy_class_size(const Partition& cycle_type) {
    // n! / prod(k^{a_k} a_k!)
    const long long n = cycle_type.n();
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
    std::map<long long, long long> mult;
    for (long long part : cycle_type.parts) mult[part]++;
    mpz_class den = 1;
    for (auto [k, a] : mult) {
        mpz_class kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(a));
        mpz_class af;
        mpz_fac_ui(af.get_mpz_t(), static_cast<unsigned long>(a));
        den *= kp * af;
    }
    return num / den;
}

Tableau Tableau::row_major(const Partition& shape) {
    Tableau t;
    int next = 1;
    for (long long len : shape.parts) {
        std::vector<int> row;
        for (long long c = 0; c < len; ++c) row.push_back(next++);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Partition Tableau::shape() const {
    std::vector<long long> parts;
    for (const auto& row : rows) parts.push_back(static_cast<long long>(row.size()));
    return Partition(std::move(parts));
}

int Tableau::size() const {
    int n = 0;
    for (const auto& row : rows) n += static_cast<int>(row.size());
    return n;
}

PhiPoint PhiPoint::of(std::vector<mpq_class> coords) {
    mpq_class sum = 0;
    for (auto& c : coords) {
        c.canonicalize();
        require(c >= 0 && c <= 1, ErrorCode::InvalidParams,
                "phi coordinates must lie in [0,1]");
        sum += c;
    }
    require(sum == 1, ErrorCode::InvalidParams, "phi coordinates must sum to 1");
    return PhiPoint{std::move(coords)};
}

namespace {

// Exact value when all nonzero coordinates equal 1/s: Phi == s.
std::optional<long> symmetric_point_value(const std::vector<mpq_class>& coords) {
    long nonzero = 0;
    for (const auto& c : coords)
        if (c != 0) ++nonzero;
    if (nonzero == 0) return std::nullopt;
    const mpq_class expect(1, nonzero);
    for (const auto& c : coords)
        if (c != 0 && c != expect) return std::nullopt;
    return nonzero;
}

} // namespace

Interval phi(const PhiPoint& point, mpfr_prec_t prec) {
    if (auto sym = symmetric_point_value(point.coords))
        return Interval::point_si(*sym, prec);
    // Phi = exp(-sum x ln x) over the nonzero coordinates (0^0 = 1).
    Interval s = Interval::point_si(0, prec);
    for (const auto& c : point.coords) {
        if (c == 0) continue;
        Interval x = Interval::of_rational(c, prec);
        s = s + x * x.log();
    }
    return (-s).exp();
}

Interval phi_interval(const std::vector<Interval>& coords, mpfr_prec_t prec) {
    Interval s = Interval::point_si(0, prec);
    for (const auto& x : coords) {
        if (mpfr_zero_p(x.lo().get()) && mpfr_zero_p(x.hi().get())) continue;
        require(mpfr_sgn(x.lo().get()) > 0, ErrorCode::Internal,
                "phi_interval coordinates must be positive or exactly zero");
        s = s + x * x.log();
    }
    return (-s).exp();
}

Interval phi_of_partition(const Partition& shape, int d, mpfr_prec_t prec) {
    require(d >= shape.height(), ErrorCode::InvalidParams,
            "phi_of_partition needs d >= height (zero padding)");
    const long n = static_cast<long>(shape.n());
    std::vector<mpq_class> coords;
    for (int row = 1; row <= d; ++row) {
        mpq_class c(static_cast<long>(shape.part(row)), n);
        c.canonicalize();
        coords.push_back(c);
    }
    return phi(PhiPoint::of(std::move(coords)), prec);
}

Interval phi_d(const mpq_class& gamma, int d, mpfr_prec_t prec) {
    require(d >= 1, ErrorCode::InvalidParams, "phi_d needs d >= 1");
    require(gamma >= 0 && gamma <= 1, ErrorCode::InvalidParams, "phi_d needs gamma in [0,1]");
    mpq_class theta = (mpq_class(1) - gamma) / d;
    theta.canonicalize();
    std::vector<mpq_class> coords(static_cast<std::size_t>(d), theta);
    coords.push_back(gamma);
    return phi(PhiPoint::of(std::move(coords)), prec);
}

Interval phi_d(const mpq_class& gamma_lo, const mpq_class& gamma_hi, int d, mpfr_prec_t prec) {
    require(gamma_lo <= gamma_hi, ErrorCode::InvalidParams, "gamma bounds out of order");
    if (gamma_lo == gamma_hi) return phi_d(gamma_lo, d, prec);
    // Enclosure via interval coordinates (no monotonicity assumption).
    Interval gamma = Interval::of_rational_bounds(gamma_lo, gamma_hi, prec);
    Interval theta = (Interval::point_si(1, prec) - gamma) / Interval::point_si(d, prec);
    std::vector<Interval> coords(static_cast<std::size_t>(d), theta);
    coords.push_back(gamma);
    return phi_interval(coords, prec);
}

L1Check check_L1(const Partition& shape, int d, mpfr_prec_t prec) {
    require(d >= shape.height(), ErrorCode::InvalidParams, "check_L1 needs h(lambda) <= d");
    const long long n = shape.n();
    L1Check out;
    out.hypothesis_ok = (n >= 100);

    const mpz_class d_lambda = hook_dimension(shape);
    const Interval phi_n = phi_of_partition(shape, d, prec).pow_ui(static_cast<unsigned long>(n));

    mpz_class n_pow;  // n^{d^2 + d}
    mpz_ui_pow_ui(n_pow.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(d) * d + d);

    // lower: Phi^n <= d_lambda * n^{d^2+d}
    const mpz_class lower_rhs = d_lambda * n_pow;
    out.lower_ok = phi_n.certainly_le(lower_rhs);
    // upper: d_lambda <= n * Phi^n
    Interval n_phi_n = phi_n * Interval::point_si(static_cast<long>(n), prec);
    out.upper_ok = n_phi_n.certainly_ge(d_lambda);

    Interval dl = Interval::of_rational(mpq_class(d_lambda), prec);
    Interval np = Interval::of_rational(mpq_class(n_pow), prec);
    out.lower_margin = dl * np / phi_n;
    out.upper_margin = n_phi_n / dl;
    return out;
}

Partition push_down(const Partition& shape, int from_row, int to_row) {
    const int h = shape.height();
    require(from_row >= 1 && from_row <= h, ErrorCode::InvalidMove, "source row out of range");
    require(to_row > from_row && to_row <= h + 1, ErrorCode::InvalidMove,
            "target row must lie strictly below the source row");
    std::vector<long long> parts = shape.parts;
    parts[static_cast<std::size_t>(from_row - 1)] -= 1;
    if (to_row == h + 1)
        parts.push_back(1);
    else
        parts[static_cast<std::size_t>(to_row - 1)] += 1;
    bool valid = true;
    for (std::size_t i = 0; valid && i < parts.size(); ++i) {
        if (parts[i] <= 0) valid = false;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) valid = false;
    }
    require(valid, ErrorCode::InvalidMove, "push-down does not yield a partition");
    Partition result(std::move(parts));

    // Certify Phi does not decrease (it strictly increases for every valid
    // move); widen precision until the comparison is decided.
    const int d = std::max(shape.height(), result.height());
    for (mpfr_prec_t prec = kDefaultPrec; prec <= 4096; prec *= 2) {
        Interval before = phi_of_partition(shape, d, prec);
        Interval after = phi_of_partition(result, d, prec);
        if (after.certainly_ge(before)) return result;
        if (after.certainly_lt(before)) break;
    }
    fail(ErrorCode::Internal, "push-down failed the Phi monotonicity certificate");
}

AddedRowMax maximize_added_row(double a) {
    require(a > 0, ErrorCode::InvalidParams, "maximize_added_row needs a > 0");
    AddedRowMax out;
    out.t_star = a / (a + 1.0);
    out.value = a + 1.0;

    // g(t) = a^t * t^{-t} * (1-t)^{-(1-t)}; endpoints give g(0) = 1, g(1) = a.
    auto g = [a](double t) {
        if (t <= 0.0) return 1.0;
        if (t >= 1.0) return a;
        return std::exp(t * std::log(a) - t * std::log(t) - (1.0 - t) * std::log(1.0 - t));
    };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = 1.0;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    while (hi - lo > 1e-12) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + inv_phi * (hi - lo); f2 = g(x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - inv_phi * (hi - lo); f1 = g(x1);
        }
    }
    out.t_numeric = 0.5 * (lo + hi);
    out.value_numeric = g(out.t_numeric);
    return out;
}

std::vector<long long> optimal_added_row_length(long long n, const mpq_class& beta) {
    require(beta > 0, ErrorCode::InvalidParams, "beta must be positive");
    mpq_class ratio = mpq_class(static_cast<long>(n)) / beta;
    ratio.canonicalize();
    mpz_class hi_z, lo_z;
    mpz_fdiv_q(hi_z.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
    mpq_class low = ratio - 1;
    mpz_cdiv_q(lo_z.get_mpz_t(), low.get_num().get_mpz_t(), low.get_den().get_mpz_t());
    long long lo = lo_z.get_si();
    long long hi = hi_z.get_si();
    if (lo < 0) lo = 0;
    std::vector<long long> out;
    for (long long k = lo; k <= hi; ++k) out.push_back(k);
    return out;
}

} // namespace codimlab::repr

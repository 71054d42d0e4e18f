#pragma once

/*
 * Directed-rounding interval arithmetic over MPFR.
 *
 * Every operation rounds the lower endpoint toward -inf and the upper endpoint
 * toward +inf, so an Interval always encloses the exact real result. Checks
 * built on top of it (lemma verifiers, exponent targets) only report "true"
 * when the whole enclosure satisfies the inequality, which makes a reported
 * pass rigorous at the working precision.
 */

#include <mpfr.h>

#include <string>
#include <gmpxx.h>

namespace codimlab {

inline constexpr mpfr_prec_t kDefaultPrec = 128;

// Minimal RAII wrapper around mpfr_t.
class Real {
public:
    explicit Real(mpfr_prec_t prec = kDefaultPrec);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(value_); }

    static Real of_si(long v, mpfr_prec_t prec = kDefaultPrec);
    static Real of_rational(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd);

    int cmp(const Real& other) const { return mpfr_cmp(value_, other.value_); }
    int cmp(const mpz_class& z) const { return mpfr_cmp_z(value_, z.get_mpz_t()); }
    int cmp(const mpq_class& q) const { return mpfr_cmp_q(value_, q.get_mpq_t()); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    std::string to_string(int digits = 20) const;

private:
    mpfr_t value_;
};

class Interval {
public:
    explicit Interval(mpfr_prec_t prec = kDefaultPrec) : lo_(prec), hi_(prec) {}
    Interval(Real lo, Real hi);

    static Interval point_si(long v, mpfr_prec_t prec = kDefaultPrec);
    static Interval of_rational(const mpq_class& q, mpfr_prec_t prec = kDefaultPrec);
    static Interval of_rational_bounds(const mpq_class& lo, const mpq_class& hi,
                                       mpfr_prec_t prec = kDefaultPrec);
    static Interval hull(const Interval& a, const Interval& b);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    mpfr_prec_t prec() const { return lo_.prec(); }

    Interval operator+(const Interval& rhs) const;
    Interval operator-(const Interval& rhs) const;
    Interval operator*(const Interval& rhs) const;
    Interval operator/(const Interval& rhs) const;
    Interval operator-() const;
    Interval add_si(long v) const;

    Interval log() const;   // requires lo > 0
    Interval exp() const;
    Interval pow_ui(unsigned long e) const;  // requires lo >= 0

    bool certainly_le(const Interval& other) const { return hi_.cmp(other.lo_) <= 0; }
    bool certainly_lt(const Interval& other) const { return hi_.cmp(other.lo_) < 0; }
    bool certainly_ge(const Interval& other) const { return lo_.cmp(other.hi_) >= 0; }
    bool certainly_le(const mpz_class& z) const { return hi_.cmp(z) <= 0; }
    bool certainly_ge(const mpz_class& z) const { return lo_.cmp(z) >= 0; }
    bool contains(const mpq_class& q) const { return lo_.cmp(q) <= 0 && hi_.cmp(q) >= 0; }
    bool is_point() const { return lo_.cmp(hi_) == 0; }

    double mid_double() const { return 0.5 * (lo_.to_double() + hi_.to_double()); }
    double width_double() const;

    std::string to_string(int digits = 20) const;

private:
    Real lo_, hi_;
};

} // namespace codimlab

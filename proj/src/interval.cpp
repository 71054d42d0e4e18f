#include "codimlab/interval.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "codimlab/error.hpp"

namespace codimlab {

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::of_si(long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.value_, v, MPFR_RNDN);  // exact for |v| < 2^prec
    return r;
}

Real Real::of_rational(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_q(r.value_, q.get_mpq_t(), rnd);
    return r;
}

std::string Real::to_string(int digits) const {
    char buf[512];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, value_);
    return buf;
}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.cmp(hi_) > 0) fail(ErrorCode::Internal, "interval endpoints out of order");
}

Interval Interval::point_si(long v, mpfr_prec_t prec) {
    return Interval(Real::of_si(v, prec), Real::of_si(v, prec));
}

Interval Interval::of_rational(const mpq_class& q, mpfr_prec_t prec) {
    return Interval(Real::of_rational(q, prec, MPFR_RNDD),
                    Real::of_rational(q, prec, MPFR_RNDU));
}

Interval Interval::of_rational_bounds(const mpq_class& lo, const mpq_class& hi,
                                      mpfr_prec_t prec) {
    return Interval(Real::of_rational(lo, prec, MPFR_RNDD),
                    Real::of_rational(hi, prec, MPFR_RNDU));
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(a.prec());
    mpfr_min(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& rhs) const {
    Interval r(prec());
    mpfr_add(r.lo_.get(), lo_.get(), rhs.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), rhs.hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& rhs) const {
    Interval r(prec());
    mpfr_sub(r.lo_.get(), lo_.get(), rhs.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), hi_.get(), rhs.lo_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& rhs) const {
    // All four endpoint products, each rounded both ways.
    const Real* xs[2] = {&lo_, &hi_};
    const Real* ys[2] = {&rhs.lo_, &rhs.hi_};
    Interval r(prec());
    Real tmp(prec());
    bool first = true;
    for (const Real* x : xs) {
        for (const Real* y : ys) {
            mpfr_mul(tmp.get(), x->get(), y->get(), MPFR_RNDD);
            if (first || mpfr_cmp(tmp.get(), r.lo_.get()) < 0) mpfr_set(r.lo_.get(), tmp.get(), MPFR_RNDD);
            mpfr_mul(tmp.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || mpfr_cmp(tmp.get(), r.hi_.get()) > 0) mpfr_set(r.hi_.get(), tmp.get(), MPFR_RNDU);
            first = false;
        }
    }
    return r;
}

Interval Interval::operator/(const Interval& rhs) const {
    if (mpfr_sgn(rhs.lo_.get()) <= 0 && mpfr_sgn(rhs.hi_.get()) >= 0)
        fail(ErrorCode::Internal, "interval division by an interval containing zero");
    const Real* xs[2] = {&lo_, &hi_};
    const Real* ys[2] = {&rhs.lo_, &rhs.hi_};
    Interval r(prec());
    Real tmp(prec());
    bool first = true;
    for (const Real* x : xs) {
        for (const Real* y : ys) {
            mpfr_div(tmp.get(), x->get(), y->get(), MPFR_RNDD);
            if (first || mpfr_cmp(tmp.get(), r.lo_.get()) < 0) mpfr_set(r.lo_.get(), tmp.get(), MPFR_RNDD);
            mpfr_div(tmp.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || mpfr_cmp(tmp.get(), r.hi_.get()) > 0) mpfr_set(r.hi_.get(), tmp.get(), MPFR_RNDU);
            first = false;
        }
    }
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec());
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::add_si(long v) const {
    Interval r(prec());
    mpfr_add_si(r.lo_.get(), lo_.get(), v, MPFR_RNDD);
    mpfr_add_si(r.hi_.get(), hi_.get(), v, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_.get()) <= 0)
        fail(ErrorCode::Internal, "interval log of a nonpositive endpoint");
    Interval r(prec());
    mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec());
    mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::pow_ui(unsigned long e) const {
    if (mpfr_sgn(lo_.get()) < 0)
        fail(ErrorCode::Internal, "interval pow_ui of a negative endpoint");
    Interval r(prec());
    mpfr_pow_ui(r.lo_.get(), lo_.get(), e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_.get(), hi_.get(), e, MPFR_RNDU);
    return r;
}

double Interval::width_double() const {
    Real w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w.to_double();
}

std::string Interval::to_string(int digits) const {
    const std::string lo = lo_.to_string(digits);
    if (is_point()) return lo;
    const std::string hi = hi_.to_string(digits);
    // enclosures that agree to the printed digits collapse to a single value
    if (lo == hi) return lo;
    return "[" + lo + "," + hi + "]";
}

} // namespace codimlab

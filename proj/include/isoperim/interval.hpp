#pragma once

#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace isoperim {

/// Closed interval [lo, hi] of MPFR reals with outward rounding: every
/// operation rounds the lower end down and the upper end up, so the true
/// value of an expression always stays inside. Used wherever an irrational
/// expression must be bracketed to an exact integer floor/ceiling.
class Interval {
 public:
    explicit Interval(mpfr_prec_t prec) : prec_(prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o) : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval(Interval&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    Interval& operator=(Interval o) {
        std::swap(prec_, o.prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Interval of_int(std::int64_t v, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }
    static Interval of_ratio(std::int64_t num, std::int64_t den, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_si(r.lo_, num, MPFR_RNDD);
        mpfr_div_si(r.lo_, r.lo_, den, MPFR_RNDD);
        mpfr_set_si(r.hi_, num, MPFR_RNDU);
        mpfr_div_si(r.hi_, r.hi_, den, MPFR_RNDU);
        return r;
    }

    mpfr_prec_t prec() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r(a.prec_);
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r(a.prec_);
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);

    /// sqrt; requires lo >= 0 (throws otherwise — callers check domains).
    Interval sqrt() const {
        if (mpfr_sgn(lo_) < 0) throw std::domain_error("Interval::sqrt of negative interval");
        Interval r(prec_);
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    bool certainly_le(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }
    bool certainly_lt(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
    bool certainly_ge(const Interval& o) const { return mpfr_cmp(lo_, o.hi_) >= 0; }
    bool certainly_nonneg() const { return mpfr_sgn(lo_) >= 0; }
    bool certainly_neg() const { return mpfr_sgn(hi_) < 0; }

    /// floor of the enclosed value, when both ends agree on it.
    std::optional<std::int64_t> floor_unambiguous() const {
        mpfr_t f1, f2;
        mpfr_init2(f1, prec_);
        mpfr_init2(f2, prec_);
        mpfr_floor(f1, lo_);
        mpfr_floor(f2, hi_);
        std::optional<std::int64_t> out;
        if (mpfr_cmp(f1, f2) == 0 && mpfr_fits_slong_p(f1, MPFR_RNDD))
            out = mpfr_get_si(f1, MPFR_RNDD);
        mpfr_clear(f1);
        mpfr_clear(f2);
        return out;
    }
    std::optional<std::int64_t> ceil_unambiguous() const {
        mpfr_t f1, f2;
        mpfr_init2(f1, prec_);
        mpfr_init2(f2, prec_);
        mpfr_ceil(f1, lo_);
        mpfr_ceil(f2, hi_);
        std::optional<std::int64_t> out;
        if (mpfr_cmp(f1, f2) == 0 && mpfr_fits_slong_p(f1, MPFR_RNDD))
            out = mpfr_get_si(f1, MPFR_RNDD);
        mpfr_clear(f1);
        mpfr_clear(f2);
        return out;
    }

    double midpoint_double() const {
        mpfr_t m;
        mpfr_init2(m, prec_);
        mpfr_add(m, lo_, hi_, MPFR_RNDN);
        mpfr_div_ui(m, m, 2, MPFR_RNDN);
        double d = mpfr_get_d(m, MPFR_RNDN);
        mpfr_clear(m);
        return d;
    }

    /// Deterministic fixed-point rendering of the midpoint.
    std::string midpoint_str(int digits) const;

 private:
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace isoperim

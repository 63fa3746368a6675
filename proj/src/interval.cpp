#include "isoperim/interval.hpp"

#include <array>
#include <vector>

namespace isoperim {

Interval operator*(const Interval& a, const Interval& b) {
    // general sign handling: min/max over the four end products
    Interval r(a.prec());
    mpfr_t p;
    mpfr_init2(p, a.prec());
    const std::array<std::pair<const mpfr_t*, const mpfr_t*>, 4> pairs = {
        std::pair<const mpfr_t*, const mpfr_t*>{&a.lo_, &b.lo_},
        {&a.lo_, &b.hi_},
        {&a.hi_, &b.lo_},
        {&a.hi_, &b.hi_}};
    bool first = true;
    for (auto [x, y] : pairs) {
        mpfr_mul(p, *x, *y, MPFR_RNDD);
        if (first || mpfr_cmp(p, r.lo_) < 0) mpfr_set(r.lo_, p, MPFR_RNDD);
        mpfr_mul(p, *x, *y, MPFR_RNDU);
        if (first || mpfr_cmp(p, r.hi_) > 0) mpfr_set(r.hi_, p, MPFR_RNDU);
        first = false;
    }
    mpfr_clear(p);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
        throw std::domain_error("Interval division by an interval containing zero");
    Interval r(a.prec());
    mpfr_t p;
    mpfr_init2(p, a.prec());
    const std::array<std::pair<const mpfr_t*, const mpfr_t*>, 4> pairs = {
        std::pair<const mpfr_t*, const mpfr_t*>{&a.lo_, &b.lo_},
        {&a.lo_, &b.hi_},
        {&a.hi_, &b.lo_},
        {&a.hi_, &b.hi_}};
    bool first = true;
    for (auto [x, y] : pairs) {
        mpfr_div(p, *x, *y, MPFR_RNDD);
        if (first || mpfr_cmp(p, r.lo_) < 0) mpfr_set(r.lo_, p, MPFR_RNDD);
        mpfr_div(p, *x, *y, MPFR_RNDU);
        if (first || mpfr_cmp(p, r.hi_) > 0) mpfr_set(r.hi_, p, MPFR_RNDU);
        first = false;
    }
    mpfr_clear(p);
    return r;
}

std::string Interval::midpoint_str(int digits) const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRf", digits);
    char buf[256];
    mpfr_snprintf(buf, sizeof(buf), fmt, m);
    mpfr_clear(m);
    return std::string(buf);
}

}  // namespace isoperim

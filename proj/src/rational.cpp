#include "isoperim/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace isoperim {

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // 53 mantissa bits make m * 2^53 integral.
    long long num = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    while (num != 0 && (num % 2) == 0) { num /= 2; ++exp; }
    if (exp >= 0) {
        if (exp > 62) throw std::invalid_argument("rational_from_double: value too large");
        __int128 v = static_cast<__int128>(num) << exp;
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min())
            throw std::invalid_argument("rational_from_double: value too large");
        return Rational(static_cast<std::int64_t>(v));
    }
    if (-exp > 62) throw std::invalid_argument("rational_from_double: denominator too large");
    return Rational(num, static_cast<std::int64_t>(1) << (-exp));
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(s));
    // decimal literal, exact
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::int64_t den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) {
        if (den > std::numeric_limits<std::int64_t>::max() / 10)
            throw std::invalid_argument("rational_from_string: too many decimals");
        den *= 10;
    }
    return Rational(std::stoll(digits), den);
}

}  // namespace isoperim

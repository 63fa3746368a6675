#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace isoperim {

/// Exact rational with int64 numerator/denominator, always normalized
/// (den > 0, gcd(|num|, den) == 1). Arithmetic goes through __int128 so
/// desk-scale values never overflow silently.
struct Rational {
    std::int64_t num{0};
    std::int64_t den{1};

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }
    bool positive() const { return num > 0; }

    /// floor(num/den) for any sign.
    std::int64_t floor() const {
        std::int64_t q = num / den, r = num % den;
        return (r < 0) ? q - 1 : q;
    }
    std::int64_t ceil() const {
        std::int64_t q = num / den, r = num % den;
        return (r > 0) ? q + 1 : q;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    static Rational reduce128(__int128 n, __int128 d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lim = 0x7fffffffffffffffLL;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Rational: value out of 64-bit range");
        return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return reduce128(static_cast<__int128>(a.num) * b.den +
                             static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return reduce128(static_cast<__int128>(a.num) * b.den -
                             static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return reduce128(static_cast<__int128>(a.num) * b.num,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::invalid_argument("Rational: division by zero");
        return reduce128(static_cast<__int128>(a.num) * b.den,
                         static_cast<__int128>(a.den) * b.num);
    }

    std::string str() const {
        return is_integer() ? std::to_string(num)
                            : std::to_string(num) + "/" + std::to_string(den);
    }
};

/// Exact conversion of a finite double to a rational (every finite double is
/// dyadic). Throws if the exact value does not fit in int64 num/den.
Rational rational_from_double(double x);

/// Parses "7", "-3/2" or a decimal literal like "1.5" exactly.
Rational rational_from_string(const std::string& s);

/// Norm exponent: a rational p >= 1 or infinity.
struct NormExponent {
    bool infinite{true};
    Rational p{1};

    static NormExponent inf() { return NormExponent{}; }
    static NormExponent finite(Rational q) {
        if (q < Rational(1)) throw std::invalid_argument("norm exponent must be >= 1");
        return NormExponent{false, q};
    }
    std::string str() const { return infinite ? "inf" : p.str(); }
};

}  // namespace isoperim

#pragma once

// Plain int64 fractions, kept apart from the Boost-backed Rational so the two
// can be compared against each other.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace oracle {

struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Frac() = default;
    Frac(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0)
            throw std::domain_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
    friend Frac operator/(Frac a, Frac b) { return Frac(a.num * b.den, a.den * b.num); }
    friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Frac a, Frac b) { return !(b < a); }

    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

inline Frac max(Frac a, Frac b) { return a < b ? b : a; }
inline Frac abs(Frac a) { return a.num < 0 ? Frac(-a.num, a.den) : a; }

inline std::int64_t ceil(Frac a) {
    if (a.num >= 0)
        return (a.num + a.den - 1) / a.den;
    return -((-a.num) / a.den);
}

}  // namespace oracle

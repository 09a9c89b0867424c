#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "gader/error.hpp"

namespace gader {

/// Exact rational number over checked 64-bit integers.
///
/// Always stored normalized: gcd(num, den) == 1, den > 0. Arithmetic runs
/// through 128-bit intermediates and throws OverflowError if a normalized
/// result no longer fits; results are never silently wrong.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit on purpose
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "3", "-7/2". The inverse of parse().
    std::string str() const;

    /// Parses "3", "-7/2", "+4/6" (normalizes). Throws ParseError.
    static Rational parse(const std::string& text);

private:
    std::int64_t num_;
    std::int64_t den_;

    static Rational make(__int128 n, __int128 d);
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace gader

#include "gader/rational.hpp"

#include <cstdlib>
#include <limits>
#include <ostream>

namespace gader {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

} // namespace

Rational Rational::make(__int128 n, __int128 d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) d = 1;
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational q;
    q.num_ = narrow(n);
    q.den_ = narrow(d);
    return q;
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    *this = make(n, d);
}

Rational Rational::operator-() const {
    Rational q;
    q.num_ = narrow(-static_cast<__int128>(num_));
    q.den_ = den_;
    return q;
}

Rational& Rational::operator+=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.den_ +
                 static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    *this = make(n, d);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.den_ -
                 static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    *this = make(n, d);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    *this = make(static_cast<__int128>(num_) * o.num_,
                 static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error("rational division by zero");
    *this = make(static_cast<__int128>(num_) * o.den_,
                 static_cast<__int128>(den_) * o.num_);
    return *this;
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

Rational Rational::parse(const std::string& text) {
    const char* p = text.c_str();
    char* end = nullptr;
    errno = 0;
    long long n = std::strtoll(p, &end, 10);
    if (end == p || errno != 0)
        throw ParseError("expected rational number in '" + text + "'", 1, 1);
    long long d = 1;
    if (*end == '/') {
        const char* q = end + 1;
        errno = 0;
        d = std::strtoll(q, &end, 10);
        if (end == q || errno != 0)
            throw ParseError("expected denominator in '" + text + "'", 1,
                             static_cast<int>(q - p) + 1);
    }
    if (*end != '\0')
        throw ParseError("trailing characters in rational '" + text + "'", 1,
                         static_cast<int>(end - p) + 1);
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

} // namespace gader

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homdef {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational scalar, always kept in canonical form: reduced fraction
/// with positive denominator. This is the unique scalar type of the core;
/// there is no floating point anywhere.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        // Divide rather than construct componentwise: division canonicalizes
        // (reduced form, positive denominator).
        v_ = BigRat(std::move(num));
        v_ /= BigRat(std::move(den));
    }
    explicit Rational(BigInt n) : v_(std::move(n)) {}
    explicit Rational(BigRat v) : v_(std::move(v)) {}

    /// Parses the text form `-?digits(/digits)?`. Rejects anything else,
    /// including "+1", whitespace, and a zero denominator.
    static Rational parse(std::string_view s) {
        auto fail = [&] {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
        };
        if (s.empty())
            fail();
        std::size_t pos = 0;
        bool neg = false;
        if (s[pos] == '-') {
            neg = true;
            ++pos;
        }
        std::size_t num_begin = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9')
            ++pos;
        if (pos == num_begin)
            fail();
        BigInt num(std::string(s.substr(num_begin, pos - num_begin)));
        BigInt den = 1;
        if (pos < s.size()) {
            if (s[pos] != '/')
                fail();
            ++pos;
            std::size_t den_begin = pos;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9')
                ++pos;
            if (pos == den_begin || pos != s.size())
                fail();
            den = BigInt(std::string(s.substr(den_begin, pos - den_begin)));
            if (den == 0)
                throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
        }
        if (neg)
            num = -num;
        return Rational(std::move(num), std::move(den));
    }

    /// Canonical text form; the denominator is omitted when it is 1.
    std::string str() const {
        std::string out = numerator().str();
        if (denominator() != 1) {
            out += '/';
            out += denominator().str();
        }
        return out;
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational inverse() const {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        return Rational(denominator(), numerator());
    }

    /// q^e for integer e of either sign (e < 0 requires q != 0).
    Rational pow(long long e) const {
        if (e < 0)
            return inverse().pow(-e);
        Rational base = *this, acc(1);
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(BigRat(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    BigRat v_;
};

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

/// Exact binomial coefficient C(n, k); zero for k < 0 or k > n (n >= 0).
inline Rational binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n)
        return Rational(0);
    BigInt acc = 1;
    for (long long i = 0; i < k; ++i) {
        acc *= BigInt(n - i);
        acc /= BigInt(i + 1);
    }
    return Rational(std::move(acc));
}

} // namespace homdef

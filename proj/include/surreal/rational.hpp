#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "surreal/errors.hpp"

namespace surreal {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number in canonical reduced form: denominator > 0,
// gcd(|numerator|, denominator) = 1. Equality is structural.
class Rational {
public:
    Rational() = default;

    Rational(long long n) : v_(n) {}  // NOLINT: integers embed implicitly

    Rational(const BigInt& n) : v_(n) {}  // NOLINT

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        if (den < 0)
            v_ = boost::multiprecision::cpp_rational(-num, -den);
        else
            v_ = boost::multiprecision::cpp_rational(num, den);
    }

    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // Text format: `p` or `p/q` with optional leading `-`, q > 0.
    // The input need not be reduced; the result always is.
    static Rational parse(std::string_view text) {
        std::size_t pos = 0;
        Rational r = parse_prefix(text, pos);
        if (pos != text.size()) throw parse_error("trailing characters in rational", pos);
        return r;
    }

    // Parses a rational starting at `pos`, advancing it; used by the lexer.
    static Rational parse_prefix(std::string_view text, std::size_t& pos);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return denominator() == 1; }

    int sign() const { return v_ < 0 ? -1 : (v_.is_zero() ? 0 : 1); }

    Rational abs() const { return is_negative() ? Rational(-v_) : *this; }

    Rational reciprocal() const {
        if (is_zero()) throw domain_error("reciprocal of zero");
        return Rational(boost::multiprecision::cpp_rational(1) / v_);
    }

    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw domain_error("rational division by zero");
        return Rational(a.v_ / b.v_);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ == b.v_) return std::strong_ordering::equal;
        return std::strong_ordering::greater;
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::parse_prefix(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    auto read_digits = [&](const char* what) {
        std::size_t first = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == first) throw parse_error(std::string("expected ") + what, pos);
        return BigInt(std::string(text.substr(first, pos - first)));
    };
    BigInt num = read_digits("integer");
    if (negative) num = -num;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t den_pos = pos;
        BigInt den = read_digits("denominator");
        if (den == 0) throw parse_error("zero denominator", den_pos);
        return Rational(num, den);
    }
    (void)start;
    return Rational(num);
}

// Exact square root when one exists: returns r >= 0 with r*r == a,
// nullopt when a is not the square of a rational. Negative input is an error.
inline std::optional<Rational> rat_sqrt_exact(const Rational& a) {
    if (a.is_negative()) throw domain_error("square root of negative rational");
    if (a.is_zero()) return Rational(0);
    const BigInt num = a.numerator();
    const BigInt den = a.denominator();
    BigInt sn = boost::multiprecision::sqrt(num);
    BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

// Integer power; exp may be negative for nonzero base.
inline Rational rat_pow(const Rational& base, long long exp) {
    if (exp < 0) return rat_pow(base.reciprocal(), -exp);
    Rational acc(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

}  // namespace surreal

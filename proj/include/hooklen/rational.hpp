#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hooklen {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    explicit BigRational(const BigInt& value) : value_(value) {}
    BigRational(const BigInt& numerator, const BigInt& denominator);

    /// Parses "p" or "p/q" in base 10.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    BigRational& operator+=(const BigRational& rhs) { value_ += rhs.value_; return *this; }
    BigRational& operator-=(const BigRational& rhs) { value_ -= rhs.value_; return *this; }
    BigRational& operator*=(const BigRational& rhs) { value_ *= rhs.value_; return *this; }
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const;

    /// `this` raised to an integer power; negative exponents invert (zero base throws).
    BigRational pow(long exponent) const;

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

} // namespace hooklen

#include "hooklen/rational.hpp"

#include <string>

#include "hooklen/error.hpp"

namespace hooklen {

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw ParameterError("BigRational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw ParameterError("BigRational: empty input");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw ParameterError("BigRational: cannot parse '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw ParameterError("BigRational: zero denominator in '" + s + "'");
    }
    q.canonicalize();
    BigRational r;
    r.value_ = q;
    return r;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) {
        throw ParameterError("BigRational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.value_ = -value_;
    return r;
}

BigRational BigRational::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) {
            throw ParameterError("BigRational: zero to a negative power");
        }
        return BigRational(1) / pow(-exponent);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return {num, den};
}

std::string BigRational::to_string() const {
    return value_.get_str(10);
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace hooklen

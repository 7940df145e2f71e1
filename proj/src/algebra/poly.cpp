#include "hooklen/poly.hpp"

#include <algorithm>
#include <utility>

#include "hooklen/error.hpp"

namespace hooklen {

Poly::Poly(const BigRational& constant) {
    if (!constant.is_zero()) {
        coeffs_.push_back(constant);
    }
}

Poly::Poly(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Poly::Poly(std::initializer_list<BigRational> coefficients) : coeffs_(coefficients) {
    trim();
}

Poly Poly::x() {
    return Poly{BigRational(0), BigRational(1)};
}

Poly Poly::linear(const BigRational& c0, const BigRational& c1) {
    return Poly{c0, c1};
}

BigRational Poly::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly& Poly::operator*=(const BigRational& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

void Poly::multiply_linear(const BigRational& c0, const BigRational& c1) {
    if (coeffs_.empty()) {
        return;
    }
    if (c1.is_zero()) {
        *this *= c0;
        return;
    }
    // Walk downwards so each step reads the untouched lower coefficient.
    coeffs_.push_back(coeffs_.back() * c1);
    for (std::size_t i = coeffs_.size() - 2; i > 0; --i) {
        coeffs_[i] *= c0;
        coeffs_[i] += coeffs_[i - 1] * c1;
    }
    coeffs_[0] *= c0;
    trim();
}

BigRational Poly::eval(const BigRational& point) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= point;
        acc += *it;
    }
    return acc;
}

namespace {

std::string monomial(std::size_t degree) {
    if (degree == 0) {
        return "";
    }
    if (degree == 1) {
        return "x";
    }
    return "x^" + std::to_string(degree);
}

} // namespace

std::string Poly::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigRational& c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        bool negative = c.sign() < 0;
        BigRational mag = negative ? -c : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono = monomial(k);
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += mono;
        } else if (mag.is_integer()) {
            out += mag.to_string() + mono;
        } else {
            out += "(" + mag.to_string() + ")" + mono;
        }
    }
    return out;
}

std::vector<std::string> Poly::coefficient_strings() const {
    if (coeffs_.empty()) {
        return {"0"};
    }
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(c.to_string());
    }
    return out;
}

Poly rhs_binomial_poly(int m, int n) {
    if (m < 0 || n < 0) {
        throw ParameterError("rhs_binomial_poly: need m >= 0 and n >= 0");
    }
    // binom(y, n) = y (y-1) ... (y-n+1) / n!  with y = (mn+1) x
    const long top = static_cast<long>(m) * n + 1;
    Poly p(BigRational(1));
    for (long j = 0; j < n; ++j) {
        p.multiply_linear(BigRational(-j), BigRational(top));
    }
    p *= BigRational(BigInt(1), factorial(static_cast<unsigned long>(n)) * top);
    return p;
}

Poly rhs_product_poly(ProductFamily family, int m, int s, int n) {
    if (n < 0) {
        throw ParameterError("rhs_product_poly: need n >= 0");
    }
    switch (family) {
    case ProductFamily::thm1_1_eq16:
        if (m < 2) {
            throw ParameterError("rhs_product_poly(thm1_1_eq16): need m >= 2");
        }
        break;
    case ProductFamily::thm1_2_eq51a:
        if (m < 1 || s < 0 || s > m) {
            throw ParameterError("rhs_product_poly(thm1_2_eq51a): need m >= 1 and 0 <= s <= m");
        }
        break;
    }
    if (n == 0) {
        return Poly(BigRational(1));
    }
    const long mn = static_cast<long>(m) * n;
    Poly p = Poly::linear(1, 1);
    for (long i = 1; i < n; ++i) {
        // factor = alpha (x+1) - beta i  =  (alpha - beta i) + alpha x
        long alpha = 0;
        long beta = 0;
        if (family == ProductFamily::thm1_1_eq16) {
            alpha = mn + 1 - i;
            beta = m - 1;
        } else {
            alpha = mn + i + 1;
            beta = m - s + 1;
        }
        p.multiply_linear(BigRational(alpha - beta * i), BigRational(alpha));
    }
    p *= BigRational(BigInt(1), factorial(static_cast<unsigned long>(n)));
    return p;
}

} // namespace hooklen

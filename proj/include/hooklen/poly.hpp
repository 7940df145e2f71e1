#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hooklen/rational.hpp"

namespace hooklen {

/// Dense univariate polynomial in x over the rationals.
///
/// Coefficient i multiplies x^i. Trailing zeros are always stripped, so the
/// zero polynomial has no stored coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(const BigRational& constant); // NOLINT(google-explicit-constructor)
    Poly(long constant) : Poly(BigRational(constant)) {} // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<BigRational> coefficients);
    Poly(std::initializer_list<BigRational> coefficients);

    static Poly x();
    /// c0 + c1 * x
    static Poly linear(const BigRational& c0, const BigRational& c1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    BigRational coefficient(std::size_t i) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const BigRational& scalar);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const BigRational& s) { return a *= s; }
    friend Poly operator*(const BigRational& s, Poly a) { return a *= s; }
    Poly operator-() const;

    /// In-place multiplication by (c0 + c1 x); the hot loop of every hook sum.
    void multiply_linear(const BigRational& c0, const BigRational& c1);

    /// Horner evaluation.
    BigRational eval(const BigRational& point) const;

    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Human readable, highest degree first: "(5/2)x^2 - (1/2)x".
    std::string to_string() const;
    /// Exact coefficients lowest degree first, e.g. {"0", "-1/2", "5/2"}; zero is {"0"}.
    std::vector<std::string> coefficient_strings() const;

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

/// (1/(mn+1)) * binom((mn+1)x, n), the generalized binomial closed form.
Poly rhs_binomial_poly(int m, int n);

enum class ProductFamily {
    thm1_1_eq16,  ///< ((x+1)/n!) prod_{i=1}^{n-1} ((mn+1-i)(x+1) - (m-1)i)
    thm1_2_eq51a, ///< ((x+1)/n!) prod_{i=1}^{n-1} ((mn+i+1)(x+1) - (m-s+1)i)
};

/// Product-of-linear-factors closed form. Throws ParameterError for m < 2
/// (thm1_1_eq16) or m < 1, s outside [0, m] (thm1_2_eq51a).
Poly rhs_product_poly(ProductFamily family, int m, int s, int n);

} // namespace hooklen

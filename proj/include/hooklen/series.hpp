#pragma once

#include <cstddef>
#include <vector>

#include "hooklen/poly.hpp"

namespace hooklen {

/// Power series in t truncated after t^order, with Poly coefficients.
class PolySeries {
public:
    /// Zero series of the given order.
    explicit PolySeries(std::size_t order);
    /// Missing trailing coefficients are zero; extra ones beyond `order` are dropped.
    PolySeries(std::size_t order, std::vector<Poly> coefficients);

    /// The constant series 1.
    static PolySeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Poly& operator[](std::size_t n) const { return coeffs_.at(n); }
    Poly& operator[](std::size_t n) { return coeffs_.at(n); }
    const std::vector<Poly>& coefficients() const { return coeffs_; }

    /// Same series cut (or zero-extended) to a new order.
    PolySeries truncated(std::size_t order) const;

    PolySeries& operator+=(const PolySeries& rhs);
    PolySeries& operator-=(const PolySeries& rhs);
    PolySeries& operator*=(const Poly& scalar);

    friend PolySeries operator+(PolySeries a, const PolySeries& b) { return a += b; }
    friend PolySeries operator-(PolySeries a, const PolySeries& b) { return a -= b; }
    friend PolySeries operator*(PolySeries a, const Poly& s) { return a *= s; }
    friend PolySeries operator*(const Poly& s, PolySeries a) { return a *= s; }
    friend bool operator==(const PolySeries& a, const PolySeries& b) = default;

    bool is_zero() const;

private:
    std::vector<Poly> coeffs_;
};

/// Truncated product; operands must share an order (ParameterError otherwise).
PolySeries mul(const PolySeries& a, const PolySeries& b);
/// a^k by repeated squaring, truncated to a.order().
PolySeries pow(const PolySeries& a, unsigned k);
/// d/dt; the result has order a.order() - 1 (order-0 input gives the order-0 zero series).
PolySeries derivative(const PolySeries& a);
/// Integral from 0; the result has order a.order() + 1 and constant term 0.
PolySeries integrate(const PolySeries& a);
/// Multiplication by t; order is preserved, the top coefficient falls off.
PolySeries shift(const PolySeries& a);

/// outer(t * inner(t)^s), truncated to the common order. `outer` must have
/// constant term 1 and both operands must share an order.
PolySeries series_compose_scaled(const PolySeries& outer, const PolySeries& inner, unsigned s);

} // namespace hooklen

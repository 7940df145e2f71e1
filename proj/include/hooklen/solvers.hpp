#pragma once

#include <cstddef>

#include "hooklen/poly.hpp"
#include "hooklen/series.hpp"

namespace hooklen {

/// Coefficients of the unique series F = 1 + sum_{n>=1} F_n t^n with
///
///     F' = x F^(b+1) + a t F^b F'
///
/// through t^order. `a` may itself be a polynomial in x. Each F_n is found by
/// matching [t^(n-1)] on both sides, which only involves F_0 .. F_(n-1), with
/// the powers F^k maintained incrementally.
PolySeries solve_power_ode(const Poly& a, unsigned b, std::size_t order);

/// Omega' = x Omega^(b+1) + a t Omega^b Omega'.
PolySeries solve_omega(int a, int b, std::size_t order);

/// (x/n!) prod_{i=1}^{n-1} (a i + b x (n-i) + x); n = 0 gives 1.
Poly closed_omega(int a, int b, int n);

/// Phi' = x Phi^(b+s+1) + (a + s x) t Phi^(b+s) Phi'.
PolySeries solve_phi(int a, int b, int s, std::size_t order);

/// (x/n!) prod_{i=1}^{n-1} (a i + b x (n-i) + (s n + 1) x); n = 0 gives 1.
Poly closed_phi(int a, int b, int s, int n);

} // namespace hooklen

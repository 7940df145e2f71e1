#include "hooklen/solvers.hpp"

#include <vector>

#include "hooklen/error.hpp"

namespace hooklen {

PolySeries solve_power_ode(const Poly& a, unsigned b, std::size_t order) {
    std::vector<Poly> f(order + 1);
    f[0] = Poly(1);
    // powers[k][j] = [t^j] F^k for k = 0 .. b+1, filled as F_j become known.
    std::vector<std::vector<Poly>> powers(b + 2, std::vector<Poly>(order + 1));
    auto extend_powers = [&](std::size_t j) {
        powers[0][j] = j == 0 ? Poly(1) : Poly();
        for (unsigned k = 1; k <= b + 1; ++k) {
            Poly acc;
            for (std::size_t i = 0; i <= j; ++i) {
                if (!f[j - i].is_zero() && !powers[k - 1][i].is_zero()) {
                    acc += powers[k - 1][i] * f[j - i];
                }
            }
            powers[k][j] = std::move(acc);
        }
    };
    extend_powers(0);
    const Poly x = Poly::x();
    for (std::size_t n = 1; n <= order; ++n) {
        // n F_n = x [t^(n-1)] F^(b+1) + a [t^(n-2)] (F^b F')
        Poly rhs = x * powers[b + 1][n - 1];
        if (n >= 2) {
            Poly conv;
            for (std::size_t i = 0; i <= n - 2; ++i) {
                const std::size_t d = n - 1 - i; // [t^(n-2-i)] F' = d F_d
                conv += powers[b][i] * f[d] * BigRational(static_cast<long>(d));
            }
            rhs += a * conv;
        }
        rhs *= BigRational(BigInt(1), BigInt(static_cast<unsigned long>(n)));
        f[n] = std::move(rhs);
        extend_powers(n);
    }
    return PolySeries(order, std::move(f));
}

PolySeries solve_omega(int a, int b, std::size_t order) {
    if (b < 0) {
        throw ParameterError("solve_omega: need b >= 0");
    }
    return solve_power_ode(Poly(BigRational(a)), static_cast<unsigned>(b), order);
}

Poly closed_omega(int a, int b, int n) {
    return closed_phi(a, b, 0, n);
}

PolySeries solve_phi(int a, int b, int s, std::size_t order) {
    if (b < 0 || s < 0) {
        throw ParameterError("solve_phi: need b >= 0 and s >= 0");
    }
    // Phi' = x Phi^(b+s+1) + (a + s x) t Phi^(b+s) Phi'
    return solve_power_ode(Poly::linear(a, s), static_cast<unsigned>(b + s), order);
}

Poly closed_phi(int a, int b, int s, int n) {
    if (n < 0) {
        throw ParameterError("closed form: need n >= 0");
    }
    if (n == 0) {
        return Poly(1);
    }
    Poly p = Poly::x();
    const long sn1 = static_cast<long>(s) * n + 1;
    for (long i = 1; i < n; ++i) {
        // a i + b x (n-i) + (s n + 1) x
        p.multiply_linear(BigRational(static_cast<long>(a) * i),
                          BigRational(static_cast<long>(b) * (n - i) + sn1));
    }
    p *= BigRational(BigInt(1), factorial(static_cast<unsigned long>(n)));
    return p;
}

} // namespace hooklen

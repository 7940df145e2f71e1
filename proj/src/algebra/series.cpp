#include "hooklen/series.hpp"

#include <utility>

#include "hooklen/error.hpp"

namespace hooklen {

PolySeries::PolySeries(std::size_t order) : coeffs_(order + 1) {}

PolySeries::PolySeries(std::size_t order, std::vector<Poly> coefficients)
    : coeffs_(std::move(coefficients)) {
    coeffs_.resize(order + 1);
}

PolySeries PolySeries::one(std::size_t order) {
    PolySeries s(order);
    s[0] = Poly(1);
    return s;
}

PolySeries PolySeries::truncated(std::size_t order) const {
    return PolySeries(order, coeffs_);
}

static void require_same_order(const PolySeries& a, const PolySeries& b, const char* what) {
    if (a.order() != b.order()) {
        throw ParameterError(std::string(what) + ": truncation order mismatch (" +
                             std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
    }
}

PolySeries& PolySeries::operator+=(const PolySeries& rhs) {
    require_same_order(*this, rhs, "series add");
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] += rhs.coeffs_[n];
    }
    return *this;
}

PolySeries& PolySeries::operator-=(const PolySeries& rhs) {
    require_same_order(*this, rhs, "series sub");
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] -= rhs.coeffs_[n];
    }
    return *this;
}

PolySeries& PolySeries::operator*=(const Poly& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

bool PolySeries::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

PolySeries mul(const PolySeries& a, const PolySeries& b) {
    require_same_order(a, b, "series mul");
    const std::size_t order = a.order();
    PolySeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

PolySeries pow(const PolySeries& a, unsigned k) {
    PolySeries result = PolySeries::one(a.order());
    PolySeries base = a;
    while (k > 0) {
        if (k & 1U) {
            result = mul(result, base);
        }
        k >>= 1U;
        if (k > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

PolySeries derivative(const PolySeries& a) {
    if (a.order() == 0) {
        return PolySeries(0);
    }
    PolySeries out(a.order() - 1);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        out[n - 1] = a[n] * BigRational(static_cast<long>(n));
    }
    return out;
}

PolySeries integrate(const PolySeries& a) {
    PolySeries out(a.order() + 1);
    for (std::size_t n = 0; n <= a.order(); ++n) {
        out[n + 1] = a[n] * BigRational(BigInt(1), BigInt(static_cast<unsigned long>(n + 1)));
    }
    return out;
}

PolySeries shift(const PolySeries& a) {
    PolySeries out(a.order());
    for (std::size_t n = 0; n < a.order(); ++n) {
        out[n + 1] = a[n];
    }
    return out;
}

PolySeries series_compose_scaled(const PolySeries& outer, const PolySeries& inner, unsigned s) {
    require_same_order(outer, inner, "series_compose_scaled");
    if (outer[0] != Poly(1)) {
        throw ParameterError("series_compose_scaled: outer series must have constant term 1");
    }
    const std::size_t order = outer.order();
    // u = t * inner^s has zero constant term, so u^k only touches t^k and above.
    const PolySeries u = shift(pow(inner, s));
    PolySeries out = PolySeries::one(order);
    PolySeries u_power = PolySeries::one(order);
    for (std::size_t k = 1; k <= order; ++k) {
        u_power = mul(u_power, u);
        if (outer[k].is_zero()) {
            continue;
        }
        out += u_power * outer[k];
    }
    return out;
}

} // namespace hooklen

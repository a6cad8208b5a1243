#pragma once

/*
 * Integer-coefficient univariate polynomials and truncated power series.
 * Carriers for Poincare polynomials and Poincare series coefficients.
 */

#include "recipalg/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace recipalg {

// coeffs[k] is the coefficient of t^k; trailing zeros are trimmed and the
// zero polynomial is stored as {0}.
struct UnivariatePolynomial {
    std::vector<BigInt> coeffs{BigInt(0)};

    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { normalize(); }

    static UnivariatePolynomial one() { return UnivariatePolynomial({BigInt(1)}); }

    void normalize() {
        while (coeffs.size() > 1 && coeffs.back() == 0)
            coeffs.pop_back();
        if (coeffs.empty())
            coeffs.push_back(BigInt(0));
    }

    std::size_t degree() const { return coeffs.size() - 1; }

    BigInt coefficient(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : BigInt(0); }

    bool operator==(const UnivariatePolynomial& other) const = default;

    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                          const UnivariatePolynomial& b) {
        std::vector<BigInt> prod(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                prod[i + j] += a.coeffs[i] * b.coeffs[j];
        return UnivariatePolynomial(std::move(prod));
    }
};

// Power series cut at t^truncationOrder; coeffs has truncationOrder+1 entries.
struct TruncatedSeries {
    std::vector<BigInt> coeffs;
    int truncationOrder = 0;

    TruncatedSeries() : coeffs{BigInt(0)} {}
    TruncatedSeries(std::vector<BigInt> c, int order) : coeffs(std::move(c)), truncationOrder(order) {
        if (coeffs.size() != static_cast<std::size_t>(order) + 1)
            throw std::invalid_argument("series length does not match truncation order");
    }

    BigInt coefficient(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : BigInt(0); }

    bool operator==(const TruncatedSeries& other) const = default;
};

// C(a, b) with C(a, 0) = 1 for every a (including a = -1) and 0 whenever
// b < 0 or the usual falling product vanishes.
inline BigInt binomial(long long a, long long b) {
    if (b < 0)
        return BigInt(0);
    if (b == 0)
        return BigInt(1);
    if (a < b)
        return BigInt(0);
    BigInt result = 1;
    for (long long k = 1; k <= b; ++k) {
        result *= BigInt(a - b + k);
        result /= BigInt(k);
    }
    return result;
}

} // namespace recipalg

#pragma once

/*
 * Poincare series of the reciprocal algebra C(Delta).
 *
 * The series is the Poincare polynomial of the arrangement evaluated at
 * t/(1-t). Expansion goes through the exact binomial identity
 *   (t/(1-t))^k = sum_{p>=k} C(p-1, k-1) t^p,
 * so every coefficient is computed in integer arithmetic; no rational
 * function normalization is involved. Closed forms for arrangements with
 * known exponents and for generic arrangements are provided alongside.
 */

#include "recipalg/arrangement.hpp"
#include "recipalg/errors.hpp"
#include "recipalg/lattice.hpp"
#include "recipalg/univariate.hpp"

#include <stdexcept>
#include <vector>

namespace recipalg {

namespace detail {

// Truncated expansion of numerator(t) / (1-t)^denomPower.
inline TruncatedSeries expandOverUnitPole(const UnivariatePolynomial& numerator, int denomPower,
                                          int truncationOrder) {
    std::vector<BigInt> coeffs(truncationOrder + 1, BigInt(0));
    if (denomPower == 0) {
        for (int p = 0; p <= truncationOrder; ++p)
            coeffs[p] = numerator.coefficient(p);
        return TruncatedSeries(std::move(coeffs), truncationOrder);
    }
    for (int p = 0; p <= truncationOrder; ++p) {
        BigInt sum = 0;
        for (std::size_t j = 0; j <= numerator.degree() && static_cast<int>(j) <= p; ++j)
            sum += numerator.coeffs[j] * binomial(p - static_cast<long long>(j) + denomPower - 1,
                                                  denomPower - 1);
        coeffs[p] = sum;
    }
    return TruncatedSeries(std::move(coeffs), truncationOrder);
}

} // namespace detail

// Graded dimensions of C(Delta) up to degree truncationOrder: coefficient p
// equals sum_k w_k C(p-1, k-1) where w_k are the Whitney coefficients of the
// arrangement's Poincare polynomial.
inline TruncatedSeries seriesOfC(const Arrangement& arr, int truncationOrder) {
    if (truncationOrder < 0)
        throw std::invalid_argument("truncation order must be nonnegative");
    const UnivariatePolynomial poin = poincarePolynomial(arr);
    std::vector<BigInt> coeffs(truncationOrder + 1, BigInt(0));
    coeffs[0] = poin.coefficient(0); // = 1
    for (int p = 1; p <= truncationOrder; ++p) {
        BigInt sum = 0;
        for (std::size_t k = 1; k <= poin.degree(); ++k)
            sum += poin.coeffs[k] * binomial(p - 1, static_cast<long long>(k) - 1);
        coeffs[p] = sum;
    }
    return TruncatedSeries(std::move(coeffs), truncationOrder);
}

// (1-t)^{-l} prod_i (1 + (d_i - 1) t) for an arrangement with exponents d_i.
inline TruncatedSeries freePoincareSeries(const std::vector<int>& exponents, int truncationOrder) {
    if (truncationOrder < 0)
        throw std::invalid_argument("truncation order must be nonnegative");
    UnivariatePolynomial numerator = UnivariatePolynomial::one();
    for (int d : exponents)
        numerator = numerator * UnivariatePolynomial({BigInt(1), BigInt(d) - 1});
    return detail::expandOverUnitPole(numerator, static_cast<int>(exponents.size()),
                                      truncationOrder);
}

// (1-t)^{-dim} sum_{i=0}^{dim-1} C(n - dim + i - 1, i) t^i for a generic
// arrangement of n forms.
inline TruncatedSeries genericSeries(long long n, long long dim, int truncationOrder) {
    if (dim < 1)
        throw std::invalid_argument("generic series needs dim >= 1");
    if (truncationOrder < 0)
        throw std::invalid_argument("truncation order must be nonnegative");
    if (n < dim)
        throw NotGenericError(n, dim);
    std::vector<BigInt> num(dim, BigInt(0));
    for (long long i = 0; i < dim; ++i)
        num[i] = binomial(n - dim + i - 1, i);
    return detail::expandOverUnitPole(UnivariatePolynomial(std::move(num)),
                                      static_cast<int>(dim), truncationOrder);
}

} // namespace recipalg

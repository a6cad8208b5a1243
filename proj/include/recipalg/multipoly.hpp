#pragma once

/*
 * Sparse multivariate polynomials with exact rational coefficients.
 *
 * Terms are kept in a map ordered by graded lexicographic comparison of the
 * exponent vectors, so iteration order (and hence the column order produced
 * by polysToMatrix) is canonical.
 */

#include "recipalg/matrix.hpp"
#include "recipalg/rational.hpp"

#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace recipalg {

using Monomial = std::vector<int>; // exponent vector, one entry per variable

struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const long degA = std::accumulate(a.begin(), a.end(), 0L);
        const long degB = std::accumulate(b.begin(), b.end(), 0L);
        if (degA != degB)
            return degA < degB;
        return a < b;
    }
};

class MultivariatePolynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    explicit MultivariatePolynomial(int numVars) : numVars_(numVars) {
        if (numVars < 0)
            throw std::invalid_argument("negative variable count");
    }

    static MultivariatePolynomial constant(int numVars, Rational value) {
        MultivariatePolynomial p(numVars);
        p.addTerm(Monomial(numVars, 0), std::move(value));
        return p;
    }

    // c_1 x_1 + ... + c_n x_n
    static MultivariatePolynomial linear(const std::vector<Rational>& coeffs) {
        MultivariatePolynomial p(static_cast<int>(coeffs.size()));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Monomial m(coeffs.size(), 0);
            m[i] = 1;
            p.addTerm(m, coeffs[i]);
        }
        return p;
    }

    int numVars() const { return numVars_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    // Total degree; -1 for the zero polynomial.
    long degree() const {
        if (terms_.empty())
            return -1;
        const Monomial& lead = terms_.rbegin()->first;
        return std::accumulate(lead.begin(), lead.end(), 0L);
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void addTerm(const Monomial& m, const Rational& c) {
        if (static_cast<int>(m.size()) != numVars_)
            throw std::invalid_argument("exponent vector length mismatch");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    MultivariatePolynomial& operator+=(const MultivariatePolynomial& other) {
        requireSameVars(other);
        for (const auto& [m, c] : other.terms_)
            addTerm(m, c);
        return *this;
    }

    MultivariatePolynomial& operator-=(const MultivariatePolynomial& other) {
        requireSameVars(other);
        for (const auto& [m, c] : other.terms_)
            addTerm(m, -c);
        return *this;
    }

    MultivariatePolynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_)
                c *= s;
        }
        return *this;
    }

    friend MultivariatePolynomial operator+(MultivariatePolynomial a, const MultivariatePolynomial& b) {
        a += b;
        return a;
    }
    friend MultivariatePolynomial operator-(MultivariatePolynomial a, const MultivariatePolynomial& b) {
        a -= b;
        return a;
    }
    friend MultivariatePolynomial operator*(MultivariatePolynomial a, const Rational& s) {
        a *= s;
        return a;
    }

    friend MultivariatePolynomial operator*(const MultivariatePolynomial& a,
                                            const MultivariatePolynomial& b) {
        a.requireSameVars(b);
        MultivariatePolynomial prod(a.numVars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.numVars_);
                for (int k = 0; k < a.numVars_; ++k)
                    m[k] = ma[k] + mb[k];
                prod.addTerm(m, ca * cb);
            }
        }
        return prod;
    }

    bool operator==(const MultivariatePolynomial& other) const {
        return numVars_ == other.numVars_ && terms_ == other.terms_;
    }

private:
    void requireSameVars(const MultivariatePolynomial& other) const {
        if (numVars_ != other.numVars_)
            throw std::invalid_argument("variable count mismatch");
    }

    int numVars_;
    TermMap terms_;
};

// Rows indexed by the input polynomials, columns by the union of occurring
// monomials in graded-lex order. rank(result) = dimension of the rational span.
inline Matrix polysToMatrix(const std::vector<MultivariatePolynomial>& polys) {
    if (polys.empty())
        return Matrix(0, 0);
    const int vars = polys.front().numVars();
    std::set<Monomial, GradedLexLess> monomials;
    for (const auto& p : polys) {
        if (p.numVars() != vars)
            throw std::invalid_argument("variable count mismatch");
        for (const auto& [m, c] : p.terms())
            monomials.insert(m);
    }
    std::map<Monomial, std::size_t, GradedLexLess> column;
    std::size_t idx = 0;
    for (const auto& m : monomials)
        column[m] = idx++;

    Matrix out(polys.size(), monomials.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (const auto& [m, c] : polys[i].terms())
            out(i, column[m]) = c;
    return out;
}

} // namespace recipalg

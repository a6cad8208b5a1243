#pragma once

/*
 * Brute-force ground truth for the graded structure of C(Delta).
 *
 * Degree-p elements are spanned by reciprocals 1/prod(eps) over size-p
 * multisets eps of form indices (products commute, so tuples reduce to
 * multisets). Everything is pushed to the common denominator (prod Delta)^p:
 * the numerator of 1/prod(eps) is the product of alpha_j^(p - mult_j(eps)),
 * exact by construction. Graded dimensions are ranks of the resulting
 * coefficient matrices over Q.
 *
 * verifyModuleStructure checks, degree by degree, that the derivative span
 * and the independent-tuple span decompose C(Delta), that the dependent-tuple
 * ideal equals the derivative span, and that the nbc reciprocals form a basis
 * of the independent-tuple span. verifyFlatDecomposition checks that the
 * per-flat components sum to the full dimension.
 */

#include "recipalg/arrangement.hpp"
#include "recipalg/errors.hpp"
#include "recipalg/lattice.hpp"
#include "recipalg/matrix.hpp"
#include "recipalg/multipoly.hpp"
#include "recipalg/nbc.hpp"
#include "recipalg/series.hpp"
#include "recipalg/univariate.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace recipalg {

// Multiset of form indices, kept sorted; degree = number of factors.
struct ReciprocalTuple {
    std::vector<int> indices;

    ReciprocalTuple() = default;
    explicit ReciprocalTuple(std::vector<int> idx) : indices(std::move(idx)) {
        std::sort(indices.begin(), indices.end());
    }

    int degree() const { return static_cast<int>(indices.size()); }

    std::vector<int> distinctIndices() const {
        std::vector<int> d = indices;
        d.erase(std::unique(d.begin(), d.end()), d.end());
        return d;
    }

    bool operator==(const ReciprocalTuple& other) const = default;
    auto operator<=>(const ReciprocalTuple& other) const = default;
};

enum class TupleFilter { All, Independent, Dependent };

struct OracleOptions {
    unsigned long long entryBudget = 10'000'000ULL; // rows x columns guard
};

namespace detail {

inline void forEachMultiset(int n, int p, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> pick;
    pick.reserve(p);
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == p) {
            visit(pick);
            return;
        }
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

inline bool tupleIsIndependent(const Arrangement& arr, const ReciprocalTuple& t) {
    const auto distinct = t.distinctIndices();
    if (distinct.size() != t.indices.size())
        return false; // repetition
    return formSetRank(arr, distinct) == distinct.size();
}

// Guard before building a numerator matrix, using the spec-level estimate:
// multiset count times the dense monomial count at the numerator degree.
inline void checkSizeBudget(const Arrangement& arr, int p, const OracleOptions& opts) {
    const long long n = static_cast<long long>(arr.size());
    if (n == 0 || p == 0)
        return;
    const BigInt rows = binomial(n + p - 1, p);
    const BigInt cols = binomial(arr.dim() + static_cast<long long>(p) * (n - 1), arr.dim());
    const BigInt entries = rows * cols;
    if (entries > BigInt(opts.entryBudget)) {
        const BigInt capped = (entries > BigInt(~0ULL)) ? BigInt(~0ULL) : entries;
        throw TooLargeError(capped.convert_to<unsigned long long>());
    }
}

} // namespace detail

// All size-p multisets over the form indices matching the filter. A multiset
// with a repeated index is dependent; "independent" means distinct indices
// whose forms are linearly independent.
inline std::vector<ReciprocalTuple> enumerateTuples(const Arrangement& arr, int p,
                                                    TupleFilter filter = TupleFilter::All) {
    if (p < 0)
        throw std::invalid_argument("tuple degree must be nonnegative");
    std::vector<ReciprocalTuple> out;
    detail::forEachMultiset(static_cast<int>(arr.size()), p, [&](const std::vector<int>& pick) {
        ReciprocalTuple t;
        t.indices = pick;
        if (filter != TupleFilter::All) {
            const bool indep = detail::tupleIsIndependent(arr, t);
            if ((filter == TupleFilter::Independent) != indep)
                return;
        }
        out.push_back(std::move(t));
    });
    return out;
}

// Size-p multisets whose common zero set is exactly the given flat.
inline std::vector<ReciprocalTuple> enumerateTuplesOnFlat(const Arrangement& arr, const Lattice& lat,
                                                          int flatId, int p) {
    const std::vector<int>& wanted = lat.flat(flatId).support;
    std::vector<ReciprocalTuple> out;
    for (ReciprocalTuple& t : enumerateTuples(arr, p)) {
        if (closeSupport(arr, t.distinctIndices()).support == wanted)
            out.push_back(std::move(t));
    }
    return out;
}

// Numerator of 1/prod(eps) over the common denominator (prod Delta)^p:
// the product of alpha_j^(p - mult_j(eps)), degree p(n-1).
inline MultivariatePolynomial tupleNumerator(const Arrangement& arr, const ReciprocalTuple& tuple,
                                             int p) {
    if (tuple.degree() != p)
        throw std::invalid_argument("tuple degree does not match requested degree");
    std::vector<int> mult(arr.size(), 0);
    for (int i : tuple.indices)
        ++mult[i];
    MultivariatePolynomial num = MultivariatePolynomial::constant(arr.dim(), Rational(1));
    for (std::size_t j = 0; j < arr.size(); ++j) {
        std::vector<Rational> c = arr.form(j).coeffs;
        const MultivariatePolynomial formPoly = MultivariatePolynomial::linear(c);
        for (int e = 0; e < p - mult[j]; ++e)
            num = num * formPoly;
    }
    return num;
}

// Sparse element of C(Delta): rational coefficients on reciprocal multisets,
// all of one degree in every use below.
using ReciprocalCombo = std::map<ReciprocalTuple, Rational>;

inline void comboAdd(ReciprocalCombo& combo, const ReciprocalTuple& t, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = combo.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            combo.erase(it);
    }
}

// Directional derivative along w: d_w (prod alpha_j^-k_j) =
// sum_j (-k_j) alpha_j(w) * (same multiset with one extra alpha_j).
inline ReciprocalCombo directionalDerivative(const Arrangement& arr, const ReciprocalCombo& combo,
                                             const std::vector<Rational>& direction) {
    ReciprocalCombo out;
    for (const auto& [tuple, coeff] : combo) {
        for (int j : tuple.distinctIndices()) {
            const Rational alphaOfW = arr.form(j).evaluate(direction);
            if (alphaOfW == 0)
                continue;
            const int multJ =
                static_cast<int>(std::count(tuple.indices.begin(), tuple.indices.end(), j));
            ReciprocalTuple extended = tuple;
            extended.indices.insert(
                std::lower_bound(extended.indices.begin(), extended.indices.end(), j), j);
            comboAdd(out, extended, coeff * Rational(-multJ) * alphaOfW);
        }
    }
    return out;
}

inline ReciprocalCombo coordinateDerivative(const Arrangement& arr, const ReciprocalCombo& combo,
                                            int var) {
    std::vector<Rational> e(arr.dim(), Rational(0));
    e.at(var) = 1;
    return directionalDerivative(arr, combo, e);
}

// Numerator polynomial of a homogeneous combo over (prod Delta)^p.
inline MultivariatePolynomial comboNumerator(const Arrangement& arr, const ReciprocalCombo& combo,
                                             int p) {
    MultivariatePolynomial num(arr.dim());
    for (const auto& [tuple, coeff] : combo)
        num += tupleNumerator(arr, tuple, p) * coeff;
    return num;
}

namespace detail {

inline std::vector<MultivariatePolynomial> tupleNumerators(const Arrangement& arr,
                                                           const std::vector<ReciprocalTuple>& tuples,
                                                           int p) {
    std::vector<MultivariatePolynomial> polys;
    polys.reserve(tuples.size());
    for (const auto& t : tuples)
        polys.push_back(tupleNumerator(arr, t, p));
    return polys;
}

inline std::size_t spanDim(const std::vector<MultivariatePolynomial>& polys) {
    return rank(polysToMatrix(polys));
}

// Derivative-span generators at degree p: every coordinate derivative of
// every degree-(p-1) reciprocal multiset.
inline std::vector<MultivariatePolynomial> derivativeSpanNumerators(const Arrangement& arr, int p,
                                                                    const OracleOptions& opts) {
    checkSizeBudget(arr, p, opts);
    std::vector<MultivariatePolynomial> polys;
    for (const ReciprocalTuple& t : enumerateTuples(arr, p - 1)) {
        ReciprocalCombo unit;
        unit[t] = 1;
        for (int var = 0; var < arr.dim(); ++var)
            polys.push_back(comboNumerator(arr, coordinateDerivative(arr, unit, var), p));
    }
    return polys;
}

} // namespace detail

// dim of the degree-p part of C(Delta).
inline std::size_t dimC(const Arrangement& arr, int p, const OracleOptions& opts = {}) {
    detail::checkSizeBudget(arr, p, opts);
    return detail::spanDim(detail::tupleNumerators(arr, enumerateTuples(arr, p), p));
}

// dim of the degree-p part of the span of independent-tuple reciprocals.
inline std::size_t dimAO(const Arrangement& arr, int p, const OracleOptions& opts = {}) {
    detail::checkSizeBudget(arr, p, opts);
    return detail::spanDim(
        detail::tupleNumerators(arr, enumerateTuples(arr, p, TupleFilter::Independent), p));
}

// dim of the degree-p part of the dependent-tuple ideal.
inline std::size_t dimJ(const Arrangement& arr, int p, const OracleOptions& opts = {}) {
    detail::checkSizeBudget(arr, p, opts);
    return detail::spanDim(
        detail::tupleNumerators(arr, enumerateTuples(arr, p, TupleFilter::Dependent), p));
}

// dim of the degree-p part of the component C_X(Delta) of one flat.
inline std::size_t dimCX(const Arrangement& arr, const Lattice& lat, int flatId, int p,
                         const OracleOptions& opts = {}) {
    detail::checkSizeBudget(arr, p, opts);
    return detail::spanDim(
        detail::tupleNumerators(arr, enumerateTuplesOnFlat(arr, lat, flatId, p), p));
}

// dim of the degree-p part of the span of first derivatives of C(Delta).
inline std::size_t dimDerivativeSpan(const Arrangement& arr, int p, const OracleOptions& opts = {}) {
    if (p < 1)
        throw std::invalid_argument("derivative span needs degree >= 1");
    return detail::spanDim(detail::derivativeSpanNumerators(arr, p, opts));
}

struct ClauseCheck {
    std::string clause;
    int degree = 0;
    bool pass = false;
    std::string detail;
};

struct GradedReport {
    std::vector<int> degrees;
    std::vector<std::size_t> dimCs;
    std::vector<std::size_t> dimAOs;
    std::vector<std::size_t> dimJs;
    std::vector<std::size_t> dimDerivativeSpans;
    std::vector<std::vector<std::size_t>> dimCXs; // [degree index][flat id]
    std::vector<ClauseCheck> checks;
    bool allPass = true;

    void record(const std::string& clause, int degree, bool pass, std::string detailText = {}) {
        checks.push_back(ClauseCheck{clause, degree, pass, std::move(detailText)});
        allPass = allPass && pass;
    }
};

// Degree-by-degree structure checks on the generators of C(Delta):
//   dim-split       dimDerivativeSpan + dimAO == dimC
//   span-union      derivative span + independent span spans C
//   ideal-equality  dependent-tuple ideal == derivative span (as row spaces)
//   nbc-rank        nbc reciprocals are independent and span the AO part
inline GradedReport verifyModuleStructure(const Arrangement& arr, int maxDegree,
                                          const OracleOptions& opts = {}) {
    GradedReport report;
    const Lattice lat = mobius(intersectionLattice(arr));
    const auto nbcPerFlat = nbcSets(arr, lat);

    for (int p = 0; p <= maxDegree; ++p) {
        detail::checkSizeBudget(arr, p, opts);
        const auto all = detail::tupleNumerators(arr, enumerateTuples(arr, p), p);
        const auto independent =
            detail::tupleNumerators(arr, enumerateTuples(arr, p, TupleFilter::Independent), p);
        const auto dependent =
            detail::tupleNumerators(arr, enumerateTuples(arr, p, TupleFilter::Dependent), p);
        const auto derivatives = p == 0 ? std::vector<MultivariatePolynomial>{}
                                        : detail::derivativeSpanNumerators(arr, p, opts);

        const std::size_t dC = detail::spanDim(all);
        const std::size_t dAO = detail::spanDim(independent);
        const std::size_t dJ = detail::spanDim(dependent);
        const std::size_t dDer = detail::spanDim(derivatives);

        report.degrees.push_back(p);
        report.dimCs.push_back(dC);
        report.dimAOs.push_back(dAO);
        report.dimJs.push_back(dJ);
        report.dimDerivativeSpans.push_back(dDer);

        report.record("dim-split", p, dDer + dAO == dC,
                      std::to_string(dDer) + " + " + std::to_string(dAO) + " vs " +
                          std::to_string(dC));

        std::vector<MultivariatePolynomial> unionSpan = derivatives;
        unionSpan.insert(unionSpan.end(), independent.begin(), independent.end());
        report.record("span-union", p, detail::spanDim(unionSpan) == dC);

        std::vector<MultivariatePolynomial> idealUnion = derivatives;
        idealUnion.insert(idealUnion.end(), dependent.begin(), dependent.end());
        const std::size_t dUnion = detail::spanDim(idealUnion);
        report.record("ideal-equality", p, dJ == dDer && dUnion == dJ,
                      "J " + std::to_string(dJ) + ", derivatives " + std::to_string(dDer) +
                          ", union " + std::to_string(dUnion));

        std::vector<MultivariatePolynomial> nbcNumerators;
        std::size_t nbcCount = 0;
        for (const auto& flatSets : nbcPerFlat) {
            for (const NbcSet& s : flatSets) {
                if (static_cast<int>(s.indices.size()) != p)
                    continue;
                ++nbcCount;
                nbcNumerators.push_back(tupleNumerator(arr, ReciprocalTuple(s.indices), p));
            }
        }
        const std::size_t nbcRank = detail::spanDim(nbcNumerators);
        report.record("nbc-rank", p, nbcRank == nbcCount && nbcRank == dAO,
                      std::to_string(nbcCount) + " nbc sets, rank " + std::to_string(nbcRank) +
                          ", AO dim " + std::to_string(dAO));
    }
    return report;
}

// Degree-by-degree check that the per-flat components fill C(Delta):
//   flat-dim-sum    sum over flats of dimCX == dimC
inline GradedReport verifyFlatDecomposition(const Arrangement& arr, int maxDegree,
                                            const OracleOptions& opts = {}) {
    GradedReport report;
    const Lattice lat = intersectionLattice(arr);
    for (int p = 0; p <= maxDegree; ++p) {
        const std::size_t dC = dimC(arr, p, opts);
        std::vector<std::size_t> perFlat;
        std::size_t total = 0;
        for (const Flat& f : lat.flats()) {
            const std::size_t d = dimCX(arr, lat, f.id, p, opts);
            perFlat.push_back(d);
            total += d;
        }
        report.degrees.push_back(p);
        report.dimCs.push_back(dC);
        report.dimCXs.push_back(std::move(perFlat));
        report.record("flat-dim-sum", p, total == dC,
                      "sum " + std::to_string(total) + " vs " + std::to_string(dC));
    }
    return report;
}

} // namespace recipalg

#pragma once

/*
 * Decomposition of reciprocals over the nbc basis, and the Jeffrey-Kirwan
 * residue.
 *
 * Every degree-p element of C(Delta) is uniquely a sum over nbc basis
 * reciprocals phi_j of theta_j(phi_j), where theta_j is a constant-coefficient
 * differential operator in directions transverse to the flat of phi_j. The
 * transverse directions for a flat X are realized concretely: take the
 * greedy lowest-index independent subset B of the flat's support, and solve
 * (B B^T) c = e_j for the dual directions w_j = B^T c inside the row space of
 * B, which complements X over Q. The decomposition is found as an exact
 * linear system on numerator polynomials; uniqueness is checked through the
 * nullspace. When the forms span the dual space, the coefficients of the
 * degree-zero operators on the deepest flat are the Jeffrey-Kirwan residue of
 * the target against the chosen basis.
 */

#include "recipalg/arrangement.hpp"
#include "recipalg/errors.hpp"
#include "recipalg/lattice.hpp"
#include "recipalg/matrix.hpp"
#include "recipalg/nbc.hpp"
#include "recipalg/oracle.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace recipalg {

// Directions w_1..w_c with beta_i(w_j) = delta_ij for the greedy independent
// subset B = {beta_1..beta_c} of the flat's support; each w_j lies in the row
// space of B, so span(w) + flat = V.
inline std::vector<std::vector<Rational>> flatDualDirections(const Arrangement& arr,
                                                             const Flat& flat) {
    std::vector<int> basisIdx;
    for (int i : flat.support) {
        std::vector<int> candidate = basisIdx;
        candidate.push_back(i);
        if (detail::formSetRank(arr, candidate) == candidate.size())
            basisIdx = std::move(candidate);
        if (static_cast<int>(basisIdx.size()) == flat.codim)
            break;
    }
    if (static_cast<int>(basisIdx.size()) != flat.codim)
        throw std::logic_error("flat support does not reach its codimension");

    const std::size_t c = basisIdx.size();
    Matrix b(c, arr.dim());
    for (std::size_t r = 0; r < c; ++r)
        for (int col = 0; col < arr.dim(); ++col)
            b(r, col) = arr.form(basisIdx[r]).coeffs[col];

    // Gram matrix B B^T is invertible over Q for independent rows.
    Matrix gram(c, c);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            Rational s(0);
            for (int k = 0; k < arr.dim(); ++k)
                s += b(i, k) * b(j, k);
            gram(i, j) = s;
        }

    std::vector<std::vector<Rational>> directions;
    for (std::size_t j = 0; j < c; ++j) {
        std::vector<Rational> rhs(c, Rational(0));
        rhs[j] = 1;
        const auto sol = solve(gram, rhs);
        if (!sol)
            throw std::logic_error("Gram matrix of an independent set is singular");
        std::vector<Rational> w(arr.dim(), Rational(0));
        for (std::size_t i = 0; i < c; ++i)
            for (int k = 0; k < arr.dim(); ++k)
                w[k] += sol->particular[i] * b(i, k);
        directions.push_back(std::move(w));
    }
    return directions;
}

struct JkBasisElement {
    int index = 0;            // position in the flattened basis phi_1..phi_m
    int flatId = 0;
    std::vector<int> tuple;   // the nbc index tuple of phi
};

struct JkTerm {
    int basisIndex = 0;
    std::vector<int> operatorExponents; // over the flat's dual directions
    Rational coefficient;
};

struct JkDecomposition {
    ReciprocalTuple target;
    std::vector<JkBasisElement> basis;
    std::map<int, std::vector<std::vector<Rational>>> dualDirections; // per flat id
    std::vector<JkTerm> terms;                                        // nonzero coefficients
    bool residueApplicable = false; // true when the forms span the dual space
    int topFlatId = -1;
    std::vector<Rational> residue; // one value per nbc basis element of the top flat
};

namespace detail {

inline void forEachComposition(int total, int parts,
                               const std::function<void(const std::vector<int>&)>& visit) {
    if (parts == 0) {
        if (total == 0)
            visit({});
        return;
    }
    std::vector<int> exps(parts, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            exps[pos] = remaining;
            visit(exps);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, total);
}

} // namespace detail

// theta(phi) for a monomial operator with the given exponents over the
// directions: repeated exact directional differentiation of 1/prod(tuple).
inline ReciprocalCombo applyOperatorMonomial(const Arrangement& arr, const std::vector<int>& tuple,
                                             const std::vector<std::vector<Rational>>& directions,
                                             const std::vector<int>& exponents) {
    ReciprocalCombo combo;
    combo[ReciprocalTuple(tuple)] = 1;
    for (std::size_t d = 0; d < exponents.size(); ++d)
        for (int e = 0; e < exponents[d]; ++e)
            combo = directionalDerivative(arr, combo, directions[d]);
    return combo;
}

// Expands a computed decomposition back into an element of C(Delta).
inline ReciprocalCombo expandJkDecomposition(const Arrangement& arr, const JkDecomposition& dec) {
    ReciprocalCombo total;
    for (const JkTerm& term : dec.terms) {
        const JkBasisElement& phi = dec.basis.at(term.basisIndex);
        const ReciprocalCombo applied = applyOperatorMonomial(
            arr, phi.tuple, dec.dualDirections.at(phi.flatId), term.operatorExponents);
        for (const auto& [t, c] : applied)
            comboAdd(total, t, c * term.coefficient);
    }
    return total;
}

// Exact identity check: the expansion reproduces the target's numerator.
inline bool jkReconstructionExact(const Arrangement& arr, const JkDecomposition& dec) {
    const int p = dec.target.degree();
    return comboNumerator(arr, expandJkDecomposition(arr, dec), p) ==
           tupleNumerator(arr, dec.target, p);
}

// Unique decomposition of 1/prod(target) over the nbc basis. The linear
// system has exactly dim C_p unknowns; a nonzero nullspace would mean the
// complement realization is invalid and raises AmbiguousDecompositionError.
inline JkDecomposition jkDecompose(const Arrangement& arr, const Lattice& lat,
                                   const std::vector<std::vector<NbcSet>>& nbcPerFlat,
                                   const ReciprocalTuple& target, const OracleOptions& opts = {}) {
    for (int i : target.indices)
        if (i < 0 || static_cast<std::size_t>(i) >= arr.size())
            throw std::invalid_argument("target tuple index out of range");
    const int p = target.degree();
    detail::checkSizeBudget(arr, p, opts);

    JkDecomposition dec;
    dec.target = target;

    for (const Flat& f : lat.flats())
        for (const NbcSet& s : nbcPerFlat.at(f.id)) {
            JkBasisElement elem;
            elem.index = static_cast<int>(dec.basis.size());
            elem.flatId = f.id;
            elem.tuple = s.indices;
            dec.basis.push_back(std::move(elem));
        }

    for (const Flat& f : lat.flats())
        if (!nbcPerFlat.at(f.id).empty())
            dec.dualDirections[f.id] = flatDualDirections(arr, f);

    // Columns: one per (basis element, operator monomial of degree p - codim).
    struct Unknown {
        int basisIndex;
        std::vector<int> exponents;
    };
    std::vector<Unknown> unknowns;
    std::vector<MultivariatePolynomial> columns;
    for (const JkBasisElement& phi : dec.basis) {
        const int c = lat.flat(phi.flatId).codim;
        if (p < c)
            continue;
        detail::forEachComposition(p - c, c, [&](const std::vector<int>& exps) {
            unknowns.push_back(Unknown{phi.index, exps});
            columns.push_back(comboNumerator(
                arr,
                applyOperatorMonomial(arr, phi.tuple, dec.dualDirections.at(phi.flatId), exps), p));
        });
    }

    std::vector<MultivariatePolynomial> stacked = columns;
    stacked.push_back(tupleNumerator(arr, target, p));
    const Matrix byRows = polysToMatrix(stacked);

    Matrix system(byRows.cols(), columns.size());
    std::vector<Rational> rhs(byRows.cols());
    for (std::size_t r = 0; r < byRows.cols(); ++r) {
        for (std::size_t j = 0; j < columns.size(); ++j)
            system(r, j) = byRows(j, r);
        rhs[r] = byRows(columns.size(), r);
    }

    const auto sol = solve(system, rhs, /*wantNullspace=*/true);
    if (!sol)
        throw std::logic_error("decomposition system is inconsistent");
    if (!sol->nullspace.empty())
        throw AmbiguousDecompositionError(sol->nullspace.size());

    for (std::size_t j = 0; j < unknowns.size(); ++j)
        if (sol->particular[j] != 0)
            dec.terms.push_back(
                JkTerm{unknowns[j].basisIndex, unknowns[j].exponents, sol->particular[j]});

    // Residue: degree-zero operator coefficients on the deepest flat, defined
    // when the forms span the dual space (a flat of full codimension exists).
    for (const Flat& f : lat.flats())
        if (f.codim == arr.dim())
            dec.topFlatId = f.id;
    dec.residueApplicable = dec.topFlatId >= 0;
    if (dec.residueApplicable) {
        for (const JkBasisElement& phi : dec.basis) {
            if (phi.flatId != dec.topFlatId)
                continue;
            Rational value(0);
            if (p == arr.dim()) {
                for (const JkTerm& term : dec.terms) {
                    if (term.basisIndex != phi.index)
                        continue;
                    bool degreeZero = true;
                    for (int e : term.operatorExponents)
                        degreeZero = degreeZero && e == 0;
                    if (degreeZero)
                        value = term.coefficient;
                }
            }
            dec.residue.push_back(value);
        }
    }
    return dec;
}

} // namespace recipalg

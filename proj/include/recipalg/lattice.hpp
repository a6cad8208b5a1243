#pragma once

/*
 * Intersection lattice of an arrangement.
 *
 * A flat is identified by its closed support: the set of all form indices
 * vanishing on the subspace. Construction is breadth-first by codimension:
 * each known flat is intersected with each hyperplane not already in its
 * support, the result is closed, and duplicates are merged by support set.
 * The partial order is reverse inclusion of subspaces, which for closed
 * supports is plain inclusion of support sets.
 */

#include "recipalg/arrangement.hpp"
#include "recipalg/matrix.hpp"
#include "recipalg/univariate.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace recipalg {

struct Flat {
    int id = 0;
    std::vector<int> support;                       // sorted, closed set of form indices
    int codim = 0;                                  // = rank of the supporting forms
    std::vector<std::vector<Rational>> subspaceBasis; // basis of the subspace, vectors in V
    BigInt mobius = 0;
};

struct SupportClosure {
    std::vector<int> support;
    int codim = 0;
    std::vector<std::vector<Rational>> basis;
};

// Closure of an index set: the common kernel of the indexed forms and every
// form index vanishing on it.
inline SupportClosure closeSupport(const Arrangement& arr, const std::vector<int>& indices) {
    Matrix m(indices.size(), arr.dim());
    for (std::size_t r = 0; r < indices.size(); ++r)
        for (int c = 0; c < arr.dim(); ++c)
            m(r, c) = arr.form(indices[r]).coeffs[c];

    SupportClosure out;
    out.basis = nullspaceBasis(m);
    out.codim = arr.dim() - static_cast<int>(out.basis.size());
    for (std::size_t j = 0; j < arr.size(); ++j) {
        bool vanishes = true;
        for (const auto& v : out.basis) {
            if (arr.form(j).evaluate(v) != 0) {
                vanishes = false;
                break;
            }
        }
        if (vanishes)
            out.support.push_back(static_cast<int>(j));
    }
    return out;
}

class Lattice {
public:
    const std::vector<Flat>& flats() const { return flats_; }
    const Flat& flat(int id) const { return flats_.at(id); }
    std::size_t size() const { return flats_.size(); }

    // -1 when no flat has this closed support.
    int flatBySupport(const std::vector<int>& support) const {
        auto it = bySupport_.find(support);
        return it == bySupport_.end() ? -1 : it->second;
    }

    // a <= b in the lattice order (reverse inclusion of subspaces).
    bool lessEq(int a, int b) const {
        const auto& sa = flats_.at(a).support;
        const auto& sb = flats_.at(b).support;
        return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
    }

    int maxCodim() const {
        int m = 0;
        for (const auto& f : flats_)
            m = std::max(m, f.codim);
        return m;
    }

    bool mobiusComputed() const { return mobiusComputed_; }

    friend Lattice intersectionLattice(const Arrangement& arr);
    friend Lattice mobius(Lattice lat);

private:
    std::vector<Flat> flats_;
    std::map<std::vector<int>, int> bySupport_;
    bool mobiusComputed_ = false;
};

inline Lattice intersectionLattice(const Arrangement& arr) {
    std::map<std::vector<int>, SupportClosure> found;
    SupportClosure whole = closeSupport(arr, {});
    found.emplace(whole.support, whole);

    std::vector<std::vector<int>> level{whole.support};
    while (!level.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& support : level) {
            for (std::size_t h = 0; h < arr.size(); ++h) {
                if (std::binary_search(support.begin(), support.end(), static_cast<int>(h)))
                    continue;
                std::vector<int> extended = support;
                extended.push_back(static_cast<int>(h));
                SupportClosure closed = closeSupport(arr, extended);
                if (found.emplace(closed.support, closed).second)
                    next.push_back(closed.support);
            }
        }
        level = std::move(next);
    }

    // Deterministic ids: by codimension, then by support set.
    std::vector<const SupportClosure*> ordered;
    ordered.reserve(found.size());
    for (const auto& [support, sc] : found)
        ordered.push_back(&sc);
    std::sort(ordered.begin(), ordered.end(), [](const SupportClosure* a, const SupportClosure* b) {
        if (a->codim != b->codim)
            return a->codim < b->codim;
        return a->support < b->support;
    });

    Lattice lat;
    for (const SupportClosure* sc : ordered) {
        Flat f;
        f.id = static_cast<int>(lat.flats_.size());
        f.support = sc->support;
        f.codim = sc->codim;
        f.subspaceBasis = sc->basis;
        lat.bySupport_[f.support] = f.id;
        lat.flats_.push_back(std::move(f));
    }
    return lat;
}

// Fills the Mobius values: mu(V) = 1 and, walking up by codimension,
// mu(X) = -sum of mu(Y) over Y strictly below X.
inline Lattice mobius(Lattice lat) {
    for (std::size_t i = 0; i < lat.flats_.size(); ++i) {
        BigInt sum = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (lat.lessEq(static_cast<int>(j), static_cast<int>(i)))
                sum += lat.flats_[j].mobius;
        lat.flats_[i].mobius = (i == 0) ? BigInt(1) : -sum;
    }
    lat.mobiusComputed_ = true;
    return lat;
}

// sum over flats of mu(X) (-t)^codim(X); coefficients are the nonnegative
// Whitney numbers.
inline UnivariatePolynomial poincarePolynomial(const Arrangement& arr) {
    Lattice lat = mobius(intersectionLattice(arr));
    std::vector<BigInt> coeffs(lat.maxCodim() + 1, BigInt(0));
    for (const auto& f : lat.flats()) {
        BigInt term = f.mobius;
        if (f.codim % 2 != 0)
            term = -term;
        coeffs[f.codim] += term;
    }
    return UnivariatePolynomial(std::move(coeffs));
}

} // namespace recipalg

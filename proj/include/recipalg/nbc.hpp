#pragma once

/*
 * Circuits, broken circuits, and nbc sets of an arrangement.
 *
 * A circuit is an inclusion-minimal linearly dependent subset of the forms;
 * its broken circuit is the circuit minus its least index. An nbc set is an
 * increasing tuple containing no broken circuit (such tuples are automatically
 * independent: any dependent set contains a circuit and hence that circuit's
 * broken circuit). nbc sets are grouped by the flat their forms cut out.
 */

#include "recipalg/arrangement.hpp"
#include "recipalg/lattice.hpp"
#include "recipalg/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace recipalg {

struct Circuit {
    std::vector<int> indices; // sorted, minimal dependent

    bool operator==(const Circuit& other) const = default;
};

namespace detail {

inline std::size_t formSetRank(const Arrangement& arr, const std::vector<int>& indices) {
    Matrix m(indices.size(), arr.dim());
    for (std::size_t r = 0; r < indices.size(); ++r)
        for (int c = 0; c < arr.dim(); ++c)
            m(r, c) = arr.form(indices[r]).coeffs[c];
    return rank(m);
}

inline void subsetsOfSize(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> pick;
    pick.reserve(k);
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            visit(pick);
            return;
        }
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace detail

// All inclusion-minimal dependent subsets, enumerated by increasing size.
// Subsets of size > dim+1 never need checking: any dependent set of rank r
// contains a dependent subset of size r+1 <= dim+1.
inline std::vector<Circuit> circuits(const Arrangement& arr) {
    std::vector<Circuit> out;
    const int n = static_cast<int>(arr.size());
    for (int k = 2; k <= std::min(n, arr.dim() + 1); ++k) {
        detail::subsetsOfSize(n, k, [&](const std::vector<int>& subset) {
            for (const Circuit& c : out)
                if (std::includes(subset.begin(), subset.end(), c.indices.begin(), c.indices.end()))
                    return;
            if (detail::formSetRank(arr, subset) < subset.size())
                out.push_back(Circuit{subset});
        });
    }
    return out;
}

// Each circuit minus its least element, deduplicated and sorted.
inline std::vector<std::vector<int>> brokenCircuits(const Arrangement& arr) {
    std::set<std::vector<int>> dedup;
    for (const Circuit& c : circuits(arr))
        dedup.insert(std::vector<int>(c.indices.begin() + 1, c.indices.end()));
    return std::vector<std::vector<int>>(dedup.begin(), dedup.end());
}

struct NbcSet {
    std::vector<int> indices; // strictly increasing
    int flatId = 0;

    bool operator==(const NbcSet& other) const = default;
};

// nbc sets per flat, indexed by flat id. The empty tuple belongs to V.
inline std::vector<std::vector<NbcSet>> nbcSets(const Arrangement& arr, const Lattice& lat) {
    const auto broken = brokenCircuits(arr);
    std::vector<std::vector<NbcSet>> perFlat(lat.size());

    std::vector<int> current;
    auto assign = [&]() {
        const SupportClosure sc = closeSupport(arr, current);
        const int flatId = lat.flatBySupport(sc.support);
        if (flatId < 0)
            throw std::logic_error("nbc tuple does not map to a lattice flat");
        perFlat[flatId].push_back(NbcSet{current, flatId});
    };

    auto extend = [&](auto&& self, int start) -> void {
        assign();
        if (static_cast<int>(current.size()) == arr.dim())
            return;
        for (int i = start; i < static_cast<int>(arr.size()); ++i) {
            bool breaks = false;
            for (const auto& bc : broken) {
                if (!std::binary_search(bc.begin(), bc.end(), i))
                    continue;
                bool contained = true;
                for (int b : bc) {
                    if (b != i && !std::binary_search(current.begin(), current.end(), b)) {
                        contained = false;
                        break;
                    }
                }
                if (contained) {
                    breaks = true;
                    break;
                }
            }
            if (breaks)
                continue;
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return perFlat;
}

struct NbcCountRow {
    int flatId = 0;
    int codim = 0;
    std::size_t nbcCount = 0;
    BigInt expected; // (-1)^codim mu(X)
    bool pass = false;
};

struct NbcCountReport {
    std::vector<NbcCountRow> rows;
    bool allPass = true;
};

// Per-flat comparison of |nbc_X| against (-1)^codim mu(X).
inline NbcCountReport checkNbcCount(const Arrangement& arr, const Lattice& lat) {
    if (!lat.mobiusComputed())
        throw std::invalid_argument("checkNbcCount requires Mobius values");
    const auto perFlat = nbcSets(arr, lat);
    NbcCountReport report;
    for (const Flat& f : lat.flats()) {
        NbcCountRow row;
        row.flatId = f.id;
        row.codim = f.codim;
        row.nbcCount = perFlat[f.id].size();
        row.expected = (f.codim % 2 == 0) ? f.mobius : -f.mobius;
        row.pass = (BigInt(row.nbcCount) == row.expected);
        report.allPass = report.allPass && row.pass;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace recipalg

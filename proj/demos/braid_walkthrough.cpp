// Library walkthrough on the braid arrangement in dimension 3:
// lattice, Poincare polynomial, nbc sets, the Poincare series of the
// reciprocal algebra, and a decomposition over the nbc basis.

#include "recipalg/recipalg.hpp"

#include <iostream>

using namespace recipalg;

int main() {
    const Arrangement arr = braidArrangement(3);
    std::cout << "forms:\n";
    for (std::size_t i = 0; i < arr.size(); ++i)
        std::cout << "  " << (i + 1) << ": " << arr.nameOf(i) << "\n";

    const Lattice lat = mobius(intersectionLattice(arr));
    std::cout << "\nintersection lattice (" << lat.size() << " flats):\n";
    for (const Flat& f : lat.flats())
        std::cout << "  flat " << f.id << ": codim " << f.codim << ", mobius " << f.mobius << "\n";

    const UnivariatePolynomial poin = poincarePolynomial(arr);
    std::cout << "\nPoincare polynomial coefficients:";
    for (const BigInt& c : poin.coeffs)
        std::cout << " " << c;
    std::cout << "\n";

    const auto perFlat = nbcSets(arr, lat);
    std::cout << "\nnbc sets of the deepest flat:";
    for (const NbcSet& s : perFlat.back()) {
        std::cout << " (";
        for (std::size_t i = 0; i < s.indices.size(); ++i)
            std::cout << (i ? "," : "") << s.indices[i] + 1;
        std::cout << ")";
    }
    std::cout << "\n";

    const TruncatedSeries series = seriesOfC(arr, 6);
    std::cout << "\ngraded dimensions of the reciprocal algebra:";
    for (const BigInt& c : series.coeffs)
        std::cout << " " << c;
    std::cout << "\n";

    // 1/(a2 a3) rewritten over the nbc basis: 1/(a1 a2) - 1/(a1 a3).
    const JkDecomposition dec = jkDecompose(arr, lat, perFlat, ReciprocalTuple({1, 2}));
    std::cout << "\n1/(a2 a3) over the nbc basis:\n";
    for (const JkTerm& t : dec.terms) {
        const JkBasisElement& b = dec.basis[t.basisIndex];
        std::cout << "  coefficient " << toString(t.coefficient) << " on tuple (";
        for (std::size_t i = 0; i < b.tuple.size(); ++i)
            std::cout << (i ? "," : "") << b.tuple[i] + 1;
        std::cout << ")\n";
    }
    std::cout << "reconstruction exact: " << (jkReconstructionExact(arr, dec) ? "yes" : "no")
              << "\n";
    return 0;
}

#include "recipalg/oracle.hpp"

#include "recipalg/families.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace recipalg;

TEST_CASE("multiset enumeration and filters", "[oracle]") {
    const Arrangement arr = braidArrangement(3);
    CHECK(enumerateTuples(arr, 2).size() == 6);
    CHECK(enumerateTuples(arr, 2, TupleFilter::Independent).size() == 3);
    CHECK(enumerateTuples(arr, 2, TupleFilter::Dependent).size() == 3);
    // the full triple is a circuit, so no independent triples remain
    CHECK(enumerateTuples(arr, 3, TupleFilter::Independent).empty());

    CHECK(enumerateTuples(arr, 0).size() == 1);
    CHECK(enumerateTuples(arr, 0, TupleFilter::Independent).size() == 1);
    CHECK(enumerateTuples(arr, 0, TupleFilter::Dependent).empty());

    const Arrangement empty(2, {});
    CHECK(enumerateTuples(empty, 0).size() == 1);
    CHECK(enumerateTuples(empty, 2).empty());
}

TEST_CASE("tuples map onto flats", "[oracle]") {
    const Arrangement arr = braidArrangement(3);
    const Lattice lat = intersectionLattice(arr);
    // V carries only the empty tuple
    CHECK(enumerateTuplesOnFlat(arr, lat, 0, 0).size() == 1);
    CHECK(enumerateTuplesOnFlat(arr, lat, 0, 2).empty());
    // a hyperplane at degree 2 carries only its own square
    CHECK(enumerateTuplesOnFlat(arr, lat, 1, 2).size() == 1);
    // all three distinct pairs close up to the triple intersection
    CHECK(enumerateTuplesOnFlat(arr, lat, 4, 2).size() == 3);
}

TEST_CASE("numerators divide the full product exactly", "[oracle]") {
    const Arrangement arr = braidArrangement(3);
    const int p = 2;
    MultivariatePolynomial full = MultivariatePolynomial::constant(arr.dim(), Rational(1));
    for (std::size_t j = 0; j < arr.size(); ++j)
        full = full * MultivariatePolynomial::linear(arr.form(j).coeffs);
    full = full * full; // (prod Delta)^2

    for (const ReciprocalTuple& t : enumerateTuples(arr, p)) {
        MultivariatePolynomial denom = MultivariatePolynomial::constant(arr.dim(), Rational(1));
        for (int i : t.indices)
            denom = denom * MultivariatePolynomial::linear(arr.form(i).coeffs);
        CHECK(tupleNumerator(arr, t, p) * denom == full);
    }
    CHECK_THROWS_AS(tupleNumerator(arr, ReciprocalTuple({0}), 2), std::invalid_argument);
}

TEST_CASE("graded dimensions of the test arrangements", "[oracle]") {
    const Arrangement braid = braidArrangement(3);
    CHECK(dimC(braid, 0) == 1);
    CHECK(dimC(braid, 2) == 5);
    CHECK(dimAO(braid, 2) == 2);
    CHECK(dimJ(braid, 2) == 3);

    const Arrangement boolean2 = booleanArrangement(2);
    CHECK(dimC(boolean2, 3) == 4);
    CHECK(dimAO(boolean2, 3) == 0);

    const Arrangement empty(2, {});
    CHECK(dimC(empty, 0) == 1);
    CHECK(dimC(empty, 1) == 0);
}

TEST_CASE("per-flat dimensions", "[oracle]") {
    const Arrangement arr = braidArrangement(3);
    const Lattice lat = intersectionLattice(arr);
    CHECK(dimCX(arr, lat, 1, 2) == 1); // 1/(x1-x2)^2 only
    CHECK(dimCX(arr, lat, 4, 2) == 2); // three pairs, one relation
    CHECK(dimCX(arr, lat, 0, 0) == 1);
    CHECK(dimCX(arr, lat, 0, 1) == 0);
}

TEST_CASE("per-flat components are free modules over the transverse operators", "[oracle]") {
    // dim C_{X,p} = |mu(X)| C(p-1, codim-1) for codim >= 1, and [p == 0] at V
    for (const char* spec : {"braid:3", "boolean:3", "generic:4,2"}) {
        CAPTURE(spec);
        const Arrangement arr = builtinArrangement(spec);
        const Lattice lat = mobius(intersectionLattice(arr));
        for (const Flat& f : lat.flats()) {
            for (int p = 0; p <= 3; ++p) {
                const BigInt expected =
                    f.codim == 0 ? BigInt(p == 0 ? 1 : 0)
                                 : abs(f.mobius) * binomial(p - 1, f.codim - 1);
                CAPTURE(f.id, p);
                CHECK(BigInt(dimCX(arr, lat, f.id, p)) == expected);
            }
        }
    }
}

TEST_CASE("derivative span dimensions", "[oracle]") {
    const Arrangement braid = braidArrangement(3);
    CHECK(dimDerivativeSpan(braid, 2) == 3);
    // dim C_3 - dim AO_3 = 7 - 0
    CHECK(dimDerivativeSpan(braid, 3) == 7);
    CHECK(dimDerivativeSpan(booleanArrangement(2), 1) == 0);
    CHECK_THROWS_AS(dimDerivativeSpan(braid, 0), std::invalid_argument);
}

TEST_CASE("module structure verification", "[oracle]") {
    const GradedReport braid = verifyModuleStructure(braidArrangement(3), 4);
    CHECK(braid.allPass);
    CHECK(braid.dimCs == std::vector<std::size_t>{1, 3, 5, 7, 9});
    CHECK(braid.dimAOs == std::vector<std::size_t>{1, 3, 2, 0, 0});
    CHECK(braid.dimJs == std::vector<std::size_t>{0, 0, 3, 7, 9});
    CHECK(braid.dimDerivativeSpans == std::vector<std::size_t>{0, 0, 3, 7, 9});

    const GradedReport boolean2 = verifyModuleStructure(booleanArrangement(2), 3);
    CHECK(boolean2.allPass);
    CHECK(boolean2.dimCs == std::vector<std::size_t>{1, 2, 3, 4});

    const GradedReport generic = verifyModuleStructure(genericArrangement(4, 2), 3);
    CHECK(generic.allPass);
    CHECK(generic.dimCs == std::vector<std::size_t>{1, 4, 7, 10});

    const GradedReport empty = verifyModuleStructure(Arrangement(2, {}), 2);
    CHECK(empty.allPass);
    CHECK(empty.dimCs == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("flat decomposition verification", "[oracle]") {
    const GradedReport braid = verifyFlatDecomposition(braidArrangement(3), 3);
    CHECK(braid.allPass);
    // at p = 2: nothing from V, one per hyperplane, two from the deep flat
    CHECK(braid.dimCXs[2] == std::vector<std::size_t>{0, 1, 1, 1, 2});

    const GradedReport boolean2 = verifyFlatDecomposition(booleanArrangement(2), 2);
    CHECK(boolean2.allPass);
    CHECK(boolean2.dimCXs[2] == std::vector<std::size_t>{0, 1, 1, 1});

    CHECK(verifyFlatDecomposition(Arrangement(2, {}), 1).allPass);
}

TEST_CASE("oracle dimensions match the combinatorial series", "[oracle]") {
    for (const char* spec : {"braid:3", "boolean:2", "boolean:3", "generic:4,2"}) {
        CAPTURE(spec);
        const Arrangement arr = builtinArrangement(spec);
        const TruncatedSeries s = seriesOfC(arr, 3);
        for (int p = 0; p <= 3; ++p)
            CHECK(BigInt(dimC(arr, p)) == s.coefficient(p));
    }
}

TEST_CASE("the entry budget guards oversized computations", "[oracle]") {
    OracleOptions opts;
    opts.entryBudget = 10;
    try {
        dimC(braidArrangement(3), 3, opts);
        FAIL("expected TooLargeError");
    } catch (const TooLargeError& e) {
        CHECK(e.estimatedEntries > 10);
    }
    // degree 0 never needs a guard
    CHECK(dimC(braidArrangement(3), 0, opts) == 1);
}

TEST_CASE("coordinate derivatives obey the quotient rule", "[oracle]") {
    const Arrangement arr = booleanArrangement(2);
    ReciprocalCombo unit;
    unit[ReciprocalTuple({0})] = 1; // 1/x1
    const ReciprocalCombo dx = coordinateDerivative(arr, unit, 0);
    REQUIRE(dx.size() == 1);
    CHECK(dx.at(ReciprocalTuple({0, 0})) == Rational(-1)); // -1/x1^2
    CHECK(coordinateDerivative(arr, unit, 1).empty());     // d/dx2 of 1/x1

    // second derivative: 2/x1^3
    const ReciprocalCombo dxx = coordinateDerivative(arr, dx, 0);
    CHECK(dxx.at(ReciprocalTuple({0, 0, 0})) == Rational(2));
}

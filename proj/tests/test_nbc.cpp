#include "recipalg/nbc.hpp"

#include "recipalg/families.hpp"
#include "recipalg/lattice.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace recipalg;

TEST_CASE("circuits of the small families", "[nbc]") {
    const auto braid = circuits(braidArrangement(3));
    REQUIRE(braid.size() == 1);
    CHECK(braid[0].indices == std::vector<int>{0, 1, 2});

    CHECK(circuits(booleanArrangement(2)).empty());
    CHECK(circuits(booleanArrangement(3)).empty());

    // any 3 of the 4 moment-curve forms in dimension 2 are dependent
    const auto generic = circuits(genericArrangement(4, 2));
    REQUIRE(generic.size() == 4);
    for (const Circuit& c : generic)
        CHECK(c.indices.size() == 3);
}

TEST_CASE("broken circuits drop the least element and deduplicate", "[nbc]") {
    CHECK(brokenCircuits(braidArrangement(3)) ==
          std::vector<std::vector<int>>{{1, 2}});
    CHECK(brokenCircuits(booleanArrangement(2)).empty());
    // circuits {0,1,2},{0,1,3},{0,2,3},{1,2,3} give {1,2},{1,3},{2,3}
    CHECK(brokenCircuits(genericArrangement(4, 2)) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("nbc sets of the braid arrangement", "[nbc]") {
    const Arrangement arr = braidArrangement(3);
    const Lattice lat = intersectionLattice(arr);
    const auto perFlat = nbcSets(arr, lat);

    REQUIRE(perFlat.size() == 5);
    REQUIRE(perFlat[0].size() == 1);
    CHECK(perFlat[0][0].indices.empty()); // the empty tuple belongs to V
    for (int id = 1; id <= 3; ++id) {
        REQUIRE(perFlat[id].size() == 1);
        CHECK(perFlat[id][0].indices.size() == 1);
    }
    // pairs avoiding the broken circuit {2,3} (1-based)
    REQUIRE(perFlat[4].size() == 2);
    CHECK(perFlat[4][0].indices == std::vector<int>{0, 1});
    CHECK(perFlat[4][1].indices == std::vector<int>{0, 2});
}

TEST_CASE("nbc sets are independent and avoid broken circuits", "[nbc]") {
    for (const char* spec : {"braid:3", "braid:4", "boolean:3", "generic:4,2", "generic:5,3"}) {
        CAPTURE(spec);
        const Arrangement arr = builtinArrangement(spec);
        const Lattice lat = intersectionLattice(arr);
        const auto broken = brokenCircuits(arr);
        for (const auto& sets : nbcSets(arr, lat)) {
            for (const NbcSet& s : sets) {
                CHECK(detail::formSetRank(arr, s.indices) == s.indices.size());
                CHECK(static_cast<std::size_t>(lat.flat(s.flatId).codim) == s.indices.size());
                for (const auto& bc : broken)
                    CHECK_FALSE(std::includes(s.indices.begin(), s.indices.end(), bc.begin(),
                                              bc.end()));
            }
        }
    }
}

TEST_CASE("nbc counts match the Mobius values", "[nbc]") {
    for (const char* spec :
         {"braid:3", "braid:4", "boolean:2", "boolean:3", "generic:4,2", "generic:5,2",
          "generic:5,3"}) {
        CAPTURE(spec);
        const Arrangement arr = builtinArrangement(spec);
        const NbcCountReport report = checkNbcCount(arr, mobius(intersectionLattice(arr)));
        CHECK(report.allPass);
    }

    const NbcCountReport empty =
        checkNbcCount(Arrangement(2, {}), mobius(intersectionLattice(Arrangement(2, {}))));
    REQUIRE(empty.rows.size() == 1);
    CHECK(empty.rows[0].nbcCount == 1);
    CHECK(empty.allPass);
}

TEST_CASE("checkNbcCount requires Mobius values", "[nbc]") {
    const Arrangement arr = braidArrangement(3);
    CHECK_THROWS_AS(checkNbcCount(arr, intersectionLattice(arr)), std::invalid_argument);
}

TEST_CASE("per-degree nbc counts give the Poincare coefficients", "[nbc]") {
    for (const char* spec : {"braid:3", "braid:4", "boolean:3", "generic:5,2", "generic:5,3"}) {
        CAPTURE(spec);
        const Arrangement arr = builtinArrangement(spec);
        const Lattice lat = intersectionLattice(arr);
        const UnivariatePolynomial poin = poincarePolynomial(arr);
        std::map<std::size_t, BigInt> byDegree;
        for (const auto& sets : nbcSets(arr, lat))
            for (const NbcSet& s : sets)
                byDegree[s.indices.size()] += 1;
        for (std::size_t k = 0; k <= poin.degree(); ++k)
            CHECK(byDegree[k] == poin.coefficient(k));
    }
}

TEST_CASE("reordering the forms changes nbc sets but never the counts", "[nbc]") {
    const Arrangement base = braidArrangement(3);
    const UnivariatePolynomial poin = poincarePolynomial(base);

    for (const std::vector<int>& order :
         {std::vector<int>{1, 2, 0}, std::vector<int>{2, 1, 0}, std::vector<int>{0, 2, 1}}) {
        CAPTURE(order);
        const Arrangement arr = base.permuted(order);
        const Lattice lat = mobius(intersectionLattice(arr));
        CHECK(checkNbcCount(arr, lat).allPass);
        // the per-degree totals are order independent
        std::map<std::size_t, BigInt> byDegree;
        for (const auto& sets : nbcSets(arr, lat))
            for (const NbcSet& s : sets)
                byDegree[s.indices.size()] += 1;
        for (std::size_t k = 0; k <= poin.degree(); ++k)
            CHECK(byDegree[k] == poin.coefficient(k));
    }
}

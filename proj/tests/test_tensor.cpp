#include <doctest.h>

#include "oracles.hpp"
#include "pieri/tensor.hpp"

using namespace pieri;

namespace {

Weight W(std::vector<int> true_coords) { return Weight::from_true(std::move(true_coords)); }

Decomposition make_dec(GroupType g, std::vector<std::pair<std::vector<int>, int>> trues) {
    Decomposition d(g);
    for (auto& [w, m] : trues)
        d.add(W(w), m);
    return d;
}

} // namespace

TEST_SUITE("tensor") {

TEST_CASE("klimyk reproduces the rank-4 exterior example") {
    GroupType a4(Family::A, 4);
    Decomposition dec = klimyk_decompose(a4, W({3, 2, 1, 0}), exterior_power(a4, 2));
    CHECK(dec == make_dec(a4, {{{3, 2, 2, 1}, 1},
                               {{3, 3, 1, 1}, 1},
                               {{3, 3, 2, 0}, 1},
                               {{4, 2, 1, 1}, 1},
                               {{4, 2, 2, 0}, 1},
                               {{4, 3, 1, 0}, 1}}));
}

TEST_CASE("klimyk reproduces the rank-3 symmetric square example") {
    GroupType a3(Family::A, 3);
    Decomposition dec = klimyk_decompose(a3, W({2, 1, 1}), symmetric_power(a3, 2));
    CHECK(dec == make_dec(a3, {{{3, 2, 1}, 1}, {{4, 1, 1}, 1}}));
    // (2,2,2) = lambda + (0,1,1) is dominant yet absent
    CHECK_FALSE(dec.contains(W({2, 2, 2})));
}

TEST_CASE("tensoring with the trivial diagram is the identity") {
    GroupType c3(Family::C, 3);
    WeightDiagram trivial(c3);
    trivial.add(W({0, 0, 0}), 1);
    Decomposition dec = klimyk_decompose(c3, W({3, 1, 0}), trivial);
    CHECK(dec == make_dec(c3, {{{3, 1, 0}, 1}}));
}

TEST_CASE("klimyk rejects non-characters with a negative total") {
    GroupType a2(Family::A, 2);
    WeightDiagram fake(a2);
    fake.add(W({0, 2}), 1);
    CHECK_THROWS_AS(klimyk_decompose(a2, W({0, 0}), fake), invalid_character_error);
}

TEST_CASE("tensor_irreps spot values") {
    GroupType a2(Family::A, 2);
    CHECK(tensor_irreps(a2, W({1, 0}), W({1, 0})) ==
          make_dec(a2, {{{2, 0}, 1}, {{1, 1}, 1}}));
    CHECK(tensor_irreps(a2, W({3, 1}), W({0, 0})) == make_dec(a2, {{{3, 1}, 1}}));

    GroupType c2(Family::C, 2);
    CHECK(tensor_irreps(c2, W({1, 0}), W({1, 0})) ==
          make_dec(c2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 0}, 1}}));
}

TEST_CASE("tensor_irreps agrees with greedy peeling of the product character") {
    for (GroupType g : {GroupType(Family::A, 2), GroupType(Family::C, 2), GroupType(Family::B, 2),
                        GroupType(Family::D, 2)}) {
        auto doms = dominant_weights_up_to(g, 2);
        for (const Weight& lam : doms) {
            for (const Weight& mu : doms) {
                Decomposition dec = tensor_irreps(g, lam, mu);
                auto peeled =
                    oracle::peel_decompose(convolve(freudenthal(g, lam), freudenthal(g, mu)));
                CAPTURE(g.str());
                CAPTURE(lam.str());
                CAPTURE(mu.str());
                CHECK(dec.terms() == peeled);
            }
        }
    }
}

TEST_CASE("tensor product is commutative") {
    for (GroupType g : {GroupType(Family::B, 2), GroupType(Family::C, 3)}) {
        auto doms = dominant_weights_up_to(g, 2);
        for (const Weight& lam : doms)
            for (const Weight& mu : doms)
                CHECK(tensor_irreps(g, lam, mu) == tensor_irreps(g, mu, lam));
    }
}

TEST_CASE("character-level soundness and dimension conservation") {
    for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
        for (int rank = (fam == Family::D ? 2 : 1); rank <= 2; ++rank) {
            GroupType g(fam, rank);
            for (const Weight& lam : dominant_weights_up_to(g, 2)) {
                for (int i = 0; i <= std::min(3, g.dim_defining()); ++i) {
                    for (bool ext : {true, false}) {
                        WeightDiagram u = ext ? exterior_power(g, i) : symmetric_power(g, i);
                        Decomposition dec = klimyk_decompose(g, lam, u);
                        CHECK(diagram_of_decomposition(dec) == convolve(freudenthal(g, lam), u));
                        CHECK(dec.total_dimension() == weyl_dim(g, lam) * u.mass());
                    }
                }
            }
        }
    }
}

TEST_CASE("constituents stay within the weight support bound") {
    GroupType b2(Family::B, 2);
    auto doms = dominant_weights_up_to(b2, 2);
    for (const Weight& lam : doms) {
        for (const Weight& mu : doms) {
            WeightDiagram wd = freudenthal(b2, mu);
            for (const auto& [hw, m] : tensor_irreps(b2, lam, mu).terms()) {
                Int bound = wd.multiplicity(Weight(hw) - lam);
                CHECK(bound > 0);
                CHECK(m <= bound);
            }
        }
    }
}

TEST_CASE("deep_pieri on a regular symplectic weight") {
    GroupType c2(Family::C, 2);
    auto [holds, dec] = deep_pieri(c2, W({2, 1}), exterior_power(c2, 2));
    CHECK(holds);
    REQUIRE(dec.has_value());
    CHECK(*dec == make_dec(c2, {{{3, 2}, 1}, {{3, 0}, 1}, {{1, 0}, 1}, {{2, 1}, 2}}));
    CHECK(*dec == klimyk_decompose(c2, W({2, 1}), exterior_power(c2, 2)));
}

TEST_CASE("deep_pieri hypothesis fails near the walls") {
    GroupType a2(Family::A, 2);
    WeightDiagram u = convolve(defining_weights(a2), defining_weights(a2));
    auto res = deep_pieri(a2, W({0, 0}), u);
    CHECK_FALSE(res.hypothesis_holds);
    CHECK_FALSE(res.dec.has_value());
}

TEST_CASE("deep_pieri equals klimyk whenever the hypothesis holds") {
    for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
        GroupType g(fam, 2);
        for (const Weight& lam : dominant_weights_up_to(g, 3)) {
            for (int i = 0; i <= std::min(3, g.dim_defining()); ++i) {
                for (bool ext : {true, false}) {
                    WeightDiagram u = ext ? exterior_power(g, i) : symmetric_power(g, i);
                    auto res = deep_pieri(g, lam, u);
                    if (res.hypothesis_holds)
                        CHECK(*res.dec == klimyk_decompose(g, lam, u));
                }
            }
        }
    }
}

TEST_CASE("minuscule detection") {
    GroupType a3(Family::A, 3);
    CHECK(minuscule_hypothesis(a3, defining_weights(a3), W({2, 1, 0})));
    GroupType c2(Family::C, 2);
    CHECK(minuscule_hypothesis(c2, defining_weights(c2), W({2, 1})));
    CHECK_FALSE(minuscule_hypothesis(c2, exterior_power(c2, 2), W({2, 1})));
    GroupType b2(Family::B, 2);
    CHECK_FALSE(minuscule_hypothesis(b2, defining_weights(b2), W({1, 0})));
    CHECK(minuscule_hypothesis(b2, freudenthal(b2, Weight({1, 1})), W({1, 0}))); // spin rep
    WeightDiagram trivial(c2);
    trivial.add(W({0, 0}), 1);
    CHECK(minuscule_hypothesis(c2, trivial, W({3, 1})));
}

TEST_CASE("necessity scan finds no counterexamples on small domains") {
    GroupType c2(Family::C, 2);
    CHECK(necessity_scan(c2, 2, {exterior_power(c2, 1), exterior_power(c2, 2)}).empty());
    GroupType a2(Family::A, 2);
    CHECK(necessity_scan(a2, 1, {defining_weights(a2)}).empty());
    CHECK(necessity_scan(a2, 0, {}).empty());
}

} // TEST_SUITE

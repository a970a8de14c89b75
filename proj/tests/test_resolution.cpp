#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mistab/decomposition.hpp"
#include "mistab/families.hpp"
#include "mistab/resolution.hpp"
#include "testutil.hpp"

using namespace mistab;
using namespace mistab::test;

namespace {
const Ring R2 = Ring({"x", "y"});
const Ring R3 = ring_xyz();
const Ring R4 = ring_xyzu();
} // namespace

TEST_CASE("lcm lattice contents") {
    auto two = lcm_lattice(ideal_of(R2, "x, y"));
    REQUIRE(two.elements.size() == 4);
    CHECK(two.elements[0].is_one());

    auto cyc = lcm_lattice(cycle_squares_ideal());
    // bottom, three generators, and the single join x^2y^2z^2
    REQUIRE(cyc.elements.size() == 5);
    CHECK(cyc.elements.back() == mono_of(R3, "x^2*y^2*z^2"));

    auto principal = lcm_lattice(ideal_of(R3, "x^2*y"));
    CHECK(principal.elements.size() == 2);

    std::vector<Monomial> many;
    for (int i = 0; i < 21; ++i)
        many.push_back(Monomial({i + 1, 21 - i, 0, 0}));
    CHECK_THROWS_AS(lcm_lattice(MonomialIdeal::make(R4, many)), ResourceLimitError);
}

TEST_CASE("betti table of two variables") {
    BettiTable t = betti_table(ideal_of(R2, "x, y"));
    CHECK(t.rank(0, Monomial::one(2)) == 1);
    CHECK(t.rank(1, Monomial({1, 0})) == 1);
    CHECK(t.rank(1, Monomial({0, 1})) == 1);
    CHECK(t.rank(2, Monomial({1, 1})) == 1);
    CHECK(t.pd() == 2);
    CHECK(t.total(1) == 2);
    CHECK(depth(ideal_of(R2, "x, y")) == 0);
}

TEST_CASE("betti fixtures") {
    BettiTable principal = betti_table(ideal_of(R2, "x^2"));
    CHECK(principal.total(0) == 1);
    CHECK(principal.total(1) == 1);
    CHECK(principal.pd() == 1);

    MonomialIdeal path = path_edge_ideal();
    CHECK(betti_table(path).pd() == 2);
    CHECK(depth(path) == 2);
    CHECK(betti_table(power(path, 2)).pd() == 3);
    CHECK(depth(power(path, 2)) == 1);
}

TEST_CASE("first syzygies are the minimal generators") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal I = random_proper_ideal(R3, rng, 4, 3);
        BettiTable t = betti_table(I);
        CHECK(t.total(1) == static_cast<std::int64_t>(I.ngens()));
        for (const auto& g : I.gens())
            CHECK(t.rank(1, g) == 1);
    }
}

TEST_CASE("homology route matches the Koszul oracle") {
    // Exhaustive over two-variable antichains with exponents <= 2.
    std::vector<Monomial> pool;
    for (std::int64_t a = 0; a <= 2; ++a)
        for (std::int64_t b = 0; b <= 2; ++b)
            if (a + b > 0)
                pool.push_back(Monomial({a, b}));
    int checked = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j)
            for (std::size_t k = j; k < pool.size(); ++k) {
                MonomialIdeal I = MonomialIdeal::make(R2, {pool[i], pool[j], pool[k]});
                if (I.is_unit() || I.is_zero())
                    continue;
                CHECK(betti_table(I) == koszul_betti_oracle(I));
                ++checked;
            }
    CHECK(checked > 100);

    Rng rng(64);
    for (int trial = 0; trial < 60; ++trial) {
        MonomialIdeal I = random_proper_ideal(R3, rng, 4, 3);
        CHECK(betti_table(I) == koszul_betti_oracle(I));
    }
}

TEST_CASE("depth fixtures for the gap family") {
    MonomialIdeal I = closure_gap_ideal(2);
    for (int n = 1; n <= 3; ++n)
        CHECK(depth(power(I, n)) == 1);
    CHECK(depth(power(I, 4)) == 0);
}

TEST_CASE("depth fixtures for the lagging-depth family") {
    MonomialIdeal J = depth_lag_family(2);
    CHECK(depth(J) == 2);
    CHECK(depth(power(J, 2)) == 2);
    CHECK(depth(power(J, 3)) == 1);
}

TEST_CASE("depth edge cases") {
    CHECK(depth(MonomialIdeal::zero(R3)) == 3);
    CHECK_THROWS_AS(depth(MonomialIdeal::unit(R3)), UsageError);
    CHECK(depth(ideal_of(R2, "x")) == 1);
}

TEST_CASE("Auslander-Buchsbaum bookkeeping on random ideals") {
    Rng rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        MonomialIdeal I = random_proper_ideal(R4, rng, 4, 3);
        int d = depth(I);
        int pd = projective_dimension(I);
        CHECK(d + pd == 4);
        CHECK(pd == betti_table(I).pd());
        CHECK(d >= 0);
        CHECK(d <= 4 - height(I));

        auto ass = associated_primes(I);
        PrimeSupport full({0, 1, 2, 3}, 4);
        bool full_assoc = std::binary_search(ass.begin(), ass.end(), full);
        CHECK((d == 0) == full_assoc);
    }
}

TEST_CASE("depth is invariant under a monomial scale") {
    Rng rng(909);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 40; ++trial) {
        MonomialIdeal raw = random_proper_ideal(R3, rng, 4, 3);
        auto [g, J] = factor_gcd(raw);
        if (J.is_unit())
            continue;
        std::vector<std::int64_t> fe(3);
        for (auto& e : fe)
            e = static_cast<std::int64_t>(rng.below(3));
        Monomial f{std::move(fe)};
        if (f.is_one())
            continue;
        ++done;
        CHECK(depth(multiply(MonomialIdeal::principal(R3, f), J)) == depth(J));
    }
    CHECK(done == 40);
}

TEST_CASE("prime-field diagnostic agrees in every bundled case") {
    std::vector<MonomialIdeal> fixtures = {cycle_squares_ideal(), closure_gap_ideal(1),
                                           path_edge_ideal(), power(path_edge_ideal(), 2)};
    Rng rng(4242);
    for (int trial = 0; trial < 25; ++trial)
        fixtures.push_back(random_proper_ideal(R3, rng, 4, 3));
    for (const auto& I : fixtures) {
        BettiTable rational = betti_table(I);
        CHECK(betti_table_mod_p(I, 2) == rational);
        CHECK(betti_table_mod_p(I, 32003) == rational);
    }
    CHECK_THROWS_AS(betti_table_mod_p(cycle_squares_ideal(), 6), UsageError);
    CHECK_THROWS_AS(betti_table_mod_p(cycle_squares_ideal(), 1), UsageError);
}

TEST_CASE("guards refuse oversized homology input") {
    std::vector<Monomial> many;
    for (int i = 0; i < 21; ++i)
        many.push_back(Monomial({i + 1, 21 - i, 0}));
    MonomialIdeal wide = MonomialIdeal::make(R3, many);
    CHECK(wide.ngens() == 21);
    CHECK_THROWS_AS(betti_table(wide), ResourceLimitError);
    CHECK_THROWS_AS(koszul_betti_oracle(wide), ResourceLimitError);
    // depth takes the Koszul route and is not bound by the generator cap
    CHECK(depth(wide) >= 0);

    Limits tight;
    tight.chain_cap = 3;
    CHECK_THROWS_AS(betti_table(power(path_edge_ideal(), 2), tight), ResourceLimitError);
}

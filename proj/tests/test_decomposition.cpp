#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mistab/decomposition.hpp"
#include "mistab/families.hpp"
#include "mistab/ideal.hpp"
#include "testutil.hpp"

using namespace mistab;
using namespace mistab::test;

namespace {

const Ring R3 = ring_xyz();
const Ring R4 = ring_xyzu();

PrimeSupport prime(std::vector<int> vars, int n) {
    return PrimeSupport(std::move(vars), n);
}

std::vector<PrimeSupport> primes(std::vector<std::vector<int>> sets, int n) {
    std::vector<PrimeSupport> out;
    for (auto& s : sets)
        out.emplace_back(std::move(s), n);
    std::sort(out.begin(), out.end());
    return out;
}

MonomialIdeal intersect_all(const Ring& ring, const std::vector<IrreducibleComponent>& comps,
                            int skip = -1) {
    MonomialIdeal acc = MonomialIdeal::unit(ring);
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (static_cast<int>(i) != skip)
            acc = intersect(acc, comps[i].to_ideal(ring));
    return acc;
}

} // namespace

TEST_CASE("irreducible decomposition of the gap family at c=2") {
    MonomialIdeal I = closure_gap_ideal(2);
    auto comps = irreducible_decomposition(I);
    REQUIRE(comps.size() == 3);
    std::set<std::string> names;
    for (const auto& c : comps)
        names.insert(c.to_ideal(R3).str());
    CHECK(names == std::set<std::string>{"(z, x^6)", "(y^6, x)", "(y^4, x^6)"});
    CHECK(intersect_all(R3, comps) == I);
}

TEST_CASE("irreducible decomposition basics") {
    auto single = irreducible_decomposition(ideal_of(R3, "x^2"));
    REQUIRE(single.size() == 1);
    CHECK(single[0].to_ideal(R3) == ideal_of(R3, "x^2"));

    // Squarefree case against a brute-force oracle: enumerate every
    // irreducible ideal with exponents <= 1, keep those containing the input,
    // and find the smallest family intersecting back to it.
    MonomialIdeal edges = ideal_of(R3, "x*y, x*z, y*z");
    std::vector<MonomialIdeal> candidates;
    for (unsigned mask = 1; mask < 8; ++mask) {
        std::vector<Monomial> gens;
        for (int v = 0; v < 3; ++v)
            if (mask & (1u << v))
                gens.push_back(Monomial::variable(3, v));
        MonomialIdeal q = MonomialIdeal::make(R3, std::move(gens));
        if (subset(edges, q))
            candidates.push_back(q);
    }
    std::size_t best = candidates.size() + 1;
    std::vector<MonomialIdeal> best_family;
    for (unsigned pick = 1; pick < (1u << candidates.size()); ++pick) {
        MonomialIdeal meet = MonomialIdeal::unit(R3);
        std::vector<MonomialIdeal> family;
        for (std::size_t t = 0; t < candidates.size(); ++t)
            if (pick & (1u << t)) {
                meet = intersect(meet, candidates[t]);
                family.push_back(candidates[t]);
            }
        if (meet == edges && family.size() < best) {
            best = family.size();
            best_family = family;
        }
    }
    auto comps = irreducible_decomposition(edges);
    REQUIRE(comps.size() == best);
    std::set<std::string> got, oracle;
    for (const auto& c : comps)
        got.insert(c.to_ideal(R3).str());
    for (const auto& q : best_family)
        oracle.insert(q.str());
    CHECK(got == oracle);
    CHECK(intersect_all(R3, comps) == edges);

    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(R3)), UsageError);
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(R3)), UsageError);
}

TEST_CASE("decomposition intersects back and is irredundant on random input") {
    Rng rng(404);
    for (int trial = 0; trial < 80; ++trial) {
        MonomialIdeal I = random_proper_ideal(R3, rng, 5, 4);
        auto comps = irreducible_decomposition(I);
        CHECK(intersect_all(R3, comps) == I);
        if (comps.size() > 1) {
            for (std::size_t i = 0; i < comps.size(); ++i) {
                MonomialIdeal others = intersect_all(R3, comps, static_cast<int>(i));
                CHECK(others != I); // dropping any component strictly enlarges
            }
        }
    }
}

TEST_CASE("associated primes fixtures") {
    MonomialIdeal cyc = cycle_squares_ideal();
    CHECK(associated_primes(cyc) == primes({{0, 1}, {0, 2}, {1, 2}}, 3));
    CHECK(associated_primes(power(cyc, 2)) ==
          primes({{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}, 3));

    for (int c : {2, 3})
        CHECK(associated_primes(ass_lag_family(c)) ==
              primes({{0, 3}, {2, 3}, {1, 2, 3}, {0, 1, 3}}, 4));

    CHECK(associated_primes(ideal_of(R3, "x^5")) == primes({{0}}, 3));
}

TEST_CASE("minimal primes and height") {
    CHECK(minimal_primes(depth_lag_family(2)) == primes({{0, 2}, {0, 3}, {1, 2}, {1, 3}}, 4));
    CHECK(minimal_primes(ideal_of(R3, "x^2*y^3")) == primes({{0}, {1}}, 3));
    CHECK(height(ideal_of(R3, "x^2*y^3")) == 1);
    CHECK(height(cycle_squares_ideal()) == 2);
}

TEST_CASE("potential associated primes") {
    CHECK(potential_ass(cycle_squares_ideal()) ==
          primes({{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}, 3));

    auto all_with_x = potential_ass(ideal_of(R3, "x"));
    CHECK(all_with_x.size() == 4); // every support containing x
    for (const auto& p : all_with_x)
        CHECK(p.contains_var(0));

    // Oracle: enumerate all 15 supports of a 4-variable ring directly.
    MonomialIdeal path = path_edge_ideal();
    auto computed = potential_ass(path);
    std::vector<PrimeSupport> expected;
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<int> vars;
        for (int v = 0; v < 4; ++v)
            if (mask & (1u << v))
                vars.push_back(v);
        bool cover = true;
        for (const auto& g : path.gens()) {
            bool hit = false;
            for (int v : vars)
                hit = hit || g[v] > 0;
            cover = cover && hit;
        }
        if (cover)
            expected.emplace_back(std::move(vars), 4);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(computed == expected);
}

TEST_CASE("witness search") {
    MonomialIdeal principal = ideal_of(R3, "x");
    auto w = ass_witness(principal, prime({0}, 3));
    REQUIRE(w.has_value());
    CHECK(w->is_one());

    // Socle element of the gap family at c=1, power 3.
    MonomialIdeal cube = power(closure_gap_ideal(1), 3);
    PrimeSupport full({0, 1, 2}, 3);
    auto socle = ass_witness(cube, full);
    REQUIRE(socle.has_value());
    CHECK(colon(cube, *socle) == full.to_ideal(R3));
    Monomial paper_witness = closure_gap_socle_witness(1);
    CHECK(paper_witness == mono_of(R3, "x^4*y^7*z^2"));
    CHECK(colon(cube, paper_witness) == full.to_ideal(R3));
    CHECK_FALSE(cube.contains(paper_witness));

    MonomialIdeal cyc2 = power(cycle_squares_ideal(), 2);
    CHECK(ass_witness(cyc2, full).has_value());

    // Absent witness: (x) has no witness for (x,y).
    CHECK_FALSE(ass_witness(principal, prime({0, 1}, 3)).has_value());

    Limits tiny;
    tiny.witness_box_cap = 2;
    CHECK_THROWS_AS(ass_witness(cube, full, tiny), ResourceLimitError);
}

TEST_CASE("witness oracle agrees with associated primes") {
    Rng rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal I = random_proper_ideal(R3, rng, 4, 3);
        auto ass = associated_primes(I);
        for (const auto& p : potential_ass(I)) {
            bool in_ass = std::binary_search(ass.begin(), ass.end(), p);
            CHECK(in_ass == ass_witness(I, p).has_value());
        }
    }
}

TEST_CASE("min inside ass inside potential") {
    Rng rng(55);
    for (int trial = 0; trial < 60; ++trial) {
        MonomialIdeal I = random_proper_ideal(R4, rng, 4, 3);
        auto mins = minimal_primes(I);
        auto ass = associated_primes(I);
        auto pot = potential_ass(I);
        CHECK(std::includes(ass.begin(), ass.end(), mins.begin(), mins.end()));
        CHECK(std::includes(pot.begin(), pot.end(), ass.begin(), ass.end()));
    }
}

TEST_CASE("radical collapses ass to min") {
    Rng rng(91);
    for (int trial = 0; trial < 60; ++trial) {
        MonomialIdeal I = random_proper_ideal(R3, rng, 4, 4);
        MonomialIdeal rad = radical(I);
        CHECK(associated_primes(rad) == minimal_primes(rad));
        CHECK(minimal_primes(rad) == minimal_primes(I));
    }
}

TEST_CASE("scaling by a monomial factor shifts Ass by its support") {
    Rng rng(123);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 50; ++trial) {
        MonomialIdeal raw = random_proper_ideal(R3, rng, 4, 3);
        auto [g, J] = factor_gcd(raw); // gcd-one generators => height >= 2
        if (J.is_unit() || J.ngens() < 2)
            continue;
        std::vector<std::int64_t> fe(3);
        for (auto& e : fe)
            e = static_cast<std::int64_t>(rng.below(3));
        Monomial f{std::vector<std::int64_t>(fe)};
        if (f.is_one())
            continue;
        ++done;

        for (int k = 1; k <= 2; ++k) {
            MonomialIdeal scaled =
                multiply(MonomialIdeal::principal(R3, f.pow(k)), power(J, k));
            std::set<PrimeSupport> expected;
            for (int v : f.support())
                expected.insert(prime({v}, 3));
            for (const auto& p : associated_primes(power(J, k)))
                expected.insert(p);
            auto got = associated_primes(scaled);
            CHECK(got == std::vector<PrimeSupport>(expected.begin(), expected.end()));
        }
    }
    CHECK(done == 50);
}

TEST_CASE("decomposition cache is shared safely across related ideals") {
    DecompositionCache cache;
    MonomialIdeal I = cycle_squares_ideal();
    auto a1 = associated_primes(power(I, 2), &cache);
    auto a2 = associated_primes(power(I, 2), &cache);
    CHECK(a1 == a2);
    CHECK(cache.size() > 0);
}

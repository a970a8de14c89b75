// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every expected value is pinned here; runtime budgets are enforced.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mistab/closure.hpp"
#include "mistab/decomposition.hpp"
#include "mistab/families.hpp"
#include "mistab/ideal.hpp"
#include "mistab/resolution.hpp"
#include "mistab/stability.hpp"

using namespace mistab;

namespace {

struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok)
            failures.push_back(what);
    }

    template <typename T>
    void expect_eq(const T& got, const T& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream os;
            os << what << " (mismatch)";
            failures.push_back(os.str());
        }
    }
};

std::vector<PrimeSupport> primes(std::vector<std::vector<int>> sets, int n) {
    std::vector<PrimeSupport> out;
    for (auto& s : sets)
        out.emplace_back(std::move(s), n);
    std::sort(out.begin(), out.end());
    return out;
}

StabilityReport run_profile(const MonomialIdeal& ideal, int horizon, bool with_closure) {
    ProfileOptions opts;
    opts.with_closure = with_closure;
    return profile(ideal, horizon, opts);
}

// ---- criterion bodies -------------------------------------------------------

void criterion1_cycle_squares(Check& c) {
    MonomialIdeal I = cycle_squares_ideal();
    StabilityReport rep = run_profile(I, 5, true);

    c.expect(rep.astab_observed == 2, "astab_observed = 2");
    c.expect(rep.astabbar_observed == 1, "astabbar_observed = 1");
    c.expect_eq(rep.records[0].ass, primes({{0, 1}, {0, 2}, {1, 2}}, 3), "Ass(I)");
    c.expect_eq(rep.records[1].ass, primes({{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}, 3), "Ass(I^2)");
    c.expect(integral_closure(I, 1) == cycle_squares_closure(),
             "closure(I) has exactly the six known generators");
    for (const auto& r : rep.records)
        if (r.strong_persistence)
            c.expect(*r.strong_persistence,
                     "strong persistence at n=" + std::to_string(r.n));
}

void criterion2_closure_gap(Check& c) {
    for (int cc = 1; cc <= 3; ++cc) {
        std::string tag = "c=" + std::to_string(cc) + ": ";
        MonomialIdeal I = closure_gap_ideal(cc);
        int horizon = cc + 4;
        StabilityReport rep = run_profile(I, horizon, true);

        c.expect(rep.astab_observed == cc + 2, tag + "astab = c+2");
        c.expect(rep.certification.count("astab") &&
                     rep.certification.at("astab").level == CertLevel::Certified,
                 tag + "astab certified");
        c.expect(rep.astabbar_observed == 2, tag + "astab-bar = 2");

        for (int n = 1; n <= horizon; ++n)
            c.expect(rep.records[static_cast<std::size_t>(n - 1)].depth ==
                         (n <= cc + 1 ? 1 : 0),
                     tag + "depth profile at n=" + std::to_string(n));

        c.expect_eq(*rep.records[0].closure_ass, primes({{0, 2}, {0, 1}}, 3),
                    tag + "Ass(closure(I))");
        PrimeSupport full({0, 1, 2}, 3);
        const auto& cl2 = *rep.records[1].closure_ass;
        c.expect(std::binary_search(cl2.begin(), cl2.end(), full),
                 tag + "full support in Ass(closure(I^2))");

        Monomial xpow = Monomial::variable(3, 0, 2 * cc + 2);
        for (int n = 2; n <= cc + 1; ++n)
            c.expect(colon(power(I, n), xpow) == power(I, n - 1),
                     tag + "I^n : x^(2c+2) = I^(n-1) at n=" + std::to_string(n));
        for (int n = 2; n <= cc + 3; ++n)
            c.expect(colon(power(I, n), I) == power(I, n - 1),
                     tag + "I^n : I = I^(n-1) at n=" + std::to_string(n));
    }
}

void criterion3_path_edge(Check& c) {
    StabilityReport rep = run_profile(path_edge_ideal(), 5, false);
    c.expect(rep.astab_observed == 1, "astab = 1");
    c.expect(rep.dstab_observed == 2, "dstab = 2");
    std::vector<int> depths;
    for (const auto& r : rep.records)
        depths.push_back(r.depth);
    c.expect_eq(depths, std::vector<int>{2, 1, 1, 1, 1}, "depth profile");
}

void criterion4_ass_lag(Check& c) {
    StabilityReport rep = run_profile(ass_lag_ideal(), 5, false);
    c.expect(rep.astab_observed == 2, "astab = 2");
    c.expect(rep.dstab_observed == 1, "dstab = 1");
    for (const auto& r : rep.records)
        c.expect(r.depth == 1, "depth constant 1 at n=" + std::to_string(r.n));
    c.expect_eq(rep.records[4].ass, primes({{0, 3}, {2, 3}, {0, 1, 3}, {0, 2, 3}}, 4),
                "stable Ass set");
}

void criterion5_four_var_pair(Check& c) {
    for (int cc = 2; cc <= 3; ++cc) {
        std::string tag = "c=" + std::to_string(cc) + ": ";
        int horizon = cc + 3;

        MonomialIdeal I = ass_lag_family(cc);
        StabilityReport repI = run_profile(I, horizon, false);
        c.expect(repI.astab_observed == cc + 1, tag + "astab(I) = c+1");
        c.expect(repI.dstab_observed == 1, tag + "dstab(I) = 1");
        c.expect_eq(repI.records[0].ass, primes({{0, 3}, {2, 3}, {1, 2, 3}, {0, 1, 3}}, 4),
                    tag + "Ass(I)");
        c.expect_eq(repI.records[static_cast<std::size_t>(horizon - 1)].ass,
                    primes({{0, 3}, {2, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 3}}, 4),
                    tag + "stable Ass set of I");

        MonomialIdeal J = depth_lag_family(cc);
        StabilityReport repJ = run_profile(J, horizon, false);
        c.expect(repJ.astab_observed == 1, tag + "astab(J) = 1");
        c.expect(repJ.dstab_observed == cc + 1, tag + "dstab(J) = c+1");
        auto min_set = primes({{0, 2}, {0, 3}, {1, 2}, {1, 3}}, 4);
        c.expect_eq(repJ.records[static_cast<std::size_t>(horizon - 1)].ass, min_set,
                    tag + "stable Ass set of J = Min(J)");
        c.expect_eq(minimal_primes(J), min_set, tag + "Min(J)");
        for (int n = 1; n <= horizon; ++n)
            c.expect(repJ.records[static_cast<std::size_t>(n - 1)].depth ==
                         (n <= cc ? 2 : 1),
                     tag + "depth profile of J at n=" + std::to_string(n));
    }
}

void criterion6_property_suites(Check& c) {
    const int want = 50;

    { // two variables: everything stabilizes immediately
        Ring R2({"x", "y"});
        for (int s = 0; s < want; ++s) {
            Rng rng(0xaaa000ULL + static_cast<std::uint64_t>(s));
            MonomialIdeal I = random_proper_ideal(R2, rng, 4, 4);
            c.expect(dim2_check(I, 5), "dim2 seed " + std::to_string(s) + " [" + I.str() + "]");
        }
    }
    { // three variables: settled indices agree
        int settled = 0, seed = 0;
        while (settled < want && seed < 20 * want) {
            Rng rng(0xbbb000ULL + static_cast<std::uint64_t>(seed));
            MonomialIdeal I = random_proper_ideal(ring_xyz(), rng, 4, 3);
            Dim3Result res = dim3_astab_eq_dstab_check(I, 6);
            if (res.verdict != Dim3Verdict::Inconclusive) {
                c.expect(res.verdict == Dim3Verdict::Equal,
                         "dim3 seed " + std::to_string(seed) + " [" + I.str() + "]");
                ++settled;
            }
            ++seed;
        }
        c.expect(settled == want, "dim3: 50 settled instances found");
    }
    { // persistent ideals have non-increasing depth
        int qualifying = 0, seed = 0;
        while (qualifying < want && seed < 20 * want) {
            Rng rng(0xccc000ULL + static_cast<std::uint64_t>(seed));
            MonomialIdeal I = random_proper_ideal(ring_xyz(), rng, 4, 3);
            auto flags = strong_persistence(I, 5);
            if (std::all_of(flags.begin(), flags.end(), [](bool f) { return f; })) {
                c.expect(depth_monotonicity(I, 5, false).non_increasing,
                         "persistent depth seed " + std::to_string(seed) + " [" + I.str() + "]");
                ++qualifying;
            }
            ++seed;
        }
        c.expect(qualifying == want, "persistence: 50 qualifying instances found");
    }
    { // closure depth is non-increasing
        for (int s = 0; s < want; ++s) {
            Rng rng(0xddd000ULL + static_cast<std::uint64_t>(s));
            MonomialIdeal I = random_proper_ideal(ring_xyz(), rng, 4, 3);
            c.expect(depth_monotonicity(I, 4, true).non_increasing,
                     "closure depth seed " + std::to_string(s) + " [" + I.str() + "]");
        }
    }
}

void oracle_check_one(Check& c, const MonomialIdeal& I, std::size_t& bad) {
    if (betti_table(I) != koszul_betti_oracle(I)) {
        ++bad;
        c.expect(false, "betti mismatch on " + I.str());
        return;
    }
    auto ass = associated_primes(I);
    for (const auto& p : potential_ass(I)) {
        bool in_ass = std::binary_search(ass.begin(), ass.end(), p);
        if (in_ass != ass_witness(I, p).has_value()) {
            ++bad;
            c.expect(false, "witness mismatch on " + I.str() + " at " + p.str(I.ring()));
            return;
        }
    }
}

void criterion7_oracles(Check& c) {
    std::size_t bad = 0, count = 0;

    // One and two variables: every antichain over the exponent-<=3 pool,
    // up to four generators.
    {
        Ring R1({"x"});
        for (std::int64_t e = 1; e <= 3; ++e) {
            oracle_check_one(c, MonomialIdeal::principal(R1, Monomial({e})), bad);
            ++count;
        }
    }
    {
        Ring R2({"x", "y"});
        std::vector<Monomial> pool;
        for (std::int64_t a = 0; a <= 3; ++a)
            for (std::int64_t b = 0; b <= 3; ++b)
                if (a + b > 0)
                    pool.push_back(Monomial({a, b}));
        std::set<std::string> seen;
        std::vector<std::size_t> idx;
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                                std::size_t left) {
            if (!idx.empty()) {
                std::vector<Monomial> gens;
                for (auto i : idx)
                    gens.push_back(pool[i]);
                MonomialIdeal I = MonomialIdeal::make(R2, std::move(gens));
                if (!I.is_unit() && !I.is_zero() && seen.insert(I.str()).second) {
                    oracle_check_one(c, I, bad);
                    ++count;
                }
            }
            if (left == 0)
                return;
            for (std::size_t i = start; i < pool.size(); ++i) {
                idx.push_back(i);
                rec(i + 1, left - 1);
                idx.pop_back();
            }
        };
        rec(0, 4);
    }

    // Three variables: all ideals on one or two generators from the pool,
    // plus seeded three- and four-generator samples.
    {
        const Ring& R3 = ring_xyz();
        std::vector<Monomial> pool;
        for (std::int64_t a = 0; a <= 3; ++a)
            for (std::int64_t b = 0; b <= 3; ++b)
                for (std::int64_t d = 0; d <= 3; ++d)
                    if (a + b + d > 0)
                        pool.push_back(Monomial({a, b, d}));
        std::set<std::string> seen;
        auto probe = [&](std::vector<Monomial> gens) {
            MonomialIdeal I = MonomialIdeal::make(R3, std::move(gens));
            if (!I.is_unit() && !I.is_zero() && seen.insert(I.str()).second) {
                oracle_check_one(c, I, bad);
                ++count;
            }
        };
        for (std::size_t i = 0; i < pool.size(); ++i) {
            probe({pool[i]});
            for (std::size_t j = i + 1; j < pool.size(); ++j)
                probe({pool[i], pool[j]});
        }
        Rng rng(0x0eac1e5ULL);
        for (int t = 0; t < 12000; ++t) {
            std::vector<Monomial> gens;
            int k = 3 + static_cast<int>(rng.below(2));
            for (int g = 0; g < k; ++g)
                gens.push_back(pool[rng.below(pool.size())]);
            probe(std::move(gens));
        }
    }

    // 100 random four-variable instances, up to six generators, exponents <= 4.
    {
        for (int s = 0; s < 100; ++s) {
            Rng rng(0x4f00dULL + static_cast<std::uint64_t>(s));
            MonomialIdeal I = random_proper_ideal(ring_xyzu(), rng, 6, 4);
            oracle_check_one(c, I, bad);
            ++count;
        }
    }

    c.expect(bad == 0, "zero oracle mismatches");
    c.expect(count > 2500, "grid size sanity (" + std::to_string(count) + " instances)");
}

void criterion8_closure_cross_route(Check& c) {
    std::vector<std::pair<std::string, MonomialIdeal>> family = {
        {"cycle-squares", cycle_squares_ideal()},
        {"closure-gap c=1", closure_gap_ideal(1)},
        {"closure-gap c=2", closure_gap_ideal(2)},
        {"closure-gap c=3", closure_gap_ideal(3)},
        {"path-edge", path_edge_ideal()},
        {"ass-lag", ass_lag_ideal()},
        {"ass-lag-family c=2", ass_lag_family(2)},
        {"ass-lag-family c=3", ass_lag_family(3)},
        {"depth-lag-family c=2", depth_lag_family(2)},
        {"depth-lag-family c=3", depth_lag_family(3)},
        {"slow-depth t=3", slow_depth_ideal(3)},
    };
    for (const auto& [name, I] : family)
        for (std::int64_t k = 1; k <= 3; ++k)
            c.expect(integral_closure(I, k) == integral_closure(power(I, k), 1),
                     name + " at k=" + std::to_string(k));
}

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(Check&)> body;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"criterion 1: squared-cycle profile, closure generators, persistence", 10.0,
         criterion1_cycle_squares},
        {"criterion 2: closure-gap family c=1..3, certified astab, colon fixtures", 180.0,
         criterion2_closure_gap},
        {"criterion 3: path edge ideal profile", 10.0, criterion3_path_edge},
        {"criterion 4: ass-lag ideal profile and stable Ass set", 10.0, criterion4_ass_lag},
        {"criterion 5: four-variable pair c=2,3", 300.0, criterion5_four_var_pair},
        {"criterion 6: randomized property suites (50 instances each)", 600.0,
         criterion6_property_suites},
        {"criterion 7: homology/Koszul and Ass/witness oracle equivalence", 600.0,
         criterion7_oracles},
        {"criterion 8: closure cross-route equality, k <= 3", 120.0,
         criterion8_closure_cross_route},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        Check check;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > cr.budget_seconds)
            check.failures.push_back("runtime " + std::to_string(secs) + "s over budget " +
                                     std::to_string(cr.budget_seconds) + "s");

        bool pass = check.failures.empty();
        failures += pass ? 0 : 1;
        std::printf("[%s] %s (%.2fs)\n", pass ? "PASS" : "FAIL", cr.name.c_str(), secs);
        for (const auto& f : check.failures)
            std::printf("       - %s\n", f.c_str());
    }

    std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
    return failures == 0 ? 0 : 1;
}

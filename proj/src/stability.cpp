#include "mistab/stability.hpp"

#include <algorithm>
#include <chrono>

#include "mistab/closure.hpp"
#include "mistab/resolution.hpp"

namespace mistab {

namespace {

void require_profile_input(const MonomialIdeal& ideal, int horizon) {
    if (horizon < 2)
        throw UsageError("horizon must be at least 2");
    if (ideal.is_zero() || ideal.is_unit())
        throw UsageError("profiles require a proper nonzero ideal");
}

// Smallest k with values[k..N] constant, reported only when the constant
// window has length >= 2 (k == 1 included since N >= 2).
template <typename T>
std::optional<int> observed_index(const std::vector<T>& values) {
    int n = static_cast<int>(values.size());
    int k = n;
    while (k > 1 && values[static_cast<std::size_t>(k - 2)] == values[static_cast<std::size_t>(k - 1)])
        --k;
    if (k == n)
        return std::nullopt;
    return k;
}

bool support_subset(const std::vector<PrimeSupport>& a, const std::vector<PrimeSupport>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<MonomialIdeal> powers_up_to(const MonomialIdeal& ideal, int horizon) {
    std::vector<MonomialIdeal> powers;
    powers.reserve(static_cast<std::size_t>(horizon));
    powers.push_back(ideal);
    for (int n = 2; n <= horizon; ++n)
        powers.push_back(multiply(powers.back(), ideal));
    return powers;
}

template <typename Fn>
auto at_power(int n, Fn&& fn) {
    try {
        return fn();
    } catch (const ResourceLimitError& e) {
        throw ResourceLimitError("at power " + std::to_string(n) + ": " + e.what());
    }
}

} // namespace

StabilityReport profile(const MonomialIdeal& ideal, int horizon, const ProfileOptions& options) {
    require_profile_input(ideal, horizon);
    if (options.limits.jobs < 1)
        throw UsageError("worker count must be positive");

    const Limits& limits = options.limits;
    auto powers = powers_up_to(ideal, horizon);

    StabilityReport report{ideal, horizon, options.with_closure, {}, {}, {}, {}, {}};
    DecompositionCache cache;

    for (int n = 1; n <= horizon; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        PowerRecord rec;
        rec.n = n;
        const MonomialIdeal& pn = powers[static_cast<std::size_t>(n - 1)];
        rec.ass = at_power(n, [&] { return associated_primes(pn, &cache); });
        rec.depth = at_power(n, [&] { return depth(pn, limits); });
        if (options.with_closure) {
            MonomialIdeal cl = at_power(n, [&] { return integral_closure(ideal, n, limits); });
            rec.closure_ass = at_power(n, [&] { return associated_primes(cl, &cache); });
            rec.closure_depth = at_power(n, [&] { return depth(cl, limits); });
        }
        if (n < horizon)
            rec.strong_persistence =
                colon(powers[static_cast<std::size_t>(n)], ideal) == pn;
        rec.time_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        report.records.push_back(std::move(rec));
        if (options.on_record)
            options.on_record(report.records.back());
    }

    std::vector<std::vector<PrimeSupport>> ass_seq, closure_seq;
    std::vector<int> depth_seq;
    for (const auto& r : report.records) {
        ass_seq.push_back(r.ass);
        depth_seq.push_back(r.depth);
        if (r.closure_ass)
            closure_seq.push_back(*r.closure_ass);
    }
    report.astab_observed = observed_index(ass_seq);
    report.dstab_observed = observed_index(depth_seq);
    if (options.with_closure)
        report.astabbar_observed = observed_index(closure_seq);

    bool all_persistent = true;
    for (const auto& r : report.records)
        if (r.strong_persistence.has_value() && !*r.strong_persistence)
            all_persistent = false;

    auto potential = potential_ass(ideal);

    if (report.astab_observed) {
        int k = *report.astab_observed;
        const auto& stable = ass_seq[static_cast<std::size_t>(k - 1)];
        Certification cert;
        std::vector<PrimeSupport> min_and_full = minimal_primes(ideal);
        {
            std::vector<int> all_vars(static_cast<std::size_t>(ideal.ring().nvars()));
            for (int v = 0; v < ideal.ring().nvars(); ++v)
                all_vars[static_cast<std::size_t>(v)] = v;
            min_and_full.push_back(PrimeSupport(all_vars, ideal.ring().nvars()));
            std::sort(min_and_full.begin(), min_and_full.end());
            min_and_full.erase(std::unique(min_and_full.begin(), min_and_full.end()),
                               min_and_full.end());
        }
        if (all_persistent && stable == potential) {
            cert = {CertLevel::Certified,
                    "strong persistence holds at every checked power and the chain reached "
                    "every prime containing the ideal"};
        } else if (all_persistent && ideal.ring().nvars() == 3 && height(ideal) >= 2 &&
                   stable == min_and_full) {
            cert = {CertLevel::Certified,
                    "three variables with height >= 2: the persistent chain reached the "
                    "minimal primes plus the full support"};
        } else if (all_persistent) {
            cert = {CertLevel::Conditional,
                    "constant tail under strong persistence; the ceiling was not reached, "
                    "so stability needs persistence beyond the horizon"};
        } else {
            cert = {CertLevel::Observed, "constant tail within the horizon"};
        }
        report.certification["astab"] = std::move(cert);
    }

    if (report.dstab_observed) {
        int k = *report.dstab_observed;
        bool zero_tail = true;
        for (int n = k; n <= horizon; ++n)
            if (depth_seq[static_cast<std::size_t>(n - 1)] != 0)
                zero_tail = false;
        Certification cert;
        if (zero_tail && all_persistent) {
            cert = {CertLevel::Certified,
                    "depth 0 is absorbing: the full support stays associated under strong "
                    "persistence"};
        } else {
            cert = {CertLevel::Observed, "constant tail within the horizon"};
        }
        report.certification["dstab"] = std::move(cert);
    }

    if (report.astabbar_observed) {
        int k = *report.astabbar_observed;
        bool ascending = true;
        for (std::size_t i = 0; i + 1 < closure_seq.size(); ++i)
            if (!support_subset(closure_seq[i], closure_seq[i + 1]))
                ascending = false;
        Certification cert;
        if (ascending && closure_seq[static_cast<std::size_t>(k - 1)] == potential) {
            cert = {CertLevel::Certified,
                    "the closure chain is non-decreasing and reached every prime "
                    "containing the ideal"};
        } else {
            cert = {CertLevel::Observed, "constant tail within the horizon"};
        }
        report.certification["astabbar"] = std::move(cert);
    }

    return report;
}

std::vector<bool> strong_persistence(const MonomialIdeal& ideal, int horizon,
                                     const Limits& limits) {
    require_profile_input(ideal, horizon);
    (void)limits;
    auto powers = powers_up_to(ideal, horizon);
    std::vector<bool> flags;
    flags.reserve(static_cast<std::size_t>(horizon - 1));
    for (int n = 1; n < horizon; ++n)
        flags.push_back(colon(powers[static_cast<std::size_t>(n)], ideal) ==
                        powers[static_cast<std::size_t>(n - 1)]);
    return flags;
}

MonotonicityVerdict depth_monotonicity(const MonomialIdeal& ideal, int horizon, bool on_closure,
                                       const Limits& limits) {
    require_profile_input(ideal, horizon);
    MonotonicityVerdict verdict;
    MonomialIdeal pow_acc = ideal;
    for (int n = 1; n <= horizon; ++n) {
        if (n > 1)
            pow_acc = multiply(pow_acc, ideal);
        const MonomialIdeal& target = pow_acc;
        int d = at_power(n, [&] {
            return on_closure ? depth(integral_closure(ideal, n, limits), limits)
                              : depth(target, limits);
        });
        verdict.depths.push_back(d);
        if (n > 1 && d > verdict.depths[static_cast<std::size_t>(n - 2)] &&
            verdict.non_increasing) {
            verdict.non_increasing = false;
            verdict.violation_at = n;
        }
    }
    return verdict;
}

bool dim2_check(const MonomialIdeal& ideal, int horizon, const Limits& limits) {
    if (ideal.ring().nvars() != 2)
        throw UsageError("dim2 check requires a two-variable ring");
    ProfileOptions options;
    options.with_closure = true;
    options.limits = limits;
    StabilityReport rep = profile(ideal, horizon, options);
    return rep.astab_observed == 1 && rep.dstab_observed == 1 && rep.astabbar_observed == 1;
}

Dim3Result dim3_astab_eq_dstab_check(const MonomialIdeal& ideal, int horizon,
                                     const Limits& limits) {
    if (ideal.ring().nvars() != 3)
        throw UsageError("dim3 check requires a three-variable ring");
    ProfileOptions options;
    options.limits = limits;
    StabilityReport rep = profile(ideal, horizon, options);
    Dim3Result res;
    res.astab = rep.astab_observed;
    res.dstab = rep.dstab_observed;
    if (!rep.astab_observed || !rep.dstab_observed)
        res.verdict = Dim3Verdict::Inconclusive;
    else
        res.verdict = *rep.astab_observed == *rep.dstab_observed ? Dim3Verdict::Equal
                                                                 : Dim3Verdict::Unequal;
    return res;
}

} // namespace mistab

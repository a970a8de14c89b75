#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mistab/decomposition.hpp"
#include "mistab/ideal.hpp"
#include "mistab/limits.hpp"

namespace mistab {

/// Everything computed for one power I^n.
struct PowerRecord {
    int n = 0;
    std::vector<PrimeSupport> ass;
    int depth = 0;
    std::optional<std::vector<PrimeSupport>> closure_ass;
    std::optional<int> closure_depth;
    /// I^{n+1} : I == I^n; absent at the horizon (the next power is unknown).
    std::optional<bool> strong_persistence;
    double time_ms = 0.0;
};

/// How firmly a stabilization index is known.
///  - observed: the profile is constant on a tail window of the horizon.
///  - conditional: the window is constant and the chain argument would close
///    it, but needs strong persistence beyond the horizon.
///  - certified: a structural ceiling argument pins the index.
enum class CertLevel { Observed, Conditional, Certified };

struct Certification {
    CertLevel level = CertLevel::Observed;
    std::string reason;

    bool operator==(const Certification& o) const {
        return level == o.level && reason == o.reason;
    }
};

struct StabilityReport {
    MonomialIdeal ideal;
    int horizon = 0;
    bool with_closure = false;
    std::vector<PowerRecord> records;
    std::optional<int> astab_observed;
    std::optional<int> dstab_observed;
    std::optional<int> astabbar_observed;
    /// Keyed by "astab" / "dstab" / "astabbar"; present iff the index is.
    std::map<std::string, Certification> certification;
};

struct ProfileOptions {
    bool with_closure = false;
    Limits limits;
    /// Called with each record as soon as its power is finished, so partial
    /// results survive a resource abort at a higher power.
    std::function<void(const PowerRecord&)> on_record;
};

/// Per-power profile of Ass, depth and (optionally) closure data up to the
/// horizon, with observed stabilization indices and their certification.
StabilityReport profile(const MonomialIdeal& ideal, int horizon,
                        const ProfileOptions& options = {});

/// Flags I^{n+1} : I == I^n for n = 1 .. horizon-1.
std::vector<bool> strong_persistence(const MonomialIdeal& ideal, int horizon,
                                     const Limits& limits = {});

struct MonotonicityVerdict {
    bool non_increasing = true;
    std::optional<int> violation_at; // first n with depth(n) > depth(n-1)
    std::vector<int> depths;
};

/// Scans depth of R/I^n (or of the closure of I^n) for a strict increase.
MonotonicityVerdict depth_monotonicity(const MonomialIdeal& ideal, int horizon,
                                       bool on_closure, const Limits& limits = {});

/// Two-variable rings: astab, dstab and the closure index all equal 1.
bool dim2_check(const MonomialIdeal& ideal, int horizon, const Limits& limits = {});

enum class Dim3Verdict { Equal, Unequal, Inconclusive };

struct Dim3Result {
    Dim3Verdict verdict = Dim3Verdict::Inconclusive;
    std::optional<int> astab;
    std::optional<int> dstab;
};

/// Three-variable rings: compares astab and dstab when both settle within
/// the horizon.
Dim3Result dim3_astab_eq_dstab_check(const MonomialIdeal& ideal, int horizon,
                                     const Limits& limits = {});

} // namespace mistab

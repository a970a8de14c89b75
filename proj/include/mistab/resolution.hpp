#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mistab/ideal.hpp"
#include "mistab/limits.hpp"

namespace mistab {

/// All distinct lcms of nonempty generator subsets plus the bottom element
/// (the all-zero multidegree), sorted lexicographically with bottom first.
/// Closed under joins by construction.
struct LcmLattice {
    std::vector<Monomial> elements;
};

/// Subject to limits.lattice_gen_cap: the lattice is conceptually a subset
/// enumeration and is refused for oversized generator sets.
LcmLattice lcm_lattice(const MonomialIdeal& ideal, const Limits& limits = {});

/// Multigraded Betti numbers of R/I: entry (i, m) is the rank of Tor_i in
/// multidegree m; only nonzero entries are stored.
class BettiTable {
public:
    void set(int i, const Monomial& m, std::int64_t rank);
    std::int64_t rank(int i, const Monomial& m) const;
    /// Max homological degree with a nonzero entry.
    int pd() const;
    /// Total Betti number at homological degree i.
    std::int64_t total(int i) const;
    const std::map<std::pair<int, Monomial>, std::int64_t>& entries() const { return entries_; }

    bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }
    bool operator!=(const BettiTable& o) const { return !(*this == o); }

private:
    std::map<std::pair<int, Monomial>, std::int64_t> entries_;
};

/// Betti numbers from reduced rational homology of open-interval order
/// complexes in the lcm lattice: the rank at homological degree i and
/// multidegree m is the reduced homology rank in dimension i-2 of the order
/// complex of (bottom, m). Ranks are exact integer matrix ranks.
BettiTable betti_table(const MonomialIdeal& ideal, const Limits& limits = {});

/// Independent oracle: per multidegree, homology of the Koszul complex on
/// all ring variables tensored with R/I. Intended for small instances; must
/// agree with betti_table wherever both run.
BettiTable koszul_betti_oracle(const MonomialIdeal& ideal, const Limits& limits = {});

/// Diagnostic mode: the same order-complex computation with ranks over Z/p.
/// Differences from betti_table flag a characteristic-dependent resolution;
/// none of the bundled families have one.
BettiTable betti_table_mod_p(const MonomialIdeal& ideal, std::uint32_t p,
                             const Limits& limits = {});

/// Max i with Tor_i(R/I, k) nonzero. Computed from the Koszul-complex route,
/// scanning candidate multidegrees top-down, so it handles generator sets
/// beyond the order-complex guards.
int projective_dimension(const MonomialIdeal& ideal, const Limits& limits = {});

/// depth of R/I as nvars - pd(R/I). The zero ideal has depth nvars; the unit
/// ideal is rejected.
int depth(const MonomialIdeal& ideal, const Limits& limits = {});

} // namespace mistab

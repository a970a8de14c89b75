#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mistab/ring.hpp"

namespace mistab {

/// Monomial ideal in canonical form: the minimal generating set, which is
/// the divisibility antichain of any generating set, sorted lexicographically.
/// Two ideals are equal iff their canonical representations are identical.
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
public:
    /// Canonicalizing constructor: minimalizes and sorts any generator list.
    static MonomialIdeal make(Ring ring, std::vector<Monomial> gens);
    static MonomialIdeal zero(Ring ring);
    static MonomialIdeal unit(Ring ring);
    static MonomialIdeal principal(Ring ring, Monomial m);

    const Ring& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t ngens() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_unit(); }

    /// Componentwise max of the generators. Requires a nonzero ideal.
    Monomial exponent_max() const;

    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal& other) const {
        return ring_ == other.ring_ && gens_ == other.gens_;
    }
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

    std::string str() const;

private:
    MonomialIdeal(Ring ring, std::vector<Monomial> canonical_gens)
        : ring_(std::move(ring)), gens_(std::move(canonical_gens)) {}

    Ring ring_;
    std::vector<Monomial> gens_;
};

/// Divisibility-antichain filter over a raw monomial list; the same ideal,
/// canonical generators. Exposed for tests; make() applies it.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, std::int64_t k);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
bool subset(const MonomialIdeal& inner, const MonomialIdeal& outer);

/// Factor out the gcd of the generators: I = f * J with the generators of J
/// coprime as a set. Requires a nonzero ideal.
std::pair<Monomial, MonomialIdeal> factor_gcd(const MonomialIdeal& a);

MonomialIdeal radical(const MonomialIdeal& a);

} // namespace mistab

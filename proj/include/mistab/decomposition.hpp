#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mistab/ideal.hpp"
#include "mistab/limits.hpp"

namespace mistab {

/// Monomial prime: the ideal generated by a nonempty subset of the variables,
/// stored as sorted variable indices.
class PrimeSupport {
public:
    PrimeSupport(std::vector<int> vars, int nvars);

    const std::vector<int>& vars() const { return vars_; }
    int size() const { return static_cast<int>(vars_.size()); }
    bool contains_var(int i) const;
    bool subset_of(const PrimeSupport& other) const;
    std::uint32_t mask() const { return mask_; }

    MonomialIdeal to_ideal(const Ring& ring) const;
    std::string str(const Ring& ring) const;

    bool operator==(const PrimeSupport& o) const { return vars_ == o.vars_; }
    bool operator!=(const PrimeSupport& o) const { return !(*this == o); }
    bool operator<(const PrimeSupport& o) const;

private:
    std::vector<int> vars_;
    std::uint32_t mask_ = 0;
};

/// Irreducible monomial ideal (x_i^{a_i} : i in a nonempty support),
/// stored as an exponent vector with zero marking absent variables.
class IrreducibleComponent {
public:
    explicit IrreducibleComponent(std::vector<std::int64_t> exps);

    const std::vector<std::int64_t>& exponents() const { return exps_; }
    PrimeSupport support() const;
    MonomialIdeal to_ideal(const Ring& ring) const;

    /// Ideal containment: this ⊆ other. For irreducible ideals this holds
    /// iff supp(this) ⊆ supp(other) with other's exponents <= this's.
    bool contained_in(const IrreducibleComponent& other) const;

    bool operator==(const IrreducibleComponent& o) const { return exps_ == o.exps_; }
    bool operator<(const IrreducibleComponent& o) const { return exps_ < o.exps_; }

private:
    std::vector<std::int64_t> exps_;
};

/// Memo table for the splitting recursion, reusable across the powers of one
/// profile run. Insert-if-absent only; never changes a stored value.
class DecompositionCache {
public:
    const std::vector<IrreducibleComponent>* find(const MonomialIdeal& ideal) const;
    void store(const MonomialIdeal& ideal, std::vector<IrreducibleComponent> comps);
    std::size_t size() const { return memo_.size(); }

private:
    static std::string key_of(const MonomialIdeal& ideal);
    std::unordered_map<std::string, std::vector<IrreducibleComponent>> memo_;
};

/// Irredundant irreducible decomposition (unique for monomial ideals),
/// computed by coprime-factor splitting. Requires a proper nonzero ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            DecompositionCache* cache = nullptr);

/// Supports of the irredundant irreducible components; sorted, deduplicated.
std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal,
                                            DecompositionCache* cache = nullptr);

/// Inclusion-minimal primes over the ideal, as minimal vertex covers of the
/// generator supports. Requires a proper nonzero ideal.
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal);

int height(const MonomialIdeal& ideal);

/// Every monomial prime containing the ideal, i.e. every vertex cover of the
/// generator supports.
std::vector<PrimeSupport> potential_ass(const MonomialIdeal& ideal);

/// Witness search: a monomial m with (I : m) equal to the prime generated by
/// the given support, scanning divisors of the generators' componentwise max.
/// That scan is exhaustive because a colon by m only depends on m truncated
/// at the componentwise max. Independent of the decomposition path.
std::optional<Monomial> ass_witness(const MonomialIdeal& ideal, const PrimeSupport& prime,
                                    const Limits& limits = {});

} // namespace mistab

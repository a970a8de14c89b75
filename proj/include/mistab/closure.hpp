#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "mistab/ideal.hpp"
#include "mistab/limits.hpp"

namespace mistab {

/// Facet inequality of a (scaled) Newton polyhedron: sum coeff[j]*v[j] +
/// constant >= 0, valid together with v >= 0.
struct FacetRow {
    std::vector<mpz_class> coeff;
    mpz_class constant;
};

/// The polyhedron { v : exists lambda >= 0, sum lambda = k,
/// sum lambda_i * a_i <= v } for the generator exponents a_i of an ideal.
/// A point lies in it iff x^v is integral over I^k. The lambda variables are
/// eliminated once by exact integer Fourier-Motzkin; membership tests then
/// evaluate the remaining facet rows.
class NewtonSystem {
public:
    NewtonSystem(const MonomialIdeal& ideal, std::int64_t scale);

    bool member(const Monomial& v) const;
    const std::vector<FacetRow>& facets() const { return facets_; }
    std::int64_t scale() const { return scale_; }
    int nvars() const { return nvars_; }

private:
    void eliminate(std::vector<std::vector<std::int64_t>> gens);

    int nvars_ = 0;
    std::int64_t scale_ = 1;
    bool infeasible_ = false;
    std::vector<FacetRow> facets_;
};

bool np_member(const Monomial& v, const NewtonSystem& sys);

/// Minimal monomial generators of the integral closure of I^k, by exact
/// membership over the box 0 <= v_j <= k * max generator exponent. No minimal
/// generator lies outside that box.
MonomialIdeal integral_closure(const MonomialIdeal& ideal, std::int64_t k,
                               const Limits& limits = {});

/// closure(f*J, k) == f^k * closure(J, k); expected to hold identically.
bool closure_scaling_check(const Monomial& f, const MonomialIdeal& J, std::int64_t k,
                           const Limits& limits = {});

} // namespace mistab

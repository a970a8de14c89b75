#pragma once

#include <cstdint>

#include "mistab/ideal.hpp"

namespace mistab {

/// The ideal families exercised by the reference suite, plus a deterministic
/// sampler for randomized property runs.

Ring ring_xyz();
Ring ring_xyzu();

/// ((x*y)^2, (x*z)^2, (y*z)^2) in K[x,y,z]: Ass stabilizes at 2 while the
/// closure chain is stable from the start.
MonomialIdeal cycle_squares_ideal();

/// (x^(2c+2), x*y^(2c)*z, y^(2c+2)*z) in K[x,y,z]: the gap between the Ass
/// index (c+2) and the closure index (2) grows with c.
MonomialIdeal closure_gap_ideal(int c);

/// (x*y, y*z, z*u) in K[x,y,z,u]: the path edge ideal; Ass is stable from
/// the start while depth settles at 2.
MonomialIdeal path_edge_ideal();

/// (x^2*z, u*y*z, u^3) in K[x,y,z,u]: depth is constant while Ass moves once.
MonomialIdeal ass_lag_ideal();

/// (x^(c+1)*z^c, u^(2c-1)*y*z, u^(2c+1)) in K[x,y,z,u]: Ass settles at c+1,
/// depth immediately. Meaningful for c >= 2.
MonomialIdeal ass_lag_family(int c);

/// (x^c*y^(c-1), x^(c-1)*y^(c-1)*z, z^c*u^c) in K[x,y,z,u]: depth settles at
/// c+1, Ass immediately. Meaningful for c >= 2.
MonomialIdeal depth_lag_family(int c);

/// (x^t, x*y^(t-2)*z, y^(t-1)*z) in K[x,y,z], t >= 2: both indices equal t.
MonomialIdeal slow_depth_ideal(int t);

/// Known integral closure of cycle_squares_ideal: the three squares plus
/// x*y*z^2, x*y^2*z, x^2*y*z.
MonomialIdeal cycle_squares_closure();

/// Known integral closure of closure_gap_ideal(c): the ideal itself plus
/// x^(3+t)*y^(2c-1-t)*z for t = 0..2c-2.
MonomialIdeal closure_gap_closure(int c);

/// Fixture contained in the closure of closure_gap_ideal(c)^2; its colon by
/// x^(2c+2)*y^(2c+1)*z is the full monomial maximal ideal.
MonomialIdeal closure_gap_square_fixture(int c);

/// Socle witness x^(2c+2)*y^((c+1)(2c+2)-1)*z^(c+1) for power c+2 of
/// closure_gap_ideal(c).
Monomial closure_gap_socle_witness(int c);

/// splitmix64; all randomized suites pin their seeds through this.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

/// Random proper nonzero ideal: 1..max_gens generators with exponents in
/// [0, max_exp], no generator equal to 1.
MonomialIdeal random_proper_ideal(const Ring& ring, Rng& rng, int max_gens,
                                  std::int64_t max_exp);

} // namespace mistab

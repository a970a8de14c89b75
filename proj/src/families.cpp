#include "mistab/families.hpp"

#include "mistab/parse.hpp"

namespace mistab {

Ring ring_xyz() {
    return Ring({"x", "y", "z"});
}

Ring ring_xyzu() {
    return Ring({"x", "y", "z", "u"});
}

namespace {

Monomial mono3(std::int64_t x, std::int64_t y, std::int64_t z) {
    return Monomial({x, y, z});
}

Monomial mono4(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t u) {
    return Monomial({x, y, z, u});
}

} // namespace

MonomialIdeal cycle_squares_ideal() {
    return MonomialIdeal::make(ring_xyz(), {mono3(2, 2, 0), mono3(2, 0, 2), mono3(0, 2, 2)});
}

MonomialIdeal closure_gap_ideal(int c) {
    if (c < 1)
        throw UsageError("closure_gap_ideal requires c >= 1");
    return MonomialIdeal::make(
        ring_xyz(), {mono3(2 * c + 2, 0, 0), mono3(1, 2 * c, 1), mono3(0, 2 * c + 2, 1)});
}

MonomialIdeal path_edge_ideal() {
    return MonomialIdeal::make(ring_xyzu(),
                               {mono4(1, 1, 0, 0), mono4(0, 1, 1, 0), mono4(0, 0, 1, 1)});
}

MonomialIdeal ass_lag_ideal() {
    return MonomialIdeal::make(ring_xyzu(),
                               {mono4(2, 0, 1, 0), mono4(0, 1, 1, 1), mono4(0, 0, 0, 3)});
}

MonomialIdeal ass_lag_family(int c) {
    if (c < 2)
        throw UsageError("ass_lag_family requires c >= 2");
    return MonomialIdeal::make(ring_xyzu(), {mono4(c + 1, 0, c, 0), mono4(0, 1, 1, 2 * c - 1),
                                             mono4(0, 0, 0, 2 * c + 1)});
}

MonomialIdeal depth_lag_family(int c) {
    if (c < 2)
        throw UsageError("depth_lag_family requires c >= 2");
    return MonomialIdeal::make(ring_xyzu(), {mono4(c, c - 1, 0, 0), mono4(c - 1, c - 1, 1, 0),
                                             mono4(0, 0, c, c)});
}

MonomialIdeal slow_depth_ideal(int t) {
    if (t < 2)
        throw UsageError("slow_depth_ideal requires t >= 2");
    return MonomialIdeal::make(ring_xyz(),
                               {mono3(t, 0, 0), mono3(1, t - 2, 1), mono3(0, t - 1, 1)});
}

MonomialIdeal cycle_squares_closure() {
    MonomialIdeal base = cycle_squares_ideal();
    std::vector<Monomial> gens = base.gens();
    gens.push_back(mono3(1, 1, 2));
    gens.push_back(mono3(1, 2, 1));
    gens.push_back(mono3(2, 1, 1));
    return MonomialIdeal::make(base.ring(), std::move(gens));
}

MonomialIdeal closure_gap_closure(int c) {
    MonomialIdeal base = closure_gap_ideal(c);
    std::vector<Monomial> gens = base.gens();
    for (int t = 0; t <= 2 * c - 2; ++t)
        gens.push_back(mono3(3 + t, 2 * c - 1 - t, 1));
    return MonomialIdeal::make(base.ring(), std::move(gens));
}

MonomialIdeal closure_gap_square_fixture(int c) {
    MonomialIdeal square = power(closure_gap_ideal(c), 2);
    std::vector<Monomial> gens = square.gens();
    for (int i = 4; i <= 2 * c + 2; ++i)
        gens.push_back(mono3(i, 4 * c + 3 - i, 2));
    for (int t = 1; t <= 2 * c - 1; ++t)
        gens.push_back(mono3(2 * c + 4 + t, 2 * c - t, 1));
    return MonomialIdeal::make(square.ring(), std::move(gens));
}

Monomial closure_gap_socle_witness(int c) {
    return mono3(2 * c + 2, (c + 1) * (2 * c + 2) - 1, c + 1);
}

MonomialIdeal random_proper_ideal(const Ring& ring, Rng& rng, int max_gens,
                                  std::int64_t max_exp) {
    int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_gens)));
    std::vector<Monomial> gens;
    gens.reserve(static_cast<std::size_t>(count));
    for (int g = 0; g < count; ++g) {
        std::vector<std::int64_t> exps(static_cast<std::size_t>(ring.nvars()), 0);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& e : exps) {
                e = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_exp) + 1));
                nonzero = nonzero || e > 0;
            }
        }
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal::make(ring, std::move(gens));
}

} // namespace mistab

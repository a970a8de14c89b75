#pragma once

#include <cstddef>
#include <cstdint>

namespace mistab {

/// Resource caps shared by the library. All computations are exact; these
/// caps make the engine refuse oversized inputs instead of degrading.
struct Limits {
    /// Max lattice points enumerated when listing integral-closure generators.
    std::uint64_t closure_box_cap = 10'000'000;
    /// Max generators accepted by the subset-lcm lattice construction.
    int lattice_gen_cap = 20;
    /// Max order-complex chains per ideal in the homology route.
    std::size_t chain_cap = 50'000;
    /// Max distinct lcm multidegrees tracked by the Koszul route.
    std::size_t lattice_size_cap = 2'000'000;
    /// Max divisor candidates scanned for an associated-prime witness.
    std::uint64_t witness_box_cap = 1u << 22;
    /// Worker count hint. Results are independent of this value.
    int jobs = 1;
};

} // namespace mistab

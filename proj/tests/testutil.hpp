#pragma once

#include <string>
#include <vector>

#include "mistab/families.hpp"
#include "mistab/ideal.hpp"
#include "mistab/parse.hpp"

namespace mistab::test {

inline MonomialIdeal ideal_of(const Ring& ring, const std::string& text) {
    return parse_ideal(ring, text);
}

inline Monomial mono_of(const Ring& ring, const std::string& text) {
    return parse_monomial(ring, text);
}

// Brute-force product oracle: pairwise exponent sums followed by a direct
// O(k^2) divisibility filter, independent of the library's canonical path.
inline std::vector<Monomial> brute_product(const std::vector<Monomial>& a,
                                           const std::vector<Monomial>& b) {
    std::vector<Monomial> prods;
    for (const auto& g : a) {
        for (const auto& h : b) {
            std::vector<std::int64_t> e;
            for (int i = 0; i < g.nvars(); ++i)
                e.push_back(g[i] + h[i]);
            prods.emplace_back(std::move(e));
        }
    }
    std::vector<Monomial> kept;
    for (const auto& p : prods) {
        bool dominated = false;
        for (const auto& q : prods) {
            if (q == p)
                continue;
            bool divides = true;
            for (int i = 0; i < p.nvars() && divides; ++i)
                divides = q[i] <= p[i];
            if (divides) {
                dominated = true;
                break;
            }
        }
        if (!dominated && std::find(kept.begin(), kept.end(), p) == kept.end())
            kept.push_back(p);
    }
    return kept;
}

// All divisors of the componentwise bound, odometer order.
template <typename Fn>
void for_each_divisor(const Monomial& bound, Fn&& fn) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(bound.nvars()), 0);
    while (true) {
        fn(Monomial{std::vector<std::int64_t>(e)});
        int pos = bound.nvars() - 1;
        while (pos >= 0 && e[static_cast<std::size_t>(pos)] == bound[pos]) {
            e[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            return;
        ++e[static_cast<std::size_t>(pos)];
    }
}

} // namespace mistab::test

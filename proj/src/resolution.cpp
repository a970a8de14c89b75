#include "mistab/resolution.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include <gmpxx.h>

namespace mistab {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw UsageError("operation requires a nonzero ideal");
    if (ideal.is_unit())
        throw UsageError("operation requires a proper ideal");
}

// Distinct joins of nonempty generator subsets, built incrementally.
std::set<Monomial> lcm_closure(const MonomialIdeal& ideal, std::size_t size_cap) {
    std::set<Monomial> closure;
    for (const auto& g : ideal.gens()) {
        std::vector<Monomial> fresh;
        fresh.push_back(g);
        for (const auto& e : closure)
            fresh.push_back(e.lcm(g));
        for (auto& m : fresh) {
            closure.insert(std::move(m));
            if (closure.size() > size_cap)
                throw ResourceLimitError("lcm lattice exceeds cap of " +
                                         std::to_string(size_cap) + " multidegrees");
        }
    }
    return closure;
}

// Rank over Z/p by Gaussian elimination.
int matrix_rank_mod_p(const std::vector<std::vector<mpz_class>>& input, std::uint32_t p) {
    if (input.empty() || input[0].empty())
        return 0;
    const std::size_t rows = input.size(), cols = input[0].size();
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class e = input[i][j] % p;
            if (e < 0)
                e += p;
            m[i][j] = e.get_si();
        }
    auto pow_mod = [p](std::int64_t base, std::uint32_t exp) {
        std::int64_t acc = 1;
        while (exp) {
            if (exp & 1)
                acc = acc * base % p;
            base = base * base % p;
            exp >>= 1;
        }
        return acc;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[r], m[pivot]);
        std::int64_t inv = pow_mod(m[r][c], p - 2);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0)
                continue;
            std::int64_t factor = m[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = ((m[i][j] - factor * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    return static_cast<int>(r);
}

// Exact rank over the rationals by fraction-free (Bareiss) elimination.
int matrix_rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty() || m[0].empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

// ----- Koszul-complex route -------------------------------------------------

std::uint32_t sigma_fits(const Monomial& m) {
    std::uint32_t mask = 0;
    for (int i = 0; i < m.nvars(); ++i)
        if (m[i] > 0)
            mask |= 1u << i;
    return mask;
}

Monomial shift_down(const Monomial& m, std::uint32_t subset) {
    std::vector<std::int64_t> e = m.exponents();
    for (int i = 0; i < m.nvars(); ++i)
        if (subset & (1u << i))
            --e[static_cast<std::size_t>(i)];
    return Monomial(std::move(e));
}

// Basis of (Koszul_i tensor R/I) in multidegree m: the i-subsets S of the
// support of m whose shifted monomial x^{m - sigma(S)} survives in R/I.
struct KoszulDegree {
    std::vector<std::vector<std::uint32_t>> basis; // by homological degree i
};

KoszulDegree koszul_basis(const MonomialIdeal& ideal, const Monomial& m) {
    int n = ideal.ring().nvars();
    KoszulDegree kd;
    kd.basis.assign(static_cast<std::size_t>(n) + 1, {});
    std::uint32_t sup = sigma_fits(m);
    // Iterate all submasks of the support, including the empty set.
    std::uint32_t s = sup;
    while (true) {
        if (!ideal.contains(shift_down(m, s)))
            kd.basis[static_cast<std::size_t>(std::popcount(s))].push_back(s);
        if (s == 0)
            break;
        s = (s - 1) & sup;
    }
    for (auto& level : kd.basis)
        std::sort(level.begin(), level.end());
    return kd;
}

int koszul_sign(std::uint32_t set, int var) {
    // Parity of the position of var among the set's ascending members.
    std::uint32_t below = set & ((1u << var) - 1);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<mpz_class>> koszul_boundary(const std::vector<std::uint32_t>& from,
                                                    const std::vector<std::uint32_t>& to) {
    std::vector<std::vector<mpz_class>> m(to.size(), std::vector<mpz_class>(from.size(), 0));
    std::map<std::uint32_t, std::size_t> row_of;
    for (std::size_t r = 0; r < to.size(); ++r)
        row_of[to[r]] = r;
    for (std::size_t c = 0; c < from.size(); ++c) {
        std::uint32_t s = from[c];
        for (int v = 0; v < 32; ++v) {
            if (!(s & (1u << v)))
                continue;
            auto it = row_of.find(s & ~(1u << v));
            if (it == row_of.end())
                continue; // target monomial fell into the ideal
            m[it->second][c] = koszul_sign(s, v);
        }
    }
    return m;
}

std::int64_t koszul_homology_rank(const MonomialIdeal& ideal, const Monomial& m, int i) {
    KoszulDegree kd = koszul_basis(ideal, m);
    int n = ideal.ring().nvars();
    if (i < 0 || i > n)
        return 0;
    const auto& ci = kd.basis[static_cast<std::size_t>(i)];
    if (ci.empty())
        return 0;
    int rank_in = 0, rank_out = 0;
    if (i > 0)
        rank_out = matrix_rank(koszul_boundary(ci, kd.basis[static_cast<std::size_t>(i - 1)]));
    if (i < n)
        rank_in = matrix_rank(koszul_boundary(kd.basis[static_cast<std::size_t>(i + 1)], ci));
    return static_cast<std::int64_t>(ci.size()) - rank_out - rank_in;
}

// ----- order-complex route --------------------------------------------------

struct IntervalComplex {
    // faces[d] lists d-dimensional faces as ascending index chains; the empty
    // face is implicit.
    std::vector<std::vector<std::vector<int>>> faces;
    std::size_t total_chains = 0;
};

void extend_chains(const std::vector<Monomial>& elems, std::vector<int>& chain,
                   IntervalComplex& cx, std::size_t chain_cap) {
    std::size_t d = chain.size() - 1;
    if (cx.faces.size() <= d)
        cx.faces.resize(d + 1);
    cx.faces[d].push_back(chain);
    if (++cx.total_chains > chain_cap)
        throw ResourceLimitError("order complex exceeds cap of " + std::to_string(chain_cap) +
                                 " chains");
    const Monomial& last = elems[static_cast<std::size_t>(chain.back())];
    for (int j = chain.back() + 1; j < static_cast<int>(elems.size()); ++j) {
        if (last.divides(elems[static_cast<std::size_t>(j)])) {
            chain.push_back(j);
            extend_chains(elems, chain, cx, chain_cap);
            chain.pop_back();
        }
    }
}

std::vector<std::vector<mpz_class>> chain_boundary(const std::vector<std::vector<int>>& from,
                                                   const std::vector<std::vector<int>>& to) {
    std::map<std::vector<int>, std::size_t> row_of;
    for (std::size_t r = 0; r < to.size(); ++r)
        row_of[to[r]] = r;
    std::vector<std::vector<mpz_class>> m(to.size(), std::vector<mpz_class>(from.size(), 0));
    for (std::size_t c = 0; c < from.size(); ++c) {
        const auto& face = from[c];
        int sign = 1;
        for (std::size_t t = 0; t < face.size(); ++t) {
            std::vector<int> sub;
            sub.reserve(face.size() - 1);
            for (std::size_t u = 0; u < face.size(); ++u)
                if (u != t)
                    sub.push_back(face[u]);
            m[row_of.at(sub)][c] += sign;
            sign = -sign;
        }
    }
    return m;
}

} // namespace

LcmLattice lcm_lattice(const MonomialIdeal& ideal, const Limits& limits) {
    require_proper_nonzero(ideal);
    if (static_cast<int>(ideal.ngens()) > limits.lattice_gen_cap)
        throw ResourceLimitError("lcm lattice refused: " + std::to_string(ideal.ngens()) +
                                 " generators exceed the cap of " +
                                 std::to_string(limits.lattice_gen_cap));
    auto closure = lcm_closure(ideal, limits.lattice_size_cap);
    LcmLattice lattice;
    lattice.elements.reserve(closure.size() + 1);
    lattice.elements.push_back(Monomial::one(ideal.ring().nvars()));
    lattice.elements.insert(lattice.elements.end(), closure.begin(), closure.end());
    std::sort(lattice.elements.begin(), lattice.elements.end());
    return lattice;
}

void BettiTable::set(int i, const Monomial& m, std::int64_t rank) {
    if (rank < 0)
        throw std::logic_error("negative Betti rank");
    if (rank > 0)
        entries_[{i, m}] = rank;
}

std::int64_t BettiTable::rank(int i, const Monomial& m) const {
    auto it = entries_.find({i, m});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::pd() const {
    int p = 0;
    for (const auto& [key, rank] : entries_)
        p = std::max(p, key.first);
    return p;
}

std::int64_t BettiTable::total(int i) const {
    std::int64_t t = 0;
    for (const auto& [key, rank] : entries_)
        if (key.first == i)
            t += rank;
    return t;
}

namespace {

template <typename RankFn>
BettiTable order_complex_betti(const MonomialIdeal& ideal, const Limits& limits,
                               RankFn&& rank_of) {
    LcmLattice lattice = lcm_lattice(ideal, limits);
    BettiTable table;
    table.set(0, lattice.elements.front(), 1);

    std::size_t chains_used = 0;
    for (std::size_t t = 1; t < lattice.elements.size(); ++t) {
        const Monomial& top = lattice.elements[t];
        // Open interval (bottom, top), sorted by (degree, lex): a linear
        // extension of divisibility, which orients the chains.
        std::vector<Monomial> elems;
        for (std::size_t u = 1; u < lattice.elements.size(); ++u) {
            const Monomial& e = lattice.elements[u];
            if (e != top && e.divides(top))
                elems.push_back(e);
        }
        std::sort(elems.begin(), elems.end(), [](const Monomial& a, const Monomial& b) {
            auto da = a.degree(), db = b.degree();
            return da != db ? da < db : a < b;
        });

        IntervalComplex cx;
        std::size_t budget = limits.chain_cap - std::min(chains_used, limits.chain_cap);
        for (int start = 0; start < static_cast<int>(elems.size()); ++start) {
            std::vector<int> chain{start};
            extend_chains(elems, chain, cx, budget);
        }
        chains_used += cx.total_chains;

        // Reduced homology; the empty face gives the dimension -1 term.
        std::int64_t f0 = cx.faces.empty() ? 0 : static_cast<std::int64_t>(cx.faces[0].size());
        table.set(1, top, f0 == 0 ? 1 : 0);
        int maxd = static_cast<int>(cx.faces.size()) - 1;
        for (int d = 0; d <= maxd; ++d) {
            std::int64_t cd = static_cast<std::int64_t>(cx.faces[static_cast<std::size_t>(d)].size());
            int rank_down;
            if (d == 0) {
                rank_down = cd > 0 ? 1 : 0; // augmentation to the empty face
            } else {
                rank_down = rank_of(chain_boundary(cx.faces[static_cast<std::size_t>(d)],
                                                   cx.faces[static_cast<std::size_t>(d - 1)]));
            }
            int rank_up = 0;
            if (d + 1 <= maxd)
                rank_up = rank_of(chain_boundary(cx.faces[static_cast<std::size_t>(d + 1)],
                                                 cx.faces[static_cast<std::size_t>(d)]));
            table.set(d + 2, top, cd - rank_down - rank_up);
        }
    }
    return table;
}

} // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const Limits& limits) {
    return order_complex_betti(ideal, limits,
                               [](std::vector<std::vector<mpz_class>> m) {
                                   return matrix_rank(std::move(m));
                               });
}

BettiTable betti_table_mod_p(const MonomialIdeal& ideal, std::uint32_t p, const Limits& limits) {
    if (p < 2 || p >= (1u << 31))
        throw UsageError("characteristic must be a prime below 2^31");
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw UsageError("characteristic " + std::to_string(p) + " is not prime");
    return order_complex_betti(ideal, limits,
                               [p](const std::vector<std::vector<mpz_class>>& m) {
                                   return matrix_rank_mod_p(m, p);
                               });
}

BettiTable koszul_betti_oracle(const MonomialIdeal& ideal, const Limits& limits) {
    LcmLattice lattice = lcm_lattice(ideal, limits);
    int n = ideal.ring().nvars();
    BettiTable table;
    for (const auto& m : lattice.elements)
        for (int i = 0; i <= n; ++i)
            table.set(i, m, koszul_homology_rank(ideal, m, i));
    return table;
}

int projective_dimension(const MonomialIdeal& ideal, const Limits& limits) {
    if (ideal.is_zero())
        return 0;
    require_proper_nonzero(ideal);
    int n = ideal.ring().nvars();
    auto closure = lcm_closure(ideal, limits.lattice_size_cap);
    // The minimal generators always contribute in degree 1. Nonzero Koszul
    // homology in degree i needs a multidegree whose support has >= i
    // variables, so each multidegree is scanned from its own top downward.
    int best = 1;
    for (const auto& m : closure) {
        int top = std::popcount(sigma_fits(m));
        if (top <= best)
            continue;
        KoszulDegree kd = koszul_basis(ideal, m);
        for (int i = top; i > best; --i) {
            const auto& ci = kd.basis[static_cast<std::size_t>(i)];
            if (ci.empty())
                continue;
            int rank_out = matrix_rank(koszul_boundary(ci, kd.basis[static_cast<std::size_t>(i - 1)]));
            int rank_in = 0;
            if (i < n)
                rank_in = matrix_rank(
                    koszul_boundary(kd.basis[static_cast<std::size_t>(i + 1)], ci));
            if (static_cast<std::int64_t>(ci.size()) - rank_out - rank_in > 0) {
                best = i;
                break;
            }
        }
        if (best == n)
            break;
    }
    return best;
}

int depth(const MonomialIdeal& ideal, const Limits& limits) {
    if (ideal.is_unit())
        throw UsageError("depth of the unit ideal's quotient is undefined");
    int n = ideal.ring().nvars();
    if (ideal.is_zero())
        return n;
    return n - projective_dimension(ideal, limits);
}

} // namespace mistab

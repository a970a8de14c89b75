#include "mistab/decomposition.hpp"

#include <algorithm>
#include <set>

namespace mistab {

PrimeSupport::PrimeSupport(std::vector<int> vars, int nvars) : vars_(std::move(vars)) {
    if (vars_.empty())
        throw UsageError("prime support must be nonempty");
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    for (int v : vars_) {
        if (v < 0 || v >= nvars)
            throw UsageError("prime support variable out of range");
        mask_ |= 1u << v;
    }
}

bool PrimeSupport::contains_var(int i) const {
    return (mask_ & (1u << i)) != 0;
}

bool PrimeSupport::subset_of(const PrimeSupport& other) const {
    return (mask_ & ~other.mask_) == 0;
}

MonomialIdeal PrimeSupport::to_ideal(const Ring& ring) const {
    std::vector<Monomial> gens;
    gens.reserve(vars_.size());
    for (int v : vars_)
        gens.push_back(Monomial::variable(ring.nvars(), v));
    return MonomialIdeal::make(ring, std::move(gens));
}

std::string PrimeSupport::str(const Ring& ring) const {
    std::string out = "(";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i)
            out += ',';
        out += ring.variable(vars_[i]);
    }
    out += ')';
    return out;
}

bool PrimeSupport::operator<(const PrimeSupport& o) const {
    return vars_ < o.vars_;
}

IrreducibleComponent::IrreducibleComponent(std::vector<std::int64_t> exps)
    : exps_(std::move(exps)) {
    bool any = false;
    for (auto e : exps_) {
        if (e < 0)
            throw UsageError("negative exponent in irreducible component");
        any = any || e > 0;
    }
    if (!any)
        throw UsageError("irreducible component must have nonempty support");
}

PrimeSupport IrreducibleComponent::support() const {
    std::vector<int> vars;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0)
            vars.push_back(static_cast<int>(i));
    return PrimeSupport(std::move(vars), static_cast<int>(exps_.size()));
}

MonomialIdeal IrreducibleComponent::to_ideal(const Ring& ring) const {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0)
            gens.push_back(Monomial::variable(ring.nvars(), static_cast<int>(i), exps_[i]));
    return MonomialIdeal::make(ring, std::move(gens));
}

bool IrreducibleComponent::contained_in(const IrreducibleComponent& other) const {
    // (x_i^{a_i} : i in S) ⊆ (x_j^{b_j} : j in S') iff S ⊆ S' and b_i <= a_i on S.
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > 0) {
            if (other.exps_[i] == 0 || other.exps_[i] > exps_[i])
                return false;
        }
    }
    return true;
}

std::string DecompositionCache::key_of(const MonomialIdeal& ideal) {
    std::string key;
    key.reserve(ideal.ngens() * ideal.ring().nvars() * sizeof(std::int64_t));
    for (const auto& g : ideal.gens())
        for (auto e : g.exponents())
            key.append(reinterpret_cast<const char*>(&e), sizeof(e));
    return key;
}

const std::vector<IrreducibleComponent>* DecompositionCache::find(const MonomialIdeal& ideal) const {
    auto it = memo_.find(key_of(ideal));
    return it == memo_.end() ? nullptr : &it->second;
}

void DecompositionCache::store(const MonomialIdeal& ideal, std::vector<IrreducibleComponent> comps) {
    memo_.emplace(key_of(ideal), std::move(comps));
}

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw UsageError("operation requires a nonzero ideal");
    if (ideal.is_unit())
        throw UsageError("operation requires a proper ideal");
}

// Splitting recursion. Every generator of a leaf is a pure variable power,
// so the leaf is itself irreducible.
void decompose_into(const MonomialIdeal& ideal, DecompositionCache& cache,
                    std::set<IrreducibleComponent>& out) {
    if (const auto* hit = cache.find(ideal)) {
        out.insert(hit->begin(), hit->end());
        return;
    }

    const auto& gens = ideal.gens();
    int pivot = -1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].support().size() >= 2) {
            pivot = static_cast<int>(i);
            break;
        }
    }

    std::set<IrreducibleComponent> local;
    if (pivot < 0) {
        std::vector<std::int64_t> exps(static_cast<std::size_t>(ideal.ring().nvars()), 0);
        for (const auto& g : gens) {
            int v = g.support().front();
            exps[static_cast<std::size_t>(v)] = g[v];
        }
        local.insert(IrreducibleComponent(std::move(exps)));
    } else {
        const Monomial& g = gens[static_cast<std::size_t>(pivot)];
        int v = g.support().front();
        Monomial pure = Monomial::variable(ideal.ring().nvars(), v, g[v]);
        Monomial rest = g.exact_quotient(pure);

        std::vector<Monomial> base;
        base.reserve(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (static_cast<int>(i) != pivot)
                base.push_back(gens[i]);

        for (const Monomial& part : {pure, rest}) {
            std::vector<Monomial> branch = base;
            branch.push_back(part);
            decompose_into(MonomialIdeal::make(ideal.ring(), std::move(branch)), cache, local);
        }
    }

    cache.store(ideal, std::vector<IrreducibleComponent>(local.begin(), local.end()));
    out.insert(local.begin(), local.end());
}

MonomialIdeal intersect_components(const Ring& ring,
                                   const std::vector<IrreducibleComponent>& comps,
                                   int skip = -1) {
    MonomialIdeal acc = MonomialIdeal::unit(ring);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (static_cast<int>(i) == skip)
            continue;
        acc = intersect(acc, comps[i].to_ideal(ring));
    }
    return acc;
}

} // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            DecompositionCache* cache) {
    require_proper_nonzero(ideal);

    DecompositionCache local_cache;
    DecompositionCache& memo = cache ? *cache : local_cache;

    std::set<IrreducibleComponent> raw;
    decompose_into(ideal, memo, raw);

    // Pairwise prune: a component containing another one is redundant in the
    // intersection.
    std::vector<IrreducibleComponent> comps(raw.begin(), raw.end());
    std::vector<bool> drop(comps.size(), false);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (drop[i])
            continue;
        for (std::size_t j = 0; j < comps.size(); ++j) {
            if (i == j || drop[j])
                continue;
            if (comps[i].contained_in(comps[j]))
                drop[j] = true;
        }
    }
    std::vector<IrreducibleComponent> pruned;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (!drop[i])
            pruned.push_back(comps[i]);

    // Drop-one pass to a fixed point: remove any component implied by the
    // intersection of the others.
    bool changed = true;
    while (changed && pruned.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < pruned.size(); ++i) {
            MonomialIdeal others = intersect_components(ideal.ring(), pruned, static_cast<int>(i));
            if (subset(others, pruned[i].to_ideal(ideal.ring()))) {
                pruned.erase(pruned.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }

    if (intersect_components(ideal.ring(), pruned) != ideal)
        throw std::logic_error("irreducible decomposition does not intersect back to the input");

    std::sort(pruned.begin(), pruned.end());
    return pruned;
}

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal, DecompositionCache* cache) {
    auto comps = irreducible_decomposition(ideal, cache);
    std::set<PrimeSupport> supports;
    for (const auto& c : comps)
        supports.insert(c.support());
    return {supports.begin(), supports.end()};
}

namespace {

std::vector<std::uint32_t> generator_support_masks(const MonomialIdeal& ideal) {
    std::vector<std::uint32_t> masks;
    masks.reserve(ideal.ngens());
    for (const auto& g : ideal.gens())
        masks.push_back(g.support_mask());
    return masks;
}

bool covers(std::uint32_t candidate, const std::vector<std::uint32_t>& gen_masks) {
    for (auto m : gen_masks)
        if ((candidate & m) == 0)
            return false;
    return true;
}

PrimeSupport support_from_mask(std::uint32_t mask, int nvars) {
    std::vector<int> vars;
    for (int v = 0; v < nvars; ++v)
        if (mask & (1u << v))
            vars.push_back(v);
    return PrimeSupport(std::move(vars), nvars);
}

} // namespace

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal) {
    require_proper_nonzero(ideal);
    int n = ideal.ring().nvars();
    auto masks = generator_support_masks(ideal);
    std::vector<PrimeSupport> out;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        if (!covers(s, masks))
            continue;
        bool minimal = true;
        for (int v = 0; v < n && minimal; ++v)
            if ((s & (1u << v)) && covers(s & ~(1u << v), masks))
                minimal = false;
        if (minimal)
            out.push_back(support_from_mask(s, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int height(const MonomialIdeal& ideal) {
    auto mins = minimal_primes(ideal);
    int h = ideal.ring().nvars();
    for (const auto& p : mins)
        h = std::min(h, p.size());
    return h;
}

std::vector<PrimeSupport> potential_ass(const MonomialIdeal& ideal) {
    require_proper_nonzero(ideal);
    int n = ideal.ring().nvars();
    auto masks = generator_support_masks(ideal);
    std::vector<PrimeSupport> out;
    for (std::uint32_t s = 1; s < (1u << n); ++s)
        if (covers(s, masks))
            out.push_back(support_from_mask(s, n));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Monomial> ass_witness(const MonomialIdeal& ideal, const PrimeSupport& prime,
                                    const Limits& limits) {
    require_proper_nonzero(ideal);
    int n = ideal.ring().nvars();
    Monomial box = ideal.exponent_max();

    std::uint64_t volume = 1;
    for (int i = 0; i < n; ++i) {
        volume *= static_cast<std::uint64_t>(box[i]) + 1;
        if (volume > limits.witness_box_cap)
            throw ResourceLimitError("witness divisor box exceeds cap of " +
                                     std::to_string(limits.witness_box_cap) + " points");
    }

    MonomialIdeal target = prime.to_ideal(ideal.ring());
    std::vector<std::int64_t> exps(static_cast<std::size_t>(n), 0);
    // Odometer over the divisor box, lexicographic from 1 upward.
    while (true) {
        Monomial candidate{std::vector<std::int64_t>(exps)};
        if (colon(ideal, candidate) == target)
            return candidate;
        int pos = n - 1;
        while (pos >= 0 && exps[static_cast<std::size_t>(pos)] == box[pos]) {
            exps[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            return std::nullopt;
        ++exps[static_cast<std::size_t>(pos)];
    }
}

} // namespace mistab

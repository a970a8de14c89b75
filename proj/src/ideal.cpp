#include "mistab/ideal.hpp"

#include <algorithm>

namespace mistab {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ring() != b.ring())
        throw UsageError("operands live in different rings");
}

void require_width(const Ring& ring, const Monomial& m) {
    if (m.nvars() != ring.nvars())
        throw UsageError("monomial width does not match the ring");
}

} // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (const auto& g : gens) {
        bool dominated = false;
        for (const auto& h : gens) {
            if (&h == &g)
                continue;
            if (h == g)
                continue;
            if (h.divides(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            kept.push_back(g);
    }
    return kept;
}

MonomialIdeal MonomialIdeal::make(Ring ring, std::vector<Monomial> gens) {
    for (const auto& g : gens)
        require_width(ring, g);
    return MonomialIdeal(std::move(ring), minimalize(std::move(gens)));
}

MonomialIdeal MonomialIdeal::zero(Ring ring) {
    return MonomialIdeal(std::move(ring), {});
}

MonomialIdeal MonomialIdeal::unit(Ring ring) {
    int n = ring.nvars();
    return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::principal(Ring ring, Monomial m) {
    require_width(ring, m);
    return MonomialIdeal(std::move(ring), {std::move(m)});
}

Monomial MonomialIdeal::exponent_max() const {
    if (is_zero())
        throw UsageError("exponent_max of the zero ideal");
    Monomial acc = gens_.front();
    for (std::size_t i = 1; i < gens_.size(); ++i)
        acc = acc.lcm(gens_[i]);
    return acc;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    require_width(ring_, m);
    for (const auto& g : gens_)
        if (g.divides(m))
            return true;
    return false;
}

std::string MonomialIdeal::str() const {
    if (is_zero())
        return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            out += ", ";
        out += gens_[i].str(ring_);
    }
    out += ')';
    return out;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> prods;
    prods.reserve(a.ngens() * b.ngens());
    for (const auto& g : a.gens()) {
        for (const auto& h : b.gens()) {
            try {
                prods.push_back(g.times(h));
            } catch (const ExponentOverflow&) {
                throw ExponentOverflow("exponent overflow computing " + g.str(a.ring()) +
                                       " * " + h.str(b.ring()));
            }
        }
    }
    return MonomialIdeal::make(a.ring(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& a, std::int64_t k) {
    if (k < 0)
        throw UsageError("ideal power requires k >= 0");
    if (k == 0)
        return MonomialIdeal::unit(a.ring());
    // Repeated multiply with eager minimalization keeps intermediate
    // generator sets at their minimum.
    MonomialIdeal acc = a;
    for (std::int64_t i = 1; i < k; ++i)
        acc = multiply(acc, a);
    return acc;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
    if (m.nvars() != a.ring().nvars())
        throw UsageError("colon divisor width does not match the ring");
    std::vector<Monomial> gens;
    gens.reserve(a.ngens());
    for (const auto& g : a.gens())
        gens.push_back(g.quotient_by(m));
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    if (b.is_zero())
        throw UsageError("colon by the zero ideal");
    bool first = true;
    MonomialIdeal acc = MonomialIdeal::zero(a.ring());
    for (const auto& m : b.gens()) {
        MonomialIdeal q = colon(a, m);
        acc = first ? q : intersect(acc, q);
        first = false;
    }
    return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> lcms;
    lcms.reserve(a.ngens() * b.ngens());
    for (const auto& g : a.gens())
        for (const auto& h : b.gens())
            lcms.push_back(g.lcm(h));
    return MonomialIdeal::make(a.ring(), std::move(lcms));
}

bool subset(const MonomialIdeal& inner, const MonomialIdeal& outer) {
    require_same_ring(inner, outer);
    for (const auto& g : inner.gens())
        if (!outer.contains(g))
            return false;
    return true;
}

std::pair<Monomial, MonomialIdeal> factor_gcd(const MonomialIdeal& a) {
    if (a.is_zero())
        throw UsageError("factor_gcd of the zero ideal");
    Monomial f = a.gens().front();
    for (std::size_t i = 1; i < a.ngens(); ++i)
        f = f.gcd(a.gens()[i]);
    std::vector<Monomial> rest;
    rest.reserve(a.ngens());
    for (const auto& g : a.gens())
        rest.push_back(g.exact_quotient(f));
    return {f, MonomialIdeal::make(a.ring(), std::move(rest))};
}

MonomialIdeal radical(const MonomialIdeal& a) {
    std::vector<Monomial> gens;
    gens.reserve(a.ngens());
    for (const auto& g : a.gens())
        gens.push_back(g.squarefree_part());
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

} // namespace mistab

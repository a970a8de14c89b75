#include "mistab/closure.hpp"

#include <algorithm>
#include <functional>

namespace mistab {

namespace {

// One inequality sum lam[i]*lambda_i <= sum vc[j]*v_j + cst during
// elimination; lam empties out as variables are eliminated.
struct WorkRow {
    std::vector<mpz_class> lam;
    std::vector<mpz_class> vc;
    mpz_class cst;
};

void gcd_normalize(WorkRow& r) {
    mpz_class g = 0;
    auto fold = [&g](const mpz_class& x) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t()); };
    for (const auto& x : r.lam)
        fold(x);
    for (const auto& x : r.vc)
        fold(x);
    fold(r.cst);
    if (g > 1) {
        for (auto& x : r.lam)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        for (auto& x : r.vc)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(r.cst.get_mpz_t(), r.cst.get_mpz_t(), g.get_mpz_t());
    }
}

bool all_zero(const std::vector<mpz_class>& v) {
    return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

// Drops rows implied by another row with the same lambda part and a
// componentwise smaller right-hand side (valid because v >= 0), plus exact
// duplicates and trivially true rows. Returns false on a row that is false
// for every v.
bool prune(std::vector<WorkRow>& rows) {
    std::vector<WorkRow> kept;
    for (auto& r : rows) {
        gcd_normalize(r);
        if (all_zero(r.lam) && all_zero(r.vc)) {
            if (r.cst < 0)
                return false;
            continue;
        }
        kept.push_back(std::move(r));
    }
    std::vector<bool> drop(kept.size(), false);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (drop[i])
            continue;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (i == j || drop[j] || kept[i].lam != kept[j].lam)
                continue;
            bool implies = kept[i].cst <= kept[j].cst;
            for (std::size_t t = 0; implies && t < kept[i].vc.size(); ++t)
                implies = kept[i].vc[t] <= kept[j].vc[t];
            if (implies && !(i > j && kept[i].vc == kept[j].vc && kept[i].cst == kept[j].cst))
                drop[j] = true;
        }
    }
    std::vector<WorkRow> out;
    for (std::size_t i = 0; i < kept.size(); ++i)
        if (!drop[i])
            out.push_back(std::move(kept[i]));
    rows = std::move(out);
    return true;
}

} // namespace

NewtonSystem::NewtonSystem(const MonomialIdeal& ideal, std::int64_t scale)
    : nvars_(ideal.ring().nvars()), scale_(scale) {
    if (ideal.is_zero())
        throw UsageError("Newton system of the zero ideal");
    if (scale < 1)
        throw UsageError("Newton system scale must be positive");
    std::vector<std::vector<std::int64_t>> gens;
    gens.reserve(ideal.ngens());
    for (const auto& g : ideal.gens())
        gens.push_back(g.exponents());
    eliminate(std::move(gens));
}

void NewtonSystem::eliminate(std::vector<std::vector<std::int64_t>> gens) {
    const std::size_t m = gens.size();
    const std::size_t n = static_cast<std::size_t>(nvars_);
    const std::size_t nl = m - 1; // lambda_m is substituted as k - sum of the rest

    std::vector<WorkRow> rows;
    for (std::size_t i = 0; i < nl; ++i) {
        WorkRow r{std::vector<mpz_class>(nl, 0), std::vector<mpz_class>(n, 0), 0};
        r.lam[i] = -1;
        rows.push_back(std::move(r));
    }
    if (nl > 0) {
        WorkRow r{std::vector<mpz_class>(nl, 1), std::vector<mpz_class>(n, 0), scale_};
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < n; ++j) {
        WorkRow r{std::vector<mpz_class>(nl, 0), std::vector<mpz_class>(n, 0), 0};
        for (std::size_t i = 0; i < nl; ++i)
            r.lam[i] = gens[i][j] - gens[m - 1][j];
        r.vc[j] = 1;
        r.cst = -mpz_class(gens[m - 1][j]) * scale_;
        rows.push_back(std::move(r));
    }

    for (std::size_t t = 0; t < nl; ++t) {
        if (!prune(rows)) {
            infeasible_ = true;
            return;
        }
        std::vector<WorkRow> pos, neg, zero;
        for (auto& r : rows) {
            if (r.lam[t] > 0)
                pos.push_back(std::move(r));
            else if (r.lam[t] < 0)
                neg.push_back(std::move(r));
            else
                zero.push_back(std::move(r));
        }
        std::vector<WorkRow> next = std::move(zero);
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                WorkRow r{std::vector<mpz_class>(nl, 0), std::vector<mpz_class>(n, 0), 0};
                const mpz_class a = p.lam[t];  // > 0
                const mpz_class b = -q.lam[t]; // > 0
                for (std::size_t u = 0; u < nl; ++u)
                    r.lam[u] = b * p.lam[u] + a * q.lam[u];
                for (std::size_t u = 0; u < n; ++u)
                    r.vc[u] = b * p.vc[u] + a * q.vc[u];
                r.cst = b * p.cst + a * q.cst;
                next.push_back(std::move(r));
            }
        }
        rows = std::move(next);
    }
    if (!prune(rows)) {
        infeasible_ = true;
        return;
    }

    for (auto& r : rows)
        facets_.push_back(FacetRow{std::move(r.vc), std::move(r.cst)});
}

bool NewtonSystem::member(const Monomial& v) const {
    if (v.nvars() != nvars_)
        throw UsageError("point width does not match the Newton system");
    if (infeasible_)
        return false;
    for (const auto& f : facets_) {
        mpz_class acc = f.constant;
        for (int j = 0; j < nvars_; ++j) {
            if (f.coeff[static_cast<std::size_t>(j)] != 0)
                acc += f.coeff[static_cast<std::size_t>(j)] * v[j];
        }
        if (acc < 0)
            return false;
    }
    return true;
}

bool np_member(const Monomial& v, const NewtonSystem& sys) {
    return sys.member(v);
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal, std::int64_t k, const Limits& limits) {
    if (ideal.is_zero())
        throw UsageError("integral closure of the zero ideal");
    if (k < 1)
        throw UsageError("integral closure power must be positive");
    if (ideal.is_unit())
        return ideal;

    const int n = ideal.ring().nvars();
    Monomial box = ideal.exponent_max().pow(k);

    std::uint64_t volume = 1;
    for (int j = 0; j < n; ++j) {
        volume *= static_cast<std::uint64_t>(box[j]) + 1;
        if (volume > limits.closure_box_cap)
            throw ResourceLimitError("closure enumeration box exceeds cap of " +
                                     std::to_string(limits.closure_box_cap) + " points");
    }

    NewtonSystem sys(ideal, k);

    std::int64_t min_gen_degree = ideal.gens().front().degree();
    for (const auto& g : ideal.gens())
        min_gen_degree = std::min(min_gen_degree, g.degree());
    std::int64_t degree_lo = min_gen_degree * k;
    std::int64_t degree_hi = 0;
    for (int j = 0; j < n; ++j)
        degree_hi += box[j];

    std::vector<Monomial> accepted;
    std::vector<std::int64_t> point(static_cast<std::size_t>(n), 0);

    // Walk the box degree by degree so no accepted generator can divide a
    // later-accepted one; within a degree the order is lexicographic.
    std::function<void(int, std::int64_t)> walk = [&](int pos, std::int64_t remaining) {
        if (pos == n - 1) {
            if (remaining > box[pos])
                return;
            point[static_cast<std::size_t>(pos)] = remaining;
            Monomial v{std::vector<std::int64_t>(point)};
            bool dominated = std::any_of(accepted.begin(), accepted.end(),
                                         [&](const Monomial& g) { return g.divides(v); });
            if (!dominated && sys.member(v))
                accepted.push_back(std::move(v));
            return;
        }
        std::int64_t cap = std::min<std::int64_t>(box[pos], remaining);
        for (std::int64_t e = 0; e <= cap; ++e) {
            point[static_cast<std::size_t>(pos)] = e;
            walk(pos + 1, remaining - e);
        }
    };
    for (std::int64_t d = degree_lo; d <= degree_hi; ++d)
        walk(0, d);

    return MonomialIdeal::make(ideal.ring(), std::move(accepted));
}

bool closure_scaling_check(const Monomial& f, const MonomialIdeal& J, std::int64_t k,
                           const Limits& limits) {
    MonomialIdeal lhs = integral_closure(multiply(MonomialIdeal::principal(J.ring(), f), J), k, limits);
    MonomialIdeal rhs = multiply(MonomialIdeal::principal(J.ring(), f.pow(k)),
                                 integral_closure(J, k, limits));
    return lhs == rhs;
}

} // namespace mistab

#include "mistab/ring.hpp"

#include <algorithm>
#include <set>

namespace mistab {

namespace {

bool valid_variable_name(const std::string& name) {
    if (name.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(name.front())))
        return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c));
    });
}

} // namespace

Ring::Ring(std::vector<std::string> variables) : vars_(std::move(variables)) {
    if (vars_.empty() || vars_.size() > 16)
        throw UsageError("ring must declare between 1 and 16 variables");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (!valid_variable_name(v))
            throw UsageError("invalid variable name '" + v + "'");
        if (!seen.insert(v).second)
            throw UsageError("duplicate variable name '" + v + "'");
    }
}

std::optional<int> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return static_cast<int>(i);
    return std::nullopt;
}

Monomial::Monomial(std::vector<std::int64_t> exponents) : exps_(std::move(exponents)) {
    for (auto e : exps_)
        if (e < 0)
            throw UsageError("negative exponent in monomial");
}

Monomial Monomial::one(int nvars) {
    return Monomial(std::vector<std::int64_t>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::variable(int nvars, int index, std::int64_t exp) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(index)) = exp;
    return Monomial(std::move(e));
}

std::int64_t Monomial::degree() const {
    std::int64_t d = 0;
    for (auto e : exps_) {
        if (__builtin_add_overflow(d, e, &d))
            throw ExponentOverflow("total degree overflows 64 bits");
    }
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > m.exps_[i])
            return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    std::vector<std::int64_t> r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (__builtin_add_overflow(exps_[i], m.exps_[i], &r[i]))
            throw ExponentOverflow("exponent overflow in monomial product");
    }
    return Monomial(std::move(r));
}

Monomial Monomial::pow(std::int64_t k) const {
    if (k < 0)
        throw UsageError("monomial power requires k >= 0");
    std::vector<std::int64_t> r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (__builtin_mul_overflow(exps_[i], k, &r[i]))
            throw ExponentOverflow("exponent overflow in monomial power");
    }
    return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& m) const {
    std::vector<std::int64_t> r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r[i] = std::max(exps_[i], m.exps_[i]);
    return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& m) const {
    std::vector<std::int64_t> r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r[i] = std::min(exps_[i], m.exps_[i]);
    return Monomial(std::move(r));
}

Monomial Monomial::quotient_by(const Monomial& m) const {
    std::vector<std::int64_t> r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r[i] = std::max<std::int64_t>(exps_[i] - m.exps_[i], 0);
    return Monomial(std::move(r));
}

Monomial Monomial::exact_quotient(const Monomial& d) const {
    std::vector<std::int64_t> r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        r[i] = exps_[i] - d.exps_[i];
        if (r[i] < 0)
            throw UsageError("exact_quotient: divisor does not divide");
    }
    return Monomial(std::move(r));
}

Monomial Monomial::squarefree_part() const {
    std::vector<std::int64_t> r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r[i] = exps_[i] > 0 ? 1 : 0;
    return Monomial(std::move(r));
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0)
            s.push_back(static_cast<int>(i));
    return s;
}

std::uint32_t Monomial::support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0)
            m |= 1u << i;
    return m;
}

std::string Monomial::str(const Ring& ring) const {
    if (is_one())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring.variable(static_cast<int>(i));
        if (exps_[i] > 1)
            out += '^' + std::to_string(exps_[i]);
    }
    return out;
}

} // namespace mistab

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mistab/errors.hpp"

namespace mistab {

/// Ambient polynomial ring, identified by its ordered variable list.
/// Coefficients never enter monomial arithmetic, so no field is stored.
class Ring {
public:
    explicit Ring(std::vector<std::string> variables);

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(int i) const { return vars_.at(static_cast<std::size_t>(i)); }
    std::optional<int> index_of(std::string_view name) const;

    bool operator==(const Ring& other) const { return vars_ == other.vars_; }
    bool operator!=(const Ring& other) const { return !(*this == other); }

private:
    std::vector<std::string> vars_;
};

/// Exponent vector over a fixed ring. Arithmetic is checked: overflow of a
/// 64-bit exponent raises ExponentOverflow instead of wrapping.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::int64_t> exponents);

    static Monomial one(int nvars);
    static Monomial variable(int nvars, int index, std::int64_t exp = 1);

    int nvars() const { return static_cast<int>(exps_.size()); }
    std::int64_t operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& exponents() const { return exps_; }

    std::int64_t degree() const;
    bool is_one() const;
    bool divides(const Monomial& m) const;

    Monomial times(const Monomial& m) const;
    Monomial pow(std::int64_t k) const;
    Monomial lcm(const Monomial& m) const;
    Monomial gcd(const Monomial& m) const;
    /// this / gcd(this, m); the generator map of a colon by m.
    Monomial quotient_by(const Monomial& m) const;
    /// this / d; requires d | this.
    Monomial exact_quotient(const Monomial& d) const;
    Monomial squarefree_part() const;

    std::vector<int> support() const;
    std::uint32_t support_mask() const;

    bool operator==(const Monomial& m) const { return exps_ == m.exps_; }
    bool operator!=(const Monomial& m) const { return !(*this == m); }
    /// Lexicographic order on exponent vectors; the canonical generator order.
    bool operator<(const Monomial& m) const { return exps_ < m.exps_; }

    /// Render in the input grammar, e.g. "x^2*y" or "1".
    std::string str(const Ring& ring) const;

private:
    std::vector<std::int64_t> exps_;
};

} // namespace mistab

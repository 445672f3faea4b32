#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "lkrep/rational.hpp"

namespace lkrep {

// Exponent pair of a monomial c * s^s_exp * t^t_exp, where s stands for
// q^(1/2). A monomial lies in Z[q^{\pm 1}, t^{\pm 1}] iff s_exp is even.
struct Exponents {
    int s_exp = 0;
    int t_exp = 0;

    auto operator<=>(const Exponents&) const = default;
};

/*
 * Sparse two-variable Laurent polynomial in s = q^(1/2) and t with
 * arbitrary-precision integer coefficients.
 *
 * One carrier ring hosts both Z[q^{\pm 1}, t^{\pm 1}] (even s-exponents)
 * and Z[q^{\pm 1/2}] (no t), so the t = -q^{-1} specialization is a plain
 * substitution. Values are kept canonical: no zero coefficient is ever
 * stored, and terms are ordered lexicographically by (s_exp, t_exp).
 * Equality is structural equality of canonical forms.
 */
class Laurent {
public:
    using TermMap = std::map<Exponents, mpz_class>;

    Laurent() = default;
    Laurent(long value) { insert({0, 0}, mpz_class(value)); }  // implicit: constants embed
    explicit Laurent(const mpz_class& value) { insert({0, 0}, value); }

    static Laurent monomial(const mpz_class& coeff, int s_exp, int t_exp);
    // s^power = q^(power/2)
    static Laurent sqrt_q(int power = 1) { return monomial(1, power, 0); }
    static Laurent q(int power = 1) { return monomial(1, 2 * power, 0); }
    static Laurent t(int power = 1) { return monomial(1, 0, power); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // Units of Z[q^{\pm 1/2}, t^{\pm 1}] are single terms with coefficient +-1.
    bool is_unit() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of s^s_exp * t^t_exp (zero if absent).
    mpz_class coeff(int s_exp, int t_exp) const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& rhs);
    Laurent& operator-=(const Laurent& rhs);
    Laurent& operator*=(const Laurent& rhs);

    friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
    friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
    friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);

    bool operator==(const Laurent&) const = default;

    // The involution q -> q^{-1}, t -> t^{-1} (negates every exponent pair).
    Laurent bar() const;

    // Substitutes t = -q^{-1} = -s^{-2}; the result has no t part.
    Laurent specialize_t() const;

    // Exact evaluation at s = s0, t = t0. Requires s0, t0 nonzero.
    Rational eval(const Rational& s0, const Rational& t0) const;

    // num / den when den divides num exactly in the Laurent ring;
    // nullopt otherwise. den must be nonzero.
    static std::optional<Laurent> divide_exact(const Laurent& num, const Laurent& den);

    // Multiplicative inverse of a unit (single term, coefficient +-1).
    Laurent unit_inverse() const;

    Laurent pow(int exponent) const;  // negative exponents allowed for units

    // Canonical text form, e.g. "1 - 2*q + q^2", "-q^2*t", "q^(1/2)".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Laurent& p) {
        return os << p.str();
    }

private:
    void insert(Exponents e, const mpz_class& c);

    TermMap terms_;
};

}  // namespace lkrep

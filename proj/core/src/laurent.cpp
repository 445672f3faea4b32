#include "lkrep/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "lkrep/errors.hpp"

namespace lkrep {

Rational rational_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x == 0) {
        if (e < 0) throw zero_substitution_error("rational_pow: 0 raised to a negative power");
        return Rational(0);
    }
    Rational base = x;
    if (e < 0) {
        base = Rational(x.get_den(), x.get_num());
        base.canonicalize();
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    acc.canonicalize();
    return acc;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational", 0);
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(text));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw dimension_error("rational with zero denominator: " + text);
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational '" + text + "'", 0);
    }
}

Laurent Laurent::monomial(const mpz_class& coeff, int s_exp, int t_exp) {
    Laurent p;
    p.insert({s_exp, t_exp}, coeff);
    return p;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
           terms_.begin()->second == 1;
}

bool Laurent::is_unit() const {
    if (terms_.size() != 1) return false;
    const mpz_class& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

mpz_class Laurent::coeff(int s_exp, int t_exp) const {
    auto it = terms_.find({s_exp, t_exp});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void Laurent::insert(Exponents e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent Laurent::operator-() const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) insert(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) insert(e, -c);
    return *this;
}

Laurent operator*(const Laurent& lhs, const Laurent& rhs) {
    Laurent out;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            out.insert({ea.s_exp + eb.s_exp, ea.t_exp + eb.t_exp}, ca * cb);
        }
    }
    return out;
}

Laurent& Laurent::operator*=(const Laurent& rhs) {
    *this = *this * rhs;
    return *this;
}

Laurent Laurent::bar() const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{-e.s_exp, -e.t_exp}, c);
    return out;
}

Laurent Laurent::specialize_t() const {
    Laurent out;
    for (const auto& [e, c] : terms_) {
        // t^k -> (-1)^k s^(-2k)
        const mpz_class signed_c = (e.t_exp % 2 == 0) ? c : mpz_class(-c);
        out.insert({e.s_exp - 2 * e.t_exp, 0}, signed_c);
    }
    return out;
}

Rational Laurent::eval(const Rational& s0, const Rational& t0) const {
    if (s0 == 0 || t0 == 0)
        throw zero_substitution_error("Laurent::eval: s and t substitutions must be nonzero");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        acc += Rational(c) * rational_pow(s0, e.s_exp) * rational_pow(t0, e.t_exp);
    }
    acc.canonicalize();
    return acc;
}

namespace {

struct ExponentBox {
    int s_min, s_max, t_min, t_max;
};

ExponentBox exponent_box(const Laurent::TermMap& terms) {
    ExponentBox box{0, 0, 0, 0};
    bool first = true;
    for (const auto& [e, c] : terms) {
        (void)c;
        if (first) {
            box = {e.s_exp, e.s_exp, e.t_exp, e.t_exp};
            first = false;
        } else {
            box.s_min = std::min(box.s_min, e.s_exp);
            box.s_max = std::max(box.s_max, e.s_exp);
            box.t_min = std::min(box.t_min, e.t_exp);
            box.t_max = std::max(box.t_max, e.t_exp);
        }
    }
    return box;
}

}  // namespace

std::optional<Laurent> Laurent::divide_exact(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return Laurent();
    const auto [lead_e, lead_c] = *den.terms_.rbegin();
    // In a domain the extreme degree per variable is additive under
    // multiplication, so an exact quotient's exponents live in this box.
    // Stepping outside it proves the division inexact (and bounds the loop,
    // which would otherwise descend forever on inputs like 1 / (1-q)).
    const ExponentBox nb = exponent_box(num.terms_);
    const ExponentBox db = exponent_box(den.terms_);
    const ExponentBox qb{nb.s_min - db.s_min, nb.s_max - db.s_max,
                         nb.t_min - db.t_min, nb.t_max - db.t_max};
    Laurent rem = num;
    Laurent quot;
    while (!rem.is_zero()) {
        const auto [re, rc] = *rem.terms_.rbegin();
        const int qs = re.s_exp - lead_e.s_exp;
        const int qt = re.t_exp - lead_e.t_exp;
        if (qs < qb.s_min || qs > qb.s_max || qt < qb.t_min || qt > qb.t_max)
            return std::nullopt;
        if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
        Laurent term = monomial(qc, qs, qt);
        quot += term;
        rem -= term * den;
    }
    return quot;
}

Laurent Laurent::unit_inverse() const {
    if (!is_unit()) throw dimension_error("unit_inverse of a non-unit Laurent polynomial");
    const auto& [e, c] = *terms_.begin();
    return monomial(c, -e.s_exp, -e.t_exp);  // c in {1,-1} is its own inverse
}

Laurent Laurent::pow(int exponent) const {
    if (exponent < 0) return unit_inverse().pow(-exponent);
    Laurent acc(1);
    Laurent base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

namespace {

void append_power(std::ostream& os, const char* var, int num, int den) {
    // den is 1 or 2; den == 2 renders as q^(k/2)
    if (den == 1) {
        if (num == 1)
            os << var;
        else
            os << var << '^' << num;
    } else {
        os << var << "^(" << num << "/2)";
    }
}

}  // namespace

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        const bool has_vars = e.s_exp != 0 || e.t_exp != 0;
        bool printed = false;
        if (!has_vars || a != 1) {
            os << a.get_str();
            printed = true;
        }
        if (e.s_exp != 0) {
            if (printed) os << '*';
            if (e.s_exp % 2 == 0)
                append_power(os, "q", e.s_exp / 2, 1);
            else
                append_power(os, "q", e.s_exp, 2);
            printed = true;
        }
        if (e.t_exp != 0) {
            if (printed) os << '*';
            append_power(os, "t", e.t_exp, 1);
        }
    }
    return os.str();
}

}  // namespace lkrep

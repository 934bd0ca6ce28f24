#pragma once

#include "jetpva/error.hpp"
#include "jetpva/monomial.hpp"
#include "jetpva/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jetpva {

/// Sparse multivariate Laurent polynomial with exact rational
/// coefficients. Terms are kept in the fixed monomial order and zero
/// coefficients are never stored, so equality is structural.
class Poly {
public:
    Poly() = default;

    static Poly constant(const Rational &c)
    {
        Poly p;
        if (c != 0)
            p.terms_.emplace(Monomial{}, c);
        return p;
    }
    static Poly one() { return constant(1); }
    static Poly variable(VarId v, int exp = 1)
    {
        Poly p;
        p.terms_.emplace(Monomial::variable(v, exp), 1);
        return p;
    }
    static Poly term(const Monomial &m, const Rational &c)
    {
        Poly p;
        if (c != 0)
            p.terms_.emplace(m, c);
        return p;
    }

    const std::map<Monomial, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial &m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial &m, const Rational &c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Poly &operator+=(const Poly &o)
    {
        for (const auto &[m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    Poly &operator-=(const Poly &o)
    {
        for (const auto &[m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator-(const Poly &a)
    {
        Poly r;
        for (const auto &[m, c] : a.terms_)
            r.terms_.emplace(m, -c);
        return r;
    }
    friend Poly operator*(const Rational &s, const Poly &p)
    {
        Poly r;
        if (s == 0)
            return r;
        for (const auto &[m, c] : p.terms_)
            r.terms_.emplace(m, s * c);
        return r;
    }

    friend bool operator==(const Poly &a, const Poly &b) = default;

private:
    std::map<Monomial, Rational> terms_;
};

struct VarInfo {
    std::string name;
    bool invertible = false;
    int weight = 0;
    std::vector<int> multidegree; // one entry per base direction
};

/// Commutative polynomial ring descriptor: a variable table plus an
/// optional conformal-weight cutoff (monomials of total weight > cutoff
/// are identified with zero). Negative exponents are legal only on
/// variables flagged invertible. Immutable after construction.
class PolyRing {
public:
    PolyRing() = default;
    PolyRing(std::vector<VarInfo> vars, int md_size, int weight_cutoff = -1);

    int var_count() const { return static_cast<int>(vars_.size()); }
    const VarInfo &var(VarId v) const { return vars_.at(static_cast<size_t>(v)); }
    int multidegree_size() const { return md_size_; }
    int weight_cutoff() const { return weight_cutoff_; }

    std::optional<VarId> find_var(const std::string &name) const;

    int weight(const Monomial &m) const;
    std::vector<int> multidegree(const Monomial &m) const;
    bool weight_truncated(const Monomial &m) const
    {
        return weight_cutoff_ >= 0 && weight(m) > weight_cutoff_;
    }

    /// Throws if a negative exponent sits on a non-invertible variable.
    void validate(const Monomial &m) const;

    /// Canonical form: validates monomials and applies the weight cutoff.
    Poly normalized(const Poly &p) const;

    Poly mul(const Poly &a, const Poly &b) const;
    Poly pow(const Poly &a, int k) const;

    /// Formal partial derivative; Laurent rule d(x^-1)/dx = -x^-2.
    Poly partial(const Poly &p, VarId v) const;

    /// A Laurent polynomial is a unit iff it is a single term whose
    /// support consists of invertible variables.
    bool is_unit(const Poly &p) const;
    Poly unit_inverse(const Poly &p) const;

    std::string to_string(const Poly &p) const;
    std::string to_string(const Monomial &m) const;

    /// Parses the expression grammar: integers, rationals p/q, declared
    /// variable names, '+', '-', '*', '^' with integer exponents,
    /// parentheses. Throws Error on syntax or validation problems.
    Poly parse(const std::string &text) const;

private:
    std::vector<VarInfo> vars_;
    int md_size_ = 0;
    int weight_cutoff_ = -1;
};

} // namespace jetpva

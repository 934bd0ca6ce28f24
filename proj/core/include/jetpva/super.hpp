#pragma once

#include "jetpva/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jetpva {

using OddId = std::int32_t;

struct OddInfo {
    std::string name;
    int weight = 0;
    std::vector<int> multidegree;
};

/// Strictly increasing list of odd generator ids; theta^2 = 0 is encoded
/// by forbidding repeats, sign normalization by sorting to this order.
using OddWord = std::vector<OddId>;

struct SuperKey {
    Monomial mono;
    OddWord odd;
    friend auto operator<=>(const SuperKey &, const SuperKey &) = default;
};

/// Element of even-ring (x) Lambda[odd generators]: finite sum of
/// (monomial, odd word) terms with nonzero rational coefficients.
class SuperElement {
public:
    SuperElement() = default;

    static SuperElement from_poly(const Poly &p)
    {
        SuperElement s;
        for (const auto &[m, c] : p.terms())
            s.terms_.emplace(SuperKey{m, {}}, c);
        return s;
    }
    static SuperElement term(const SuperKey &k, const Rational &c)
    {
        SuperElement s;
        if (c != 0)
            s.terms_.emplace(k, c);
        return s;
    }
    static SuperElement one() { return from_poly(Poly::one()); }

    const std::map<SuperKey, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SuperKey &k, const Rational &c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    SuperElement &operator+=(const SuperElement &o)
    {
        for (const auto &[k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    SuperElement &operator-=(const SuperElement &o)
    {
        for (const auto &[k, c] : o.terms_)
            add_term(k, -c);
        return *this;
    }
    friend SuperElement operator+(SuperElement a, const SuperElement &b) { return a += b; }
    friend SuperElement operator-(SuperElement a, const SuperElement &b) { return a -= b; }
    friend SuperElement operator*(const Rational &s, const SuperElement &e)
    {
        SuperElement r;
        if (s == 0)
            return r;
        for (const auto &[k, c] : e.terms_)
            r.terms_.emplace(k, s * c);
        return r;
    }

    /// The purely even part as a Poly (terms with empty odd word).
    Poly even_part() const
    {
        Poly p;
        for (const auto &[k, c] : terms_)
            if (k.odd.empty())
                p.add_term(k.mono, c);
        return p;
    }

    friend bool operator==(const SuperElement &, const SuperElement &) = default;

private:
    std::map<SuperKey, Rational> terms_;
};

struct BlockLabel {
    int degree = 0; // cohomological degree = number of odd factors
    int weight = 0;
    std::vector<int> multidegree;
    friend auto operator<=>(const BlockLabel &, const BlockLabel &) = default;
};

/// Per-generator grading assignment (conformal weight, multidegree,
/// parity); defaults to the owning algebra's tables.
struct Grading {
    std::vector<std::pair<int, std::vector<int>>> even; // per even variable
    std::vector<std::pair<int, std::vector<int>>> odd;  // per odd generator
};

/// Graded-commutative algebra over an even polynomial ring with a finite
/// list of odd generators. Weight truncation is inherited from the even
/// ring and applies to the total (even + odd) weight of a term.
class SuperAlgebra {
public:
    SuperAlgebra() = default;
    SuperAlgebra(const PolyRing *even, std::vector<OddInfo> odds);

    const PolyRing &even() const { return *even_; }
    int odd_count() const { return static_cast<int>(odds_.size()); }
    const OddInfo &odd(OddId i) const { return odds_.at(static_cast<size_t>(i)); }
    std::optional<OddId> find_odd(const std::string &name) const;

    SuperElement odd_gen(OddId i) const { return SuperElement::term(SuperKey{{}, {i}}, 1); }
    SuperElement even_gen(VarId v) const { return SuperElement::from_poly(Poly::variable(v)); }

    int weight(const SuperKey &k) const;
    std::vector<int> multidegree(const SuperKey &k) const;
    int degree(const SuperKey &k) const { return static_cast<int>(k.odd.size()); }
    bool weight_truncated(const SuperKey &k) const;

    SuperElement normalized(const SuperElement &s) const;
    SuperElement mul(const SuperElement &a, const SuperElement &b) const;

    /// Derivation given by its images on every generator; `parity` odd
    /// means Koszul signs are picked up when moving past odd factors.
    /// Missing images are domain errors when the generator occurs.
    struct Derivation {
        bool odd_parity = false;
        std::vector<std::optional<SuperElement>> even_images;
        std::vector<std::optional<SuperElement>> odd_images;
    };

    SuperElement apply(const Derivation &d, const SuperElement &s) const;
    /// d^k / k! (exact divided power).
    SuperElement apply_divided(const Derivation &d, const SuperElement &s, int k) const;

    Grading grading() const;

    std::string to_string(const SuperElement &s) const;

private:
    const PolyRing *even_ = nullptr;
    std::vector<OddInfo> odds_;
};

/// Splits a family of elements into homogeneous components and groups
/// them by (degree, weight, multidegree).
std::map<BlockLabel, std::vector<SuperElement>>
graded_block_split(const SuperAlgebra &alg, const std::vector<SuperElement> &elems);

std::map<BlockLabel, std::vector<SuperElement>>
graded_block_split(const SuperAlgebra &alg, const std::vector<SuperElement> &elems, const Grading &g);

} // namespace jetpva

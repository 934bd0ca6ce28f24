#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace jetpva {

using VarId = std::int32_t;

/// Monomial in the variables of some ring: a sparse exponent vector.
/// Zero exponents are never stored; factors are sorted by variable id.
/// The total order (lexicographic on the (id, exponent) sequence) is the
/// fixed monomial order used for canonical forms everywhere.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(VarId v, int exp = 1)
    {
        Monomial m;
        if (exp != 0)
            m.factors_.emplace_back(v, exp);
        return m;
    }

    const std::vector<std::pair<VarId, int>> &factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int exponent(VarId v) const
    {
        for (const auto &[id, e] : factors_)
            if (id == v)
                return e;
        return 0;
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b)
    {
        Monomial r;
        auto i = a.factors_.begin(), j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->first < j->first)
                r.factors_.push_back(*i++);
            else if (j->first < i->first)
                r.factors_.push_back(*j++);
            else {
                int e = i->second + j->second;
                if (e != 0)
                    r.factors_.emplace_back(i->first, e);
                ++i, ++j;
            }
        }
        r.factors_.insert(r.factors_.end(), i, a.factors_.end());
        r.factors_.insert(r.factors_.end(), j, b.factors_.end());
        return r;
    }

    /// Divide out one power of v (used by partial derivatives). The
    /// exponent may become negative; legality is the ring's concern.
    Monomial with_exponent_shift(VarId v, int shift) const
    {
        return *this * Monomial::variable(v, shift);
    }

    friend auto operator<=>(const Monomial &a, const Monomial &b) = default;

private:
    std::vector<std::pair<VarId, int>> factors_;
};

} // namespace jetpva

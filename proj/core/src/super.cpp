#include "jetpva/super.hpp"

namespace jetpva {

SuperAlgebra::SuperAlgebra(const PolyRing *even, std::vector<OddInfo> odds)
    : even_(even), odds_(std::move(odds))
{
    for (auto &o : odds_)
        if (o.multidegree.empty())
            o.multidegree.assign(static_cast<size_t>(even_->multidegree_size()), 0);
}

std::optional<OddId> SuperAlgebra::find_odd(const std::string &name) const
{
    for (OddId i = 0; i < odd_count(); ++i)
        if (odds_[static_cast<size_t>(i)].name == name)
            return i;
    return std::nullopt;
}

int SuperAlgebra::weight(const SuperKey &k) const
{
    int w = even_->weight(k.mono);
    for (OddId i : k.odd)
        w += odd(i).weight;
    return w;
}

std::vector<int> SuperAlgebra::multidegree(const SuperKey &k) const
{
    std::vector<int> d = even_->multidegree(k.mono);
    for (OddId i : k.odd) {
        const auto &md = odd(i).multidegree;
        for (size_t j = 0; j < d.size(); ++j)
            d[j] += md[j];
    }
    return d;
}

bool SuperAlgebra::weight_truncated(const SuperKey &k) const
{
    const int cutoff = even_->weight_cutoff();
    return cutoff >= 0 && weight(k) > cutoff;
}

SuperElement SuperAlgebra::normalized(const SuperElement &s) const
{
    SuperElement r;
    for (const auto &[k, c] : s.terms()) {
        even_->validate(k.mono);
        if (!weight_truncated(k))
            r.add_term(k, c);
    }
    return r;
}

namespace {

// Merge strictly increasing odd words; returns 0 on a repeated
// generator, otherwise +/-1 from the number of transpositions.
int merge_odd(const OddWord &a, const OddWord &b, OddWord &out)
{
    out.clear();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            if ((a.size() - i) % 2 == 1)
                sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size())
        out.push_back(a[i++]);
    while (j < b.size())
        out.push_back(b[j++]);
    return sign;
}

} // namespace

SuperElement SuperAlgebra::mul(const SuperElement &a, const SuperElement &b) const
{
    SuperElement r;
    OddWord merged;
    for (const auto &[ka, ca] : a.terms())
        for (const auto &[kb, cb] : b.terms()) {
            int sign = merge_odd(ka.odd, kb.odd, merged);
            if (sign == 0)
                continue;
            SuperKey k{ka.mono * kb.mono, merged};
            even_->validate(k.mono);
            if (weight_truncated(k))
                continue;
            r.add_term(k, Rational(sign) * ca * cb);
        }
    return r;
}

SuperElement SuperAlgebra::apply(const Derivation &d, const SuperElement &s) const
{
    SuperElement r;
    for (const auto &[k, c] : s.terms()) {
        // even factors: no sign, whatever the parity of d
        for (const auto &[v, e] : k.mono.factors()) {
            const auto &img = d.even_images.at(static_cast<size_t>(v));
            if (!img)
                throw Error("exact-core", "derivation table missing even generator " + even_->var(v).name);
            if (img->is_zero())
                continue;
            SuperElement rest = SuperElement::term(
                SuperKey{k.mono.with_exponent_shift(v, -1), k.odd}, c * e);
            r += mul(*img, rest);
        }
        // odd factors: odd derivations pick up (-1)^position
        for (size_t pos = 0; pos < k.odd.size(); ++pos) {
            const OddId o = k.odd[pos];
            const auto &img = d.odd_images.at(static_cast<size_t>(o));
            if (!img)
                throw Error("exact-core", "derivation table missing odd generator " + odd(o).name);
            if (img->is_zero())
                continue;
            int sign = (d.odd_parity && pos % 2 == 1) ? -1 : 1;
            OddWord prefix(k.odd.begin(), k.odd.begin() + static_cast<long>(pos));
            OddWord suffix(k.odd.begin() + static_cast<long>(pos) + 1, k.odd.end());
            SuperElement left = SuperElement::term(SuperKey{k.mono, prefix}, Rational(sign) * c);
            SuperElement right = SuperElement::term(SuperKey{{}, suffix}, 1);
            r += mul(mul(left, *img), right);
        }
    }
    return r;
}

SuperElement SuperAlgebra::apply_divided(const Derivation &d, const SuperElement &s, int k) const
{
    SuperElement r = s;
    for (int i = 0; i < k; ++i)
        r = apply(d, r);
    return Rational(Int(1), factorial(k)) * r;
}

Grading SuperAlgebra::grading() const
{
    Grading g;
    for (VarId v = 0; v < even_->var_count(); ++v)
        g.even.emplace_back(even_->var(v).weight, even_->var(v).multidegree);
    for (OddId i = 0; i < odd_count(); ++i)
        g.odd.emplace_back(odd(i).weight, odd(i).multidegree);
    return g;
}

std::string SuperAlgebra::to_string(const SuperElement &s) const
{
    if (s.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[k, c] : s.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        first = false;
        std::string body;
        if (!k.mono.is_one())
            body = even_->to_string(k.mono);
        for (OddId o : k.odd) {
            if (!body.empty())
                body += "*";
            body += odd(o).name;
        }
        if (body.empty())
            out += rat_to_string(a);
        else if (a == 1)
            out += body;
        else
            out += rat_to_string(a) + "*" + body;
    }
    return out;
}

namespace {

std::map<BlockLabel, std::vector<SuperElement>>
split_impl(const SuperAlgebra &alg, const std::vector<SuperElement> &elems, const Grading &g)
{
    std::map<BlockLabel, std::vector<SuperElement>> blocks;
    for (const auto &e : elems) {
        std::map<BlockLabel, SuperElement> parts;
        for (const auto &[k, c] : e.terms()) {
            int w = 0;
            std::vector<int> md(static_cast<size_t>(alg.even().multidegree_size()), 0);
            for (const auto &[v, ex] : k.mono.factors()) {
                w += ex * g.even[static_cast<size_t>(v)].first;
                const auto &m = g.even[static_cast<size_t>(v)].second;
                for (size_t j = 0; j < md.size(); ++j)
                    md[j] += ex * m[j];
            }
            for (OddId o : k.odd) {
                w += g.odd[static_cast<size_t>(o)].first;
                const auto &m = g.odd[static_cast<size_t>(o)].second;
                for (size_t j = 0; j < md.size(); ++j)
                    md[j] += m[j];
            }
            BlockLabel label{static_cast<int>(k.odd.size()), w, md};
            parts[label].add_term(k, c);
        }
        for (auto &[label, part] : parts)
            blocks[label].push_back(std::move(part));
    }
    return blocks;
}

} // namespace

std::map<BlockLabel, std::vector<SuperElement>>
graded_block_split(const SuperAlgebra &alg, const std::vector<SuperElement> &elems)
{
    return split_impl(alg, elems, alg.grading());
}

std::map<BlockLabel, std::vector<SuperElement>>
graded_block_split(const SuperAlgebra &alg, const std::vector<SuperElement> &elems, const Grading &g)
{
    return split_impl(alg, elems, g);
}

} // namespace jetpva

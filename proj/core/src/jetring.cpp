#include "jetpva/jetring.hpp"

namespace jetpva {

namespace {

std::vector<VarInfo> base_vars(const std::vector<std::string> &names, const std::vector<bool> &invertible)
{
    if (names.size() != invertible.size())
        throw Error("jet-core", "variable name/invertibility lists differ in length");
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw Error("jet-core", "duplicate variable name '" + names[i] + "'");
    std::vector<VarInfo> vars;
    for (size_t a = 0; a < names.size(); ++a) {
        VarInfo v;
        v.name = names[a];
        v.invertible = invertible[a];
        v.weight = 0;
        v.multidegree.assign(names.size(), 0);
        v.multidegree[a] = 1;
        vars.push_back(std::move(v));
    }
    return vars;
}

std::vector<VarInfo> jet_vars(const BaseRing &base, int W)
{
    std::vector<VarInfo> vars;
    const int m = base.nvars();
    for (int a = 0; a < m; ++a) {
        for (int i = 0; i <= W; ++i) {
            VarInfo v;
            v.name = base.var(a).name + "_" + std::to_string(i);
            v.invertible = base.var(a).invertible && i == 0;
            v.weight = i;
            v.multidegree.assign(static_cast<size_t>(m), 0);
            v.multidegree[static_cast<size_t>(a)] = 1;
            vars.push_back(std::move(v));
        }
    }
    return vars;
}

} // namespace

BaseRing::BaseRing(const std::vector<std::string> &names, const std::vector<bool> &invertible)
    : PolyRing(base_vars(names, invertible), static_cast<int>(names.size()))
{}

Poly DeltaRing::delta(const Poly &p) const
{
    Poly r;
    for (VarId v = 0; v < ring->var_count(); ++v) {
        if (delta_images[static_cast<size_t>(v)].is_zero())
            continue;
        Poly d = ring->partial(p, v);
        if (!d.is_zero())
            r += ring->mul(d, delta_images[static_cast<size_t>(v)]);
    }
    return r;
}

Poly DeltaRing::delta_divided(const Poly &p, int k) const
{
    Poly r = p;
    for (int i = 0; i < k; ++i)
        r = delta(r);
    return Rational(Int(1), factorial(k)) * r;
}

JetRing::JetRing(const BaseRing &base, int W)
    : PolyRing(jet_vars(base, W), base.nvars(), W), base_(base), W_(W)
{
    if (W < 0)
        throw Error("jet-core", "weight cutoff must be non-negative");
}

VarId JetRing::jet_var(int a, int i) const
{
    if (a < 0 || a >= base_.nvars() || i < 0 || i > W_)
        throw Error("jet-core", "jet variable index out of range");
    return a * (W_ + 1) + i;
}

std::pair<int, int> JetRing::var_level(VarId v) const
{
    return {v / (W_ + 1), v % (W_ + 1)};
}

Poly JetRing::delta(const Poly &p) const
{
    Poly r;
    for (const auto &[m, c] : p.terms()) {
        for (const auto &[v, e] : m.factors()) {
            auto [a, i] = var_level(v);
            if (i == W_)
                continue; // pushed past the cutoff
            Monomial dm = m.with_exponent_shift(v, -1) * Monomial::variable(jet_var(a, i + 1));
            validate(dm);
            if (!weight_truncated(dm))
                r.add_term(dm, c * e * (i + 1));
        }
    }
    return r;
}

Poly JetRing::delta_divided(const Poly &p, int k) const
{
    Poly r = p;
    for (int i = 0; i < k; ++i)
        r = delta(r);
    return Rational(Int(1), factorial(k)) * r;
}

Poly JetRing::embed_base(const Poly &base_poly) const
{
    Poly r;
    for (const auto &[m, c] : base_poly.terms()) {
        Monomial im;
        for (const auto &[a, e] : m.factors())
            im = im * Monomial::variable(jet_var(a, 0), e);
        r.add_term(im, c);
    }
    return r;
}

Poly JetRing::project_weight0(const Poly &p) const
{
    Poly r;
    for (const auto &[m, c] : p.terms()) {
        if (weight(m) != 0)
            throw Error("jet-core", "projection of a positive-weight element to the base ring");
        Monomial bm;
        for (const auto &[v, e] : m.factors())
            bm = bm * Monomial::variable(var_level(v).first, e);
        r.add_term(bm, c);
    }
    return r;
}

DeltaRing JetRing::delta_ring() const
{
    DeltaRing d;
    d.ring = this;
    for (VarId v = 0; v < var_count(); ++v) {
        auto [a, i] = var_level(v);
        if (i == W_)
            d.delta_images.push_back(Poly{});
        else
            d.delta_images.push_back(Rational(i + 1) * Poly::variable(jet_var(a, i + 1)));
    }
    return d;
}

JetRing build_jet_ring(const BaseRing &base, int W)
{
    return JetRing(base, W);
}

Poly JetMorphism::apply(const Poly &p) const
{
    Poly r;
    for (const auto &[m, c] : p.terms()) {
        Poly t = Poly::constant(c);
        for (const auto &[v, e] : m.factors())
            t = target.ring->mul(t, target.ring->pow(images[static_cast<size_t>(v)], e));
        r += t;
    }
    return r;
}

JetMorphism prolong_algebra_map(const JetRing &jr, const std::vector<Poly> &f, const DeltaRing &target)
{
    const int m = jr.base().nvars();
    if (static_cast<int>(f.size()) != m)
        throw Error("jet-core", "prolongation needs one image per base variable");
    for (int a = 0; a < m; ++a)
        if (jr.base().var(a).invertible && !target.ring->is_unit(f[static_cast<size_t>(a)]))
            throw Error("jet-core",
                        "image of invertible variable " + jr.base().var(a).name + " is not a unit");

    JetMorphism mor;
    mor.source = &jr;
    mor.target = target;
    mor.images.resize(static_cast<size_t>(jr.var_count()));
    for (int a = 0; a < m; ++a)
        for (int i = 0; i <= jr.cutoff(); ++i)
            mor.images[static_cast<size_t>(jr.jet_var(a, i))] =
                target.delta_divided(f[static_cast<size_t>(a)], i);
    return mor;
}

} // namespace jetpva

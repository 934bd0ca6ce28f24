#include "jetpva/poly.hpp"

#include <cctype>
#include <sstream>

namespace jetpva {

PolyRing::PolyRing(std::vector<VarInfo> vars, int md_size, int weight_cutoff)
    : vars_(std::move(vars)), md_size_(md_size), weight_cutoff_(weight_cutoff)
{
    for (auto &v : vars_)
        if (v.multidegree.empty())
            v.multidegree.assign(static_cast<size_t>(md_size_), 0);
}

std::optional<VarId> PolyRing::find_var(const std::string &name) const
{
    for (VarId v = 0; v < var_count(); ++v)
        if (vars_[static_cast<size_t>(v)].name == name)
            return v;
    return std::nullopt;
}

int PolyRing::weight(const Monomial &m) const
{
    int w = 0;
    for (const auto &[v, e] : m.factors())
        w += e * var(v).weight;
    return w;
}

std::vector<int> PolyRing::multidegree(const Monomial &m) const
{
    std::vector<int> d(static_cast<size_t>(md_size_), 0);
    for (const auto &[v, e] : m.factors()) {
        const auto &md = var(v).multidegree;
        for (size_t k = 0; k < d.size(); ++k)
            d[k] += e * md[k];
    }
    return d;
}

void PolyRing::validate(const Monomial &m) const
{
    for (const auto &[v, e] : m.factors())
        if (e < 0 && !var(v).invertible)
            throw Error("exact-core", "negative exponent on non-invertible variable " + var(v).name);
}

Poly PolyRing::normalized(const Poly &p) const
{
    Poly r;
    for (const auto &[m, c] : p.terms()) {
        validate(m);
        if (!weight_truncated(m))
            r.add_term(m, c);
    }
    return r;
}

Poly PolyRing::mul(const Poly &a, const Poly &b) const
{
    Poly r;
    for (const auto &[ma, ca] : a.terms())
        for (const auto &[mb, cb] : b.terms()) {
            Monomial m = ma * mb;
            validate(m);
            if (!weight_truncated(m))
                r.add_term(m, ca * cb);
        }
    return r;
}

Poly PolyRing::pow(const Poly &a, int k) const
{
    if (k < 0) {
        if (!is_unit(a))
            throw Error("exact-core", "negative power of a non-unit");
        return pow(unit_inverse(a), -k);
    }
    Poly r = Poly::one();
    for (int i = 0; i < k; ++i)
        r = mul(r, a);
    return r;
}

Poly PolyRing::partial(const Poly &p, VarId v) const
{
    if (v < 0 || v >= var_count())
        throw Error("exact-core", "partial derivative with respect to unknown variable");
    Poly r;
    for (const auto &[m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0)
            continue;
        Monomial dm = m.with_exponent_shift(v, -1);
        validate(dm);
        if (!weight_truncated(dm))
            r.add_term(dm, c * e);
    }
    return r;
}

bool PolyRing::is_unit(const Poly &p) const
{
    if (p.terms().size() != 1)
        return false;
    const Monomial &m = p.terms().begin()->first;
    for (const auto &[v, e] : m.factors())
        if (!var(v).invertible)
            return false;
    return true;
}

Poly PolyRing::unit_inverse(const Poly &p) const
{
    if (!is_unit(p))
        throw Error("exact-core", "inverse of a non-unit requested");
    const auto &[m, c] = *p.terms().begin();
    Monomial inv;
    for (const auto &[v, e] : m.factors())
        inv = inv * Monomial::variable(v, -e);
    return Poly::term(inv, Rational(1) / c);
}

std::string PolyRing::to_string(const Monomial &m) const
{
    if (m.is_one())
        return "1";
    std::string s;
    bool first = true;
    for (const auto &[v, e] : m.factors()) {
        if (!first)
            s += "*";
        first = false;
        s += var(v).name;
        if (e != 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

std::string PolyRing::to_string(const Poly &p) const
{
    if (p.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        first = false;
        if (m.is_one())
            s += rat_to_string(a);
        else if (a == 1)
            s += to_string(m);
        else
            s += rat_to_string(a) + "*" + to_string(m);
    }
    return s;
}

namespace {

struct Parser {
    const PolyRing &ring;
    const std::string &text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string &msg) const
    {
        throw Error("exact-core", "parse error at offset " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Int parse_integer()
    {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits)
            fail("expected integer");
        return Int(text.substr(start, pos - start));
    }

    std::string parse_ident()
    {
        skip_ws();
        size_t start = pos;
        auto is_head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto is_tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos >= text.size() || !is_head(text[pos]))
            fail("expected identifier");
        ++pos;
        while (pos < text.size() && is_tail(text[pos]))
            ++pos;
        return text.substr(start, pos - start);
    }

    int parse_exponent()
    {
        skip_ws();
        bool neg = eat('-');
        Int e = parse_integer();
        if (e > 64 || e < -64)
            fail("exponent out of range");
        int v = static_cast<int>(e);
        return neg ? -v : v;
    }

    Poly parse_atom()
    {
        skip_ws();
        if (pos >= text.size())
            fail("unexpected end of expression");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Poly p = parse_sum();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_integer();
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                Int den = parse_integer();
                if (den == 0)
                    fail("zero denominator");
                return Poly::constant(Rational(num, den));
            }
            return Poly::constant(Rational(num));
        }
        std::string name = parse_ident();
        auto v = ring.find_var(name);
        if (!v)
            throw Error("exact-core", "undeclared variable '" + name + "'");
        return Poly::variable(*v);
    }

    Poly parse_power()
    {
        Poly base = parse_atom();
        if (eat('^')) {
            int e = parse_exponent();
            return ring.pow(base, e);
        }
        return base;
    }

    Poly parse_product()
    {
        Poly p = parse_power();
        while (eat('*'))
            p = ring.mul(p, parse_power());
        return p;
    }

    Poly parse_sum()
    {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            eat('-');
            neg = true;
        } else {
            eat('+');
        }
        Poly p = parse_product();
        if (neg)
            p = Rational(-1) * p;
        for (;;) {
            char c = peek();
            if (c == '+') {
                eat('+');
                p += parse_product();
            } else if (c == '-') {
                eat('-');
                p -= parse_product();
            } else {
                break;
            }
        }
        return p;
    }
};

} // namespace

Poly PolyRing::parse(const std::string &text) const
{
    Parser p{*this, text};
    Poly r = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input");
    return normalized(r);
}

} // namespace jetpva

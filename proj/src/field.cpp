#include "f2geom/field.hpp"

#include <cctype>
#include <map>

namespace f2geom {

int Polynomial::degree_cap = Polynomial::kDefaultDegreeCap;

namespace {

void check_cap(const Monomial& m)
{
    for (auto e : m)
        if (e > Polynomial::degree_cap)
            throw SearchCapExceeded("exponent " + std::to_string(e) + " above degree cap " +
                                    std::to_string(Polynomial::degree_cap));
}

}  // namespace

Polynomial Polynomial::one(int nvars)
{
    Polynomial p(nvars);
    p.terms_.insert(Monomial(nvars, 0));
    return p;
}

Polynomial Polynomial::variable(int nvars, int i)
{
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.terms_.insert(m);
    return p;
}

void Polynomial::toggle(const Monomial& m)
{
    if (static_cast<int>(m.size()) != n_)
        throw DimensionMismatch("monomial arity");
    check_cap(m);
    auto it = terms_.find(m);
    if (it == terms_.end())
        terms_.insert(m);
    else
        terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.n_ != n_)
        throw DimensionMismatch("polynomial arity");
    for (const auto& m : o.terms_)
        toggle(m);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.n_ != b.n_)
        throw DimensionMismatch("polynomial arity");
    Polynomial out(a.n_);
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            Monomial m(a.n_);
            for (int i = 0; i < a.n_; ++i)
                m[i] = static_cast<std::uint16_t>(x[i] + y[i]);
            out.toggle(m);
        }
    return out;
}

Polynomial Polynomial::shifted(int i) const
{
    // (x+1)^e = sum_k C(e,k) x^k, and C(e,k) is odd iff k is a submask of e.
    Polynomial out(n_);
    for (const auto& m : terms_) {
        const unsigned e = m[i];
        for (unsigned k = e;; k = (k - 1) & e) {
            Monomial t = m;
            t[i] = static_cast<std::uint16_t>(k);
            out.toggle(t);
            if (k == 0)
                break;
        }
    }
    return out;
}

std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& m : terms_) {
        if (!s.empty())
            s += " + ";
        std::string t;
        for (int i = 0; i < n_; ++i) {
            if (!m[i])
                continue;
            if (!t.empty())
                t += '*';
            t += "x" + std::to_string(i + 1);
            if (m[i] > 1)
                t += "^" + std::to_string(m[i]);
        }
        s += t.empty() ? "1" : t;
    }
    return s;
}

Polynomial Polynomial::parse(int nvars, const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("polynomial '" + text + "': " + why + " at offset " + std::to_string(pos));
    };
    auto number = [&]() {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw fail("expected a number");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned>(s[pos++] - '0');
            if (v > 65535)
                throw fail("number too large");
        }
        return v;
    };
    Polynomial p(nvars);
    if (s.empty())
        throw fail("empty input");
    if (s == "0")
        return p;
    while (true) {
        Monomial m(nvars, 0);
        while (true) {
            if (pos < s.size() && s[pos] == 'x') {
                ++pos;
                const auto var = number();
                if (var < 1 || var > static_cast<unsigned long>(nvars))
                    throw fail("variable x" + std::to_string(var) + " out of range");
                unsigned long e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    e = number();
                }
                m[var - 1] = static_cast<std::uint16_t>(m[var - 1] + e);
            } else if (pos < s.size() && s[pos] == '1') {
                ++pos;
            } else {
                throw fail("expected x<i> or 1");
            }
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        p.toggle(m);
        if (pos == s.size())
            break;
        if (s[pos] != '+')
            throw fail("expected '+'");
        ++pos;
    }
    return p;
}

OneForm& OneForm::operator+=(const OneForm& o)
{
    if (o.coeff.size() != coeff.size())
        throw DimensionMismatch("one-form size");
    for (std::size_t i = 0; i < coeff.size(); ++i)
        coeff[i] += o.coeff[i];
    return *this;
}

OneForm OneForm::left(const Polynomial& f) const
{
    OneForm out = *this;
    for (auto& c : out.coeff)
        c = f * c;
    return out;
}

namespace {

// (sum a_rho dx^rho) x^nu = sum (x^nu a_rho + sum_mu a_mu V^{mu nu}_rho) dx^rho.
OneForm right_by_variable(const OneForm& w, int nu, const StructureConstants& v)
{
    const int n = static_cast<int>(w.coeff.size());
    const int nvars = n ? w.coeff[0].nvars() : 0;
    const Polynomial x = Polynomial::variable(nvars, nu);
    OneForm out(n, nvars);
    for (int rho = 0; rho < n; ++rho)
        out.coeff[rho] = x * w.coeff[rho];
    for (int mu = 0; mu < n; ++mu)
        for (int rho = 0; rho < n; ++rho)
            if (v.get(mu, nu, rho))
                out.coeff[rho] += w.coeff[mu];
    return out;
}

OneForm right_by_monomial(OneForm w, const Monomial& m, const StructureConstants& v)
{
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int k = 0; k < m[i]; ++k)
            w = right_by_variable(w, static_cast<int>(i), v);
    return w;
}

OneForm d_monomial(const Monomial& m, const StructureConstants& v, std::map<Monomial, OneForm>& memo)
{
    const int n = v.n();
    if (auto it = memo.find(m); it != memo.end())
        return it->second;
    int last = -1;
    for (int i = n - 1; i >= 0; --i)
        if (m[i]) {
            last = i;
            break;
        }
    OneForm out(n, n);
    if (last >= 0) {
        // d(m' x^nu) = d(m') x^nu + m' dx^nu.
        Monomial rest = m;
        --rest[last];
        out = right_by_variable(d_monomial(rest, v, memo), last, v);
        Polynomial mp(n);
        mp.toggle(rest);
        out.coeff[last] += mp;
    }
    memo.emplace(m, out);
    return out;
}

}  // namespace

OneForm OneForm::right(const Polynomial& f, const StructureConstants& v) const
{
    const int n = static_cast<int>(coeff.size());
    const int nvars = n ? coeff[0].nvars() : 0;
    OneForm out(n, nvars);
    for (const auto& m : f.terms())
        out += right_by_monomial(*this, m, v);
    return out;
}

OneForm differential(const Polynomial& f, const StructureConstants& v)
{
    const int n = v.n();
    if (f.nvars() != n)
        throw DimensionMismatch("polynomial arity differs from the calculus");
    std::map<Monomial, OneForm> memo;
    OneForm out(n, n);
    for (const auto& m : f.terms())
        out += d_monomial(m, v, memo);
    return out;
}

Polynomial partial(const Polynomial& f, int mu, const StructureConstants& v)
{
    return differential(f, v).coeff.at(mu);
}

Polynomial laplacian(const Polynomial& f, const StructureConstants& v, const Matrix& g, const Connection& c)
{
    const int n = v.n();
    if (!is_metric(v, g))
        throw InvalidGeometry("laplacian: not a metric for the calculus");
    if (!is_qlc(v, g, c))
        throw InvalidGeometry("laplacian: connection is not Levi-Civita for the metric");
    const Matrix inv = mat_inverse(g);
    const OneForm df = differential(f, v);
    Polynomial out(n);
    for (int mu = 0; mu < n; ++mu) {
        const OneForm ddf = differential(df.coeff[mu], v);
        for (int nu = 0; nu < n; ++nu)
            if (inv.get(nu, mu))
                out += ddf.coeff[nu];
        bool trace = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                trace ^= c.gamma.get(mu, a, b) && inv.get(a, b);
        if (trace)
            out += df.coeff[mu];
    }
    return out;
}

}  // namespace f2geom

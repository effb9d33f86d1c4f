// gcd of homogeneous forms.
//
// Powers of z are split off first, the z-free parts are dehomogenized at
// z = 1, and the gcd of the resulting bivariate polynomials is computed in
// F[x][y] with a primitive pseudo-remainder sequence (content and primitive
// part taken with univariate gcds in F[x]).

#include "hermitian/plane.hpp"

#include <algorithm>

namespace hcodes {

namespace {

struct UOps {
    const GaloisField &f;

    UPoly mul(const UPoly &a, const UPoly &b) const
    {
        if (a.empty() || b.empty())
            return {};
        UPoly r(a.size() + b.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
        }
        trim(r);
        return r;
    }

    UPoly sub(const UPoly &a, const UPoly &b) const
    {
        UPoly r(std::max(a.size(), b.size()), f.zero());
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = f.sub(i < a.size() ? a[i] : f.zero(), i < b.size() ? b[i] : f.zero());
        trim(r);
        return r;
    }

    std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly &b) const
    {
        trim(a);
        const int db = degree(b);
        UPoly q;
        if (degree(a) < db)
            return {q, a};
        q.assign(a.size() - db, f.zero());
        const Elem lead_inv = f.inv(b[db]);
        for (int i = degree(a); i >= db; --i) {
            const Elem c = f.mul(a[i], lead_inv);
            if (c.is_zero())
                continue;
            q[i - db] = c;
            for (int j = 0; j <= db; ++j)
                a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
        }
        trim(a);
        trim(q);
        return {q, a};
    }

    UPoly monic(UPoly a) const
    {
        trim(a);
        if (a.empty())
            return a;
        const Elem s = f.inv(a.back());
        for (auto &x : a)
            x = f.mul(x, s);
        return a;
    }

    UPoly gcd(UPoly a, UPoly b) const
    {
        trim(a);
        trim(b);
        while (!b.empty()) {
            UPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
};

// Polynomial in y whose coefficients are polynomials in x.
using BPoly = std::vector<UPoly>;

void trim_b(BPoly &p)
{
    while (!p.empty() && p.back().empty())
        p.pop_back();
}

UPoly content(const UOps &ops, const BPoly &p)
{
    UPoly c;
    for (const auto &coeff : p)
        c = ops.gcd(c, coeff);
    return c;
}

BPoly primitive_part(const UOps &ops, BPoly p)
{
    const UPoly c = content(ops, p);
    if (c.empty())
        return p;
    for (auto &coeff : p)
        coeff = ops.divmod(coeff, c).first;
    return p;
}

// pseudo-remainder of a by b with respect to y
BPoly prem(const UOps &ops, BPoly a, const BPoly &b)
{
    const std::size_t db = b.size() - 1;
    const UPoly &lb = b.back();
    trim_b(a);
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const UPoly la = a.back();
        for (auto &coeff : a)
            coeff = ops.mul(coeff, lb);
        for (std::size_t j = 0; j <= db; ++j)
            a[shift + j] = ops.sub(a[shift + j], ops.mul(la, b[j]));
        trim_b(a);
    }
    return a;
}

BPoly bivariate_gcd(const UOps &ops, BPoly a, BPoly b)
{
    trim_b(a);
    trim_b(b);
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    const UPoly c = ops.gcd(content(ops, a), content(ops, b));
    a = primitive_part(ops, std::move(a));
    b = primitive_part(ops, std::move(b));
    if (a.size() < b.size())
        std::swap(a, b);
    while (!b.empty()) {
        BPoly r = prem(ops, a, b);
        a = std::move(b);
        b = r.empty() ? r : primitive_part(ops, std::move(r));
    }
    for (auto &coeff : a)
        coeff = ops.mul(coeff, c);
    trim_b(a);
    return a;
}

int z_valuation(const Form &f)
{
    int v = f.degree();
    for (std::size_t idx = 0; idx < f.coeffs().size(); ++idx)
        if (!f.coeffs()[idx].is_zero())
            v = std::min(v, Form::monomial_exponents(f.degree(), idx)[2]);
    return v;
}

BPoly dehomogenize(const Form &f, int zshift)
{
    BPoly p(f.degree() + 1);
    for (std::size_t idx = 0; idx < f.coeffs().size(); ++idx) {
        const Elem c = f.coeffs()[idx];
        if (c.is_zero())
            continue;
        const auto e = Form::monomial_exponents(f.degree(), idx);
        (void)zshift;
        auto &coeff = p[e[1]];
        if (coeff.size() <= std::size_t(e[0]))
            coeff.resize(e[0] + 1, f.field()->zero());
        coeff[e[0]] = c;
    }
    for (auto &coeff : p)
        trim(coeff);
    trim_b(p);
    return p;
}

} // namespace

Form gcd(const Form &a, const Form &b)
{
    const auto &field = a.field() ? a.field() : b.field();
    if (a.is_zero())
        return b.normalized();
    if (b.is_zero())
        return a.normalized();
    const UOps ops{*field};
    const int za = z_valuation(a), zb = z_valuation(b);
    const BPoly g = bivariate_gcd(ops, dehomogenize(a, za), dehomogenize(b, zb));

    int total = 0;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (!g[j].empty())
            total = std::max(total, static_cast<int>(j) + degree(g[j]));
    const int zpow = std::min(za, zb);
    Form out(field, total + zpow);
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < g[j].size(); ++i)
            if (!g[j][i].is_zero())
                out.set_coeff(static_cast<int>(i), static_cast<int>(j), g[j][i]);
    return out.normalized();
}

bool coprime(const Form &a, const Form &b) { return gcd(a, b).degree() == 0; }

} // namespace hcodes

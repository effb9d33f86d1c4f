#include "hermitian/scheme.hpp"

#include <algorithm>
#include <numeric>

namespace hcodes {

void ZeroScheme::validate(const GaloisField &field, const FatPoint &c)
{
    const auto &x = c.point.coords();
    if (x[0].is_zero() && x[1].is_zero() && x[2].is_zero())
        throw SchemeError("(0:0:0) is not a point");
    if (x[0].v >= field.size() || x[1].v >= field.size() || x[2].v >= field.size())
        throw SchemeError("point coordinates outside the field");
    if (c.mult < 1)
        throw SchemeError("multiplicity must be positive");
    if (c.mult >= 2 && !c.carrier)
        throw SchemeError("fat point of multiplicity >= 2 needs a carrier line");
    if (c.carrier && !c.carrier->contains(c.point))
        throw SchemeError("carrier line does not pass through its point");
}

ZeroScheme::ZeroScheme(FieldPtr field, std::vector<FatPoint> components) : field_(std::move(field))
{
    for (auto &c : components)
        add(std::move(c));
}

ZeroScheme ZeroScheme::reduced(FieldPtr field, const std::vector<ProjPoint> &points)
{
    ZeroScheme z(std::move(field));
    for (const auto &p : points)
        z.add(FatPoint{p, 1, std::nullopt});
    return z;
}

int ZeroScheme::degree() const
{
    int total = 0;
    for (const auto &c : components_)
        total += c.mult;
    return total;
}

std::vector<ProjPoint> ZeroScheme::support() const
{
    std::vector<ProjPoint> out;
    out.reserve(components_.size());
    for (const auto &c : components_)
        out.push_back(c.point);
    return out;
}

const FatPoint *ZeroScheme::find(const ProjPoint &p) const
{
    for (const auto &c : components_)
        if (c.point == p)
            return &c;
    return nullptr;
}

void ZeroScheme::add(FatPoint component)
{
    validate(*field_, component);
    if (find(component.point))
        throw SchemeError("schemes overlap at a support point");
    components_.push_back(std::move(component));
}

ZeroScheme ZeroScheme::united(const ZeroScheme &other) const
{
    ZeroScheme out = *this;
    if (!out.field_)
        out.field_ = other.field_;
    for (const auto &c : other.components_)
        out.add(c);
    return out;
}

ZeroScheme build_scheme(const HermitianCurve &curve, const std::vector<std::pair<ProjPoint, int>> &assignments)
{
    ZeroScheme z(curve.field());
    for (const auto &[p, a] : assignments) {
        if (!curve.contains(p))
            throw SchemeError("point is not on the curve");
        if (a < 1 || a > curve.q() + 1)
            throw SchemeError("multiplicity out of range 1..q+1");
        z.add(FatPoint{p, a, curve.tangent_line(p)});
    }
    return z;
}

void append_condition_rows(Matrix &m, const FatPoint &c, int d)
{
    const auto &field = m.field();
    const auto &f = *field;
    const std::size_t monomials = Form::monomial_count(d);
    if (c.mult == 1) {
        std::vector<Elem> row(monomials);
        for (std::size_t idx = 0; idx < monomials; ++idx) {
            const auto [i, j, k] = Form::monomial_exponents(d, idx);
            row[idx] = f.mul(f.mul(f.pow(c.point[0], i), f.pow(c.point[1], j)), f.pow(c.point[2], k));
        }
        m.append_row(row);
        return;
    }
    const auto rows = local_expansion_rows(field, d, *c.carrier, c.point, c.mult);
    for (const auto &row : rows)
        m.append_row(row);
}

Matrix condition_matrix(const ZeroScheme &z, int d)
{
    if (d < 0)
        throw std::invalid_argument("degree must be non-negative");
    Matrix m(z.field(), 0, Form::monomial_count(d));
    for (const auto &c : z.components())
        append_condition_rows(m, c, d);
    return m;
}

CohomologyResult cohomology(const ZeroScheme &z, int d)
{
    const long monomials = static_cast<long>(Form::monomial_count(d));
    CohomologyResult r;
    r.rank = z.empty() ? 0 : static_cast<long>(condition_matrix(z, d).rank());
    r.h0 = monomials - r.rank;
    r.h1 = z.degree() - r.rank;
    if (r.h0 - r.h1 != monomials - z.degree() || r.h0 < 0 || r.h1 < 0)
        throw std::logic_error("Euler characteristic identity violated");
    return r;
}

bool contains(const ZeroScheme &z, const Form &f)
{
    for (const auto &c : z.components()) {
        if (c.mult == 1) {
            if (!f.evaluate(c.point).is_zero())
                return false;
            continue;
        }
        const auto g = local_expansion(f, *c.carrier, c.point, c.mult);
        if (std::any_of(g.begin(), g.end(), [](Elem e) { return !e.is_zero(); }))
            return false;
    }
    return true;
}

ZeroScheme residual_by_line(const ZeroScheme &z, const LineParam &r)
{
    ZeroScheme out(z.field());
    for (const auto &c : z.components()) {
        if (c.mult >= 2 && !c.carrier)
            throw SchemeError("fat point of multiplicity >= 2 needs a carrier line");
        if (!r.contains(c.point)) {
            out.add(c);
            continue;
        }
        if (c.mult == 1 || (c.carrier && c.carrier->line == r.line))
            continue;
        FatPoint rest = c;
        --rest.mult;
        out.add(std::move(rest));
    }
    return out;
}

int intersection_degree(const ZeroScheme &z, const Form &t)
{
    int total = 0;
    for (const auto &c : z.components()) {
        if (c.mult == 1) {
            total += t.evaluate(c.point).is_zero() ? 1 : 0;
            continue;
        }
        if (!c.carrier)
            throw SchemeError("fat point of multiplicity >= 2 needs a carrier line");
        total += std::min(c.mult, vanishing_order(t, *c.carrier, c.point));
    }
    return total;
}

} // namespace hcodes

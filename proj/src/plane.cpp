#include "hermitian/plane.hpp"

#include "hermitian/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcodes {

namespace {

// Truncated product of two univariate polynomials.
UPoly mul_trunc(const GaloisField &f, const UPoly &a, const UPoly &b, std::size_t count)
{
    UPoly r(std::min(count, a.size() + b.size() - 1), f.zero());
    for (std::size_t i = 0; i < a.size() && i < r.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return r;
}

// powers[c][e] = (base_c + u * dir_c)^e truncated to count terms
std::array<std::vector<UPoly>, 3> linear_powers(const GaloisField &f, const std::array<Elem, 3> &base,
                                                const std::array<Elem, 3> &dir, int degree, std::size_t count)
{
    std::array<std::vector<UPoly>, 3> powers;
    for (int c = 0; c < 3; ++c) {
        const UPoly lin{base[c], dir[c]};
        powers[c].reserve(degree + 1);
        powers[c].push_back(UPoly{f.one()});
        for (int e = 1; e <= degree; ++e)
            powers[c].push_back(mul_trunc(f, powers[c].back(), lin, count));
    }
    return powers;
}

const ProjPoint &other_point(const LineParam &line, const ProjPoint &p)
{
    return p == line.direction ? line.base : line.direction;
}

} // namespace

ProjPoint::ProjPoint(const GaloisField &field, Elem x, Elem y, Elem z) : coords_{x, y, z}
{
    std::size_t lead = 0;
    while (lead < 3 && coords_[lead].is_zero())
        ++lead;
    if (lead == 3)
        throw std::invalid_argument("(0:0:0) is not a projective point");
    const Elem scale = field.inv(coords_[lead]);
    for (auto &c : coords_)
        c = field.mul(c, scale);
}

std::size_t point_index(const GaloisField &field, const ProjPoint &p)
{
    const std::size_t n = field.size();
    if (p[0].is_zero() && p[1].is_zero())
        return 0;
    if (p[0].is_zero())
        return 1 + p[2].v;
    return 1 + n + std::size_t(p[1].v) * n + p[2].v;
}

std::vector<ProjPoint> enumerate_points(const GaloisField &field)
{
    const std::uint32_t n = field.size();
    std::vector<ProjPoint> out;
    out.reserve(std::size_t(n) * n + n + 1);
    out.emplace_back(field, field.zero(), field.zero(), field.one());
    for (std::uint32_t z = 0; z < n; ++z)
        out.emplace_back(field, field.zero(), field.one(), field.from_index(z));
    for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z)
            out.emplace_back(field, field.one(), field.from_index(y), field.from_index(z));
    return out;
}

std::string to_string(const GaloisField &field, const ProjPoint &p)
{
    return "(" + field.pretty(p[0]) + ":" + field.pretty(p[1]) + ":" + field.pretty(p[2]) + ")";
}

void trim(UPoly &f)
{
    while (!f.empty() && f.back().is_zero())
        f.pop_back();
}

int degree(const UPoly &f)
{
    for (std::size_t i = f.size(); i-- > 0;)
        if (!f[i].is_zero())
            return static_cast<int>(i);
    return -1;
}

Form::Form(FieldPtr field, int degree) : field_(std::move(field)), degree_(degree)
{
    if (degree < 0)
        throw std::invalid_argument("form degree must be non-negative");
    coeffs_.assign(monomial_count(degree), Elem{});
}

Form::Form(FieldPtr field, int degree, std::vector<Elem> coeffs)
    : field_(std::move(field)), degree_(degree), coeffs_(std::move(coeffs))
{
    if (degree < 0)
        throw std::invalid_argument("form degree must be non-negative");
    if (coeffs_.size() != monomial_count(degree))
        throw std::invalid_argument("coefficient vector length must be C(d+2,2)");
}

std::size_t Form::monomial_index(int degree, int i, int j)
{
    const int m = degree - i;
    return std::size_t(m) * (m + 1) / 2 + std::size_t(m - j);
}

std::array<int, 3> Form::monomial_exponents(int degree, std::size_t index)
{
    int m = 0;
    while (std::size_t(m + 1) * (m + 2) / 2 <= index)
        ++m;
    const int j = m - static_cast<int>(index - std::size_t(m) * (m + 1) / 2);
    const int i = degree - m;
    return {i, j, degree - i - j};
}

Form Form::linear(FieldPtr field, Elem a, Elem b, Elem c)
{
    return Form(std::move(field), 1, {a, b, c});
}

Form Form::monomial(FieldPtr field, int i, int j, int k)
{
    Form f(field, i + j + k);
    f.set_coeff(i, j, field->one());
    return f;
}

bool Form::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem e) { return e.is_zero(); });
}

Elem Form::evaluate(const std::array<Elem, 3> &point) const
{
    const auto &f = *field_;
    std::array<std::vector<Elem>, 3> powers;
    for (int c = 0; c < 3; ++c) {
        powers[c].resize(degree_ + 1);
        powers[c][0] = f.one();
        for (int e = 1; e <= degree_; ++e)
            powers[c][e] = f.mul(powers[c][e - 1], point[c]);
    }
    Elem sum = f.zero();
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (coeffs_[idx].is_zero())
            continue;
        const auto [i, j, k] = monomial_exponents(degree_, idx);
        sum = f.add(sum, f.mul(coeffs_[idx], f.mul(powers[0][i], f.mul(powers[1][j], powers[2][k]))));
    }
    return sum;
}

Form Form::operator+(const Form &o) const
{
    if (o.degree_ != degree_)
        throw std::invalid_argument("adding forms of different degree");
    Form r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = field_->add(coeffs_[i], o.coeffs_[i]);
    return r;
}

Form Form::operator-(const Form &o) const
{
    if (o.degree_ != degree_)
        throw std::invalid_argument("subtracting forms of different degree");
    Form r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = field_->sub(coeffs_[i], o.coeffs_[i]);
    return r;
}

Form Form::operator*(const Form &o) const
{
    const auto &f = *field_;
    Form r(field_, degree_ + o.degree_);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a].is_zero())
            continue;
        const auto ea = monomial_exponents(degree_, a);
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b) {
            if (o.coeffs_[b].is_zero())
                continue;
            const auto eb = monomial_exponents(o.degree_, b);
            auto &slot = r.coeffs_[monomial_index(r.degree_, ea[0] + eb[0], ea[1] + eb[1])];
            slot = f.add(slot, f.mul(coeffs_[a], o.coeffs_[b]));
        }
    }
    return r;
}

Form Form::scaled(Elem c) const
{
    Form r = *this;
    for (auto &x : r.coeffs_)
        x = field_->mul(x, c);
    return r;
}

Form Form::normalized() const
{
    for (auto c : coeffs_)
        if (!c.is_zero())
            return scaled(field_->inv(c));
    return *this;
}

Form Form::partial(int var) const
{
    if (degree_ == 0)
        return Form(field_, 0);
    const auto &f = *field_;
    Form r(field_, degree_ - 1);
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        auto e = monomial_exponents(degree_, idx);
        if (e[var] == 0 || coeffs_[idx].is_zero())
            continue;
        const Elem factor = f.from_int(e[var]);
        --e[var];
        auto &slot = r.coeffs_[monomial_index(r.degree_, e[0], e[1])];
        slot = f.add(slot, f.mul(coeffs_[idx], factor));
    }
    return r;
}

UPoly Form::substitute_line(const std::array<Elem, 3> &base, const std::array<Elem, 3> &direction) const
{
    const auto &f = *field_;
    const std::size_t count = degree_ + 1;
    const auto powers = linear_powers(f, base, direction, degree_, count);
    UPoly g(count, f.zero());
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (coeffs_[idx].is_zero())
            continue;
        const auto [i, j, k] = monomial_exponents(degree_, idx);
        const UPoly term = mul_trunc(f, mul_trunc(f, powers[0][i], powers[1][j], count), powers[2][k], count);
        for (std::size_t r = 0; r < term.size(); ++r)
            g[r] = f.add(g[r], f.mul(coeffs_[idx], term[r]));
    }
    trim(g);
    return g;
}

std::optional<Form> Form::divide_exact(const Form &divisor) const
{
    if (divisor.is_zero())
        throw std::invalid_argument("division by the zero form");
    if (divisor.degree_ > degree_)
        return is_zero() ? std::optional<Form>(Form(field_, 0)) : std::nullopt;
    const auto &f = *field_;
    std::size_t dlead = 0;
    while (divisor.coeffs_[dlead].is_zero())
        ++dlead;
    const auto de = monomial_exponents(divisor.degree_, dlead);
    const Elem dinv = f.inv(divisor.coeffs_[dlead]);

    Form rest = *this;
    Form quotient(field_, degree_ - divisor.degree_);
    for (std::size_t lead = 0; lead < rest.coeffs_.size(); ++lead) {
        if (rest.coeffs_[lead].is_zero())
            continue;
        const auto re = monomial_exponents(degree_, lead);
        if (re[0] < de[0] || re[1] < de[1] || re[2] < de[2])
            return std::nullopt;
        const Elem c = f.mul(rest.coeffs_[lead], dinv);
        const int qi = re[0] - de[0], qj = re[1] - de[1];
        quotient.coeffs_[monomial_index(quotient.degree_, qi, qj)] = c;
        for (std::size_t b = 0; b < divisor.coeffs_.size(); ++b) {
            if (divisor.coeffs_[b].is_zero())
                continue;
            const auto eb = monomial_exponents(divisor.degree_, b);
            auto &slot = rest.coeffs_[monomial_index(degree_, qi + eb[0], qj + eb[1])];
            slot = f.sub(slot, f.mul(c, divisor.coeffs_[b]));
        }
    }
    return quotient;
}

Form line_through(const FieldPtr &field, const ProjPoint &p, const ProjPoint &q)
{
    if (p == q)
        throw std::invalid_argument("line_through needs two distinct points");
    const auto &f = *field;
    auto cross = [&](int a, int b) { return f.sub(f.mul(p[a], q[b]), f.mul(p[b], q[a])); };
    return Form::linear(field, cross(1, 2), cross(2, 0), cross(0, 1)).normalized();
}

std::vector<ProjPoint> points_on_line(const Form &line)
{
    if (line.degree() != 1 || line.is_zero())
        throw std::invalid_argument("points_on_line needs a nonzero linear form");
    const auto &f = *line.field();
    Matrix m(line.field(), 0, 3);
    m.append_row(line.coeffs());
    const auto basis = m.kernel();
    std::vector<ProjPoint> pts;
    pts.reserve(f.size() + 1);
    pts.emplace_back(f, basis[0][0], basis[0][1], basis[0][2]);
    for (std::uint32_t t = 0; t < f.size(); ++t) {
        const Elem te = f.from_index(t);
        std::array<Elem, 3> v;
        for (int c = 0; c < 3; ++c)
            v[c] = f.add(basis[1][c], f.mul(te, basis[0][c]));
        pts.emplace_back(f, v[0], v[1], v[2]);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

LineParam param_line(const Form &line)
{
    const auto pts = points_on_line(line);
    return LineParam{line.normalized(), pts[0], pts[1]};
}

std::vector<Form> enumerate_lines(const FieldPtr &field)
{
    std::vector<Form> out;
    for (const auto &p : enumerate_points(*field))
        out.push_back(Form::linear(field, p[0], p[1], p[2]));
    return out;
}

std::vector<std::vector<Elem>> local_expansion_rows(const FieldPtr &field, int degree, const LineParam &line,
                                                    const ProjPoint &p, std::size_t count)
{
    const auto &f = *field;
    const auto powers = linear_powers(f, p.coords(), other_point(line, p).coords(), degree, count);
    const std::size_t monomials = Form::monomial_count(degree);
    std::vector<std::vector<Elem>> rows(count, std::vector<Elem>(monomials, f.zero()));
    for (std::size_t idx = 0; idx < monomials; ++idx) {
        const auto [i, j, k] = Form::monomial_exponents(degree, idx);
        const UPoly term = mul_trunc(f, mul_trunc(f, powers[0][i], powers[1][j], count), powers[2][k], count);
        for (std::size_t r = 0; r < term.size(); ++r)
            rows[r][idx] = term[r];
    }
    return rows;
}

UPoly local_expansion(const Form &f, const LineParam &line, const ProjPoint &p, std::size_t count)
{
    const auto &field = *f.field();
    const auto powers = linear_powers(field, p.coords(), other_point(line, p).coords(), f.degree(), count);
    UPoly g(count, field.zero());
    for (std::size_t idx = 0; idx < f.coeffs().size(); ++idx) {
        const Elem c = f.coeffs()[idx];
        if (c.is_zero())
            continue;
        const auto [i, j, k] = Form::monomial_exponents(f.degree(), idx);
        const UPoly term =
            mul_trunc(field, mul_trunc(field, powers[0][i], powers[1][j], count), powers[2][k], count);
        for (std::size_t r = 0; r < term.size(); ++r)
            g[r] = field.add(g[r], field.mul(c, term[r]));
    }
    return g;
}

int vanishing_order(const Form &f, const LineParam &line, const ProjPoint &p)
{
    if (!line.contains(p))
        throw std::invalid_argument("point does not lie on the line");
    const UPoly g = local_expansion(f, line, p, f.degree() + 1);
    for (std::size_t r = 0; r < g.size(); ++r)
        if (!g[r].is_zero())
            return static_cast<int>(r);
    return infinite_order;
}

UPoly restrict_to_line(const Form &f, const LineParam &line)
{
    return f.substitute_line(line.base.coords(), line.direction.coords());
}

} // namespace hcodes

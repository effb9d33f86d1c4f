#include "hermitian/curve.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hcodes {

std::pair<int, int> prime_power(int q)
{
    if (q < 2)
        throw std::invalid_argument("q must be a prime power");
    int p = 2;
    while (q % p != 0)
        ++p;
    int e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        throw std::invalid_argument("q must be a prime power: " + std::to_string(q));
    return {p, e};
}

std::shared_ptr<const HermitianCurve> hermitian_curve(int q)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const HermitianCurve>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[q];
    if (!slot)
        slot = std::make_shared<const HermitianCurve>(q);
    return slot;
}

HermitianCurve::HermitianCurve(int q) : q_(q)
{
    const auto [p, e] = prime_power(q);
    field_ = GaloisField::make(p, 2 * e);
    const auto &f = *field_;
    form_ = Form(field_, q + 1);
    form_.set_coeff(q + 1, 0, f.one());
    form_.set_coeff(0, 1, f.neg(f.one()));
    form_.set_coeff(0, q, f.neg(f.one()));

    const auto all = enumerate_points(f);
    plane_to_curve_.assign(all.size(), SIZE_MAX);
    for (const auto &pt : all) {
        if (contains(pt)) {
            plane_to_curve_[point_index(f, pt)] = points_.size();
            points_.push_back(pt);
        }
    }
}

std::size_t HermitianCurve::index_of(const ProjPoint &p) const
{
    const std::size_t idx = plane_to_curve_.at(point_index(*field_, p));
    if (idx == SIZE_MAX)
        throw std::invalid_argument("point is not on the curve");
    return idx;
}

LineParam HermitianCurve::tangent_line(const ProjPoint &p) const
{
    if (!contains(p))
        throw std::invalid_argument("point is not on the curve");
    const Elem a = form_.partial(0).evaluate(p);
    const Elem b = form_.partial(1).evaluate(p);
    const Elem c = form_.partial(2).evaluate(p);
    return param_line(Form::linear(field_, a, b, c).normalized());
}

int HermitianCurve::contact_order(const LineParam &line, const ProjPoint &p) const
{
    return vanishing_order(form_, line, p);
}

std::vector<ProjPoint> HermitianCurve::points_on(const Form &line) const
{
    std::vector<ProjPoint> out;
    for (const auto &pt : points_on_line(line))
        if (contains(pt))
            out.push_back(pt);
    return out;
}

} // namespace hcodes

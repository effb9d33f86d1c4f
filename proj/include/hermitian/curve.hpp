#pragma once

// The Hermitian curve x^(q+1) - y z^q - y^q z = 0 over GF(q^2).

#include "hermitian/plane.hpp"

#include <memory>
#include <vector>

namespace hcodes {

class HermitianCurve {
  public:
    // q must be a prime power with q^2 inside the supported field range.
    explicit HermitianCurve(int q);

    int q() const { return q_; }
    const FieldPtr &field() const { return field_; }
    const Form &form() const { return form_; }
    int genus() const { return q_ * (q_ - 1) / 2; }

    bool contains(const ProjPoint &p) const { return form_.evaluate(p).is_zero(); }
    // Rational points in canonical order.
    const std::vector<ProjPoint> &rational_points() const { return points_; }
    // Position of a rational point in rational_points(); throws when off the curve.
    std::size_t index_of(const ProjPoint &p) const;

    // Tangent at a rational point; throws std::invalid_argument when P is off the curve.
    LineParam tangent_line(const ProjPoint &p) const;
    int contact_order(const LineParam &line, const ProjPoint &p) const;
    // Rational points of the curve on a line, canonical order.
    std::vector<ProjPoint> points_on(const Form &line) const;

  private:
    int q_;
    FieldPtr field_;
    Form form_;
    std::vector<ProjPoint> points_;
    std::vector<std::size_t> plane_to_curve_;
};

// Shared, cached instance per q.
std::shared_ptr<const HermitianCurve> hermitian_curve(int q);

// Prime power decomposition; throws std::invalid_argument when q is not a prime power.
std::pair<int, int> prime_power(int q);

} // namespace hcodes

#pragma once

// Points, lines and homogeneous forms of the projective plane over a finite
// field.

#include "hermitian/field.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace hcodes {

// (x : y : z), normalized so the leftmost nonzero coordinate is 1.
class ProjPoint {
  public:
    ProjPoint() = default;
    // Throws std::invalid_argument for (0, 0, 0).
    ProjPoint(const GaloisField &field, Elem x, Elem y, Elem z);

    const std::array<Elem, 3> &coords() const { return coords_; }
    Elem operator[](std::size_t i) const { return coords_[i]; }

    friend auto operator<=>(const ProjPoint &, const ProjPoint &) = default;

  private:
    std::array<Elem, 3> coords_{};
};

// Canonical index of a point among all points of the plane.
std::size_t point_index(const GaloisField &field, const ProjPoint &p);
std::vector<ProjPoint> enumerate_points(const GaloisField &field);
std::string to_string(const GaloisField &field, const ProjPoint &p);

// Univariate polynomial over the field, little-endian.
using UPoly = std::vector<Elem>;
void trim(UPoly &f);
int degree(const UPoly &f); // -1 for the zero polynomial

class Form {
  public:
    Form() = default;
    Form(FieldPtr field, int degree);
    Form(FieldPtr field, int degree, std::vector<Elem> coeffs);

    static std::size_t monomial_count(int degree) { return std::size_t(degree + 1) * (degree + 2) / 2; }
    // Position of x^i y^j z^(d-i-j) in graded-lex order with x > y > z.
    static std::size_t monomial_index(int degree, int i, int j);
    // Exponents (i, j, k) of the monomial at a position.
    static std::array<int, 3> monomial_exponents(int degree, std::size_t index);

    static Form linear(FieldPtr field, Elem a, Elem b, Elem c);
    static Form monomial(FieldPtr field, int i, int j, int k);

    const FieldPtr &field() const { return field_; }
    int degree() const { return degree_; }
    const std::vector<Elem> &coeffs() const { return coeffs_; }
    Elem coeff(int i, int j) const { return coeffs_[monomial_index(degree_, i, j)]; }
    void set_coeff(int i, int j, Elem value) { coeffs_[monomial_index(degree_, i, j)] = value; }

    bool is_zero() const;
    Elem evaluate(const std::array<Elem, 3> &point) const;
    Elem evaluate(const ProjPoint &p) const { return evaluate(p.coords()); }

    Form operator+(const Form &o) const;
    Form operator-(const Form &o) const;
    Form operator*(const Form &o) const;
    Form scaled(Elem c) const;
    // Leftmost nonzero coefficient scaled to 1; zero form unchanged.
    Form normalized() const;
    // Formal partial derivative with respect to variable 0 (x), 1 (y) or 2 (z).
    Form partial(int var) const;
    // f(base + t * direction) as a polynomial in t.
    UPoly substitute_line(const std::array<Elem, 3> &base, const std::array<Elem, 3> &direction) const;
    // Exact quotient of this by a nonzero divisor, or empty when it does not divide.
    std::optional<Form> divide_exact(const Form &divisor) const;

    friend bool operator==(const Form &a, const Form &b)
    {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

  private:
    FieldPtr field_;
    int degree_ = 0;
    std::vector<Elem> coeffs_;
};

// Homogeneous gcd of two forms, normalized; the zero form when both are zero.
Form gcd(const Form &a, const Form &b);
bool coprime(const Form &a, const Form &b);

// Line through two distinct points, normalized; throws on P == Q.
Form line_through(const FieldPtr &field, const ProjPoint &p, const ProjPoint &q);

// A line with an explicit parametrization t -> base + t * direction; the
// point at t = infinity is the direction point itself.
struct LineParam {
    Form line;
    ProjPoint base;
    ProjPoint direction;

    bool contains(const ProjPoint &p) const { return line.evaluate(p).is_zero(); }
    friend bool operator==(const LineParam &a, const LineParam &b) { return a.line == b.line; }
};

// Parametrization of a nonzero linear form using its two canonically smallest
// rational points.
LineParam param_line(const Form &line);
// All rational points of the line, in canonical order.
std::vector<ProjPoint> points_on_line(const Form &line);
// Every line of the plane as a normalized linear form, canonical order.
std::vector<Form> enumerate_lines(const FieldPtr &field);

inline constexpr int infinite_order = std::numeric_limits<int>::max();

// Coefficients of u^0..u^(count-1) in f(P + u * D), where D is a point of
// the line other than P.  Row r of the interpolation conditions of a
// curvilinear fat point.
UPoly local_expansion(const Form &f, const LineParam &line, const ProjPoint &p, std::size_t count);
// The same expansion for every degree-d monomial at once: entry (r, m) is
// the coefficient of u^r in monomial m evaluated at P + u * D.
std::vector<std::vector<Elem>> local_expansion_rows(const FieldPtr &field, int degree, const LineParam &line,
                                                    const ProjPoint &p, std::size_t count);
// Order of vanishing of f restricted to the line at P; infinite_order when
// the line divides f.  Throws std::invalid_argument when P is off the line.
int vanishing_order(const Form &f, const LineParam &line, const ProjPoint &p);
// Polynomial g(t) = f(base + t * direction).
UPoly restrict_to_line(const Form &f, const LineParam &line);

} // namespace hcodes

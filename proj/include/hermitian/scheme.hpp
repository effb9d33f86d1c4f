#pragma once

// Zero-dimensional schemes made of reduced points and curvilinear fat points
// carried by lines, with their interpolation conditions and cohomology.

#include "hermitian/curve.hpp"
#include "hermitian/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hcodes {

class SchemeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct FatPoint {
    ProjPoint point;
    int mult = 1;
    std::optional<LineParam> carrier; // required when mult >= 2

    friend bool operator==(const FatPoint &, const FatPoint &) = default;
};

class ZeroScheme {
  public:
    ZeroScheme() = default;
    explicit ZeroScheme(FieldPtr field) : field_(std::move(field)) {}
    // Throws SchemeError on repeated support, mult < 1, missing carrier for
    // mult >= 2 or a carrier that misses its point.
    ZeroScheme(FieldPtr field, std::vector<FatPoint> components);

    static ZeroScheme reduced(FieldPtr field, const std::vector<ProjPoint> &points);

    const FieldPtr &field() const { return field_; }
    const std::vector<FatPoint> &components() const { return components_; }
    bool empty() const { return components_.empty(); }
    int degree() const;
    std::vector<ProjPoint> support() const;
    // Component at a support point, if any.
    const FatPoint *find(const ProjPoint &p) const;

    void add(FatPoint component);
    // Union of schemes with disjoint support; overlap is an error.
    ZeroScheme united(const ZeroScheme &other) const;

    friend bool operator==(const ZeroScheme &a, const ZeroScheme &b) { return a.components_ == b.components_; }

  private:
    static void validate(const GaloisField &field, const FatPoint &c);

    FieldPtr field_;
    std::vector<FatPoint> components_;
};

// Divisor sum a_i P_i on the curve seen as a plane scheme: each fat point is
// carried by the tangent line.  Requires distinct curve points and 1 <= a <= q+1.
ZeroScheme build_scheme(const HermitianCurve &curve, const std::vector<std::pair<ProjPoint, int>> &assignments);

// Condition rows of one component in degree d (mult rows).
void append_condition_rows(Matrix &m, const FatPoint &c, int d);
Matrix condition_matrix(const ZeroScheme &z, int d);

struct CohomologyResult {
    long h0 = 0;
    long h1 = 0;
    long rank = 0;
};

// Throws std::logic_error if the Euler identity fails.
CohomologyResult cohomology(const ZeroScheme &z, int d);

// True when every condition row of the scheme annihilates f.
bool contains(const ZeroScheme &z, const Form &f);

ZeroScheme residual_by_line(const ZeroScheme &z, const LineParam &r);
int intersection_degree(const ZeroScheme &z, const Form &t);

} // namespace hcodes

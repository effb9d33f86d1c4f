#pragma once

// Evaluation codes C(B, d, -E) on the Hermitian curve and the search for
// small dependent column sets of their generator matrices (dual codewords).

#include "hermitian/scheme.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcodes {

class CodeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class GuardExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct CodeInstance {
    std::shared_ptr<const HermitianCurve> curve;
    int d = 0;
    ZeroScheme E;
    std::vector<ProjPoint> B; // canonical curve order; column i is B[i]
    // Degree-d forms through E whose evaluations are the rows of G.
    std::vector<Form> forms;
    Matrix G;
    // Kernel dimension of the degree-d conditions of E (h0 of I_E(d)).
    std::size_t forms_through_E = 0;
    bool length_bound_holds = true;

    std::size_t n() const { return B.size(); }
    std::size_t k() const { return G.rows(); }
    // Canonical curve index of the point behind a column.
    std::size_t column_point_index(std::size_t column) const { return curve->index_of(B[column]); }
};

// h0 of O_C(d) for the Hermitian curve C of degree q+1.
long curve_sections(int q, int d);

// Throws CodeError when B meets the support of E, B leaves the curve, d < 1,
// or (with enforce_length) |B| <= d(q+1) - deg E.
CodeInstance build_code(std::shared_ptr<const HermitianCurve> curve, int d, ZeroScheme E, std::vector<ProjPoint> B,
                        bool enforce_length = true);

// Curve points minus the given points and minus every curve point on the given lines.
std::vector<ProjPoint> complement_points(const HermitianCurve &curve, const std::vector<ProjPoint> &removed,
                                         const std::vector<Form> &deleted_lines = {});

struct DualWord {
    std::vector<std::size_t> support; // column indices, ascending
    std::vector<Elem> coeffs;         // values on the support, all nonzero, first is 1
    std::size_t weight() const { return support.size(); }
    std::size_t kernel_dim = 0;
    bool unique = false;     // unique up to scalar
    bool exhaustive = true;  // false when found by the randomized kernel scan
};

// A dual word whose support is exactly S, if any.
std::optional<DualWord> support_word(const CodeInstance &code, std::vector<std::size_t> S, std::uint64_t seed = 1);
// True when G times the word is zero and the word has no zero entry on its support.
bool is_dual_word(const CodeInstance &code, const DualWord &w);

enum class SearchMode { exhaustive, structured };

struct DualDistanceOptions {
    int w_max = 8;
    SearchMode mode = SearchMode::exhaustive;
    int workers = 1;
    std::uint64_t seed = 1;
    std::size_t oracle_samples = 1000;
    std::uint64_t guard = 1000000000ULL;
    // structured mode: sizes with at most this many subsets are enumerated
    // in full, larger sizes are sampled
    std::uint64_t exhaustive_cap = 20000000ULL;
    std::uint64_t random_samples = 1000000ULL;
};

struct DualDistanceResult {
    std::optional<int> distance; // empty when no dependency up to w_max
    std::vector<std::vector<std::size_t>> supports; // column indices, sorted
    std::string guarantee;       // "exhaustive" or "structured+randomized"
    std::uint64_t subsets_checked = 0;
    std::uint64_t random_subsets = 0;
    std::size_t lines_scanned = 0;
    std::size_t oracle_checks = 0;
    std::uint64_t seed = 0;
};

// Exhaustive search throws GuardExceeded when C(n, w_max) > guard.  Every
// returned support and oracle_samples random non-supports are checked against
// the cohomological criterion; a disagreement throws std::logic_error.
DualDistanceResult dual_min_distance(const CodeInstance &code, const DualDistanceOptions &options = {});

// All dependent w-subsets (every proper subset independent) of the given
// columns, as sorted column indices.  Used by both search modes.
std::vector<std::vector<std::size_t>> dependent_subsets(const Matrix &G, const std::vector<std::size_t> &columns, int w,
                                                        int workers, std::uint64_t *checked = nullptr);

// Cohomological side: h1(E u S, d) for S given by column indices.
long h1_with_columns(const CodeInstance &code, const std::vector<std::size_t> &S);

bool strong_isometry_check(const CodeInstance &c1, const CodeInstance &c2, const std::vector<Elem> &lambda);

struct TangentReduction {
    int r = 0;
    int d_prime = 0;
    ZeroScheme E_prime;
    std::vector<Elem> lambda;
    bool isometry = false;       // rowspace check passed
    bool division_exact = false; // every form through E is the tangent product times a form through E'
    CodeInstance original;
    CodeInstance reduced;
};

// a sorted ascending, points distinct on the curve, B avoiding them.
// Throws CodeError when d' <= 0.
TangentReduction reduce_by_tangents(std::shared_ptr<const HermitianCurve> curve, int d, const std::vector<int> &a,
                                    const std::vector<ProjPoint> &points, const std::vector<ProjPoint> &B);

// W_0..W_n by enumerating all codewords; throws GuardExceeded when q^(2k) > guard.
std::vector<std::uint64_t> weight_distribution(const CodeInstance &code, std::uint64_t guard = 100000000ULL);

} // namespace hcodes

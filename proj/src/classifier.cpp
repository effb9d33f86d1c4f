#include "hermitian/classifier.hpp"

#include "hermitian/util.hpp"

#include <functional>
#include <limits>
#include <random>
#include <set>

namespace hcodes {

namespace {

std::vector<int> multiplicities(const ZeroScheme &Z)
{
    std::vector<int> a;
    for (const auto &c : Z.components())
        a.push_back(c.mult);
    return a;
}

// Number of vectors 0 <= b_i <= a_i with sum t, saturating.
std::uint64_t count_subschemes(const std::vector<int> &a, int t)
{
    if (t < 0)
        return 0;
    std::vector<std::uint64_t> ways(t + 1, 0);
    ways[0] = 1;
    for (int ai : a) {
        std::vector<std::uint64_t> next(t + 1, 0);
        for (int s = 0; s <= t; ++s) {
            if (ways[s] == 0)
                continue;
            for (int b = 0; b <= ai && s + b <= t; ++b)
                next[s + b] = std::min(next[s + b] + ways[s], std::numeric_limits<std::uint64_t>::max() / 2);
        }
        ways = std::move(next);
    }
    return ways[t];
}

// Calls fn(b) for every sub-multiplicity vector of total t; fn returns false to stop.
bool for_each_subscheme(const std::vector<int> &a, int t, const std::function<bool(const std::vector<int> &)> &fn)
{
    std::vector<int> suffix(a.size() + 1, 0);
    for (std::size_t i = a.size(); i-- > 0;)
        suffix[i] = suffix[i + 1] + a[i];
    std::vector<int> b(a.size(), 0);
    std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int left) -> bool {
        if (i == a.size())
            return left == 0 ? fn(b) : true;
        if (left > suffix[i])
            return true;
        for (int v = std::min(a[i], left); v >= 0; --v) {
            b[i] = v;
            if (!rec(i + 1, left - v))
                return false;
        }
        b[i] = 0;
        return true;
    };
    return rec(0, t);
}

class CurveSearch {
  public:
    CurveSearch(const ZeroScheme &Z, int degree, const ClassifyOptions &options, ClassifyResult &result)
        : Z_(Z), degree_(degree), options_(options), result_(result), rng_(options.seed)
    {
    }

    // Visits every curve of the given degree through some degree-t subscheme
    // of Z, each once.  fn returns true to stop.
    bool run(int t, const std::function<bool(const Form &)> &fn)
    {
        const auto a = multiplicities(Z_);
        return !for_each_subscheme(a, t, [&](const std::vector<int> &b) {
            const auto Y = subscheme(Z_, b);
            return !visit_kernel(condition_matrix(Y, degree_).kernel(), fn);
        });
    }

    bool visit_kernel(const std::vector<std::vector<Elem>> &basis, const std::function<bool(const Form &)> &fn)
    {
        const auto &field = Z_.field();
        const auto &f = *field;
        bool stop = false;
        const auto offer = [&](const std::vector<Elem> &v) {
            const Form form = Form(field, degree_, v).normalized();
            if (form.is_zero())
                return true;
            std::vector<std::uint16_t> key;
            key.reserve(v.size());
            for (auto e : form.coeffs())
                key.push_back(e.v);
            if (!seen_.insert(std::move(key)).second)
                return true;
            ++result_.candidates_tested;
            if (fn(form)) {
                stop = true;
                return false;
            }
            return true;
        };
        if (basis.empty())
            return false;
        if (projective_count(f.size(), basis.size()) <= options_.full_scan_limit) {
            for_each_projective_combination(f, basis, offer);
            return stop;
        }
        result_.sampled = true;
        for (const auto &v : basis)
            if (!offer(v))
                return stop;
        std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
        for (std::size_t i = 0; i < options_.random_combinations; ++i) {
            std::vector<Elem> v(basis.front().size(), f.zero());
            for (const auto &b : basis) {
                const Elem c = f.from_index(pick(rng_));
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] = f.add(v[j], f.mul(c, b[j]));
            }
            if (!offer(v))
                return stop;
        }
        return stop;
    }

  private:
    const ZeroScheme &Z_;
    int degree_;
    const ClassifyOptions &options_;
    ClassifyResult &result_;
    std::mt19937_64 rng_;
    std::set<std::vector<std::uint16_t>> seen_;
};

// Degree of the subschemes used to find curves meeting Z in at least
// `needed`: every such curve contains a subscheme of degree `needed` and one
// of degree `base`, so whichever family is smaller is enumerated.
int search_degree(const ZeroScheme &Z, int base, int needed)
{
    const auto a = multiplicities(Z);
    return count_subschemes(a, needed) <= count_subschemes(a, base) ? needed : base;
}

std::optional<Witness> find_line(const ZeroScheme &Z, int d, ClassifyResult &result)
{
    const auto &field = Z.field();
    std::set<std::vector<std::uint16_t>> seen;
    std::vector<Form> candidates;
    const auto push = [&](const Form &line) {
        std::vector<std::uint16_t> key;
        for (auto e : line.coeffs())
            key.push_back(e.v);
        if (seen.insert(key).second)
            candidates.push_back(line);
    };
    const auto &comps = Z.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].mult >= 2)
            push(comps[i].carrier->line);
        for (std::size_t j = i + 1; j < comps.size(); ++j)
            push(line_through(field, comps[i].point, comps[j].point));
    }
    for (const auto &line : candidates) {
        ++result.candidates_tested;
        const int deg = intersection_degree(Z, line);
        if (deg >= d + 2)
            return Witness{WitnessKind::LineD2, line, std::nullopt, std::nullopt, deg, 0};
    }
    return std::nullopt;
}

std::optional<Witness> find_conic(const ZeroScheme &Z, int d, const ClassifyOptions &options, ClassifyResult &result)
{
    const int needed = 2 * d + 2;
    if (Z.degree() < needed)
        return std::nullopt;
    std::optional<Witness> found;
    CurveSearch search(Z, 2, options, result);
    search.run(search_degree(Z, 5, needed), [&](const Form &T) {
        const int deg = intersection_degree(Z, T);
        if (deg < needed)
            return false;
        found = Witness{WitnessKind::Conic2D2, T, std::nullopt, std::nullopt, deg, 0};
        return true;
    });
    return found;
}

std::optional<Witness> cubic_ci(const ZeroScheme &W, const Form &T3, int d, int deg, std::uint64_t seed)
{
    auto partner = complete_intersection_check(W, T3, d, seed);
    if (!partner)
        return std::nullopt;
    Witness w{WitnessKind::CubicCI, T3, W, partner, deg, 0};
    w.cubic_kernel_dim = condition_matrix(W, 3).kernel().size();
    return w;
}

} // namespace

std::string to_string(WitnessKind kind)
{
    switch (kind) {
    case WitnessKind::LineD2:
        return "LineD2";
    case WitnessKind::Conic2D2:
        return "Conic2D2";
    case WitnessKind::CubicCI:
        return "CubicCI";
    case WitnessKind::Cubic3D1:
        return "Cubic3D1";
    }
    return "unknown";
}

char classification_regime(int z, int d)
{
    if (d < 1)
        throw std::invalid_argument("degree must be positive");
    if (z <= d + 1)
        return 'a';
    if (z <= 2 * d + 1)
        return 'b';
    if (d >= 2 && z <= 3 * d - 1)
        return 'c';
    if (d >= 3 && z == 3 * d)
        return 'd';
    if (d >= 4 && z <= 4 * d - 5)
        return 'e';
    throw std::invalid_argument("scheme degree " + std::to_string(z) + " is outside the classified range for d = " +
                                std::to_string(d));
}

ZeroScheme subscheme(const ZeroScheme &Z, const std::vector<int> &b)
{
    ZeroScheme out(Z.field());
    const auto &comps = Z.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (b.at(i) <= 0)
            continue;
        if (b[i] > comps[i].mult)
            throw SchemeError("sub-multiplicity exceeds the component multiplicity");
        FatPoint c = comps[i];
        c.mult = b[i];
        out.add(std::move(c));
    }
    return out;
}

ZeroScheme intersection_scheme(const ZeroScheme &Z, const Form &T)
{
    std::vector<int> b;
    for (const auto &c : Z.components()) {
        if (c.mult == 1)
            b.push_back(T.evaluate(c.point).is_zero() ? 1 : 0);
        else
            b.push_back(std::min(c.mult, vanishing_order(T, *c.carrier, c.point)));
    }
    return subscheme(Z, b);
}

std::optional<Form> complete_intersection_check(const ZeroScheme &Z, const Form &T3, int d, std::uint64_t seed)
{
    if (Z.degree() != 3 * d)
        throw std::invalid_argument("complete intersection check needs deg Z = 3d");
    if (T3.degree() != 3 || T3.is_zero())
        throw std::invalid_argument("complete intersection check needs a nonzero cubic");
    if (!contains(Z, T3))
        throw std::invalid_argument("scheme is not contained in the cubic");
    const auto &field = Z.field();
    const auto &f = *field;
    const auto basis = condition_matrix(Z, d).kernel();
    if (basis.empty())
        return std::nullopt;
    Form common(field, d, basis.front());
    for (std::size_t i = 1; i < basis.size() && common.degree() > 0; ++i)
        common = gcd(common, Form(field, d, basis[i]));
    if (!coprime(T3, common))
        return std::nullopt;
    for (const auto &v : basis) {
        Form c(field, d, v);
        if (coprime(T3, c))
            return c.normalized();
    }
    // A vector space over a field with more than 3 elements is not a union of
    // the at most 3 proper subspaces cut out by the factors of T3.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<Elem> v(basis.front().size(), f.zero());
        for (const auto &b : basis) {
            const Elem c = f.from_index(pick(rng));
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = f.add(v[j], f.mul(c, b[j]));
        }
        Form c(field, d, v);
        if (!c.is_zero() && coprime(T3, c))
            return c.normalized();
    }
    return std::nullopt;
}

ClassifyResult classify(const ZeroScheme &Z, int d, const ClassifyOptions &options)
{
    ClassifyResult result;
    const int z = Z.degree();
    result.regime = classification_regime(z, d);
    result.oracle_h1 = cohomology(Z, d).h1;

    std::optional<Witness> w;
    if (result.regime != 'a')
        w = find_line(Z, d, result);
    if (!w && result.regime >= 'c')
        w = find_conic(Z, d, options, result);
    if (!w && result.regime == 'd') {
        CurveSearch search(Z, 3, options, result);
        search.visit_kernel(condition_matrix(Z, 3).kernel(), [&](const Form &T3) {
            w = cubic_ci(Z, T3, d, intersection_degree(Z, T3), options.seed);
            return w.has_value();
        });
    }
    if (!w && result.regime == 'e' && z >= 3 * d) {
        CurveSearch search(Z, 3, options, result);
        search.run(search_degree(Z, 9, 3 * d), [&](const Form &T) {
            const int deg = intersection_degree(Z, T);
            if (deg >= 3 * d + 1) {
                w = Witness{WitnessKind::Cubic3D1, T, std::nullopt, std::nullopt, deg, 0};
                return true;
            }
            if (deg == 3 * d)
                w = cubic_ci(intersection_scheme(Z, T), T, d, deg, options.seed);
            return w.has_value();
        });
    }

    result.h1_positive = w.has_value();
    result.witness = std::move(w);
    if (result.h1_positive && result.oracle_h1 == 0)
        throw std::logic_error("witness found for a scheme with h1 = 0");
    if (!result.h1_positive)
        result.note = result.regime == 'a' ? "degree at most d+1"
                      : result.sampled     ? "witness search empty (some kernels sampled)"
                                           : "exhaustive witness search empty";
    return result;
}

} // namespace hcodes

#include "hermitian/code.hpp"

#include "hermitian/util.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>

namespace hcodes {

namespace {

std::vector<Elem> monomial_row(const GaloisField &f, const ProjPoint &p, int d)
{
    const std::size_t count = Form::monomial_count(d);
    std::vector<Elem> row(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        const auto [i, j, k] = Form::monomial_exponents(d, idx);
        row[idx] = f.mul(f.mul(f.pow(p[0], i), f.pow(p[1], j)), f.pow(p[2], k));
    }
    return row;
}

// Rank of the columns S of G by elimination on a private copy.
std::size_t column_rank(const Matrix &G, const std::vector<std::size_t> &S)
{
    const auto &f = *G.field();
    const std::size_t k = G.rows(), w = S.size();
    std::vector<Elem> cols(w * k);
    for (std::size_t c = 0; c < w; ++c)
        for (std::size_t r = 0; r < k; ++r)
            cols[c * k + r] = G.at(r, S[c]);
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < w; ++c) {
        Elem *v = &cols[c * k];
        for (std::size_t b = 0; b < rank; ++b) {
            const Elem *u = &cols[pivots[b] * k];
            // u is normalized so that its pivot entry is 1
            std::size_t p = 0;
            while (u[p].is_zero())
                ++p;
            const Elem factor = v[p];
            if (factor.is_zero())
                continue;
            for (std::size_t r = p; r < k; ++r)
                v[r] = f.sub(v[r], f.mul(factor, u[r]));
        }
        std::size_t p = 0;
        while (p < k && v[p].is_zero())
            ++p;
        if (p == k)
            continue;
        const Elem s = f.inv(v[p]);
        for (std::size_t r = p; r < k; ++r)
            v[r] = f.mul(v[r], s);
        // keep the basis fully reduced at this pivot
        for (std::size_t b = 0; b < rank; ++b) {
            Elem *u = &cols[pivots[b] * k];
            const Elem factor = u[p];
            if (factor.is_zero())
                continue;
            for (std::size_t r = 0; r < k; ++r)
                u[r] = f.sub(u[r], f.mul(factor, v[r]));
        }
        pivots.push_back(c);
        ++rank;
    }
    return rank;
}

class SubsetSearch {
  public:
    SubsetSearch(const Matrix &G, const std::vector<std::size_t> &columns, int w)
        : f_(*G.field()), k_(G.rows()), m_(columns.size()), w_(w), columns_(columns),
          levels_(std::max(w, 1), std::vector<Elem>(m_ * k_))
    {
        auto &base = levels_[0];
        for (std::size_t c = 0; c < m_; ++c)
            for (std::size_t r = 0; r < k_; ++r)
                base[c * k_ + r] = G.at(r, columns[c]);
    }

    void run(std::size_t offset, std::size_t stride)
    {
        chosen_.clear();
        search(0, 0, offset, stride);
    }

    std::vector<std::vector<std::size_t>> found;
    std::uint64_t checked = 0;

  private:
    bool is_zero(const Elem *v) const
    {
        for (std::size_t r = 0; r < k_; ++r)
            if (!v[r].is_zero())
                return false;
        return true;
    }

    void search(int t, std::size_t start, std::size_t offset, std::size_t stride)
    {
        const auto &cur = levels_[t];
        const bool last = t + 1 == w_;
        for (std::size_t j = start + (t == 0 ? offset : 0); j < m_; j += (t == 0 ? stride : 1)) {
            if (m_ - j < static_cast<std::size_t>(w_ - t))
                break;
            const Elem *v = &cur[j * k_];
            const bool zero = is_zero(v);
            if (last) {
                ++checked;
                if (zero) {
                    std::vector<std::size_t> s;
                    for (auto c : chosen_)
                        s.push_back(columns_[c]);
                    s.push_back(columns_[j]);
                    found.push_back(std::move(s));
                }
                continue;
            }
            if (zero)
                continue;
            std::size_t p = 0;
            while (v[p].is_zero())
                ++p;
            const Elem inv = f_.inv(v[p]);
            auto &next = levels_[t + 1];
            for (std::size_t i = j + 1; i < m_; ++i) {
                const Elem *u = &cur[i * k_];
                Elem *o = &next[i * k_];
                const Elem factor = f_.mul(u[p], inv);
                if (factor.is_zero()) {
                    std::copy(u, u + k_, o);
                    continue;
                }
                for (std::size_t r = 0; r < k_; ++r)
                    o[r] = f_.sub(u[r], f_.mul(factor, v[r]));
            }
            chosen_.push_back(j);
            search(t + 1, j + 1, offset, stride);
            chosen_.pop_back();
        }
    }

    const GaloisField &f_;
    std::size_t k_, m_;
    int w_;
    const std::vector<std::size_t> &columns_;
    std::vector<std::vector<Elem>> levels_;
    std::vector<std::size_t> chosen_;
};

std::vector<std::size_t> random_subset(std::mt19937_64 &rng, std::size_t n, std::size_t w)
{
    // Floyd's algorithm
    std::set<std::size_t> s;
    for (std::size_t j = n - w; j < n; ++j) {
        const std::size_t t = std::uniform_int_distribution<std::size_t>(0, j)(rng);
        if (!s.insert(t).second)
            s.insert(j);
    }
    return {s.begin(), s.end()};
}

// Rows of the condition matrix of E plus one evaluation row per column point.
class Oracle {
  public:
    explicit Oracle(const CodeInstance &code) : code_(code), base_(condition_matrix(code.E, code.d))
    {
        const auto &f = *code.curve->field();
        base_rank_ = static_cast<long>(base_.rank());
        h1_E_ = code.E.degree() - base_rank_;
        rows_.reserve(code.n());
        for (const auto &p : code.B)
            rows_.push_back(monomial_row(f, p, code.d));
    }

    long h1(const std::vector<std::size_t> &S) const
    {
        Matrix m = base_;
        for (auto c : S)
            m.append_row(rows_[c]);
        return code_.E.degree() + static_cast<long>(S.size()) - static_cast<long>(m.rank());
    }
    long h1_E() const { return h1_E_; }

  private:
    const CodeInstance &code_;
    Matrix base_;
    long base_rank_ = 0;
    long h1_E_ = 0;
    std::vector<std::vector<Elem>> rows_;
};

void check_oracle(const CodeInstance &code, const DualDistanceOptions &options, DualDistanceResult &result)
{
    const Oracle oracle(code);
    const long base = oracle.h1_E();
    for (const auto &S : result.supports) {
        if (oracle.h1(S) <= base)
            throw std::logic_error("dependent columns without a rise in h1");
        for (std::size_t drop = 0; drop < S.size(); ++drop) {
            auto sub = S;
            sub.erase(sub.begin() + static_cast<long>(drop));
            if (oracle.h1(sub) != base)
                throw std::logic_error("proper subset of a minimal support raises h1");
        }
        result.oracle_checks += 1 + S.size();
    }
    const std::size_t w = result.distance ? static_cast<std::size_t>(*result.distance)
                                          : static_cast<std::size_t>(std::max(options.w_max, 1));
    if (w > code.n() || code.n() == 0)
        return;
    const std::set<std::vector<std::size_t>> known(result.supports.begin(), result.supports.end());
    std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
    const std::uint64_t total = binomial(code.n(), w);
    const std::size_t samples =
        static_cast<std::size_t>(std::min<std::uint64_t>(options.oracle_samples, total - std::min<std::uint64_t>(total, known.size())));
    std::size_t done = 0, attempts = 0;
    while (done < samples && attempts < 50 * samples + 100) {
        ++attempts;
        auto S = random_subset(rng, code.n(), w);
        if (known.count(S))
            continue;
        const bool dependent = column_rank(code.G, S) < S.size();
        const bool rises = oracle.h1(S) > base;
        if (dependent != rises)
            throw std::logic_error("column dependence disagrees with the h1 criterion");
        ++done;
    }
    result.oracle_checks += done;
}

bool minimal_dependent(const Matrix &G, const std::vector<std::size_t> &S)
{
    if (column_rank(G, S) == S.size())
        return false;
    for (std::size_t drop = 0; drop < S.size(); ++drop) {
        auto sub = S;
        sub.erase(sub.begin() + static_cast<long>(drop));
        if (column_rank(G, sub) < sub.size())
            return false;
    }
    return true;
}

} // namespace

long curve_sections(int q, int d)
{
    const long all = static_cast<long>(Form::monomial_count(d));
    if (d < q + 1)
        return all;
    return all - static_cast<long>(Form::monomial_count(d - q - 1));
}

std::vector<ProjPoint> complement_points(const HermitianCurve &curve, const std::vector<ProjPoint> &removed,
                                         const std::vector<Form> &deleted_lines)
{
    std::vector<ProjPoint> out;
    for (const auto &p : curve.rational_points()) {
        if (std::find(removed.begin(), removed.end(), p) != removed.end())
            continue;
        if (std::any_of(deleted_lines.begin(), deleted_lines.end(),
                        [&](const Form &l) { return l.evaluate(p).is_zero(); }))
            continue;
        out.push_back(p);
    }
    return out;
}

CodeInstance build_code(std::shared_ptr<const HermitianCurve> curve, int d, ZeroScheme E, std::vector<ProjPoint> B,
                        bool enforce_length)
{
    if (d < 1)
        throw CodeError("degree must be positive");
    const auto &field = curve->field();
    const auto &f = *field;
    if (!E.field())
        E = ZeroScheme(field);
    std::sort(B.begin(), B.end(),
              [&](const ProjPoint &a, const ProjPoint &b) { return curve->index_of(a) < curve->index_of(b); });
    if (std::adjacent_find(B.begin(), B.end()) != B.end())
        throw CodeError("evaluation points repeat");
    for (const auto &p : B)
        if (E.find(p))
            throw CodeError("evaluation point lies in the support of E");

    CodeInstance code;
    code.curve = curve;
    code.d = d;
    code.length_bound_holds = static_cast<long>(B.size()) > static_cast<long>(d) * (curve->q() + 1) - E.degree();
    if (enforce_length && !code.length_bound_holds)
        throw CodeError("length bound |B| > d(q+1) - deg E violated");

    const Matrix conditions = condition_matrix(E, d);
    const std::size_t monomials = Form::monomial_count(d);
    std::vector<std::vector<Elem>> kernel;
    if (E.empty()) {
        for (std::size_t i = 0; i < monomials; ++i) {
            std::vector<Elem> v(monomials, f.zero());
            v[i] = f.one();
            kernel.push_back(std::move(v));
        }
    } else {
        kernel = conditions.kernel();
    }
    code.forms_through_E = kernel.size();

    std::vector<std::vector<Elem>> point_rows;
    point_rows.reserve(B.size());
    for (const auto &p : B)
        point_rows.push_back(monomial_row(f, p, d));

    code.G = Matrix(field, 0, B.size());
    std::size_t rank = 0;
    for (auto &vec : kernel) {
        std::vector<Elem> row(B.size(), f.zero());
        for (std::size_t c = 0; c < B.size(); ++c) {
            Elem acc = f.zero();
            for (std::size_t m = 0; m < monomials; ++m)
                if (!vec[m].is_zero())
                    acc = f.add(acc, f.mul(vec[m], point_rows[c][m]));
            row[c] = acc;
        }
        Matrix trial = code.G;
        trial.append_row(row);
        if (trial.rank() == rank + 1) {
            code.G = std::move(trial);
            ++rank;
            code.forms.emplace_back(field, d, std::move(vec));
        }
    }
    code.B = std::move(B);
    code.E = std::move(E);

    if (code.length_bound_holds) {
        const long expected = curve_sections(curve->q(), d) - static_cast<long>(conditions.rank());
        if (static_cast<long>(code.k()) != expected)
            throw std::logic_error("code dimension disagrees with h0(O_C(d)) - deg E + h1");
    }
    return code;
}

std::vector<std::vector<std::size_t>> dependent_subsets(const Matrix &G, const std::vector<std::size_t> &columns, int w,
                                                        int workers, std::uint64_t *checked)
{
    if (w < 1 || columns.size() < static_cast<std::size_t>(w))
        return {};
    const std::size_t parts = static_cast<std::size_t>(std::max(workers, 1));
    std::vector<std::vector<std::vector<std::size_t>>> found(parts);
    std::vector<std::uint64_t> counts(parts, 0);
    parallel_for(parts, static_cast<int>(parts), [&](std::size_t t) {
        SubsetSearch search(G, columns, w);
        search.run(t, parts);
        found[t] = std::move(search.found);
        counts[t] = search.checked;
    });
    std::vector<std::vector<std::size_t>> out;
    for (auto &part : found)
        for (auto &s : part) {
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    std::sort(out.begin(), out.end());
    if (checked)
        for (auto c : counts)
            *checked += c;
    return out;
}

long h1_with_columns(const CodeInstance &code, const std::vector<std::size_t> &S)
{
    return Oracle(code).h1(S);
}

DualDistanceResult dual_min_distance(const CodeInstance &code, const DualDistanceOptions &options)
{
    DualDistanceResult result;
    result.seed = options.seed;
    const std::size_t n = code.n();
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i)
        all[i] = i;

    if (options.mode == SearchMode::exhaustive) {
        const std::uint64_t total = binomial(n, static_cast<std::uint64_t>(std::max(options.w_max, 0)));
        if (total > options.guard)
            throw GuardExceeded("C(n, w_max) = " + std::to_string(total) + " exceeds the subset guard; use structured mode");
        result.guarantee = "exhaustive";
        for (int w = 1; w <= options.w_max; ++w) {
            auto found = dependent_subsets(code.G, all, w, options.workers, &result.subsets_checked);
            if (!found.empty()) {
                result.distance = w;
                result.supports = std::move(found);
                break;
            }
        }
        check_oracle(code, options, result);
        return result;
    }

    result.guarantee = "structured+randomized";
    const auto &curve = *code.curve;
    std::vector<std::size_t> column_of(curve.rational_points().size(), SIZE_MAX);
    for (std::size_t c = 0; c < n; ++c)
        column_of[curve.index_of(code.B[c])] = c;
    std::vector<std::vector<std::size_t>> line_columns;
    for (const auto &line : enumerate_lines(curve.field())) {
        ++result.lines_scanned;
        std::vector<std::size_t> cols;
        for (const auto &p : curve.points_on(line)) {
            const std::size_t c = column_of[curve.index_of(p)];
            if (c != SIZE_MAX)
                cols.push_back(c);
        }
        if (cols.size() >= 2) {
            std::sort(cols.begin(), cols.end());
            line_columns.push_back(std::move(cols));
        }
    }

    std::mt19937_64 rng(options.seed);
    for (int w = 1; w <= options.w_max; ++w) {
        std::set<std::vector<std::size_t>> found;
        for (const auto &cols : line_columns)
            for (auto &s : dependent_subsets(code.G, cols, w, 1, &result.subsets_checked))
                found.insert(std::move(s));
        if (binomial(n, w) <= options.exhaustive_cap) {
            for (auto &s : dependent_subsets(code.G, all, w, options.workers, &result.subsets_checked))
                found.insert(std::move(s));
        } else {
            for (std::uint64_t i = 0; i < options.random_samples; ++i) {
                auto S = random_subset(rng, n, static_cast<std::size_t>(w));
                ++result.random_subsets;
                if (minimal_dependent(code.G, S))
                    found.insert(std::move(S));
            }
        }
        if (!found.empty()) {
            result.distance = w;
            result.supports.assign(found.begin(), found.end());
            break;
        }
    }
    check_oracle(code, options, result);
    return result;
}

std::optional<DualWord> support_word(const CodeInstance &code, std::vector<std::size_t> S, std::uint64_t seed)
{
    if (S.empty())
        return std::nullopt;
    std::sort(S.begin(), S.end());
    const auto &f = *code.curve->field();
    const Matrix sub = code.G.select_columns(S);
    const auto basis = sub.kernel();
    if (basis.empty())
        return std::nullopt;

    DualWord word;
    word.support = S;
    word.kernel_dim = basis.size();
    word.unique = basis.size() == 1;
    const auto full = [](const std::vector<Elem> &v) {
        return std::none_of(v.begin(), v.end(), [](Elem e) { return e.is_zero(); });
    };
    const auto finish = [&](std::vector<Elem> v) {
        const Elem s = f.inv(v[0]);
        for (auto &x : v)
            x = f.mul(x, s);
        word.coeffs = std::move(v);
    };

    if (basis.size() == 1) {
        if (!full(basis[0]))
            return std::nullopt;
        finish(basis[0]);
        return word;
    }
    bool ok = false;
    if (projective_count(f.size(), basis.size()) <= 10000000ULL) {
        for_each_projective_combination(f, basis, [&](const std::vector<Elem> &v) {
            if (!full(v))
                return true;
            finish(v);
            ok = true;
            return false;
        });
    } else {
        word.exhaustive = false;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
        for (int trial = 0; trial < 10000 && !ok; ++trial) {
            std::vector<Elem> v(S.size(), f.zero());
            for (const auto &b : basis) {
                const Elem c = f.from_index(pick(rng));
                for (std::size_t i = 0; i < v.size(); ++i)
                    v[i] = f.add(v[i], f.mul(c, b[i]));
            }
            if (full(v)) {
                finish(v);
                ok = true;
            }
        }
    }
    if (!ok)
        return std::nullopt;
    return word;
}

bool is_dual_word(const CodeInstance &code, const DualWord &w)
{
    const auto &f = *code.curve->field();
    if (w.support.size() != w.coeffs.size())
        return false;
    for (auto c : w.coeffs)
        if (c.is_zero())
            return false;
    for (std::size_t r = 0; r < code.G.rows(); ++r) {
        Elem acc = f.zero();
        for (std::size_t i = 0; i < w.support.size(); ++i)
            acc = f.add(acc, f.mul(code.G.at(r, w.support[i]), w.coeffs[i]));
        if (!acc.is_zero())
            return false;
    }
    return true;
}

bool strong_isometry_check(const CodeInstance &c1, const CodeInstance &c2, const std::vector<Elem> &lambda)
{
    if (c1.n() != c2.n() || lambda.size() != c1.n())
        throw CodeError("length mismatch in isometry check");
    if (std::any_of(lambda.begin(), lambda.end(), [](Elem e) { return e.is_zero(); }))
        throw CodeError("isometry scaling vector has a zero entry");
    if (c1.k() != c2.k())
        return false;
    const auto &f = *c1.curve->field();
    Matrix scaled = c2.G;
    for (std::size_t r = 0; r < scaled.rows(); ++r)
        for (std::size_t c = 0; c < scaled.cols(); ++c)
            scaled.at(r, c) = f.mul(scaled.at(r, c), lambda[c]);
    return c1.G.rref() == scaled.rref();
}

TangentReduction reduce_by_tangents(std::shared_ptr<const HermitianCurve> curve, int d, const std::vector<int> &a,
                                    const std::vector<ProjPoint> &points, const std::vector<ProjPoint> &B)
{
    if (a.size() != points.size() || a.empty())
        throw CodeError("one multiplicity per point is required");
    if (!std::is_sorted(a.begin(), a.end()))
        throw CodeError("multiplicities must be sorted ascending");
    const int s = static_cast<int>(a.size());
    TangentReduction out;
    out.r = static_cast<int>(std::count_if(a.begin(), a.end(), [&](int x) { return x <= d; }));
    out.d_prime = d - s + out.r;
    if (out.d_prime <= 0)
        throw CodeError("reduced degree d' must be positive");

    std::vector<std::pair<ProjPoint, int>> all, kept;
    for (int i = 0; i < s; ++i) {
        all.emplace_back(points[i], a[i]);
        if (i < out.r)
            kept.emplace_back(points[i], a[i]);
    }
    const ZeroScheme E = build_scheme(*curve, all);
    out.E_prime = build_scheme(*curve, kept);
    out.original = build_code(curve, d, E, B, false);
    out.reduced = build_code(curve, out.d_prime, out.E_prime, B, false);

    const auto &field = curve->field();
    const auto &f = *field;
    Form product(field, 0, {f.one()});
    for (int i = out.r; i < s; ++i)
        product = product * curve->tangent_line(points[i]).line;
    out.lambda.reserve(out.original.n());
    for (const auto &p : out.original.B) {
        const Elem v = product.evaluate(p);
        if (v.is_zero())
            throw std::logic_error("tangent line meets another rational point");
        out.lambda.push_back(v);
    }
    out.isometry = strong_isometry_check(out.original, out.reduced, out.lambda);

    out.division_exact = out.original.forms_through_E == out.reduced.forms_through_E;
    const Matrix conditions = condition_matrix(E, d);
    for (const auto &vec : conditions.kernel()) {
        const Form g(field, d, vec);
        const auto quotient = g.divide_exact(product);
        if (!quotient || !contains(out.E_prime, *quotient)) {
            out.division_exact = false;
            break;
        }
    }
    return out;
}

std::vector<std::uint64_t> weight_distribution(const CodeInstance &code, std::uint64_t guard)
{
    const auto &f = *code.curve->field();
    const std::size_t k = code.k(), n = code.n();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > guard / f.size())
            throw GuardExceeded("q^(2k) exceeds the weight distribution guard");
        total *= f.size();
    }
    std::vector<std::uint64_t> W(n + 1, 0);
    std::vector<std::uint32_t> digit(k, 0);
    std::vector<Elem> word(n, f.zero());
    std::size_t weight = 0;
    for (std::uint64_t step = 0; step < total; ++step) {
        ++W[weight];
        // advance the mixed-radix counter, updating the word incrementally
        std::size_t pos = 0;
        while (pos < k) {
            const Elem old_c = f.from_index(digit[pos]);
            digit[pos] = (digit[pos] + 1) % f.size();
            const Elem delta = f.sub(f.from_index(digit[pos]), old_c);
            for (std::size_t c = 0; c < n; ++c) {
                const bool was = !word[c].is_zero();
                word[c] = f.add(word[c], f.mul(delta, code.G.at(pos, c)));
                const bool now = !word[c].is_zero();
                weight += static_cast<std::size_t>(now) - static_cast<std::size_t>(was);
            }
            if (digit[pos] != 0)
                break;
            ++pos;
        }
    }
    return W;
}

} // namespace hcodes

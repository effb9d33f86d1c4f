#include "oracle.hpp"

#include "hermitian/code.hpp"
#include "hermitian/util.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace hcodes;

namespace {

std::vector<ProjPoint> collinear_pair(const HermitianCurve &curve)
{
    const auto &pts = curve.rational_points();
    return {pts[0], pts[1]};
}

// Minimum weight of the dual code and the supports of its minimum-weight
// words, by listing every vector of the dual (kernel of G).
std::pair<int, std::set<std::vector<std::size_t>>> brute_dual(const CodeInstance &code)
{
    const auto &f = *code.curve->field();
    const auto basis = code.G.kernel();
    const std::size_t m = basis.size(), n = code.n();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i)
        total *= f.size();
    int best = static_cast<int>(n) + 1;
    std::set<std::vector<std::size_t>> supports;
    std::vector<std::uint32_t> digit(m, 0);
    for (std::uint64_t step = 1; step < total; ++step) {
        for (std::size_t pos = 0; pos < m; ++pos) {
            digit[pos] = (digit[pos] + 1) % f.size();
            if (digit[pos] != 0)
                break;
        }
        std::vector<Elem> v(n, f.zero());
        for (std::size_t i = 0; i < m; ++i) {
            const Elem c = f.from_index(digit[i]);
            for (std::size_t j = 0; j < n; ++j)
                v[j] = f.add(v[j], f.mul(c, basis[i][j]));
        }
        std::vector<std::size_t> S;
        for (std::size_t j = 0; j < n; ++j)
            if (!v[j].is_zero())
                S.push_back(j);
        const int w = static_cast<int>(S.size());
        if (w < best) {
            best = w;
            supports.clear();
        }
        if (w == best)
            supports.insert(S);
    }
    return {best, supports};
}

// Smallest w with a dependent w-subset of columns, by the reference rank.
int brute_spark(const CodeInstance &code, int w_max)
{
    const auto &f = *code.curve->field();
    const std::size_t n = code.n();
    for (int w = 1; w <= w_max; ++w) {
        std::vector<std::size_t> idx(w);
        for (int i = 0; i < w; ++i)
            idx[i] = i;
        while (true) {
            std::vector<std::vector<Elem>> rows(w);
            for (int i = 0; i < w; ++i)
                rows[i] = code.G.column(idx[i]);
            if (oracle::rank(f, rows) < static_cast<std::size_t>(w))
                return w;
            int i = w - 1;
            while (i >= 0 && idx[i] == n - w + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < w; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return -1;
}

} // namespace

TEST_CASE("length and dimension of the basic instances")
{
    const auto c4 = hermitian_curve(4);
    const auto P = collinear_pair(*c4);
    const auto E = build_scheme(*c4, {{P[0], 2}, {P[1], 2}});
    const auto code = build_code(c4, 3, E, complement_points(*c4, P));
    CHECK(code.n() == 63);
    CHECK(code.k() == 6);

    const auto c7 = hermitian_curve(7);
    const auto &pts = c7->rational_points();
    std::vector<ProjPoint> T{pts[0], pts[1]};
    const Form l = line_through(c7->field(), pts[0], pts[1]);
    for (const auto &p : pts)
        if (!l.evaluate(p).is_zero()) {
            T.push_back(p);
            break;
        }
    const auto E7 = build_scheme(*c7, {{T[0], 3}, {T[1], 3}, {T[2], 3}});
    const auto code7 = build_code(c7, 5, E7, complement_points(*c7, T));
    CHECK(code7.n() == 341);
    CHECK(code7.k() == 12);

    const auto plain = build_code(c4, 1, ZeroScheme(c4->field()), c4->rational_points());
    CHECK(plain.n() == 65);
    CHECK(plain.k() == 3);
}

TEST_CASE("construction errors")
{
    const auto c = hermitian_curve(3);
    const auto &pts = c->rational_points();
    const auto E = build_scheme(*c, {{pts[0], 2}});
    CHECK_THROWS_AS(build_code(c, 2, E, c->rational_points()), CodeError);
    CHECK_THROWS_AS(build_code(c, 0, ZeroScheme(c->field()), {pts[1]}), CodeError);
    const auto &f = *c->field();
    CHECK_THROWS_AS(build_code(c, 1, ZeroScheme(c->field()), {ProjPoint(f, f.one(), f.zero(), f.zero())}),
                    CodeError);
    // too short for the evaluation map to be injective
    CHECK_THROWS_AS(build_code(c, 3, E, {pts[1], pts[2]}), CodeError);
}

TEST_CASE("exhaustive dual distance agrees with listing the whole dual code (q = 2)")
{
    const auto c = hermitian_curve(2);
    const auto &pts = c->rational_points();
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto E = oracle::random_curve_scheme(*c, rng, 2, 3);
        std::vector<ProjPoint> support;
        for (const auto &comp : E.components())
            support.push_back(comp.point);
        const int d = 1 + trial % 3;
        CodeInstance code;
        try {
            code = build_code(c, d, E, complement_points(*c, support), false);
        } catch (const CodeError &) {
            continue;
        }
        if (code.k() == 0 || code.k() == code.n())
            continue;
        const auto [w, supports] = brute_dual(code);
        DualDistanceOptions o;
        o.w_max = static_cast<int>(code.n());
        const auto r = dual_min_distance(code, o);
        REQUIRE(r.distance.has_value());
        CHECK(*r.distance == w);
        CHECK(std::set<std::vector<std::size_t>>(r.supports.begin(), r.supports.end()) == supports);
        CHECK(r.guarantee == "exhaustive");
        ++checked;
    }
    CHECK(checked > 10);
    (void)pts;
}

TEST_CASE("exhaustive dual distance agrees with a reference rank scan (q = 3)")
{
    const auto c = hermitian_curve(3);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        const auto E = oracle::random_curve_scheme(*c, rng, 3, 2);
        std::vector<ProjPoint> support;
        for (const auto &comp : E.components())
            support.push_back(comp.point);
        const auto code = build_code(c, 2, E, complement_points(*c, support), false);
        DualDistanceOptions o;
        o.w_max = 4;
        const auto r = dual_min_distance(code, o);
        const int spark = brute_spark(code, 4);
        CHECK(r.distance.value_or(-1) == spark);
    }
}

TEST_CASE("u0.1 instance: distance 3 with the single support on R")
{
    const auto c = hermitian_curve(4);
    const auto P = collinear_pair(*c);
    const auto code = build_code(c, 3, build_scheme(*c, {{P[0], 2}, {P[1], 2}}), complement_points(*c, P));
    DualDistanceOptions exhaustive;
    exhaustive.w_max = 3;
    const auto r = dual_min_distance(code, exhaustive);
    CHECK(r.distance == 3);
    REQUIRE(r.supports.size() == 1);
    const Form R = line_through(c->field(), P[0], P[1]);
    for (auto col : r.supports[0])
        CHECK(R.evaluate(code.B[col]).is_zero());
    const auto word = support_word(code, r.supports[0]);
    REQUIRE(word.has_value());
    CHECK(word->unique);
    CHECK(word->weight() == 3);
    CHECK(is_dual_word(code, *word));

    // independent columns carry no word
    CHECK(!support_word(code, {0, 1}).has_value());
    // a dependent set with a redundant column: kernel vector vanishes there
    std::vector<std::size_t> four = r.supports[0];
    for (std::size_t j = 0; j < code.n(); ++j)
        if (std::find(four.begin(), four.end(), j) == four.end()) {
            four.push_back(j);
            break;
        }
    if (code.G.select_columns(four).kernel().size() == 1)
        CHECK(!support_word(code, four).has_value());

    DualDistanceOptions structured;
    structured.mode = SearchMode::structured;
    structured.w_max = 4;
    const auto rs = dual_min_distance(code, structured);
    CHECK(rs.distance == 3);
    CHECK(rs.supports == r.supports);
    CHECK(rs.guarantee == "structured+randomized");
}

TEST_CASE("m3 instance: distance 4 with 30 supports, identical for any worker count")
{
    const auto c = hermitian_curve(4);
    const auto P = collinear_pair(*c);
    const Form R = line_through(c->field(), P[0], P[1]);
    const auto code =
        build_code(c, 3, build_scheme(*c, {{P[0], 2}, {P[1], 1}}), complement_points(*c, P, {R}));
    CHECK(code.n() == 60);
    DualDistanceOptions o;
    o.w_max = 4;
    const auto r1 = dual_min_distance(code, o);
    o.workers = 3;
    const auto r3 = dual_min_distance(code, o);
    CHECK(r1.distance == 4);
    CHECK(r1.supports.size() == 30);
    CHECK(r1.supports == r3.supports);
    CHECK(r1.subsets_checked == r3.subsets_checked);
}

TEST_CASE("column dependence matches the cohomological criterion on random subsets")
{
    const auto c = hermitian_curve(3);
    const auto &pts = c->rational_points();
    const auto E = build_scheme(*c, {{pts[0], 2}, {pts[5], 2}});
    const auto code = build_code(c, 3, E, complement_points(*c, {pts[0], pts[5]}));
    const long base = cohomology(E, 3).h1;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::size_t> S;
        const std::size_t w = 1 + rng() % 7;
        while (S.size() < w) {
            const std::size_t j = rng() % code.n();
            if (std::find(S.begin(), S.end(), j) == S.end())
                S.push_back(j);
        }
        const bool dependent = code.G.select_columns(S).rank() < S.size();
        CHECK(dependent == (h1_with_columns(code, S) > base));
    }
}

TEST_CASE("guard refuses oversized exhaustive searches")
{
    const auto c = hermitian_curve(4);
    const auto code = build_code(c, 2, ZeroScheme(c->field()), c->rational_points());
    DualDistanceOptions o;
    o.w_max = 8;
    o.guard = 1000;
    CHECK_THROWS_AS(dual_min_distance(code, o), GuardExceeded);
}

TEST_CASE("strong isometry check")
{
    const auto c = hermitian_curve(3);
    const auto &f = *c->field();
    const auto code = build_code(c, 2, ZeroScheme(c->field()), c->rational_points());
    const std::vector<Elem> ones(code.n(), f.one());
    CHECK(strong_isometry_check(code, code, ones));

    std::mt19937_64 rng(3);
    std::vector<Elem> lambda(code.n());
    for (auto &l : lambda)
        l = f.from_index(1 + rng() % (f.size() - 1));
    CodeInstance scaled = code;
    std::vector<Elem> inverse(code.n());
    for (std::size_t j = 0; j < code.n(); ++j)
        inverse[j] = f.inv(lambda[j]);
    for (std::size_t r = 0; r < scaled.G.rows(); ++r)
        for (std::size_t j = 0; j < code.n(); ++j)
            scaled.G.at(r, j) = f.mul(code.G.at(r, j), inverse[j]);
    CHECK(strong_isometry_check(code, scaled, lambda));
    CHECK(!strong_isometry_check(code, scaled, ones));

    const auto smaller = build_code(c, 1, ZeroScheme(c->field()), c->rational_points());
    CHECK(!strong_isometry_check(code, smaller, ones));
    std::vector<Elem> bad = ones;
    bad[0] = f.zero();
    CHECK_THROWS_AS(strong_isometry_check(code, code, bad), CodeError);
}

TEST_CASE("tangent reduction")
{
    const auto c = hermitian_curve(4);
    const auto &pts = c->rational_points();
    const std::vector<ProjPoint> P{pts[0], pts[3]};
    const auto B = complement_points(*c, P);

    const auto same = reduce_by_tangents(c, 3, {1, 2}, P, B);
    CHECK(same.r == 2);
    CHECK(same.d_prime == 3);
    for (auto l : same.lambda)
        CHECK(l == c->field()->one());
    CHECK(same.isometry);

    const auto red = reduce_by_tangents(c, 3, {3, 5}, P, B);
    CHECK(red.r == 1);
    CHECK(red.d_prime == 2);
    REQUIRE(red.E_prime.components().size() == 1);
    CHECK(red.E_prime.components()[0].point == P[0]);
    CHECK(red.E_prime.components()[0].mult == 3);
    CHECK(red.isometry);
    CHECK(red.division_exact);
    CHECK(red.original.k() == red.reduced.k());
    CHECK(weight_distribution(red.original) == weight_distribution(red.reduced));

    CHECK_THROWS(reduce_by_tangents(c, 1, {4, 5}, P, B));
    CHECK_THROWS(reduce_by_tangents(c, 3, {5, 3}, P, B));
}

TEST_CASE("weight distributions")
{
    const auto c = hermitian_curve(2);
    const auto &f = *c->field();
    auto code = build_code(c, 1, ZeroScheme(c->field()), c->rational_points());
    CodeInstance one = code;
    one.G = Matrix(c->field(), 0, code.n());
    std::vector<Elem> row(code.n(), f.one());
    one.G.append_row(row);
    const auto w1 = weight_distribution(one);
    CHECK(w1[0] == 1);
    CHECK(w1[code.n()] == f.size() - 1);

    CodeInstance zero = code;
    zero.G = Matrix(c->field(), 0, code.n());
    const auto w0 = weight_distribution(zero);
    CHECK(w0[0] == 1);
    CHECK(std::accumulate(w0.begin(), w0.end(), std::uint64_t{0}) == 1);

    // against listing every codeword
    const auto w = weight_distribution(code);
    std::vector<std::uint64_t> brute(code.n() + 1, 0);
    for (std::uint32_t a = 0; a < f.size(); ++a)
        for (std::uint32_t b = 0; b < f.size(); ++b)
            for (std::uint32_t d = 0; d < f.size(); ++d) {
                std::size_t wt = 0;
                for (std::size_t j = 0; j < code.n(); ++j) {
                    Elem v = f.mul(f.from_index(a), code.G.at(0, j));
                    v = f.add(v, f.mul(f.from_index(b), code.G.at(1, j)));
                    v = f.add(v, f.mul(f.from_index(d), code.G.at(2, j)));
                    wt += v.is_zero() ? 0 : 1;
                }
                ++brute[wt];
            }
    CHECK(w == brute);
    CHECK_THROWS_AS(weight_distribution(code, 10), GuardExceeded);
}

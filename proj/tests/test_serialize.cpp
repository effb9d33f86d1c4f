#include "oracle.hpp"

#include "hermitian/serialize.hpp"

#include <doctest.h>

using namespace hcodes;

TEST_CASE("field spec round trip and modulus check")
{
    for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {7, 2}, {2, 6}}) {
        const auto f = GaloisField::make(p, e);
        const json j = field_to_json(*f);
        CHECK(field_from_json(j) == f);
    }
    json j = field_to_json(*GaloisField::make(2, 2));
    CHECK(j["modulus"] == "111");
    j["modulus"] = "101";
    CHECK_THROWS_AS(field_from_json(j), SpecError);
    CHECK_THROWS_AS(field_from_json(json{{"p", 4}, {"e", 1}}), SpecError);
    CHECK_THROWS_AS(field_from_json(json{{"p", 2}}), SpecError);
}

TEST_CASE("GF(4) element w+1 serializes as 11")
{
    const auto f = GaloisField::make(2, 2);
    CHECK(f->to_string(f->from_digits({1, 1})) == "11");
    CHECK(f->to_string(f->from_digits({0, 1})) == "01");
}

TEST_CASE("points, forms and lines round trip")
{
    const auto f = GaloisField::make(5, 2);
    std::mt19937_64 rng(2);
    const auto plane = enumerate_points(*f);
    for (int trial = 0; trial < 50; ++trial) {
        const auto &p = plane[rng() % plane.size()];
        CHECK(point_from_json(*f, point_to_json(*f, p)) == p);
        const int d = trial % 4;
        std::vector<Elem> c(Form::monomial_count(d));
        for (auto &x : c)
            x = f->from_index(static_cast<std::uint32_t>(rng() % f->size()));
        const Form g(f, d, c);
        CHECK(form_from_json(f, form_to_json(g)) == g);
    }
    const Form line = enumerate_lines(f)[11];
    CHECK(line_from_json(f, line_to_json(line)) == line);
    CHECK_THROWS_AS(point_from_json(*f, json::array({"00", "00"})), SpecError);
    CHECK_THROWS_AS(point_from_json(*f, json::array({"00", "00", "00"})), SpecError);
    CHECK_THROWS_AS(point_from_json(*f, json::array({0, 1, 2})), SpecError);
    CHECK_THROWS_AS(line_from_json(f, json::array({"00", "00", "00"})), SpecError);
    json bad = form_to_json(Form::monomial(f, 1, 0, 0));
    bad["coeffs"].push_back("00");
    CHECK_THROWS_AS(form_from_json(f, bad), SpecError);
}

TEST_CASE("schemes round trip")
{
    const auto f = GaloisField::make(3, 2);
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const auto Z = oracle::random_plane_scheme(f, rng, 5, 3);
        const auto back = scheme_from_json(f, scheme_to_json(Z));
        CHECK(back == Z);
        CHECK(condition_matrix(back, 3) == condition_matrix(Z, 3));
    }
}

TEST_CASE("missing carriers default to tangents on the curve")
{
    const auto curve = hermitian_curve(3);
    const auto &f = curve->field();
    const auto &P = curve->rational_points()[4];
    const json j = json::array({json{{"point", point_to_json(*f, P)}, {"mult", 3}}});
    const auto Z = scheme_from_json(f, j, curve.get());
    CHECK(Z == build_scheme(*curve, {{P, 3}}));
    CHECK_THROWS_AS(scheme_from_json(f, j), SpecError);
    CHECK_THROWS_AS(scheme_from_json(f, json{{"point", 1}}), SpecError);
}

TEST_CASE("code specs round trip and build")
{
    const auto curve = hermitian_curve(4);
    const auto &pts = curve->rational_points();
    CodeSpec spec;
    spec.q = 4;
    spec.d = 3;
    spec.points = {{pts[0], 2}, {pts[1], 1}};
    spec.deleted_lines = {line_through(curve->field(), pts[0], pts[1])};
    spec.structured_mode = true;
    const json j = code_spec_to_json(spec);
    CHECK(code_spec_from_json(j) == spec);
    CHECK(code_spec_from_json(parse_json(j.dump())) == spec);
    const auto code = build_from_spec(spec);
    CHECK(code.n() == 60);
    CHECK(code.k() == 7);

    json bad = j;
    bad["points"] = json::array({json::array({point_to_json(*curve->field(), pts[0])})});
    CHECK_THROWS_AS(code_spec_from_json(bad), SpecError);
    bad = j;
    bad["structured_mode"] = "yes";
    CHECK_THROWS_AS(code_spec_from_json(bad), SpecError);
    bad = j;
    bad.erase("d");
    CHECK_THROWS_AS(code_spec_from_json(bad), SpecError);
    bad = j;
    bad["q"] = 6;
    CHECK_THROWS_AS(code_spec_from_json(bad), SpecError);
    CHECK_THROWS_AS(parse_json("{\"q\": "), SpecError);
}

TEST_CASE("report JSON and CSV")
{
    const auto curve = hermitian_curve(4);
    TheoremCase c;
    c.theorem = Theorem::u0_1;
    c.q = 4;
    c.d = 3;
    c.a = {2, 2};
    c.points = collinear_tuples(*curve, 2).front();
    const auto r = verify_case(c);
    const json j = report_to_json(r);
    CHECK(j["status"] == "PASS");
    CHECK(j["n"]["observed"] == 63);
    CHECK(j["supports"]["expected"] == 1);
    CHECK(!j.contains("seconds"));
    CHECK(report_to_json(r, true).contains("seconds"));
    const std::string row = report_csv_row(r);
    CHECK(row.rfind("\"u0.1/q=4/d=3/a=2,2/P=0,1\",PASS,63,63,6,6,3,3,1,1,exhaustive,", 0) == 0);
    const std::string header = report_csv_header();
    // the key holds two quoted commas
    CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ',') - 2);
}

TEST_CASE("dual distance and classification JSON")
{
    const auto curve = hermitian_curve(4);
    const auto P = collinear_tuples(*curve, 2).front();
    const auto code = build_code(curve, 3, build_scheme(*curve, {{P[0], 2}, {P[1], 2}}), complement_points(*curve, P));
    DualDistanceOptions o;
    o.w_max = 3;
    const json j = dual_distance_to_json(code, dual_min_distance(code, o));
    CHECK(j["n"] == 63);
    CHECK(j["dual_distance"] == 3);
    CHECK(j["word_count"] == 1);
    CHECK(j["guarantee"] == "exhaustive");
    for (const auto &idx : j["supports"][0])
        CHECK(line_through(curve->field(), P[0], P[1]).evaluate(curve->rational_points()[idx.get<std::size_t>()]).is_zero());

    const auto f = GaloisField::make(3, 2);
    const auto on = points_on_line(enumerate_lines(f)[3]);
    const auto Z = ZeroScheme::reduced(f, std::vector<ProjPoint>(on.begin(), on.begin() + 5));
    const json w = classify_to_json(classify(Z, 3));
    CHECK(w["h1_positive"] == true);
    CHECK(w["witness"]["kind"] == "LineD2");
    CHECK(w["witness"]["regime"] == "b");
    CHECK(w["witness"]["intersection_degree"] == 5);
}

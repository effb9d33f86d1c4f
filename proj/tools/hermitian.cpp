#include "hermitian/classifier.hpp"
#include "hermitian/serialize.hpp"
#include "hermitian/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hcodes;

namespace {

struct Common {
    std::string format = "json";
    std::string output;
    int workers = 1;
    std::uint64_t seed = 1;
    bool timings = false;
};

class Output {
  public:
    explicit Output(const Common &c)
    {
        if (!c.output.empty()) {
            file_.open(c.output);
            if (!file_)
                throw std::invalid_argument("cannot open " + c.output);
        }
    }
    std::ostream &out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw SpecError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json with_schema(json body)
{
    json out{{"schema", schema_version}};
    for (auto it = body.begin(); it != body.end(); ++it)
        out[it.key()] = it.value();
    return out;
}

void print_seed(std::uint64_t seed) { std::cerr << "seed: " << seed << "\n"; }

std::vector<ProjPoint> points_by_index(const HermitianCurve &curve, const std::vector<std::size_t> &idx)
{
    std::vector<ProjPoint> out;
    const auto &pts = curve.rational_points();
    for (auto i : idx) {
        if (i >= pts.size())
            throw std::invalid_argument("point index " + std::to_string(i) + " out of range");
        out.push_back(pts[i]);
    }
    return out;
}

void emit_pretty_json(std::ostream &os, const json &j)
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "schema")
            continue;
        os << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
           << "\n";
    }
}

void emit_object(std::ostream &os, const Common &c, const json &body)
{
    if (c.format == "pretty") {
        emit_pretty_json(os, body);
    } else if (c.format == "csv") {
        std::string header, row;
        for (auto it = body.begin(); it != body.end(); ++it) {
            header += (header.empty() ? "" : ",") + it.key();
            const std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
            row += (row.empty() && it == body.begin() ? "" : ",") +
                   (v.find_first_of(",\"") == std::string::npos ? v : json(v).dump());
        }
        os << header << "\n" << row << "\n";
    } else {
        os << with_schema(body).dump(2) << "\n";
    }
}

int emit_reports(std::ostream &os, const Common &c, const std::vector<VerificationReport> &reports)
{
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto &r : reports)
        (r.status == "PASS" ? pass : r.status == "FAIL" ? fail : skip) += 1;
    if (c.format == "csv") {
        os << report_csv_header() << "\n";
        for (const auto &r : reports)
            os << report_csv_row(r, c.timings) << "\n";
    } else if (c.format == "pretty") {
        for (const auto &r : reports) {
            os << r.status << "  " << r.key;
            if (!r.reason.empty())
                os << "  (" << r.reason << ")";
            os << "\n";
            for (const auto &n : r.notes)
                os << "      " << n << "\n";
        }
        os << "cases: " << reports.size() << "  PASS: " << pass << "  FAIL: " << fail << "  SKIP: " << skip
           << "\n";
    } else {
        for (const auto &r : reports)
            os << with_schema(report_to_json(r, c.timings)).dump() << "\n";
    }
    if (c.format != "pretty")
        std::cerr << "cases: " << reports.size() << " PASS: " << pass << " FAIL: " << fail << " SKIP: " << skip << "\n";
    return fail > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Evaluation codes on Hermitian curves: schemes, cohomology, dual distances"};
    app.require_subcommand(1);
    Common common;
    const auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", common.format, "json, csv or pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--output", common.output, "write to this file instead of stdout");
        sub->add_option("--workers", common.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", common.seed, "seed for randomized phases");
        sub->add_flag("--timings", common.timings, "include wall-clock seconds in reports");
    };

    int q = 0, d = 0;
    std::string scheme_path, spec_path, theorem_name, mode_name = "auto";
    std::vector<int> a;
    std::vector<std::size_t> point_idx, S_idx;
    int t = 0, w_max = 0;
    bool all = false;
    std::uint64_t samples = 1000000, cap = 100000;
    std::size_t configs = 1000;
    std::vector<int> degrees;

    auto *points = app.add_subcommand("points", "rational points of the curve in canonical order");
    points->add_option("--q", q)->required();
    add_common(points);

    auto *tangents = app.add_subcommand("tangents", "tangent line and contact order at every rational point");
    tangents->add_option("--q", q)->required();
    add_common(tangents);

    auto *h1 = app.add_subcommand("h1", "h0, h1 and rank of the degree-d conditions of a scheme");
    h1->add_option("--q", q)->required();
    h1->add_option("--d", d)->required();
    h1->add_option("--scheme", scheme_path, "scheme spec JSON")->required();
    add_common(h1);

    auto *classify_cmd = app.add_subcommand("classify", "geometric witness for h1 > 0");
    classify_cmd->add_option("--q", q)->required();
    classify_cmd->add_option("--d", d)->required();
    classify_cmd->add_option("--scheme", scheme_path, "scheme spec JSON")->required();
    add_common(classify_cmd);

    auto *code_cmd = app.add_subcommand("code", "build a code from a code spec");
    code_cmd->add_option("--spec", spec_path, "code spec JSON")->required();
    add_common(code_cmd);

    auto *dualdist = app.add_subcommand("dualdist", "minimum distance and minimum-weight supports of the dual code");
    dualdist->add_option("--spec", spec_path, "code spec JSON")->required();
    dualdist->add_option("--w-max", w_max, "largest weight searched (default 8)");
    dualdist->add_option("--mode", mode_name, "auto, exhaustive or structured")
        ->check(CLI::IsMember({"auto", "exhaustive", "structured"}));
    dualdist->add_option("--samples", samples, "random subsets per size in structured mode");
    add_common(dualdist);

    auto *isometry = app.add_subcommand("isometry", "reduce a code by tangent lines and check the isometry");
    isometry->add_option("--q", q)->required();
    isometry->add_option("--d", d)->required();
    isometry->add_option("--a", a, "multiplicities, ascending")->delimiter(',')->required();
    isometry->add_option("--points", point_idx, "curve point indices")->delimiter(',')->required();
    add_common(isometry);

    auto *verify_cmd = app.add_subcommand("verify", "check one statement on one case, or on its whole box with --all");
    auto *sweep_cmd = app.add_subcommand("sweep", "check one statement over its hypothesis box");
    for (auto *sub : {verify_cmd, sweep_cmd}) {
        sub->add_option("--theorem", theorem_name,
                        "u5, m1, u0.1, m3, remark_m2, lemma_u500, lemma_c1 or lemma_u4")
            ->required();
        sub->add_option("--q", q)->required();
        sub->add_option("--mode", mode_name, "auto, exhaustive or structured")
            ->check(CLI::IsMember({"auto", "exhaustive", "structured"}));
        sub->add_option("--samples", samples, "random subsets per size in structured mode");
        sub->add_option("--cap", cap, "point configurations per (d, s) before sampling");
        sub->add_option("--configs", configs, "random configurations for lemma_c1");
        sub->add_option("--degrees", degrees, "restrict the sweep to these degrees")->delimiter(',');
        add_common(sub);
    }
    verify_cmd->add_option("--d", d);
    verify_cmd->add_option("--a", a, "multiplicities")->delimiter(',');
    verify_cmd->add_option("--points", point_idx, "curve point indices")->delimiter(',');
    verify_cmd->add_option("--S", S_idx, "lemma_c1: reduced points, curve indices")->delimiter(',');
    verify_cmd->add_option("--t", t, "lemma_c1: twist");
    verify_cmd->add_flag("--all", all, "run the whole hypothesis box");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Output output(common);
        auto &os = output.out();

        if (*points) {
            const auto curve = hermitian_curve(q);
            const auto &f = *curve->field();
            const auto &pts = curve->rational_points();
            if (common.format == "csv") {
                os << "index,x,y,z\n";
                for (std::size_t i = 0; i < pts.size(); ++i)
                    os << i << ',' << f.to_string(pts[i][0]) << ',' << f.to_string(pts[i][1]) << ','
                       << f.to_string(pts[i][2]) << "\n";
            } else if (common.format == "pretty") {
                for (std::size_t i = 0; i < pts.size(); ++i)
                    os << i << "  " << to_string(f, pts[i]) << "\n";
            } else {
                json list = json::array();
                for (std::size_t i = 0; i < pts.size(); ++i)
                    list.push_back({{"index", i}, {"point", point_to_json(f, pts[i])}});
                os << with_schema({{"q", q}, {"field", field_to_json(f)}, {"count", pts.size()}, {"points", list}})
                          .dump(2)
                   << "\n";
            }
            return 0;
        }

        if (*tangents) {
            const auto curve = hermitian_curve(q);
            const auto &f = *curve->field();
            const auto &pts = curve->rational_points();
            json list = json::array();
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const auto tl = curve->tangent_line(pts[i]);
                list.push_back({{"index", i},
                                {"point", point_to_json(f, pts[i])},
                                {"tangent", line_to_json(tl.line)},
                                {"contact", curve->contact_order(tl, pts[i])}});
            }
            if (common.format == "csv") {
                os << "index,x,y,z,a,b,c,contact\n";
                for (const auto &row : list) {
                    os << row["index"].get<std::size_t>();
                    for (const auto &v : row["point"])
                        os << ',' << v.get<std::string>();
                    for (const auto &v : row["tangent"])
                        os << ',' << v.get<std::string>();
                    os << ',' << row["contact"].get<int>() << "\n";
                }
            } else if (common.format == "pretty") {
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    const auto tl = curve->tangent_line(pts[i]);
                    os << i << "  " << to_string(f, pts[i]) << "  tangent " << list[i]["tangent"].dump()
                       << "  contact " << list[i]["contact"].get<int>() << "\n";
                }
            } else {
                os << with_schema({{"q", q}, {"tangents", list}}).dump(2) << "\n";
            }
            return 0;
        }

        if (*h1 || *classify_cmd) {
            const auto curve = hermitian_curve(q);
            const ZeroScheme Z = scheme_from_json(curve->field(), parse_json(read_file(scheme_path)), curve.get());
            if (*h1) {
                const auto r = cohomology(Z, d);
                emit_object(os, common, {{"h0", r.h0}, {"h1", r.h1}, {"rank", r.rank}});
                return 0;
            }
            ClassifyOptions co;
            co.seed = common.seed;
            print_seed(co.seed);
            const auto r = classify(Z, d, co);
            json body = classify_to_json(r);
            body["seed"] = co.seed;
            emit_object(os, common, body);
            return 0;
        }

        if (*code_cmd) {
            const auto spec = code_spec_from_json(parse_json(read_file(spec_path)));
            const auto code = build_from_spec(spec);
            const auto &f = *code.curve->field();
            if (common.format == "csv") {
                for (std::size_t r = 0; r < code.G.rows(); ++r) {
                    for (std::size_t c = 0; c < code.G.cols(); ++c)
                        os << (c ? "," : "") << f.to_string(code.G.at(r, c));
                    os << "\n";
                }
                return 0;
            }
            json columns = json::array();
            for (std::size_t c = 0; c < code.n(); ++c)
                columns.push_back(code.column_point_index(c));
            json rows = json::array();
            for (std::size_t r = 0; r < code.G.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < code.G.cols(); ++c)
                    row.push_back(f.to_string(code.G.at(r, c)));
                rows.push_back(std::move(row));
            }
            json body{{"spec", code_spec_to_json(spec)}, {"n", code.n()}, {"k", code.k()}, {"columns", columns}};
            if (common.format == "pretty") {
                body.erase("spec");
                body.erase("columns");
            } else {
                body["generator"] = rows;
            }
            emit_object(os, common, body);
            return 0;
        }

        if (*dualdist) {
            const auto spec = code_spec_from_json(parse_json(read_file(spec_path)));
            const auto code = build_from_spec(spec);
            DualDistanceOptions o;
            if (w_max > 0)
                o.w_max = w_max;
            o.workers = common.workers;
            o.seed = common.seed;
            o.random_samples = samples;
            const auto mode = parse_mode(mode_name);
            o.mode = mode == VerifyMode::structured || (mode == VerifyMode::automatic && spec.structured_mode)
                         ? SearchMode::structured
                         : SearchMode::exhaustive;
            if (o.mode == SearchMode::structured)
                print_seed(o.seed);
            const auto r = dual_min_distance(code, o);
            json body = dual_distance_to_json(code, r);
            if (common.format != "json") {
                body.erase("supports");
            }
            emit_object(os, common, body);
            return 0;
        }

        if (*isometry) {
            const auto curve = hermitian_curve(q);
            const auto P = points_by_index(*curve, point_idx);
            const auto red = reduce_by_tangents(curve, d, a, P, complement_points(*curve, P));
            const auto &f = *curve->field();
            json lambda = json::array();
            for (auto l : red.lambda)
                lambda.push_back(f.to_string(l));
            json body{{"r", red.r},
                      {"d_prime", red.d_prime},
                      {"k", red.original.k()},
                      {"k_reduced", red.reduced.k()},
                      {"isometry", red.isometry},
                      {"division_exact", red.division_exact}};
            if (common.format == "json") {
                body["E_prime"] = scheme_to_json(red.E_prime);
                body["lambda"] = lambda;
            }
            emit_object(os, common, body);
            return red.isometry && red.division_exact ? 0 : 1;
        }

        if (*verify_cmd || *sweep_cmd) {
            const Theorem theorem = parse_theorem(theorem_name);
            SweepOptions so;
            so.mode = parse_mode(mode_name);
            so.config_cap = cap;
            so.random_configs = configs;
            so.degrees = degrees;
            so.workers = common.workers;
            so.verify.seed = common.seed;
            so.verify.random_samples = samples;
            print_seed(common.seed);
            if (*sweep_cmd || all)
                return emit_reports(os, common, sweep(q, theorem, so));

            const auto curve = hermitian_curve(q);
            TheoremCase c;
            c.theorem = theorem;
            c.q = q;
            c.d = d;
            c.a = a;
            c.mode = so.mode;
            c.t = t;
            if (point_idx.empty()) {
                if (theorem == Theorem::u0_1 || theorem == Theorem::m3 || theorem == Theorem::lemma_c1) {
                    const auto tuples = collinear_tuples(*curve, static_cast<int>(a.size()));
                    if (tuples.empty())
                        throw std::invalid_argument("no collinear tuple of that size");
                    c.points = tuples.front();
                } else if (theorem == Theorem::u5 || theorem == Theorem::m1 || theorem == Theorem::remark_m2) {
                    c.points = first_noncollinear_triple(*curve);
                } else {
                    const auto &pts = curve->rational_points();
                    const std::size_t s = a.empty() ? static_cast<std::size_t>(d) : a.size();
                    c.points.assign(pts.begin(), pts.begin() + std::min(s, pts.size()));
                }
            } else {
                c.points = points_by_index(*curve, point_idx);
            }
            c.S = points_by_index(*curve, S_idx);
            VerifyOptions vo = so.verify;
            vo.workers = common.workers;
            return emit_reports(os, common, {verify_case(c, vo)});
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

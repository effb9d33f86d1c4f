#include "hermitian/serialize.hpp"

#include <sstream>

namespace hcodes {

namespace {

const json &member(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key))
        throw SpecError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int as_int(const json &j, const char *what)
{
    if (!j.is_number_integer())
        throw SpecError(std::string(what) + " must be an integer");
    return j.get<int>();
}

Elem parse_elem(const GaloisField &field, const json &j)
{
    if (!j.is_string())
        throw SpecError("field elements are digit strings");
    try {
        return field.parse(j.get<std::string>());
    } catch (const std::exception &e) {
        throw SpecError(std::string("bad field element: ") + e.what());
    }
}

template <class T> json optional_json(const std::optional<T> &v)
{
    return v ? json(*v) : json(nullptr);
}

std::string csv_cell(const std::optional<long long> &v) { return v ? std::to_string(*v) : ""; }

std::string csv_quote(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

json parse_json(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw SpecError(std::string("malformed JSON: ") + e.what());
    }
}

json field_to_json(const GaloisField &field)
{
    std::string modulus;
    const auto &m = field.modulus();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (field.characteristic() > 36)
            modulus += (i ? "," : "") + std::to_string(m[i]);
        else
            modulus += "0123456789abcdefghijklmnopqrstuvwxyz"[m[i]];
    }
    return json{{"p", field.characteristic()}, {"e", field.degree()}, {"modulus", modulus}};
}

FieldPtr field_from_json(const json &j)
{
    const int p = as_int(member(j, "p"), "p");
    const int e = as_int(member(j, "e"), "e");
    if (p < 2 || e < 1)
        throw SpecError("bad field size");
    FieldPtr field;
    try {
        field = GaloisField::make(p, e);
    } catch (const std::exception &ex) {
        throw SpecError(ex.what());
    }
    if (j.contains("modulus") && field_to_json(*field).at("modulus") != j.at("modulus"))
        throw SpecError("modulus differs from the built-in one");
    return field;
}

json point_to_json(const GaloisField &field, const ProjPoint &p)
{
    return json::array({field.to_string(p[0]), field.to_string(p[1]), field.to_string(p[2])});
}

ProjPoint point_from_json(const GaloisField &field, const json &j)
{
    if (!j.is_array() || j.size() != 3)
        throw SpecError("a point is an array of three coordinates");
    try {
        return ProjPoint(field, parse_elem(field, j[0]), parse_elem(field, j[1]), parse_elem(field, j[2]));
    } catch (const SpecError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw SpecError(e.what());
    }
}

json form_to_json(const Form &f)
{
    json coeffs = json::array();
    for (auto c : f.coeffs())
        coeffs.push_back(f.field()->to_string(c));
    return json{{"degree", f.degree()}, {"field", field_to_json(*f.field())}, {"coeffs", coeffs}};
}

Form form_from_json(const FieldPtr &field, const json &j)
{
    const int degree = as_int(member(j, "degree"), "degree");
    if (degree < 0)
        throw SpecError("negative degree");
    if (j.contains("field")) {
        const auto other = field_from_json(j.at("field"));
        if (other != field)
            throw SpecError("form over a different field");
    }
    const auto &coeffs = member(j, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != Form::monomial_count(degree))
        throw SpecError("coefficient count does not match the degree");
    std::vector<Elem> v;
    for (const auto &c : coeffs)
        v.push_back(parse_elem(*field, c));
    return Form(field, degree, std::move(v));
}

json line_to_json(const Form &line)
{
    if (line.degree() != 1)
        throw std::invalid_argument("not a line");
    const auto &f = *line.field();
    return json::array({f.to_string(line.coeff(1, 0)), f.to_string(line.coeff(0, 1)), f.to_string(line.coeff(0, 0))});
}

Form line_from_json(const FieldPtr &field, const json &j)
{
    if (!j.is_array() || j.size() != 3)
        throw SpecError("a line is an array of three coefficients");
    const Form line =
        Form::linear(field, parse_elem(*field, j[0]), parse_elem(*field, j[1]), parse_elem(*field, j[2]));
    if (line.is_zero())
        throw SpecError("zero line");
    return line.normalized();
}

json scheme_to_json(const ZeroScheme &Z)
{
    json out = json::array();
    for (const auto &c : Z.components()) {
        json item{{"point", point_to_json(*Z.field(), c.point)}, {"mult", c.mult}};
        if (c.carrier)
            item["carrier"] = line_to_json(c.carrier->line);
        out.push_back(std::move(item));
    }
    return out;
}

ZeroScheme scheme_from_json(const FieldPtr &field, const json &j, const HermitianCurve *curve)
{
    if (!j.is_array())
        throw SpecError("a scheme is an array of fat points");
    std::vector<FatPoint> comps;
    for (const auto &item : j) {
        FatPoint c;
        c.point = point_from_json(*field, member(item, "point"));
        c.mult = as_int(member(item, "mult"), "mult");
        if (item.contains("carrier") && !item.at("carrier").is_null())
            c.carrier = param_line(line_from_json(field, item.at("carrier")));
        else if (c.mult >= 2 && curve && curve->contains(c.point))
            c.carrier = curve->tangent_line(c.point);
        comps.push_back(std::move(c));
    }
    try {
        return ZeroScheme(field, std::move(comps));
    } catch (const SchemeError &e) {
        throw SpecError(e.what());
    }
}

json code_spec_to_json(const CodeSpec &spec)
{
    const auto curve = hermitian_curve(spec.q);
    json points = json::array();
    for (const auto &[p, m] : spec.points)
        points.push_back(json::array({point_to_json(*curve->field(), p), m}));
    json lines = json::array();
    for (const auto &l : spec.deleted_lines)
        lines.push_back(line_to_json(l));
    return json{{"q", spec.q}, {"d", spec.d}, {"points", points}, {"deleted_lines", lines},
                {"structured_mode", spec.structured_mode}};
}

CodeSpec code_spec_from_json(const json &j)
{
    CodeSpec spec;
    spec.q = as_int(member(j, "q"), "q");
    spec.d = as_int(member(j, "d"), "d");
    std::shared_ptr<const HermitianCurve> curve;
    try {
        curve = hermitian_curve(spec.q);
    } catch (const std::exception &e) {
        throw SpecError(e.what());
    }
    const auto &field = curve->field();
    const auto &points = member(j, "points");
    if (!points.is_array())
        throw SpecError("points must be an array");
    for (const auto &item : points) {
        if (!item.is_array() || item.size() != 2)
            throw SpecError("each point entry is [[x, y, z], mult]");
        spec.points.emplace_back(point_from_json(*field, item[0]), as_int(item[1], "mult"));
    }
    if (j.contains("deleted_lines") && !j.at("deleted_lines").is_null()) {
        const auto &lines = j.at("deleted_lines");
        if (!lines.is_array())
            throw SpecError("deleted_lines must be an array");
        for (const auto &l : lines)
            spec.deleted_lines.push_back(line_from_json(field, l));
    }
    if (j.contains("structured_mode")) {
        if (!j.at("structured_mode").is_boolean())
            throw SpecError("structured_mode must be a boolean");
        spec.structured_mode = j.at("structured_mode").get<bool>();
    }
    return spec;
}

CodeInstance build_from_spec(const CodeSpec &spec)
{
    const auto curve = hermitian_curve(spec.q);
    std::vector<ProjPoint> support;
    for (const auto &pm : spec.points)
        support.push_back(pm.first);
    ZeroScheme E = build_scheme(*curve, spec.points);
    return build_code(curve, spec.d, std::move(E), complement_points(*curve, support, spec.deleted_lines));
}

json witness_to_json(const Witness &w, char regime)
{
    json out{{"kind", to_string(w.kind)},
             {"curve", form_to_json(w.curve)},
             {"intersection_degree", w.intersection},
             {"regime", std::string(1, regime)}};
    if (w.subscheme)
        out["subscheme"] = scheme_to_json(*w.subscheme);
    if (w.partner)
        out["partner"] = form_to_json(*w.partner);
    if (w.kind == WitnessKind::CubicCI)
        out["cubic_kernel_dim"] = w.cubic_kernel_dim;
    return out;
}

json classify_to_json(const ClassifyResult &r)
{
    json out{{"h1_positive", r.h1_positive},
             {"regime", std::string(1, r.regime)},
             {"oracle_h1", r.oracle_h1},
             {"candidates_tested", r.candidates_tested},
             {"sampled", r.sampled}};
    out["witness"] = r.witness ? witness_to_json(*r.witness, r.regime) : json(nullptr);
    if (!r.note.empty())
        out["note"] = r.note;
    return out;
}

json dual_distance_to_json(const CodeInstance &code, const DualDistanceResult &r)
{
    json supports = json::array();
    for (const auto &S : r.supports) {
        json s = json::array();
        for (auto c : S)
            s.push_back(code.column_point_index(c));
        supports.push_back(std::move(s));
    }
    return json{{"n", code.n()},
                {"k", code.k()},
                {"dual_distance", optional_json(r.distance)},
                {"guarantee", r.guarantee},
                {"supports", supports},
                {"word_count", r.supports.size()},
                {"subsets_checked", r.subsets_checked},
                {"random_subsets", r.random_subsets},
                {"lines_scanned", r.lines_scanned},
                {"oracle_checks", r.oracle_checks},
                {"seed", r.seed}};
}

json report_to_json(const VerificationReport &r, bool timings)
{
    json out{{"key", r.key},
             {"theorem", to_string(r.theorem)},
             {"q", r.q},
             {"d", r.d},
             {"a", r.a},
             {"points", r.points},
             {"status", r.status}};
    if (!r.reason.empty())
        out["reason"] = r.reason;
    out["n"] = {{"observed", optional_json(r.n_observed)}, {"expected", optional_json(r.n_expected)}};
    out["k"] = {{"observed", optional_json(r.k_observed)}, {"expected", optional_json(r.k_expected)}};
    out["dual_distance"] = {{"observed", optional_json(r.distance_observed)},
                            {"expected", optional_json(r.distance_expected)}};
    out["supports"] = {{"observed", optional_json(r.census_observed)},
                       {"expected", optional_json(r.census_expected)},
                       {"predicted", optional_json(r.census_predicted)}};
    out["guarantee"] = r.guarantee;
    out["seed"] = r.seed;
    out["notes"] = r.notes;
    if (timings)
        out["seconds"] = r.seconds;
    return out;
}

std::string report_csv_header()
{
    return "key,status,n_expected,n_observed,k_expected,k_observed,distance_expected,distance_observed,"
           "supports_expected,supports_observed,guarantee,seconds";
}

std::string report_csv_row(const VerificationReport &r, bool timings)
{
    std::ostringstream out;
    out << csv_quote(r.key) << ',' << r.status << ',' << csv_cell(r.n_expected) << ',' << csv_cell(r.n_observed)
        << ',' << csv_cell(r.k_expected) << ',' << csv_cell(r.k_observed) << ',' << csv_cell(r.distance_expected)
        << ',' << csv_cell(r.distance_observed) << ',' << csv_cell(r.census_expected) << ','
        << csv_cell(r.census_observed) << ',' << csv_quote(r.guarantee) << ',';
    if (timings)
        out << r.seconds;
    return out.str();
}

} // namespace hcodes

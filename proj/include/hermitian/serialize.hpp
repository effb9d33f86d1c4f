#pragma once

// JSON and CSV forms of fields, points, forms, schemes, code specs and
// reports.  Parsers throw SpecError on malformed input.

#include "hermitian/classifier.hpp"
#include "hermitian/code.hpp"
#include "hermitian/verify.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcodes {

using json = nlohmann::ordered_json;

inline constexpr const char *schema_version = "hermitian-codes/1";

class SpecError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

json field_to_json(const GaloisField &field);
FieldPtr field_from_json(const json &j);

json point_to_json(const GaloisField &field, const ProjPoint &p);
ProjPoint point_from_json(const GaloisField &field, const json &j);

json form_to_json(const Form &f);
Form form_from_json(const FieldPtr &field, const json &j);

// [a, b, c] for the line a x + b y + c z
json line_to_json(const Form &line);
Form line_from_json(const FieldPtr &field, const json &j);

json scheme_to_json(const ZeroScheme &Z);
// A missing carrier on a multiple point defaults to the curve tangent when a
// curve is given and the point lies on it.
ZeroScheme scheme_from_json(const FieldPtr &field, const json &j, const HermitianCurve *curve = nullptr);

struct CodeSpec {
    int q = 0;
    int d = 0;
    std::vector<std::pair<ProjPoint, int>> points;
    std::vector<Form> deleted_lines;
    bool structured_mode = false;

    friend bool operator==(const CodeSpec &, const CodeSpec &) = default;
};

json code_spec_to_json(const CodeSpec &spec);
CodeSpec code_spec_from_json(const json &j);
// E is the sum of the fat points with tangent carriers; B is the rest of the
// curve minus the deleted lines.
CodeInstance build_from_spec(const CodeSpec &spec);

json witness_to_json(const Witness &w, char regime);
json classify_to_json(const ClassifyResult &r);
json dual_distance_to_json(const CodeInstance &code, const DualDistanceResult &r);
// Wall-clock seconds are included only when timings is set, so that
// output is reproducible by default.
json report_to_json(const VerificationReport &r, bool timings = false);

std::string report_csv_header();
std::string report_csv_row(const VerificationReport &r, bool timings = false);

// Parses a whole document; throws SpecError with the parser message.
json parse_json(const std::string &text);

} // namespace hcodes

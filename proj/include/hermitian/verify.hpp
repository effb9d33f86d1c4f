#pragma once

// Statement-level checks: build the codes and schemes named by each result,
// compare observed parameters, dual distances and support censuses with the
// closed forms, and collect the outcome in reports.

#include "hermitian/code.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hcodes {

enum class Theorem { u5, m1, u0_1, m3, remark_m2, lemma_u500, lemma_c1, lemma_u4 };

std::string to_string(Theorem t);
// Accepts the names produced by to_string; throws std::invalid_argument otherwise.
Theorem parse_theorem(const std::string &name);

enum class VerifyMode { automatic, exhaustive, structured };
std::string to_string(VerifyMode m);
VerifyMode parse_mode(const std::string &name);

struct TheoremCase {
    Theorem theorem = Theorem::u0_1;
    int q = 4;
    int d = 3;
    // multiplicities a_1..a_s; for lemma_u500 an empty list means every
    // multiplicity vector of the constraint box is checked
    std::vector<int> a;
    std::vector<ProjPoint> points;
    VerifyMode mode = VerifyMode::automatic;
    // lemma_c1 only: the reduced set S and the twist t
    std::vector<ProjPoint> S;
    int t = 0;

    std::string key() const;
};

struct VerifyOptions {
    int workers = 1;
    std::uint64_t seed = 1;
    std::size_t oracle_samples = 1000;
    std::uint64_t random_samples = 1000000;
    std::uint64_t exhaustive_guard = 1000000000ULL;
    std::uint64_t weight_guard = 1000000;
};

struct VerificationReport {
    std::string key;
    Theorem theorem = Theorem::u0_1;
    int q = 0;
    int d = 0;
    std::vector<int> a;
    std::vector<std::size_t> points; // canonical curve indices
    std::string status;              // PASS, FAIL or SKIP
    std::string reason;              // violated predicate or first failed check
    std::optional<long long> n_observed, n_expected;
    std::optional<long long> k_observed, k_expected;
    std::optional<long long> distance_observed, distance_expected;
    std::optional<long long> census_observed, census_expected;
    // sets predicted from the line geometry of the configuration
    std::optional<long long> census_predicted;
    std::string guarantee;
    std::uint64_t seed = 0;
    std::vector<std::string> notes;
    double seconds = 0;

    bool passed() const { return status == "PASS"; }
};

// Empty when the hypotheses of the named result hold, else the violated predicate.
std::optional<std::string> hypothesis_violation(const TheoremCase &c);

VerificationReport verify_case(const TheoremCase &c, const VerifyOptions &options = {});

struct SweepOptions {
    VerifyMode mode = VerifyMode::automatic;
    // cap on point configurations per (d, s); larger families are sampled
    std::size_t config_cap = 100000;
    // lemma_u4: point tuples per multiplicity vector
    std::size_t tuples_per_box = 2;
    // lemma_c1: random configurations
    std::size_t random_configs = 1000;
    // restrict to these degrees when non-empty
    std::vector<int> degrees;
    int workers = 1;
    VerifyOptions verify;
};

// Every case of the hypothesis box for q in a deterministic order.
std::vector<TheoremCase> sweep_cases(int q, Theorem t, const SweepOptions &options = {});
std::vector<VerificationReport> sweep(int q, Theorem t, const SweepOptions &options = {});

// Remark m2 check: every d-subset of B on a non-tangent line through P3 is a
// weight-d dual support.
VerificationReport verify_remark_m2(int q, int d, int a3, const VerifyOptions &options = {},
                                    std::vector<ProjPoint> points = {});

// Collinear ordered s-tuples of curve points, canonical order.
std::vector<std::vector<ProjPoint>> collinear_tuples(const HermitianCurve &curve, int s);
// Three non-collinear curve points: the first canonical triple.
std::vector<ProjPoint> first_noncollinear_triple(const HermitianCurve &curve);

} // namespace hcodes

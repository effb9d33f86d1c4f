#pragma once

// Geometric test for h1(I_Z(d)) > 0 on schemes of small degree: search for a
// line, conic or cubic meeting Z in too high a degree, or a cubic cutting out
// a degree-3d subscheme as a complete intersection.

#include "hermitian/scheme.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace hcodes {

enum class WitnessKind {
    LineD2,   // deg(T1 . Z) >= d+2
    Conic2D2, // deg(T2 . Z) >= 2d+2
    CubicCI,  // W subset of Z of degree 3d with W = T3 . C_d
    Cubic3D1  // deg(C3 . Z) >= 3d+1
};

std::string to_string(WitnessKind kind);

struct Witness {
    WitnessKind kind = WitnessKind::LineD2;
    Form curve;
    std::optional<ZeroScheme> subscheme; // W for CubicCI
    std::optional<Form> partner;         // C_d for CubicCI
    int intersection = 0;                // deg(curve . Z)
    // CubicCI only: dimension of the cubics through W (1 means T3 is unique).
    std::size_t cubic_kernel_dim = 0;
};

struct ClassifyResult {
    bool h1_positive = false;
    std::optional<Witness> witness;
    char regime = 'a';
    long oracle_h1 = 0;
    std::size_t candidates_tested = 0;
    // set when some kernel was too large for a full scan and was sampled
    bool sampled = false;
    std::string note;
};

struct ClassifyOptions {
    std::uint64_t full_scan_limit = 1000000;
    std::size_t random_combinations = 10000;
    std::uint64_t seed = 1;
};

// Applicable part of the classification for (deg Z, d): 'a'..'e'.  Throws
// std::invalid_argument when no part applies.
char classification_regime(int z, int d);

// Throws std::logic_error when a returned witness disagrees with the oracle
// (a witness must force h1 > 0).
ClassifyResult classify(const ZeroScheme &Z, int d, const ClassifyOptions &options = {});

// Degree-d form through Z sharing no component with T3, if any.  Requires
// deg Z = 3d and Z inside T3 (std::invalid_argument otherwise).
std::optional<Form> complete_intersection_check(const ZeroScheme &Z, const Form &T3, int d, std::uint64_t seed = 1);

// Subscheme keeping the first b_i steps of each component (b_i = 0 drops it).
ZeroScheme subscheme(const ZeroScheme &Z, const std::vector<int> &b);

// Largest subscheme of Z contained in the curve T.
ZeroScheme intersection_scheme(const ZeroScheme &Z, const Form &T);

} // namespace hcodes

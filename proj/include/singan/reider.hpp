#pragma once

#include "singan/boundary.hpp"
#include "singan/classify.hpp"

#include <optional>

namespace singan {

/// User-supplied global numbers for a nef and big Q-divisor M.
struct ReiderQuery {
    Rational m2;                      // M^2
    Rational mc_min;                  // min { M.C : y in C }
    bool mc_all_nonneg = true;        // M is nef
    bool mc_strict_positive = false;  // min M.C > 0 (D_n case of the shape criterion)
};

struct ReiderVerdict {
    struct Theorem5 {
        bool applies = false;
    } theorem5;

    struct Theorem6 {
        bool hypotheses_met = false;
        Rational margin_m2;  // m2 - (1-mu)^2 delta_y
        Rational margin_mc;  // mc_min - (1-mu)
    } theorem6;

    struct Theorem7 {
        bool applicable_shape = false;
        bool hypotheses_met = false;
    } theorem7;

    struct RefinedAn {
        bool applicable = false;  // shape A(n), germ log-terminal
        Rational threshold;       // (1-mu)(1-a), a = min{a_1, a_n}
        bool met = false;
    } refined_an;

    struct OpenProblem {
        Rational threshold;  // (1-mu) delta_y / 2
        bool met = false;
        const char* status = "conjectural";
    } open_problem;

    Rational mu;
};

ReiderVerdict reider_check(const SingularityReport& report, const TripleReport& triple,
                           const ReiderQuery& q);

/// Smooth points fall outside the singular-point criteria; the classical
/// smooth-point thresholds are M^2 > (2-mu_s)^2 and M.C >= 2-mu_s with
/// mu_s = mult_y B. Reported informationally by the CLI.
struct SmoothPointInfo {
    Rational mu_smooth;      // mult_y B = sum b_i (D_i . F_1)
    Rational m2_threshold;   // (2-mu_s)^2
    Rational mc_threshold;   // 2-mu_s
    bool m2_met = false;
    bool mc_met = false;
};

SmoothPointInfo smooth_point_info(const DualGraph& g, const BoundarySpec& spec,
                                  const ReiderQuery& q);

}  // namespace singan

#include "singan/reider.hpp"

namespace singan {

ReiderVerdict reider_check(const SingularityReport& report, const TripleReport& triple,
                           const ReiderQuery& q) {
    if (report.is_smooth)
        throw ValidationError("smooth point: out of scope of Theorems 6-7 "
                              "(use the smooth-point thresholds instead)");

    ReiderVerdict v;
    v.theorem5.applies = !triple.is_lt_triple;

    if (triple.mu) {
        const Rational mu = *triple.mu;
        v.mu = mu;
        const Rational one_minus_mu = Rational(1) - mu;
        const Rational m2_bound = one_minus_mu * one_minus_mu * report.invariants.delta_y;

        v.theorem6.margin_m2 = q.m2 - m2_bound;
        v.theorem6.margin_mc = q.mc_min - one_minus_mu;
        v.theorem6.hypotheses_met = (q.m2 > m2_bound) && (q.mc_min >= one_minus_mu);

        const bool shape_d = (report.shape.kind == ShapeKind::D);
        const bool shape_e = (report.shape.kind == ShapeKind::E);
        v.theorem7.applicable_shape = report.is_log_terminal && (shape_d || shape_e);
        v.theorem7.hypotheses_met = v.theorem7.applicable_shape && (q.m2 > m2_bound) &&
                                    (shape_e || q.mc_strict_positive);

        if (report.is_log_terminal && report.shape.kind == ShapeKind::A) {
            v.refined_an.applicable = true;
            // path ends in file order: the two degree-1 vertices (or the single vertex)
            const DualGraph& g = report.invariants.Z.graph();
            Rational a_end;
            bool have = false;
            for (int j = 0; j < g.size(); ++j) {
                if (g.size() > 1 && g.degree(j) != 1)
                    continue;
                const Rational& a = report.invariants.Delta[j];
                if (!have || a < a_end) {
                    a_end = a;
                    have = true;
                }
            }
            v.refined_an.threshold = one_minus_mu * (Rational(1) - a_end);
            v.refined_an.met = (q.m2 > m2_bound) && (q.mc_min >= v.refined_an.threshold);
        }

        v.open_problem.threshold = one_minus_mu * report.invariants.delta_y / 2;
        v.open_problem.met = (q.m2 > m2_bound) && (q.mc_min >= v.open_problem.threshold);
    }
    return v;
}

SmoothPointInfo smooth_point_info(const DualGraph& g, const BoundarySpec& spec,
                                  const ReiderQuery& q) {
    if (!g.smooth_point_mode())
        throw ValidationError("smooth_point_info requires a smoothpoint graph");
    SmoothPointInfo info;
    info.mu_smooth = 0;
    for (const CurveSpec& c : spec)
        for (auto [vj, df] : c.incidence)
            if (vj == 0)
                info.mu_smooth += c.coeff * df;
    info.mc_threshold = Rational(2) - info.mu_smooth;
    info.m2_threshold = info.mc_threshold * info.mc_threshold;
    info.m2_met = q.m2 > info.m2_threshold;
    info.mc_met = q.mc_min >= info.mc_threshold;
    return info;
}

}  // namespace singan

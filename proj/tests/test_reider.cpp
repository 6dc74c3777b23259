#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singan/catalog.hpp"
#include "singan/reider.hpp"
#include "singan/verify.hpp"

#include "test_util.hpp"

using namespace singan;

namespace {

struct Setup {
    DualGraph g;
    SingularityReport report;
    TripleReport triple;
};

Setup setup(const std::string& name, const BoundarySpec& spec = {}) {
    Setup s;
    s.g = builtin(name).graph;
    InvariantSet inv = compute_invariants(s.g);
    s.report = classify(s.g, inv);
    s.triple = triple_classify(s.g, inv, spec);
    return s;
}

}  // namespace

TEST_CASE("A1, empty boundary: Theorem 6 applies with room to spare") {
    Setup s = setup("A1");
    ReiderVerdict v = reider_check(s.report, s.triple, {Rational(3), Rational(1)});
    CHECK_FALSE(v.theorem5.applies);
    CHECK(v.mu == 0);
    CHECK(v.theorem6.hypotheses_met);  // 3 > 2, 1 >= 1
    CHECK(v.theorem6.margin_m2 == 1);
    CHECK(v.theorem6.margin_mc == 0);
    CHECK(v.refined_an.applicable);
    CHECK(v.refined_an.threshold == 1);  // a = 0 at a RDP
    CHECK(v.refined_an.met);
    CHECK(v.open_problem.threshold == 1);
    CHECK(v.open_problem.met);
    CHECK(std::string(v.open_problem.status) == "conjectural");

    // boundary-equality case: M^2 = (1-mu)^2 delta exactly is not enough
    ReiderVerdict tight = reider_check(s.report, s.triple, {Rational(2), Rational(1)});
    CHECK_FALSE(tight.theorem6.hypotheses_met);
    CHECK(tight.theorem6.margin_m2 == 0);
}

TEST_CASE("boundary pushes the triple out of Theorem 6's reach") {
    DualGraph g = builtin("A1").graph;
    InvariantSet inv = compute_invariants(g);
    SingularityReport report = classify(g, inv);
    TripleReport triple =
        triple_classify(g, inv, {CurveSpec{"D", Rational(1), {{0, 2}}}});
    ReiderVerdict v = reider_check(report, triple, {Rational(100), Rational(100)});
    CHECK(v.theorem5.applies);  // not a log-terminal triple: may fail to be free
}

TEST_CASE("D(4) star: shape criterion succeeds where Theorem 6 fails") {
    Setup s = setup("d4_star");
    REQUIRE(s.report.shape == Shape{ShapeKind::D, 4});
    // delta = 5/3, mu = 0: Theorem 6 wants M.C >= 1, only 1/10 is available
    ReiderQuery q{Rational(2), Rational(1, 10), true, true};
    ReiderVerdict v = reider_check(s.report, s.triple, q);
    CHECK_FALSE(v.theorem6.hypotheses_met);
    CHECK(v.theorem7.applicable_shape);
    CHECK(v.theorem7.hypotheses_met);  // 2 > 5/3 and min M.C > 0

    // the D_n case genuinely needs min M.C > 0
    ReiderQuery q2{Rational(2), Rational(0), true, false};
    CHECK_FALSE(reider_check(s.report, s.triple, q2).theorem7.hypotheses_met);
}

TEST_CASE("E-shape criterion does not need strict positivity") {
    Setup s = setup("A1");
    (void)s;
    DualGraph e8 = test_util::tree_w2(8, test_util::e8_edges());
    InvariantSet inv = compute_invariants(e8);
    SingularityReport report = classify(e8, inv);
    TripleReport triple = triple_classify(e8, inv, {});
    REQUIRE(report.shape == Shape{ShapeKind::E, 8});
    ReiderVerdict v = reider_check(report, triple, {Rational(3), Rational(0), true, false});
    CHECK(v.theorem7.applicable_shape);
    CHECK(v.theorem7.hypotheses_met);  // 3 > delta = 2, no M.C condition in the E case
}

TEST_CASE("shape criterion never applies off D/E or off the log-terminal locus") {
    for (const char* name : {"remark210", "type3_w3", "exercise_1_10"}) {
        Setup s = setup(name);
        ReiderVerdict v = reider_check(s.report, s.triple, {Rational(100), Rational(100)});
        CHECK_FALSE(v.theorem7.applicable_shape);
    }
}

TEST_CASE("refined A_n threshold beats the generic one") {
    std::mt19937_64 rng(81);
    RandomGraphGenerator gen(82);
    int seen = 0;
    while (seen < 100) {
        DualGraph g = gen.random_lt_graph();
        InvariantSet inv = compute_invariants(g);
        SingularityReport report = classify(g, inv);
        if (report.shape.kind != ShapeKind::A)
            continue;
        ++seen;
        TripleReport triple = triple_classify(g, inv, {});
        ReiderVerdict v = reider_check(report, triple, {Rational(5), Rational(1)});
        REQUIRE(v.refined_an.applicable);
        const Rational one_minus_mu = Rational(1) - v.mu;
        CHECK(v.refined_an.threshold <= one_minus_mu);
        CHECK(v.refined_an.threshold >= 0);
        (void)rng;
    }
}

TEST_CASE("Theorem 6 implies the open-problem criterion when delta <= 2") {
    RandomGraphGenerator gen(91);
    std::mt19937_64 rng(92);
    for (int t = 0; t < 200; ++t) {
        auto [g, spec] = gen.random_lt_triple();
        InvariantSet inv = compute_invariants(g);
        SingularityReport report = classify(g, inv);
        TripleReport triple = triple_classify(g, inv, spec);
        ReiderQuery q{Rational(std::uniform_int_distribution<int>(0, 8)(rng), 2),
                      Rational(std::uniform_int_distribution<int>(0, 6)(rng), 4)};
        ReiderVerdict v = reider_check(report, triple, q);
        if (report.invariants.delta_y <= 2 && v.theorem6.hypotheses_met)
            CHECK(v.open_problem.met);
        // escalating the query never loses a verdict
        ReiderQuery stronger{q.m2 + 1, q.mc_min + 1, q.mc_all_nonneg, q.mc_strict_positive};
        ReiderVerdict v2 = reider_check(report, triple, stronger);
        if (v.theorem6.hypotheses_met)
            CHECK(v2.theorem6.hypotheses_met);
        if (v.theorem7.hypotheses_met)
            CHECK(v2.theorem7.hypotheses_met);
        if (v.open_problem.met)
            CHECK(v2.open_problem.met);
        if (v.refined_an.met)
            CHECK(v2.refined_an.met);
    }
}

TEST_CASE("smooth points are rejected with a pointer to the classical bounds") {
    Setup s = setup("smooth");
    CHECK_THROWS_WITH_AS(reider_check(s.report, s.triple, {Rational(5), Rational(2)}),
                         doctest::Contains("smooth"), ValidationError);

    DualGraph g = builtin("smooth").graph;
    BoundarySpec spec{CurveSpec{"D", Rational(1, 2), {{0, 1}}}};
    SmoothPointInfo info = smooth_point_info(g, spec, {Rational(5), Rational(2)});
    CHECK(info.mu_smooth == Rational(1, 2));
    CHECK(info.mc_threshold == Rational(3, 2));
    CHECK(info.m2_threshold == Rational(9, 4));
    CHECK(info.m2_met);
    CHECK(info.mc_met);

    CHECK_THROWS_AS(smooth_point_info(builtin("A1").graph, {}, {Rational(1), Rational(1)}),
                    ValidationError);
}

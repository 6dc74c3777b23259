#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singan/boundary.hpp"
#include "singan/catalog.hpp"
#include "singan/verify.hpp"

#include "test_util.hpp"

using namespace singan;

namespace {

BoundarySpec one_curve(const Rational& b, int vertex, int df) {
    return {CurveSpec{"D", b, {{vertex, df}}}};
}

}  // namespace

TEST_CASE("exceptional part on A1") {
    DualGraph g = builtin("A1").graph;
    InvariantSet inv = compute_invariants(g);

    // b = 1/2, D.F = 1: solve -2 x = -1/2
    TripleReport r = triple_classify(g, inv, one_curve(Rational(1, 2), 0, 1));
    CHECK(r.b_prime[0] == Rational(1, 4));
    CHECK(r.is_lt_triple);
    CHECK(r.is_lc_triple);
    REQUIRE(r.mu.has_value());
    CHECK(*r.mu == Rational(1, 4));

    // b = 1, D.F = 2: boundary at the log-canonical edge
    TripleReport r2 = triple_classify(g, inv, one_curve(Rational(1), 0, 2));
    CHECK(r2.b_prime[0] == 1);
    CHECK_FALSE(r2.is_lt_triple);
    CHECK(r2.is_lc_triple);
    CHECK(*r2.mu == 1);

    // same boundary rejected under the adjoint convention (B = ceil(M) - M)
    CHECK_THROWS_AS(triple_classify(g, inv, one_curve(Rational(1), 0, 2), true), ValidationError);
}

TEST_CASE("empty boundary gives mu = 0") {
    for (const char* name : {"A1", "d4_star", "d5_remark1", "cone_g0_w3"}) {
        DualGraph g = builtin(name).graph;
        InvariantSet inv = compute_invariants(g);
        TripleReport r = triple_classify(g, inv, {});
        CHECK(r.b_prime.is_zero());
        CHECK(r.is_lt_triple);
        REQUIRE(r.mu.has_value());
        CHECK(*r.mu == 0);
    }
}

TEST_CASE("smooth point boundary") {
    DualGraph g = builtin("smooth").graph;
    InvariantSet inv = compute_invariants(g);
    TripleReport r = triple_classify(g, inv, one_curve(Rational(1), 0, 2));
    CHECK(r.b_prime[0] == 2);  // solve -x = -2
    CHECK_FALSE(r.is_lt_triple);
    CHECK(r.is_lc_triple);
    CHECK(*r.mu == 1);  // z - a = 2 on a smooth point

    TripleReport tangent = triple_classify(g, inv, one_curve(Rational(1, 3), 0, 2));
    CHECK(tangent.b_prime[0] == Rational(2, 3));
    CHECK(*tangent.mu == Rational(1, 3));
}

TEST_CASE("input validation") {
    DualGraph g = builtin("A1").graph;
    CHECK_THROWS_AS(exceptional_part(g, {CurveSpec{"D", Rational(1, 2), {}}}), ValidationError);
    CHECK_THROWS_AS(exceptional_part(g, one_curve(Rational(3, 2), 0, 1)), ValidationError);
    CHECK_THROWS_AS(exceptional_part(g, one_curve(Rational(-1, 2), 0, 1)), ValidationError);
    CHECK_THROWS_AS(exceptional_part(g, one_curve(Rational(1, 2), 5, 1)), ValidationError);
    // b = 0 with no incidence is fine (curve misses y)
    CHECK(exceptional_part(g, {CurveSpec{"D", Rational(0), {}}}).is_zero());
}

TEST_CASE("mu undefined off the log-terminal locus") {
    for (const char* name : {"type1_elliptic", "type2_333_w2", "type3_w4", "remark210"}) {
        DualGraph g = builtin(name).graph;
        InvariantSet inv = compute_invariants(g);
        TripleReport r = triple_classify(g, inv, {});
        CHECK_FALSE(r.mu.has_value());
        CHECK_THROWS_AS(mu_invariant(g, inv, Cycle::zero(g)), ValidationError);
    }
}

TEST_CASE("scaling the boundary scales b' and is monotone in mu") {
    RandomGraphGenerator gen(61);
    for (int t = 0; t < 100; ++t) {
        auto [g, spec] = gen.random_lt_triple();
        InvariantSet inv = compute_invariants(g);
        Cycle bp = exceptional_part(g, spec);
        CHECK(bp.is_effective());

        BoundarySpec half = spec;
        for (CurveSpec& c : half)
            c.coeff /= 2;
        Cycle bp_half = exceptional_part(g, half);
        CHECK(bp_half * Rational(2) == bp);

        TripleReport full = triple_classify(g, inv, spec);
        TripleReport halved = triple_classify(g, inv, half);
        REQUIRE(full.mu.has_value());
        CHECK(*halved.mu * 2 == *full.mu);
        CHECK(*halved.mu <= *full.mu);
    }
}

TEST_CASE("Lemma 5 bound on random log-terminal triples") {
    RandomGraphGenerator gen(71);
    for (int t = 0; t < 200; ++t) {
        auto [g, spec] = gen.random_lt_triple();
        InvariantSet inv = compute_invariants(g);
        TripleReport r = triple_classify(g, inv, spec);
        REQUIRE(r.is_lt_triple);
        REQUIRE(r.mu.has_value());
        CHECK(*r.mu >= 0);
        CHECK(*r.mu < 1);
        CHECK(r.b_prime.is_effective());
    }
}

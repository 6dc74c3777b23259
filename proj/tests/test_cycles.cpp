#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singan/catalog.hpp"
#include "singan/cycles.hpp"
#include "singan/verify.hpp"

#include "test_util.hpp"

using namespace singan;
using test_util::chain;
using test_util::star;

namespace {

DualGraph smooth_point() { return parse_graph("smoothpoint\nvertex a w=1 g=0\n"); }

DualGraph cone(int g, int w) {
    std::string text = "vertex C w=" + std::to_string(w) + " g=" + std::to_string(g) + "\n";
    if (g == 0 && w == 1)
        text = "smoothpoint\n" + text;
    return parse_graph(text);
}

}  // namespace

TEST_CASE("intersection pairing") {
    DualGraph a1 = chain({2});
    Cycle Z = fundamental_cycle(a1);
    CHECK(intersect(Z, Z) == -2);  // Z^2 = -2 at a RDP
    CHECK(intersect(Z, Cycle::zero(a1)) == 0);

    DualGraph t2 = star(3, {3, 3, 3});
    Cycle diff = fundamental_cycle(t2) - canonical_cycle(t2);
    CHECK(intersect(diff, diff) == -1);  // delta_y = 1 on the (3,3,3) star

    DualGraph other = chain({2});
    CHECK_THROWS_AS(intersect(Z, fundamental_cycle(other)), ValidationError);
}

TEST_CASE("fundamental cycle by Laufer sequence") {
    DualGraph a1 = chain({2});
    CHECK(fundamental_cycle(a1)[0] == 1);

    DualGraph t3w3 = star(3, {2, 2, 2, 2});
    Cycle z = fundamental_cycle(t3w3);
    CHECK(z[0] == 2);
    for (int j = 1; j < 5; ++j)
        CHECK(z[j] == 1);

    DualGraph t2w2 = star(2, {3, 3, 3});
    Cycle z2 = fundamental_cycle(t2w2);
    CHECK(z2[0] == 2);
    CHECK(z2[1] == 1);

    DualGraph t2w3 = star(3, {3, 3, 3});
    Cycle z3 = fundamental_cycle(t2w3);
    for (int j = 0; j < 4; ++j)
        CHECK(z3[j] == 1);
}

TEST_CASE("K_X . F_j by adjunction") {
    DualGraph a1 = chain({2});
    CHECK(a1.kx_dot(0) == 0);
    DualGraph sm = smooth_point();
    CHECK(sm.kx_dot(0) == -1);
    DualGraph elliptic = parse_graph("vertex a w=1 g=1\n");
    CHECK(elliptic.kx_dot(0) == 1);
}

TEST_CASE("canonical cycle") {
    DualGraph a1 = chain({2});
    CHECK(canonical_cycle(a1).is_zero());

    // cone over a genus-g curve: Delta = (2(g-1)/w + 1) C
    for (int g = 0; g <= 5; ++g)
        for (int w = 1; w <= 6; ++w) {
            DualGraph c = cone(g, w);
            Cycle delta = canonical_cycle(c);
            CHECK(delta[0] == Rational(2 * (g - 1), w) + 1);
        }

    DualGraph r = star(5, {2, 2, 2, 2, 2});
    Cycle delta = canonical_cycle(r);
    CHECK(delta[0] == Rational(6, 5));
    for (int j = 1; j < 6; ++j)
        CHECK(delta[j] == Rational(3, 5));

    // smooth point: the same solve yields Delta = -F_1
    CHECK(canonical_cycle(smooth_point())[0] == -1);
}

TEST_CASE("arithmetic genus") {
    DualGraph a1 = chain({2});
    CHECK(arithmetic_genus(fundamental_cycle(a1), canonical_cycle(a1)) == 0);

    DualGraph elliptic = parse_graph("vertex a w=1 g=1\n");
    CHECK(arithmetic_genus(fundamental_cycle(elliptic), canonical_cycle(elliptic)) == 1);

    DualGraph c = cone(2, 1);
    CHECK(arithmetic_genus(fundamental_cycle(c), canonical_cycle(c)) == 2);
}

TEST_CASE("Kawachi invariant") {
    DualGraph sm = smooth_point();
    CHECK(kawachi_delta(fundamental_cycle(sm), canonical_cycle(sm)) == 4);

    DualGraph a1 = chain({2});
    CHECK(kawachi_delta(fundamental_cycle(a1), canonical_cycle(a1)) == 2);

    for (int g = 0; g <= 5; ++g)
        for (int w = 1; w <= 6; ++w) {
            DualGraph c = cone(g, w);
            CHECK(kawachi_delta(fundamental_cycle(c), canonical_cycle(c)) ==
                  Rational(4 * (g - 1) * (g - 1), w));
        }
}

TEST_CASE("identity suite on catalog and random graphs") {
    auto check_identities = [](const DualGraph& g) {
        InvariantSet inv = compute_invariants(g);
        const Cycle& Z = inv.Z;
        const Cycle& D = inv.Delta;
        Cycle diff = Z - D;

        // Lemma 2(a): delta = 2 - 2 pa - sum (z_j - a_j) K.F_j
        Rational rhs_a = Rational(2) - 2 * inv.pa_Z;
        for (int j = 0; j < g.size(); ++j)
            rhs_a -= (Z[j] - D[j]) * g.kx_dot(j);
        CHECK(inv.delta_y == rhs_a);

        // Lemma 2(b): delta = 2 - 2 pa + sum a_j (Z-Delta).F_j
        Rational rhs_b = Rational(2) - 2 * inv.pa_Z;
        for (int j = 0; j < g.size(); ++j)
            rhs_b += D[j] * diff.dot_vertex(j);
        CHECK(inv.delta_y == rhs_b);

        // Lemma 4: -Delta^2 = -Z^2 + delta + 4(pa - 1)
        CHECK(-inv.Delta2 == Rational(-inv.Z2) + inv.delta_y + 4 * (inv.pa_Z - 1));

        // pa integral >= 0 is enforced by construction; delta >= 0 and
        // delta = 0 <=> Z = Delta
        CHECK(inv.delta_y >= 0);
        CHECK((inv.delta_y == 0) == (Z == D));

        // effectivity of Delta off the smooth case; all-or-nothing positivity
        if (!g.smooth_point_mode()) {
            bool any_pos = false, all_pos = true;
            for (int j = 0; j < g.size(); ++j) {
                CHECK(D[j] >= 0);
                if (D[j] == 0)
                    all_pos = false;
                else
                    any_pos = true;
            }
            if (any_pos)
                CHECK(all_pos);
        }
    };

    for (const std::string& name : catalog_names())
        check_identities(builtin(name).graph);

    RandomGraphGenerator gen(99);
    for (int t = 0; t < 200; ++t)
        check_identities(gen.random_graph());
}

TEST_CASE("Delta uniqueness under perturbation") {
    RandomGraphGenerator gen(5);
    std::mt19937_64 rng(6);
    for (int t = 0; t < 50; ++t) {
        DualGraph g = gen.random_graph();
        Cycle delta = canonical_cycle(g);
        // any nonzero rational perturbation breaks some defining equation
        std::vector<Rational> eps(static_cast<size_t>(g.size()), Rational(0));
        int j = std::uniform_int_distribution<int>(0, g.size() - 1)(rng);
        eps[static_cast<size_t>(j)] =
            Rational(std::uniform_int_distribution<int>(1, 5)(rng),
                     std::uniform_int_distribution<int>(1, 5)(rng));
        Cycle perturbed = delta + Cycle(g, eps);
        bool violated = false;
        for (int k = 0; k < g.size(); ++k)
            if (perturbed.dot_vertex(k) != Rational(-g.kx_dot(k)))
                violated = true;
        CHECK(violated);
    }
}

TEST_CASE("fundamental cycle minimality against brute force") {
    RandomGraphGenerator gen(13);
    int done = 0;
    while (done < 40) {
        DualGraph g = gen.random_graph();
        if (g.size() > 6)
            continue;
        ++done;
        VerificationResult res = verify_fundamental_minimality(g, 5);
        CHECK(res.holds);
    }
}

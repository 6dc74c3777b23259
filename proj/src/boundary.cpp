#include "singan/boundary.hpp"

namespace singan {

Cycle exceptional_part(const DualGraph& g, const BoundarySpec& spec, bool strict_adjoint) {
    std::vector<Rational> rhs(static_cast<size_t>(g.size()), Rational(0));
    for (const CurveSpec& c : spec) {
        if (c.coeff < 0 || c.coeff > 1)
            throw ValidationError("curve '" + c.name + "': coefficient outside [0,1]");
        if (strict_adjoint && c.coeff == 1)
            throw ValidationError("curve '" + c.name + "': b=1 not allowed with --adjoint");
        if (c.coeff > 0 && c.incidence.empty())
            throw ValidationError("curve '" + c.name +
                                  "' has b > 0 but no incidence with the exceptional set");
        for (auto [vj, df] : c.incidence) {
            if (vj < 0 || vj >= g.size())
                throw ValidationError("curve '" + c.name + "': incidence vertex out of range");
            if (df < 0)
                throw ValidationError("curve '" + c.name + "': D.F must be >= 0");
            rhs[static_cast<size_t>(vj)] -= c.coeff * df;
        }
    }
    Cycle b_prime(g, solve_against_intersection_form(g, rhs));
    if (!b_prime.is_effective())
        throw ValidationError("exceptional part of an effective boundary came out negative");
    return b_prime;
}

Rational mu_invariant(const DualGraph& g, const InvariantSet& inv, const Cycle& b_prime) {
    (void)g;
    std::optional<Rational> best;
    for (int j = 0; j < b_prime.size(); ++j)
        if (inv.Delta[j] >= 1)
            throw ValidationError("mu is undefined: germ is not log-terminal");
    for (int j = 0; j < b_prime.size(); ++j) {
        Rational q = b_prime[j] / (inv.Z[j] - inv.Delta[j]);
        if (!best || q < *best)
            best = q;
    }
    return *best;
}

TripleReport triple_classify(const DualGraph& g, const InvariantSet& inv, const BoundarySpec& spec,
                             bool strict_adjoint) {
    TripleReport r{exceptional_part(g, spec, strict_adjoint), true, true, std::nullopt};
    for (int j = 0; j < g.size(); ++j) {
        Rational t = inv.Delta[j] + r.b_prime[j];
        if (t >= 1)
            r.is_lt_triple = false;
        if (t > 1)
            r.is_lc_triple = false;
    }
    bool germ_lt = true;
    for (int j = 0; j < g.size(); ++j)
        if (inv.Delta[j] >= 1)
            germ_lt = false;
    if (germ_lt)
        r.mu = mu_invariant(g, inv, r.b_prime);
    return r;
}

}  // namespace singan

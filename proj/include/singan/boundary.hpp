#pragma once

#include "singan/cycles.hpp"

#include <optional>
#include <vector>

namespace singan {

using BoundarySpec = std::vector<CurveSpec>;

struct TripleReport {
    Cycle b_prime;
    bool is_lt_triple = false;
    bool is_lc_triple = false;
    std::optional<Rational> mu;  // present iff the germ is log-terminal
};

/// Exceptional part of f*B: the unique cycle b' with
/// sum_k b'_k (F_k . F_j) = -sum_i b_i (D_i . F_j) for all j.
/// Rejects curves with b_i > 0 and no incidence (the curve misses y).
/// With strict_adjoint, additionally rejects b_i = 1 (B = ceil(M) - M has b_i < 1).
Cycle exceptional_part(const DualGraph& g, const BoundarySpec& spec, bool strict_adjoint = false);

/// mu = min_j b'_j / (z_j - a_j); only defined on log-terminal germs.
Rational mu_invariant(const DualGraph& g, const InvariantSet& inv, const Cycle& b_prime);

TripleReport triple_classify(const DualGraph& g, const InvariantSet& inv, const BoundarySpec& spec,
                             bool strict_adjoint = false);

}  // namespace singan

#pragma once

#include "singan/graph.hpp"

#include <span>
#include <vector>

namespace singan {

/// Exceptional Q-divisor on a fixed dual graph: one exact rational per vertex.
class Cycle {
public:
    /// Detached placeholder (no graph); assign before use.
    Cycle() : graph_(nullptr) {}

    Cycle(const DualGraph& g, std::vector<Rational> coeffs);
    static Cycle zero(const DualGraph& g);

    const DualGraph& graph() const { return *graph_; }
    int size() const { return static_cast<int>(coeffs_.size()); }
    const Rational& operator[](int j) const { return coeffs_[static_cast<size_t>(j)]; }
    Rational& operator[](int j) { return coeffs_[static_cast<size_t>(j)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_effective() const;  // all coefficients >= 0
    bool is_integral() const;

    Cycle operator+(const Cycle& o) const;
    Cycle operator-(const Cycle& o) const;
    Cycle operator*(const Rational& t) const;
    bool operator==(const Cycle& o) const;

    /// this <= o coefficient-wise
    bool dominated_by(const Cycle& o) const;

    /// (C . F_j) for the cycle C = *this.
    Rational dot_vertex(int j) const;

private:
    const DualGraph* graph_;
    std::vector<Rational> coeffs_;
};

/// Bilinear intersection form: sum_{i,j} c1_i c2_j (F_i . F_j). Throws on mismatched graphs.
Rational intersect(const Cycle& c1, const Cycle& c2);

/// Laufer sequence from sum(F_j); always terminates on a negative definite graph.
/// Tie-break: first violating vertex in file order.
Cycle fundamental_cycle(const DualGraph& g);

/// Same computation with an explicit tie-break preference order (used by the
/// order-independence oracle).
Cycle fundamental_cycle_with_order(const DualGraph& g, std::span<const int> order);

/// Solve sum_k x_k (F_k . F_j) = rhs_j for all j by exact Gaussian elimination.
std::vector<Rational> solve_against_intersection_form(const DualGraph& g,
                                                      const std::vector<Rational>& rhs);

/// Unique cycle with Delta . F_j = -K_X . F_j for all j.
Cycle canonical_cycle(const DualGraph& g);

/// (1/2) Z.(Z - Delta) + 1; throws if the result is not an integer (internal bug).
long arithmetic_genus(const Cycle& Z, const Cycle& Delta);

/// delta_y = -(Z - Delta)^2.
Rational kawachi_delta(const Cycle& Z, const Cycle& Delta);

struct InvariantSet {
    Cycle Z;
    Cycle Delta;
    long pa_Z = 0;
    Rational delta_y;
    Integer Z2;       // Z.Z
    Rational Delta2;  // Delta.Delta
    std::vector<int> kx_dot;
};

InvariantSet compute_invariants(const DualGraph& g);

}  // namespace singan

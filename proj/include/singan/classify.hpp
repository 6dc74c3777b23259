#pragma once

#include "singan/cycles.hpp"

#include <optional>
#include <string>

namespace singan {

enum class ShapeKind { A, D, E, Other };

struct Shape {
    ShapeKind kind = ShapeKind::Other;
    int n = 0;  // vertex count for A/D, 6/7/8 for E

    bool operator==(const Shape&) const = default;
    std::string str() const;
};

/// Purely combinatorial ADE typing of the dual graph (weights ignored; any
/// positive genus forces Other).
Shape graph_shape(const DualGraph& g);

enum class TrulyLcType { Type1, Type2, Type3 };

std::string truly_lc_type_name(TrulyLcType t);

struct SingularityReport {
    InvariantSet invariants;
    bool is_smooth = false;
    bool is_rational = false;
    bool is_rdp = false;
    bool is_elliptic_gorenstein = false;
    bool is_log_terminal = false;
    bool is_log_canonical = false;
    bool is_canonical = false;
    std::optional<Integer> multiplicity;  // -Z^2, present iff rational
    Rational minus_delta2;
    Shape shape;
    std::optional<TrulyLcType> truly_lc_type;  // set iff log-canonical, not log-terminal
    bool dn_fork_minus_two = false;  // shape D(n) with both fork curves of weight 2
};

SingularityReport classify(const DualGraph& g, const InvariantSet& inv);

}  // namespace singan

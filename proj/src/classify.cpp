#include "singan/classify.hpp"

#include <algorithm>

namespace singan {

std::string Shape::str() const {
    switch (kind) {
        case ShapeKind::A:
            return "A(" + std::to_string(n) + ")";
        case ShapeKind::D:
            return "D(" + std::to_string(n) + ")";
        case ShapeKind::E:
            return "E(" + std::to_string(n) + ")";
        case ShapeKind::Other:
            return "Other";
    }
    return "Other";
}

std::string truly_lc_type_name(TrulyLcType t) {
    switch (t) {
        case TrulyLcType::Type1:
            return "Type1";
        case TrulyLcType::Type2:
            return "Type2";
        case TrulyLcType::Type3:
            return "Type3";
    }
    return "";
}

namespace {

// length of the simple-path leg starting at `start`, walking away from `center`
int leg_length(const DualGraph& g, int center, int start) {
    int len = 1;
    int prev = center;
    int cur = start;
    while (g.degree(cur) == 2) {
        int next = -1;
        for (auto [u, m] : g.neighbors(cur)) {
            (void)m;
            if (u != prev)
                next = u;
        }
        prev = cur;
        cur = next;
        ++len;
    }
    return (g.degree(cur) == 1 || cur == start) ? len : -1;  // -1: leg runs into another branch
}

}  // namespace

Shape graph_shape(const DualGraph& g) {
    const int n = g.size();
    for (const Vertex& v : g.vertices())
        if (v.genus != 0)
            return {ShapeKind::Other, 0};
    for (const Edge& e : g.edges())
        if (e.mult != 1)
            return {ShapeKind::Other, 0};
    if (static_cast<int>(g.edges().size()) != n - 1)
        return {ShapeKind::Other, 0};  // connected, so this means a cycle exists

    int branch = -1;
    for (int j = 0; j < n; ++j) {
        int d = g.degree(j);
        if (d >= 4)
            return {ShapeKind::Other, 0};
        if (d == 3) {
            if (branch >= 0)
                return {ShapeKind::Other, 0};
            branch = j;
        }
    }
    if (branch < 0)
        return {ShapeKind::A, n};

    std::vector<int> legs;
    for (auto [u, m] : g.neighbors(branch)) {
        (void)m;
        int len = leg_length(g, branch, u);
        if (len < 0)
            return {ShapeKind::Other, 0};
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1)
        return {ShapeKind::D, n};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
        return {ShapeKind::E, legs[2] + 4};
    return {ShapeKind::Other, 0};
}

namespace {

bool is_star_with_leg_count(const DualGraph& g, int leg_count) {
    if (g.size() != leg_count + 1)
        return false;
    int center = -1;
    for (int j = 0; j < g.size(); ++j)
        if (g.degree(j) == leg_count)
            center = j;
    if (center < 0)
        return false;
    for (int j = 0; j < g.size(); ++j)
        if (j != center && g.degree(j) != 1)
            return false;
    return true;
}

}  // namespace

SingularityReport classify(const DualGraph& g, const InvariantSet& inv) {
    SingularityReport r;
    r.invariants = inv;
    r.is_smooth = g.smooth_point_mode();
    r.is_rational = (inv.pa_Z == 0);
    r.is_rdp = inv.Delta.is_zero();
    r.is_elliptic_gorenstein = (inv.Z == inv.Delta);

    r.is_log_terminal = true;
    r.is_log_canonical = true;
    r.is_canonical = true;
    for (int j = 0; j < g.size(); ++j) {
        const Rational& a = inv.Delta[j];
        if (a >= 1)
            r.is_log_terminal = false;
        if (a > 1)
            r.is_log_canonical = false;
        if (a > 0)
            r.is_canonical = false;
    }

    if (r.is_rational)
        r.multiplicity = -inv.Z2;
    r.minus_delta2 = -inv.Delta2;
    r.shape = graph_shape(g);

    if (r.shape.kind == ShapeKind::D) {
        int branch = -1;
        for (int j = 0; j < g.size(); ++j)
            if (g.degree(j) == 3)
                branch = j;
        int forks_minus_two = 0;
        for (auto [u, m] : g.neighbors(branch)) {
            (void)m;
            if (g.degree(u) == 1 && g.vertex(u).weight == 2)
                ++forks_minus_two;
        }
        r.dn_fork_minus_two = (forks_minus_two >= 2);
    }

    if (r.is_log_canonical && !r.is_log_terminal) {
        if (r.is_elliptic_gorenstein)
            r.truly_lc_type = TrulyLcType::Type1;
        else if (is_star_with_leg_count(g, 4))
            r.truly_lc_type = TrulyLcType::Type3;
        else if (is_star_with_leg_count(g, 3) && inv.delta_y == 1)
            r.truly_lc_type = TrulyLcType::Type2;
    }

    // internal consistency; a violation is a bug, not bad input
    if (r.is_log_terminal && !r.is_rational)
        throw ValidationError("log-terminal germ classified as non-rational");
    if (r.is_log_canonical && !r.is_rational && !r.is_elliptic_gorenstein)
        throw ValidationError("log-canonical germ neither rational nor elliptic Gorenstein");
    if (r.is_rational) {
        Rational lhs = -inv.Delta2;
        Rational rhs = Rational(-inv.Z2) - (Rational(4) - inv.delta_y);
        if (lhs != rhs)
            throw ValidationError("-Delta^2 = mult - (4 - delta_y) failed on a rational germ");
    }
    return r;
}

}  // namespace singan

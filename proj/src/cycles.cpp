#include "singan/cycles.hpp"

#include <numeric>

namespace singan {

Cycle::Cycle(const DualGraph& g, std::vector<Rational> coeffs)
    : graph_(&g), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != g.size())
        throw ValidationError("cycle coefficient count does not match graph");
}

Cycle Cycle::zero(const DualGraph& g) {
    return Cycle(g, std::vector<Rational>(static_cast<size_t>(g.size()), Rational(0)));
}

bool Cycle::is_zero() const {
    for (const Rational& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool Cycle::is_effective() const {
    for (const Rational& c : coeffs_)
        if (c < 0)
            return false;
    return true;
}

bool Cycle::is_integral() const {
    for (const Rational& c : coeffs_)
        if (denominator(c) != 1)
            return false;
    return true;
}

Cycle Cycle::operator+(const Cycle& o) const {
    if (graph_ != o.graph_)
        throw ValidationError("cycles live on different graphs");
    std::vector<Rational> r(coeffs_);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] += o.coeffs_[i];
    return Cycle(*graph_, std::move(r));
}

Cycle Cycle::operator-(const Cycle& o) const {
    if (graph_ != o.graph_)
        throw ValidationError("cycles live on different graphs");
    std::vector<Rational> r(coeffs_);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= o.coeffs_[i];
    return Cycle(*graph_, std::move(r));
}

Cycle Cycle::operator*(const Rational& t) const {
    std::vector<Rational> r(coeffs_);
    for (Rational& c : r)
        c *= t;
    return Cycle(*graph_, std::move(r));
}

bool Cycle::operator==(const Cycle& o) const {
    return graph_ == o.graph_ && coeffs_ == o.coeffs_;
}

bool Cycle::dominated_by(const Cycle& o) const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] > o.coeffs_[i])
            return false;
    return true;
}

Rational Cycle::dot_vertex(int j) const {
    const IntersectionMatrix& m = graph_->matrix();
    Rational s = coeffs_[static_cast<size_t>(j)] * Rational(m(j, j));
    for (auto [k, mult] : graph_->neighbors(j))
        s += coeffs_[static_cast<size_t>(k)] * mult;
    return s;
}

Rational intersect(const Cycle& c1, const Cycle& c2) {
    if (&c1.graph() != &c2.graph())
        throw ValidationError("cycles live on different graphs");
    Rational s(0);
    for (int j = 0; j < c1.size(); ++j)
        if (c1[j] != 0)
            s += c1[j] * c2.dot_vertex(j);
    return s;
}

Cycle fundamental_cycle(const DualGraph& g) {
    std::vector<int> order(static_cast<size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    return fundamental_cycle_with_order(g, order);
}

Cycle fundamental_cycle_with_order(const DualGraph& g, std::span<const int> order) {
    const int n = g.size();
    if (static_cast<int>(order.size()) != n)
        throw ValidationError("tie-break order has wrong length");
    std::vector<Rational> z(static_cast<size_t>(n), Rational(1));
    Cycle Z(g, std::move(z));
    for (;;) {
        int bump = -1;
        for (int idx : order) {
            if (Z.dot_vertex(idx) > 0) {
                bump = idx;
                break;
            }
        }
        if (bump < 0)
            break;
        Z[bump] += 1;  // terminates: negative definiteness bounds the sequence
    }
    return Z;
}

std::vector<Rational> solve_against_intersection_form(const DualGraph& g,
                                                      const std::vector<Rational>& rhs) {
    const int n = g.size();
    if (static_cast<int>(rhs.size()) != n)
        throw ValidationError("rhs length does not match graph");
    // dense exact Gaussian elimination with partial (first-nonzero) pivoting
    std::vector<std::vector<Rational>> a(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n) + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[i][j] = Rational(g.matrix()(i, j));
        a[i][static_cast<size_t>(n)] = rhs[static_cast<size_t>(i)];
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            throw ValidationError("intersection form is singular");  // impossible when definite
        std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(piv)]);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Rational f = a[r][col] / a[static_cast<size_t>(col)][col];
            for (int c = col; c <= n; ++c)
                a[r][c] -= f * a[static_cast<size_t>(col)][c];
        }
    }
    std::vector<Rational> x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        x[static_cast<size_t>(i)] =
            a[static_cast<size_t>(i)][static_cast<size_t>(n)] / a[static_cast<size_t>(i)][i];
    return x;
}

Cycle canonical_cycle(const DualGraph& g) {
    std::vector<Rational> rhs(static_cast<size_t>(g.size()));
    for (int j = 0; j < g.size(); ++j)
        rhs[static_cast<size_t>(j)] = Rational(-g.kx_dot(j));
    Cycle delta(g, solve_against_intersection_form(g, rhs));
    if (!g.smooth_point_mode() && !delta.is_effective())
        throw ValidationError("canonical cycle of a minimal germ must be effective");
    return delta;
}

long arithmetic_genus(const Cycle& Z, const Cycle& Delta) {
    Rational pa = intersect(Z, Z - Delta) / 2 + 1;
    if (denominator(pa) != 1)
        throw ValidationError("arithmetic genus is not an integer (internal inconsistency)");
    long v = static_cast<long>(numerator(pa));
    if (v < 0)
        throw ValidationError("arithmetic genus is negative (internal inconsistency)");
    return v;
}

Rational kawachi_delta(const Cycle& Z, const Cycle& Delta) {
    Cycle d = Z - Delta;
    return -intersect(d, d);
}

InvariantSet compute_invariants(const DualGraph& g) {
    Cycle Z = fundamental_cycle(g);
    Cycle Delta = canonical_cycle(g);
    InvariantSet inv{Z, Delta, arithmetic_genus(Z, Delta), kawachi_delta(Z, Delta),
                     Integer(0),  Rational(0),              {}};
    Rational z2 = intersect(Z, Z);
    inv.Z2 = numerator(z2);  // integral cycle on an integer form
    inv.Delta2 = intersect(Delta, Delta);
    inv.kx_dot.resize(static_cast<size_t>(g.size()));
    for (int j = 0; j < g.size(); ++j)
        inv.kx_dot[static_cast<size_t>(j)] = g.kx_dot(j);
    return inv;
}

}  // namespace singan

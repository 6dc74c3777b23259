#pragma once

#include "singan/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace singan {

struct Vertex {
    std::string name;
    int weight = 0;  // w = -F^2, strictly positive
    int genus = 0;
};

struct Edge {
    int i = 0;
    int j = 0;
    int mult = 1;  // F_i . F_j
};

/// Symmetric integer intersection matrix: diagonal -w_j, off-diagonal edge multiplicities.
class IntersectionMatrix {
public:
    explicit IntersectionMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}

    int size() const { return n_; }
    Integer& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Integer& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    Integer operator()(int i, int j) const { return at(i, j); }

private:
    int n_;
    std::vector<Integer> a_;
};

/// Sylvester test with exact integer leading principal minors (fraction-free elimination).
bool is_negative_definite(const IntersectionMatrix& m);

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                             ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Resolution dual graph of one germ. Immutable after construction; construction
/// validates connectedness, negative definiteness and minimality.
class DualGraph {
public:
    /// Empty placeholder; every usable graph comes from build() or parse_graph().
    DualGraph() : matrix_(0) {}

    static DualGraph build(std::vector<Vertex> vertices, std::vector<Edge> edges,
                           bool smooth_point_mode);

    int size() const { return static_cast<int>(vertices_.size()); }
    const Vertex& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool smooth_point_mode() const { return smooth_point_; }
    const IntersectionMatrix& matrix() const { return matrix_; }

    std::optional<int> index_of(const std::string& name) const;

    /// K_X . F_j = w_j + 2 g_j - 2 (adjunction on the smooth curve F_j).
    int kx_dot(int j) const {
        const Vertex& v = vertices_[static_cast<size_t>(j)];
        return v.weight + 2 * v.genus - 2;
    }

    /// Vertices adjacent to j, with multiplicities.
    const std::vector<std::pair<int, int>>& neighbors(int j) const {
        return adjacency_[static_cast<size_t>(j)];
    }
    int degree(int j) const { return static_cast<int>(adjacency_[static_cast<size_t>(j)].size()); }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    bool smooth_point_ = false;
    IntersectionMatrix matrix_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

/// `curve` line: boundary coefficient plus incidence numbers D_i . F_j.
struct CurveSpec {
    std::string name;
    Rational coeff;                                // b_i in [0,1]
    std::vector<std::pair<int, int>> incidence;    // (vertex index, D.F) with D.F >= 1
};

struct GraphFile {
    DualGraph graph;
    std::vector<CurveSpec> curves;
};

GraphFile parse_graph_file(const std::string& text);

inline DualGraph parse_graph(const std::string& text) { return parse_graph_file(text).graph; }

/// Inverse of parse_graph_file on valid inputs (vertex order preserved).
std::string serialize_graph_file(const GraphFile& file);

IntersectionMatrix intersection_matrix(const DualGraph& g);

}  // namespace singan

#include "singan/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace singan {

bool is_negative_definite(const IntersectionMatrix& m) {
    // Fraction-free (Bareiss) elimination; after step k-1 the entry a[k][k]
    // equals the k+1-st leading principal minor. Sylvester: minors must
    // alternate starting negative, none zero.
    const int n = m.size();
    if (n == 0)
        return false;
    std::vector<std::vector<Integer>> a(static_cast<size_t>(n),
                                        std::vector<Integer>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = m(i, j);

    Integer prev = 1;
    for (int k = 0; k < n; ++k) {
        const Integer& minor = a[k][k];
        const bool want_negative = (k % 2 == 0);
        if (minor == 0)
            return false;
        if ((minor < 0) != want_negative)
            return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return true;
}

DualGraph DualGraph::build(std::vector<Vertex> vertices, std::vector<Edge> edges,
                           bool smooth_point_mode) {
    if (vertices.empty())
        throw ValidationError("graph has no vertices");

    std::map<std::string, int> seen;
    for (size_t i = 0; i < vertices.size(); ++i) {
        const Vertex& v = vertices[i];
        if (v.name.empty())
            throw ValidationError("vertex with empty name");
        if (!seen.emplace(v.name, static_cast<int>(i)).second)
            throw ValidationError("duplicate vertex name '" + v.name + "'");
        if (v.weight < 1)
            throw ValidationError("vertex '" + v.name + "': w must be >= 1");
        if (v.genus < 0)
            throw ValidationError("vertex '" + v.name + "': g must be >= 0");
    }

    const int n = static_cast<int>(vertices.size());
    std::map<std::pair<int, int>, int> edge_seen;
    for (const Edge& e : edges) {
        if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n)
            throw ValidationError("edge endpoint out of range");
        if (e.i == e.j)
            throw ValidationError("self-loop on vertex '" + vertices[e.i].name + "'");
        if (e.mult < 1)
            throw ValidationError("edge multiplicity must be >= 1");
        auto key = std::minmax(e.i, e.j);
        if (!edge_seen.emplace(std::make_pair(key.first, key.second), e.mult).second)
            throw ValidationError("duplicate edge " + vertices[e.i].name + "-" +
                                  vertices[e.j].name);
    }

    DualGraph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.smooth_point_ = smooth_point_mode;

    g.adjacency_.assign(static_cast<size_t>(n), {});
    g.matrix_ = IntersectionMatrix(n);
    for (int j = 0; j < n; ++j)
        g.matrix_.at(j, j) = -Integer(g.vertices_[static_cast<size_t>(j)].weight);
    for (const Edge& e : g.edges_) {
        g.matrix_.at(e.i, e.j) = e.mult;
        g.matrix_.at(e.j, e.i) = e.mult;
        g.adjacency_[static_cast<size_t>(e.i)].emplace_back(e.j, e.mult);
        g.adjacency_[static_cast<size_t>(e.j)].emplace_back(e.i, e.mult);
    }

    // connectedness: the exceptional set of one germ is connected
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [u, m] : g.adjacency_[static_cast<size_t>(v)]) {
            (void)m;
            if (!visited[static_cast<size_t>(u)]) {
                visited[static_cast<size_t>(u)] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    if (count != n)
        throw ValidationError("graph is not connected");

    if (g.smooth_point_) {
        if (n != 1 || g.vertices_[0].weight != 1 || g.vertices_[0].genus != 0)
            throw ValidationError(
                "smoothpoint requires exactly one vertex with w=1 g=0");
    } else {
        // K_X . F_j >= 0 on a minimal resolution
        for (int j = 0; j < n; ++j) {
            if (g.kx_dot(j) < 0)
                throw ValidationError("vertex '" + g.vertices_[static_cast<size_t>(j)].name +
                                      "' violates minimality (w + 2g - 2 < 0); "
                                      "use `smoothpoint` for the blow-up of a smooth point");
        }
    }

    if (!is_negative_definite(g.matrix_))
        throw ValidationError("intersection matrix is not negative definite");

    return g;
}

std::optional<int> DualGraph::index_of(const std::string& name) const {
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].name == name)
            return static_cast<int>(i);
    return std::nullopt;
}

IntersectionMatrix intersection_matrix(const DualGraph& g) { return g.matrix(); }

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#')
            break;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_int_field(const Token& tok, const std::string& key, int line_no) {
    const std::string prefix = key + "=";
    if (tok.text.rfind(prefix, 0) != 0)
        throw ParseError(line_no, tok.column, "expected " + key + "=<int>, got '" + tok.text + "'");
    const std::string val = tok.text.substr(prefix.size());
    try {
        size_t pos = 0;
        int v = std::stoi(val, &pos);
        if (pos != val.size())
            throw std::invalid_argument(val);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, tok.column, "bad integer in '" + tok.text + "'");
    }
}

}  // namespace

GraphFile parse_graph_file(const std::string& text) {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<CurveSpec> curves;
    bool smooth_point = false;
    std::map<std::string, int> index;

    auto lookup = [&](const Token& tok, int line_no) {
        auto it = index.find(tok.text);
        if (it == index.end())
            throw ParseError(line_no, tok.column, "unknown vertex '" + tok.text + "'");
        return it->second;
    };

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty())
            continue;
        const std::string& kw = toks[0].text;
        if (kw == "smoothpoint") {
            if (toks.size() != 1)
                throw ParseError(line_no, toks[1].column, "smoothpoint takes no arguments");
            smooth_point = true;
        } else if (kw == "vertex") {
            if (toks.size() != 4)
                throw ParseError(line_no, toks[0].column,
                                 "expected: vertex <name> w=<int> g=<int>");
            Vertex v;
            v.name = toks[1].text;
            if (index.count(v.name))
                throw ParseError(line_no, toks[1].column, "duplicate vertex name '" + v.name + "'");
            v.weight = parse_int_field(toks[2], "w", line_no);
            v.genus = parse_int_field(toks[3], "g", line_no);
            if (v.weight < 1)
                throw ParseError(line_no, toks[2].column, "w must be >= 1");
            if (v.genus < 0)
                throw ParseError(line_no, toks[3].column, "g must be >= 0");
            index[v.name] = static_cast<int>(vertices.size());
            vertices.push_back(std::move(v));
        } else if (kw == "edge") {
            if (toks.size() != 3 && toks.size() != 4)
                throw ParseError(line_no, toks[0].column,
                                 "expected: edge <name1> <name2> [m=<int>]");
            Edge e;
            e.i = lookup(toks[1], line_no);
            e.j = lookup(toks[2], line_no);
            e.mult = (toks.size() == 4) ? parse_int_field(toks[3], "m", line_no) : 1;
            if (e.mult < 1)
                throw ParseError(line_no, toks.back().column, "m must be >= 1");
            if (e.i == e.j)
                throw ParseError(line_no, toks[2].column, "self-loops are not allowed");
            edges.push_back(e);
        } else if (kw == "curve") {
            // curve <cname> b=<rational> meets <vname>[*<int>] ...
            if (toks.size() < 4 || toks[3].text != "meets")
                throw ParseError(line_no, toks[0].column,
                                 "expected: curve <cname> b=<rational> meets <vname>[*<int>] ...");
            CurveSpec c;
            c.name = toks[1].text;
            if (toks[2].text.rfind("b=", 0) != 0)
                throw ParseError(line_no, toks[2].column, "expected b=<rational>");
            try {
                c.coeff = parse_rational(toks[2].text.substr(2));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, toks[2].column, e.what());
            }
            if (c.coeff < 0 || c.coeff > 1)
                throw ParseError(line_no, toks[2].column, "b must lie in [0,1]");
            for (size_t k = 4; k < toks.size(); ++k) {
                std::string spec = toks[k].text;
                int mult = 1;
                auto star = spec.find('*');
                if (star != std::string::npos) {
                    try {
                        size_t pos = 0;
                        mult = std::stoi(spec.substr(star + 1), &pos);
                        if (pos != spec.size() - star - 1 || mult < 1)
                            throw std::invalid_argument(spec);
                    } catch (const std::exception&) {
                        throw ParseError(line_no, toks[k].column,
                                         "bad incidence multiplicity in '" + spec + "'");
                    }
                    spec = spec.substr(0, star);
                }
                Token vtok{spec, toks[k].column};
                int vi = lookup(vtok, line_no);
                for (auto& [idx, m] : c.incidence)
                    if (idx == vi)
                        throw ParseError(line_no, toks[k].column,
                                         "vertex '" + spec + "' listed twice for curve '" +
                                             c.name + "'");
                c.incidence.emplace_back(vi, mult);
            }
            for (const CurveSpec& prev : curves)
                if (prev.name == c.name)
                    throw ParseError(line_no, toks[1].column,
                                     "duplicate curve name '" + c.name + "'");
            curves.push_back(std::move(c));
        } else {
            throw ParseError(line_no, toks[0].column, "unknown directive '" + kw + "'");
        }
    }

    GraphFile file;
    file.graph = DualGraph::build(std::move(vertices), std::move(edges), smooth_point);
    file.curves = std::move(curves);
    return file;
}

std::string serialize_graph_file(const GraphFile& file) {
    std::ostringstream os;
    const DualGraph& g = file.graph;
    if (g.smooth_point_mode())
        os << "smoothpoint\n";
    for (const Vertex& v : g.vertices())
        os << "vertex " << v.name << " w=" << v.weight << " g=" << v.genus << "\n";
    for (const Edge& e : g.edges()) {
        os << "edge " << g.vertex(e.i).name << " " << g.vertex(e.j).name;
        if (e.mult != 1)
            os << " m=" << e.mult;
        os << "\n";
    }
    for (const CurveSpec& c : file.curves) {
        os << "curve " << c.name << " b=" << to_string(c.coeff) << " meets";
        for (auto [vi, m] : c.incidence) {
            os << " " << g.vertex(vi).name;
            if (m != 1)
                os << "*" << m;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace singan

#include "singan/catalog.hpp"

#include <cstdio>

namespace singan {

namespace {

DualGraph star(int center_w, const std::vector<int>& leg_ws) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    vs.push_back({"F1", center_w, 0});
    for (size_t i = 0; i < leg_ws.size(); ++i) {
        vs.push_back({"F" + std::to_string(i + 2), leg_ws[i], 0});
        es.push_back({0, static_cast<int>(i) + 1, 1});
    }
    return DualGraph::build(std::move(vs), std::move(es), false);
}

DualGraph single(int w, int g, bool smooth) {
    return DualGraph::build({{"F1", w, g}}, {}, smooth);
}

std::vector<Rational> rat(std::initializer_list<Rational> xs) { return {xs}; }

CatalogEntry make_type2(int a, int b, int c, int w) {
    CatalogEntry e;
    e.name = "type2_" + std::to_string(a) + std::to_string(b) + std::to_string(c) + "_w" +
             std::to_string(w);
    e.graph = star(w, {a, b, c});
    e.provenance = "truly log-canonical list, star with legs (" + std::to_string(a) + "," +
                   std::to_string(b) + "," + std::to_string(c) + ")";
    if (w == 2)
        e.expected.Z = rat({2, 1, 1, 1});
    else
        e.expected.Z = rat({1, 1, 1, 1});
    e.expected.Delta = rat({1, Rational(a - 1, a), Rational(b - 1, b), Rational(c - 1, c)});
    e.expected.delta_y = 1;
    e.expected.is_log_canonical = true;
    e.expected.is_log_terminal = false;
    return e;
}

std::optional<CatalogEntry> parametrized(const std::string& name) {
    int g = 0, w = 0, n = 0;
    if (std::sscanf(name.c_str(), "cone_g%d_w%d", &g, &w) == 2 && g >= 0 && g <= 5 && w >= 1 &&
        w <= 6 && name == "cone_g" + std::to_string(g) + "_w" + std::to_string(w)) {
        CatalogEntry e;
        e.name = name;
        const bool smooth = (g == 0 && w == 1);
        e.graph = single(w, g, smooth);
        e.provenance = "cone over a genus-" + std::to_string(g) + " curve of degree " +
                       std::to_string(w);
        e.expected.Z = rat({1});
        e.expected.Delta = rat({Rational(2 * (g - 1), w) + 1});
        e.expected.delta_y = Rational(4 * (g - 1) * (g - 1), w);
        if (g == 0) {
            e.expected.is_log_terminal = true;
            e.expected.is_log_canonical = true;
        } else if (g == 1) {
            e.expected.is_log_terminal = false;
            e.expected.is_log_canonical = true;
            e.expected.is_elliptic_gorenstein = true;
        } else {
            e.expected.is_log_canonical = false;
        }
        return e;
    }
    if (std::sscanf(name.c_str(), "type1_cycle_%d", &n) == 1 && n >= 3 &&
        name == "type1_cycle_" + std::to_string(n)) {
        // cusp: cycle of rational curves; one weight bumped to 3 so the
        // intersection matrix stays negative definite
        std::vector<Vertex> vs;
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i) {
            vs.push_back({"F" + std::to_string(i + 1), i == 0 ? 3 : 2, 0});
            es.push_back({i, (i + 1) % n, 1});
        }
        CatalogEntry e;
        e.name = name;
        e.graph = DualGraph::build(std::move(vs), std::move(es), false);
        e.provenance = "cycle of " + std::to_string(n) + " rational curves (cusp)";
        e.expected.Z = std::vector<Rational>(static_cast<size_t>(n), Rational(1));
        e.expected.Delta = e.expected.Z;
        e.expected.delta_y = 0;
        e.expected.is_elliptic_gorenstein = true;
        e.expected.is_log_canonical = true;
        e.expected.is_log_terminal = false;
        return e;
    }
    return std::nullopt;
}

CatalogEntry make(const std::string& name) {
    if (name == "smooth") {
        CatalogEntry e;
        e.name = name;
        e.graph = single(1, 0, true);
        e.provenance = "blow-up of a smooth point";
        e.expected.Z = rat({1});
        e.expected.Delta = rat({-1});
        e.expected.delta_y = 4;
        e.expected.pa_Z = 0;
        return e;
    }
    if (name == "A1") {
        CatalogEntry e;
        e.name = name;
        e.graph = single(2, 0, false);
        e.provenance = "ordinary double point";
        e.expected.Z = rat({1});
        e.expected.Delta = rat({0});
        e.expected.delta_y = 2;
        e.expected.pa_Z = 0;
        e.expected.is_rdp = true;
        e.expected.is_rational = true;
        e.expected.is_log_terminal = true;
        e.expected.multiplicity = 2;
        return e;
    }
    if (name == "type1_elliptic") {
        CatalogEntry e;
        e.name = name;
        e.graph = single(1, 1, false);
        e.provenance = "single elliptic curve, self-intersection -1";
        e.expected.Z = rat({1});
        e.expected.Delta = rat({1});
        e.expected.delta_y = 0;
        e.expected.pa_Z = 1;
        e.expected.is_elliptic_gorenstein = true;
        e.expected.is_log_canonical = true;
        e.expected.is_log_terminal = false;
        e.expected.is_rational = false;
        return e;
    }
    if (name.rfind("type2_", 0) == 0) {
        static const int abcs[3][3] = {{3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
        for (const auto& abc : abcs)
            for (int w : {2, 3})
                if (name == "type2_" + std::to_string(abc[0]) + std::to_string(abc[1]) +
                                std::to_string(abc[2]) + "_w" + std::to_string(w))
                    return make_type2(abc[0], abc[1], abc[2], w);
    }
    if (name == "type3_w3" || name == "type3_w4") {
        const int w = (name == "type3_w3") ? 3 : 4;
        CatalogEntry e;
        e.name = name;
        e.graph = star(w, {2, 2, 2, 2});
        e.provenance = "degree-4 star, four (-2)-legs";
        e.expected.Z = (w == 3) ? rat({2, 1, 1, 1, 1}) : rat({1, 1, 1, 1, 1});
        e.expected.Delta =
            rat({1, Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)});
        e.expected.delta_y = (w == 3) ? 1 : 2;
        e.expected.is_log_canonical = true;
        e.expected.is_log_terminal = false;
        return e;
    }
    if (name == "exercise_1_10") {
        std::vector<Vertex> vs{{"F1", 4, 0}, {"F2", 3, 0}, {"F3", 3, 0}, {"F4", 3, 0},
                               {"F5", 2, 0}, {"F6", 2, 0}, {"F7", 2, 0}, {"F8", 2, 0},
                               {"F9", 2, 0}, {"F10", 2, 0}};
        std::vector<Edge> es{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 4, 1}, {1, 5, 1},
                             {2, 6, 1}, {2, 7, 1}, {3, 8, 1}, {3, 9, 1}};
        CatalogEntry e;
        e.name = name;
        e.graph = DualGraph::build(std::move(vs), std::move(es), false);
        e.provenance = "10-vertex tree exercise";
        e.derived = true;  // values pinned by the independent enumeration oracle
        e.expected.Z = std::vector<Rational>(10, Rational(1));
        e.expected.Delta =
            rat({Rational(7, 5), Rational(6, 5), Rational(6, 5), Rational(6, 5), Rational(3, 5),
                 Rational(3, 5), Rational(3, 5), Rational(3, 5), Rational(3, 5), Rational(3, 5)});
        e.expected.delta_y = Rational(17, 5);
        e.expected.pa_Z = 0;
        e.expected.Z2 = -7;
        e.expected.Delta2 = Rational(-32, 5);
        e.expected.is_rational = true;
        e.expected.is_log_canonical = false;
        e.expected.multiplicity = 7;
        return e;
    }
    if (name == "remark210") {
        CatalogEntry e;
        e.name = name;
        e.graph = star(5, {2, 2, 2, 2, 2});
        e.provenance = "degree-5 star, (-5)-center: rational but far from log-canonical";
        e.expected.Z = std::vector<Rational>(6, Rational(1));
        e.expected.Delta = rat({Rational(6, 5), Rational(3, 5), Rational(3, 5), Rational(3, 5),
                                Rational(3, 5), Rational(3, 5)});
        e.expected.delta_y = Rational(13, 5);
        e.expected.is_rational = true;
        e.expected.is_log_canonical = false;
        return e;
    }
    if (name == "d4_star") {
        CatalogEntry e;
        e.name = name;
        e.graph = star(3, {2, 2, 2});
        e.provenance = "log-terminal D(4) star, (-3)-center";
        e.derived = true;
        e.expected.Z = rat({1, 1, 1, 1});
        e.expected.Delta = rat({Rational(2, 3), Rational(1, 3), Rational(1, 3), Rational(1, 3)});
        e.expected.delta_y = Rational(5, 3);
        e.expected.is_log_terminal = true;
        return e;
    }
    if (name == "d5_remark1") {
        // log-terminal D(5) chain with a z_j = 2, (Z-Delta).F_j = 0 vertex
        std::vector<Vertex> vs{{"F1", 3, 0}, {"F2", 2, 0}, {"F3", 2, 0}, {"F4", 2, 0},
                               {"F5", 2, 0}};
        std::vector<Edge> es{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}};
        CatalogEntry e;
        e.name = name;
        e.graph = DualGraph::build(std::move(vs), std::move(es), false);
        e.provenance = "log-terminal D(5) with a degree-2 vertex of z=2 and (Z-Delta).F=0";
        e.derived = true;
        e.expected.Z = rat({1, 2, 2, 1, 1});
        e.expected.Delta = rat({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 4),
                                Rational(1, 4)});
        e.expected.delta_y = Rational(3, 2);
        e.expected.is_log_terminal = true;
        return e;
    }
    if (auto p = parametrized(name))
        return *p;
    throw ValidationError("unknown catalog entry '" + name + "'");
}

}  // namespace

CatalogEntry builtin(const std::string& name) { return make(name); }

std::vector<std::string> catalog_names() {
    std::vector<std::string> names{"smooth",       "A1",           "type1_elliptic",
                                   "type1_cycle_3", "type1_cycle_5"};
    for (const char* abc : {"333", "244", "236"})
        for (int w : {2, 3})
            names.push_back("type2_" + std::string(abc) + "_w" + std::to_string(w));
    names.insert(names.end(), {"type3_w3", "type3_w4", "exercise_1_10", "remark210", "d4_star",
                               "d5_remark1"});
    for (int g = 0; g <= 2; ++g)
        for (int w : {1, 2, 3})
            names.push_back("cone_g" + std::to_string(g) + "_w" + std::to_string(w));
    return names;
}

}  // namespace singan

#include "singan/document.hpp"

#include <regex>
#include <sstream>

namespace singan {

namespace {

using nlohmann::ordered_json;

ordered_json cycle_json(const Cycle& c) {
    ordered_json out = ordered_json::object();
    for (int j = 0; j < c.size(); ++j)
        out[c.graph().vertex(j).name] = to_string(c[j]);
    return out;
}

ordered_json graph_json(const GraphFile& file) {
    const DualGraph& g = file.graph;
    ordered_json doc;
    doc["smooth_point"] = g.smooth_point_mode();
    ordered_json verts = ordered_json::array();
    for (const Vertex& v : g.vertices())
        verts.push_back({{"name", v.name}, {"w", v.weight}, {"g", v.genus}});
    doc["vertices"] = verts;
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges())
        edges.push_back({{"a", g.vertex(e.i).name}, {"b", g.vertex(e.j).name}, {"m", e.mult}});
    doc["edges"] = edges;
    ordered_json curves = ordered_json::array();
    for (const CurveSpec& c : file.curves) {
        ordered_json meets = ordered_json::array();
        for (auto [vj, df] : c.incidence)
            meets.push_back({{"vertex", g.vertex(vj).name}, {"df", df}});
        curves.push_back({{"name", c.name}, {"b", to_string(c.coeff)}, {"meets", meets}});
    }
    doc["curves"] = curves;
    return doc;
}

}  // namespace

nlohmann::ordered_json verdict_json(const ReiderVerdict& v) {
    ordered_json doc;
    doc["mu"] = to_string(v.mu);
    doc["theorem5"] = {{"applies", v.theorem5.applies}};
    doc["theorem6"] = {{"hypotheses_met", v.theorem6.hypotheses_met},
                       {"margin_m2", to_string(v.theorem6.margin_m2)},
                       {"margin_mc", to_string(v.theorem6.margin_mc)},
                       {"status", "guaranteed by theorem"}};
    doc["theorem7"] = {{"applicable_shape", v.theorem7.applicable_shape},
                       {"hypotheses_met", v.theorem7.hypotheses_met},
                       {"status", "guaranteed by theorem"}};
    ordered_json ran;
    ran["applicable"] = v.refined_an.applicable;
    if (v.refined_an.applicable) {
        ran["threshold"] = to_string(v.refined_an.threshold);
        ran["met"] = v.refined_an.met;
        ran["status"] = "guaranteed by theorem";
    }
    doc["refined_an"] = ran;
    doc["open_problem"] = {{"threshold", to_string(v.open_problem.threshold)},
                           {"met", v.open_problem.met},
                           {"status", v.open_problem.status}};
    return doc;
}

nlohmann::ordered_json smooth_info_json(const SmoothPointInfo& info) {
    ordered_json doc;
    doc["note"] = "smooth point: out of scope of the singular-point theorems; "
                  "classical smooth thresholds shown (mu convention: mult_y B; "
                  "the alternative normalization is disputed)";
    doc["mu_smooth"] = to_string(info.mu_smooth);
    doc["m2_threshold"] = to_string(info.m2_threshold);
    doc["mc_threshold"] = to_string(info.mc_threshold);
    doc["m2_met"] = info.m2_met;
    doc["mc_met"] = info.mc_met;
    doc["status"] = "informational";
    return doc;
}

nlohmann::ordered_json analysis_document(const GraphFile& file, const SingularityReport& report,
                                         const TripleReport* triple,
                                         const ReiderVerdict* verdict) {
    const InvariantSet& inv = report.invariants;
    ordered_json doc;
    doc["schema_version"] = kDocumentSchemaVersion;
    doc["graph"] = graph_json(file);
    doc["cycles"] = {{"Z", cycle_json(inv.Z)}, {"Delta", cycle_json(inv.Delta)}};
    ordered_json invariants;
    invariants["pa_Z"] = inv.pa_Z;
    invariants["delta_y"] = to_string(inv.delta_y);
    invariants["Z2"] = to_string(inv.Z2);
    invariants["Delta2"] = to_string(inv.Delta2);
    invariants["KxFj"] = inv.kx_dot;
    doc["invariants"] = invariants;
    ordered_json cls;
    cls["smooth"] = report.is_smooth;
    cls["rational"] = report.is_rational;
    cls["rdp"] = report.is_rdp;
    cls["elliptic_gorenstein"] = report.is_elliptic_gorenstein;
    cls["log_terminal"] = report.is_log_terminal;
    cls["log_canonical"] = report.is_log_canonical;
    cls["canonical"] = report.is_canonical;
    if (report.multiplicity)
        cls["multiplicity"] = to_string(*report.multiplicity);
    cls["minus_delta2"] = to_string(report.minus_delta2);
    cls["shape"] = report.shape.str();
    if (report.truly_lc_type)
        cls["truly_lc_type"] = truly_lc_type_name(*report.truly_lc_type);
    if (report.shape.kind == ShapeKind::D)
        cls["dn_fork_minus_two"] = report.dn_fork_minus_two;
    doc["classification"] = cls;
    if (triple) {
        ordered_json t;
        t["b_prime"] = cycle_json(triple->b_prime);
        t["lt_triple"] = triple->is_lt_triple;
        t["lc_triple"] = triple->is_lc_triple;
        if (triple->mu)
            t["mu"] = to_string(*triple->mu);
        doc["triple"] = t;
    }
    if (verdict)
        doc["verdict"] = verdict_json(*verdict);
    return doc;
}

std::string render_text(const GraphFile& file, const SingularityReport& report,
                        const TripleReport* triple) {
    const DualGraph& g = file.graph;
    const InvariantSet& inv = report.invariants;
    std::ostringstream os;
    os << "graph: " << g.size() << " vertices, " << g.edges().size() << " edges"
       << (g.smooth_point_mode() ? " (smooth point)" : "") << "\n";
    auto cyc = [&](const Cycle& c) {
        std::ostringstream s;
        for (int j = 0; j < c.size(); ++j) {
            if (j)
                s << " ";
            s << g.vertex(j).name << "=" << to_string(c[j]);
        }
        return s.str();
    };
    os << "Z:       " << cyc(inv.Z) << "\n";
    os << "Delta:   " << cyc(inv.Delta) << "\n";
    os << "pa(Z) = " << inv.pa_Z << "   Z^2 = " << to_string(inv.Z2)
       << "   Delta^2 = " << to_string(inv.Delta2) << "\n";
    os << "delta_y = " << to_string(inv.delta_y) << "\n";
    os << "flags:  ";
    if (report.is_smooth)
        os << " smooth";
    if (report.is_rational)
        os << " rational";
    if (report.is_rdp)
        os << " RDP";
    if (report.is_elliptic_gorenstein)
        os << " elliptic-Gorenstein";
    if (report.is_canonical)
        os << " canonical";
    if (report.is_log_terminal)
        os << " log-terminal";
    else if (report.is_log_canonical)
        os << " log-canonical";
    else
        os << " not-log-canonical";
    os << "\n";
    if (report.multiplicity)
        os << "multiplicity = " << to_string(*report.multiplicity) << "\n";
    os << "shape = " << report.shape.str();
    if (report.truly_lc_type)
        os << "   truly-lc type = " << truly_lc_type_name(*report.truly_lc_type);
    os << "\n";
    if (triple) {
        os << "boundary: b' = " << cyc(triple->b_prime) << "\n";
        os << "triple: " << (triple->is_lt_triple ? "log-terminal"
                                                  : (triple->is_lc_triple ? "log-canonical"
                                                                          : "not log-canonical"));
        if (triple->mu)
            os << "   mu = " << to_string(*triple->mu);
        os << "\n";
    }
    return os.str();
}

std::vector<std::string> validate_document(const nlohmann::json& doc) {
    std::vector<std::string> problems;
    auto need = [&](const nlohmann::json& obj, const char* key, const char* kind) {
        if (!obj.contains(key)) {
            problems.push_back(std::string("missing key: ") + key);
            return false;
        }
        const auto& v = obj.at(key);
        bool ok = (std::string(kind) == "object" && v.is_object()) ||
                  (std::string(kind) == "array" && v.is_array()) ||
                  (std::string(kind) == "string" && v.is_string()) ||
                  (std::string(kind) == "bool" && v.is_boolean()) ||
                  (std::string(kind) == "int" && v.is_number_integer());
        if (!ok)
            problems.push_back(std::string("wrong kind for key: ") + key);
        return ok;
    };
    static const std::regex rational_re(R"(^-?\d+(/\d+)?$)");
    auto check_rational = [&](const nlohmann::json& v, const std::string& where) {
        if (!v.is_string() || !std::regex_match(v.get<std::string>(), rational_re))
            problems.push_back("not an exact rational string at " + where);
    };

    if (!need(doc, "schema_version", "int") || !need(doc, "graph", "object") ||
        !need(doc, "cycles", "object") || !need(doc, "invariants", "object") ||
        !need(doc, "classification", "object"))
        return problems;
    const auto& graph = doc.at("graph");
    need(graph, "smooth_point", "bool");
    need(graph, "vertices", "array");
    need(graph, "edges", "array");
    need(graph, "curves", "array");
    const auto& cycles = doc.at("cycles");
    for (const char* key : {"Z", "Delta"}) {
        if (need(cycles, key, "object"))
            for (const auto& [vname, val] : cycles.at(key).items())
                check_rational(val, std::string("cycles.") + key + "." + vname);
    }
    const auto& inv = doc.at("invariants");
    need(inv, "pa_Z", "int");
    if (need(inv, "delta_y", "string"))
        check_rational(inv.at("delta_y"), "invariants.delta_y");
    if (need(inv, "Z2", "string"))
        check_rational(inv.at("Z2"), "invariants.Z2");
    if (need(inv, "Delta2", "string"))
        check_rational(inv.at("Delta2"), "invariants.Delta2");
    need(inv, "KxFj", "array");
    const auto& cls = doc.at("classification");
    for (const char* key : {"smooth", "rational", "rdp", "elliptic_gorenstein", "log_terminal",
                            "log_canonical", "canonical"})
        need(cls, key, "bool");
    need(cls, "shape", "string");
    if (need(cls, "minus_delta2", "string"))
        check_rational(cls.at("minus_delta2"), "classification.minus_delta2");
    return problems;
}

}  // namespace singan

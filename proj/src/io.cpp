#include "ptlens/io.hpp"

#include <fstream>
#include <sstream>

#include "ptlens/error.hpp"

namespace ptlens::io {
namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw Error("JsonSchema", what);
}

int require_int(const json& j, const char* context) {
    if (!j.is_number_integer()) schema_error(std::string(context) + " must be an integer");
    return j.get<int>();
}

const json& require_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) schema_error(std::string("missing field '") + key + "'");
    return *it;
}

} // namespace

json to_json(const LabeledComplex& c) {
    json vertices = json::array();
    for (const auto& v : c.vertices) {
        vertices.push_back({{"id", v.id},
                            {"primitive", v.primitive},
                            {"frontier", v.frontier},
                            {"color", color_name(v.color)}});
    }
    json edges = json::array();
    for (const auto& e : c.edges) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"label", edge_label_name(e.label)}});
    }
    json triangles = json::array();
    for (const auto& t : c.triangles) triangles.push_back({t[0], t[1], t[2]});
    json bridges = json::array();
    for (const auto& b : c.bridges) bridges.push_back(b);
    return json{{"vertices", vertices},
                {"edges", edges},
                {"triangles", triangles},
                {"bridges", bridges}};
}

LabeledComplex complex_from_json(const json& j) {
    if (!j.is_object()) schema_error("complex must be a JSON object");
    LabeledComplex c;
    for (const auto& jv : require_field(j, "vertices")) {
        VertexAttrs v;
        v.id = require_int(require_field(jv, "id"), "vertex id");
        v.primitive = jv.value("primitive", true);
        v.frontier = jv.value("frontier", false);
        v.color = color_from_name(jv.value("color", "none"));
        c.add_vertex(v);
    }
    for (const auto& je : require_field(j, "edges")) {
        int u = require_int(require_field(je, "u"), "edge endpoint");
        int v = require_int(require_field(je, "v"), "edge endpoint");
        c.add_edge(u, v, edge_label_from_name(je.value("label", "plain")));
    }
    if (auto it = j.find("triangles"); it != j.end()) {
        for (const auto& jt : *it) {
            if (!jt.is_array() || jt.size() != 3) schema_error("triangle must be a triple");
            c.add_triangle(require_int(jt[0], "triangle vertex"),
                           require_int(jt[1], "triangle vertex"),
                           require_int(jt[2], "triangle vertex"));
        }
    }
    if (auto it = j.find("bridges"); it != j.end()) {
        for (const auto& jb : *it) {
            std::vector<int> path;
            for (const auto& entry : jb) path.push_back(require_int(entry, "bridge vertex"));
            c.bridges.push_back(std::move(path));
        }
    }
    c.canonicalize();
    return c;
}

json to_json(const PrimitiveTree& t) {
    json vertices = json::array();
    for (const auto& v : t.vertices) {
        vertices.push_back(
            {{"id", v.id}, {"color", color_name(v.color)}, {"frontier", v.frontier}});
    }
    json edges = json::array();
    for (const auto& e : t.edges) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"label", tree_label_name(e.label)}});
    }

    json vertex_sources = json::array();
    for (const auto& [id, src] : t.vertex_source) {
        if (src.kind == VertexSource::Kind::Vertex) {
            vertex_sources.push_back({{"id", id}, {"kind", "vertex"}, {"vertex", src.vertex}});
        } else {
            vertex_sources.push_back(
                {{"id", id},
                 {"kind", "triangle"},
                 {"triangle", {src.triangle[0], src.triangle[1], src.triangle[2]}}});
        }
    }
    json edge_sources = json::array();
    for (const auto& [key, src] : t.edge_source) {
        json rec{{"u", key.first}, {"v", key.second}};
        switch (src.kind) {
        case EdgeSource::Kind::Edge:
            rec["kind"] = "edge";
            break;
        case EdgeSource::Kind::Triangle:
            rec["kind"] = "triangle";
            rec["triangle"] = src.triangle;
            break;
        case EdgeSource::Kind::Bridge:
            rec["kind"] = "bridge";
            rec["bridge"] = src.bridge;
            break;
        }
        edge_sources.push_back(rec);
    }

    return json{{"case", std::string(case_name(t.source_case))},
                {"vertices", vertices},
                {"edges", edges},
                {"provenance", {{"vertices", vertex_sources}, {"edges", edge_sources}}}};
}

PrimitiveTree ptree_from_json(const json& j) {
    if (!j.is_object()) schema_error("tree must be a JSON object");
    PrimitiveTree t;
    t.source_case = case_from_name(j.value("case", "C1b"));
    for (const auto& jv : require_field(j, "vertices")) {
        t.add_vertex(require_int(require_field(jv, "id"), "vertex id"),
                     color_from_name(jv.value("color", "black")), jv.value("frontier", false));
    }
    for (const auto& je : require_field(j, "edges")) {
        t.add_edge(require_int(require_field(je, "u"), "edge endpoint"),
                   require_int(require_field(je, "v"), "edge endpoint"),
                   tree_label_from_name(je.value("label", "type1")));
    }
    if (auto prov = j.find("provenance"); prov != j.end()) {
        if (auto vs = prov->find("vertices"); vs != prov->end()) {
            for (const auto& rec : *vs) {
                VertexSource src;
                int id = require_int(require_field(rec, "id"), "provenance vertex id");
                if (rec.value("kind", "vertex") == "triangle") {
                    src.kind = VertexSource::Kind::Triangle;
                    const auto& tri = require_field(rec, "triangle");
                    src.triangle = {require_int(tri[0], "triangle vertex"),
                                    require_int(tri[1], "triangle vertex"),
                                    require_int(tri[2], "triangle vertex")};
                } else {
                    src.kind = VertexSource::Kind::Vertex;
                    src.vertex = rec.value("vertex", id);
                }
                t.vertex_source[id] = src;
            }
        }
        if (auto es = prov->find("edges"); es != prov->end()) {
            for (const auto& rec : *es) {
                EdgeSource src;
                int u = require_int(require_field(rec, "u"), "provenance edge endpoint");
                int v = require_int(require_field(rec, "v"), "provenance edge endpoint");
                std::string kind = rec.value("kind", "edge");
                if (kind == "triangle") {
                    src.kind = EdgeSource::Kind::Triangle;
                    src.triangle = rec.value("triangle", -1);
                } else if (kind == "bridge") {
                    src.kind = EdgeSource::Kind::Bridge;
                    src.bridge = rec.value("bridge", -1);
                } else {
                    src.kind = EdgeSource::Kind::Edge;
                    src.u = u;
                    src.v = v;
                }
                t.edge_source[{std::min(u, v), std::max(u, v)}] = src;
            }
        }
    }
    t.canonicalize();
    return t;
}

json to_json(const VertexMap& map) {
    json pairs = json::array();
    for (const auto& [v, fv] : map) pairs.push_back({v, fv});
    return json{{"map", pairs}};
}

VertexMap vertex_map_from_json(const json& j) {
    VertexMap map;
    const json& pairs = j.is_array() ? j : require_field(j, "map");
    for (const auto& entry : pairs) {
        if (!entry.is_array() || entry.size() != 2) {
            schema_error("map entries must be [vertex, image] pairs");
        }
        int v = require_int(entry[0], "map vertex");
        int fv = require_int(entry[1], "map image");
        if (!map.emplace(v, fv).second) {
            schema_error("vertex " + std::to_string(v) + " listed twice in map");
        }
    }
    return map;
}

json to_json(const FixedLocus& locus) {
    if (locus.kind == FixedLocus::Kind::Vertex) {
        return json{{"kind", "vertex"}, {"vertex", locus.vertex}};
    }
    return json{{"kind", "edge"}, {"u", locus.u}, {"v", locus.v}};
}

json to_json(const AnalysisOutcome& outcome) {
    json j{{"outcome", std::string(outcome_name(outcome.kind))},
           {"locus", to_json(outcome.locus)},
           {"reason", outcome.reason}};
    switch (outcome.kind) {
    case AnalysisOutcome::Kind::CertificateV:
        j["vertex"] = outcome.vertex;
        break;
    case AnalysisOutcome::Kind::CertificateW:
        j["edge"] = {outcome.edge.first, outcome.edge.second};
        j["dualCount"] = outcome.dual_count;
        break;
    case AnalysisOutcome::Kind::Contradiction:
        break;
    }
    return j;
}

json to_json(const IntersectionPattern& p) {
    json boundary = json::array();
    for (int entry : p.boundary) {
        if (entry == IntersectionPattern::MARKED) {
            boundary.push_back("z");
        } else {
            boundary.push_back(entry);
        }
    }
    json arcs = json::array();
    for (const auto& [a, b] : p.arcs) arcs.push_back({a, b});
    json loops = json::array();
    for (const auto& loop : p.loops) {
        json parent;
        switch (loop.parent.kind) {
        case LoopParent::Kind::Root: parent = nullptr; break;
        case LoopParent::Kind::Loop: parent = json{{"loop", loop.parent.id}}; break;
        case LoopParent::Kind::Arc: parent = json{{"arc", loop.parent.id}}; break;
        }
        loops.push_back({{"id", loop.id}, {"parent", parent}});
    }
    return json{{"boundary", boundary}, {"marked", "z"}, {"arcs", arcs}, {"loops", loops}};
}

IntersectionPattern pattern_from_json(const json& j) {
    if (!j.is_object()) schema_error("pattern must be a JSON object");
    IntersectionPattern p;
    std::string marker = j.value("marked", "z");
    for (const auto& entry : require_field(j, "boundary")) {
        if (entry.is_string()) {
            if (entry.get<std::string>() != marker) {
                schema_error("unknown boundary token '" + entry.get<std::string>() + "'");
            }
            p.boundary.push_back(IntersectionPattern::MARKED);
        } else {
            p.boundary.push_back(require_int(entry, "boundary endpoint"));
        }
    }
    if (auto it = j.find("arcs"); it != j.end()) {
        for (const auto& ja : *it) {
            if (!ja.is_array() || ja.size() != 2) schema_error("arc must pair two endpoints");
            p.arcs.emplace_back(require_int(ja[0], "arc endpoint"),
                                require_int(ja[1], "arc endpoint"));
        }
    }
    if (auto it = j.find("loops"); it != j.end()) {
        for (const auto& jl : *it) {
            Loop loop;
            loop.id = require_int(require_field(jl, "id"), "loop id");
            const json& parent = require_field(jl, "parent");
            if (parent.is_null()) {
                loop.parent.kind = LoopParent::Kind::Root;
            } else if (parent.contains("loop")) {
                loop.parent.kind = LoopParent::Kind::Loop;
                loop.parent.id = require_int(parent["loop"], "parent loop id");
            } else if (parent.contains("arc")) {
                loop.parent.kind = LoopParent::Kind::Arc;
                loop.parent.id = require_int(parent["arc"], "parent arc index");
            } else {
                schema_error("loop parent must be null, {loop: id} or {arc: index}");
            }
            p.loops.push_back(loop);
        }
    }
    return p;
}

json to_json(const ReduceTrace& trace) {
    json steps = json::array();
    for (const auto& step : trace.steps) {
        if (step.kind == ReduceStep::Kind::Loop) {
            steps.push_back({{"kind", "loop"}, {"id", step.id}});
        } else {
            steps.push_back({{"kind", "arc"},
                             {"id", step.id},
                             {"endpoints", {step.endpoints.first, step.endpoints.second}}});
        }
    }
    return json{{"initialComponents", trace.initial_components},
                {"steps", steps},
                {"finalEmpty", true}};
}

json to_json(const Report& report) {
    return json{{"ok", report.ok()}, {"violations", report.violations}};
}

json to_json(const Corridor& cor, const LabeledComplex& c) {
    json triangles = json::array();
    for (int t : cor.triangles) {
        const auto& tri = c.triangles[static_cast<std::size_t>(t)];
        triangles.push_back({tri[0], tri[1], tri[2]});
    }
    return json{{"d", cor.d},
                {"e", cor.e},
                {"triangles", triangles},
                {"vertexPath", corridor_vertex_path(c, cor)}};
}

namespace {

const char* dot_style(EdgeLabel l) {
    switch (l) {
    case EdgeLabel::Type0: return "solid";
    case EdgeLabel::Type1: return "dashed";
    case EdgeLabel::Type2: return "bold";
    case EdgeLabel::BridgeInterior: return "dotted";
    case EdgeLabel::Plain: return "solid";
    }
    return "solid";
}

const char* dot_style(TreeEdgeLabel l) {
    switch (l) {
    case TreeEdgeLabel::Type0: return "solid";
    case TreeEdgeLabel::Type1: return "dashed";
    case TreeEdgeLabel::Type2: return "bold";
    case TreeEdgeLabel::Bridge: return "dotted";
    }
    return "solid";
}

void dot_vertex(std::ostringstream& out, int id, VertexColor color, bool frontier) {
    out << "  v" << id << " [shape=" << (color == VertexColor::White ? "circle" : "point");
    if (color == VertexColor::White) out << ", style=filled, fillcolor=white";
    if (frontier) out << ", color=gray";
    out << "];\n";
}

} // namespace

std::string complex_to_dot(const LabeledComplex& c) {
    std::ostringstream out;
    out << "graph complex {\n";
    for (const auto& v : c.vertices) {
        out << "  v" << v.id << " [shape=" << (v.primitive ? "point" : "circle");
        if (v.frontier) out << ", color=gray";
        out << "];\n";
    }
    for (const auto& e : c.edges) {
        out << "  v" << e.u << " -- v" << e.v << " [style=" << dot_style(e.label)
            << ", label=\"" << edge_label_name(e.label) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string ptree_to_dot(const PrimitiveTree& t) {
    std::ostringstream out;
    out << "graph ptree {\n";
    for (const auto& v : t.vertices) dot_vertex(out, v.id, v.color, v.frontier);
    for (const auto& e : t.edges) {
        out << "  v" << e.u << " -- v" << e.v << " [style=" << dot_style(e.label)
            << ", label=\"" << tree_label_name(e.label) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotFound", "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& ex) {
        throw Error("JsonParse", "cannot parse '" + path + "': " + ex.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("FileWrite", "cannot open '" + path + "' for writing");
    out << content;
}

} // namespace ptlens::io

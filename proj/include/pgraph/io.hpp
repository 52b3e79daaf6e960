#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "curve.hpp"
#include "errors.hpp"
#include "loops.hpp"
#include "pants.hpp"
#include "triangulation.hpp"
#include "universe.hpp"

namespace pgraph {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline json surface_json(SurfaceId s) { return {{"genus", s.g}, {"punctures", s.r}}; }

inline json triangulation_json(const IdealTriangulation& t) {
    json j;
    j["schema_version"] = schema_version;
    j["surface"] = surface_json(t.surface);
    j["rank"] = t.rank;
    j["edge_count"] = t.edge_count;
    j["side_letters"] = t.side_letter;
    j["vertex_punctures"] = t.vertex_puncture;
    json segs = json::array();
    for (const auto& s : t.segments) segs.push_back({{"edge", s.edge}, {"from", s.u}, {"to", s.v}, {"side", s.side}});
    j["segments"] = segs;
    json tris = json::array();
    for (const auto& tr : t.triangles) tris.push_back({{"corners", tr.corner}, {"segments", tr.seg}});
    j["triangles"] = tris;
    j["primary_segments"] = t.primary_segment;
    json per = json::array();
    for (const auto& w : t.peripheral) per.push_back(word_string(w));
    j["peripheral_words"] = per;
    return j;
}

inline json curve_json(const Universe& u, CurveId c) {
    const auto& sep = u.separation(c);
    json j{{"id", c}, {"weights", u.curve(c).weights}, {"word", word_string(u.word(c))}, {"separating", sep.separating}};
    if (sep.puncture_partition)
        j["puncture_partition"] = json::array({sep.puncture_partition->first, sep.puncture_partition->second});
    return j;
}

inline json curves_json(const Universe& u) {
    json j;
    j["schema_version"] = schema_version;
    j["surface"] = surface_json(u.surface());
    j["weight_bound"] = u.weight_bound();
    j["count"] = u.size();
    json cs = json::array();
    for (CurveId c = 0; c < u.size(); ++c) cs.push_back(curve_json(u, c));
    j["curves"] = cs;
    return j;
}

inline json ball_json(const Universe& u, const PantsGraphBall& b) {
    json j;
    j["schema_version"] = schema_version;
    j["surface"] = surface_json(b.surface);
    j["weight_bound"] = b.weight_bound;
    j["radius"] = b.radius;
    json vs = json::array();
    for (int v = 0; v < b.size(); ++v) {
        json cs = json::array();
        for (CurveId c : b.vertices[v]) cs.push_back(word_string(u.word(c)));
        vs.push_back({{"id", v},
                      {"curves", b.vertices[v]},
                      {"words", cs},
                      {"depth", b.depth[v]},
                      {"frontier", b.frontier[v] != 0},
                      {"certified", b.certified[v] != 0}});
    }
    j["vertices"] = vs;
    json es = json::array();
    for (const auto& e : b.edges) es.push_back({{"u", e.u}, {"v", e.v}, {"removed", e.removed}, {"added", e.added}});
    j["edges"] = es;
    j["chart_mismatches"] = b.chart_mismatches;
    return j;
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline std::string ball_dot(const Universe& u, const PantsGraphBall& b) {
    std::string s = "graph pants {\n  node [shape=box, fontsize=10];\n";
    for (int v = 0; v < b.size(); ++v) {
        std::string label;
        for (CurveId c : b.vertices[v]) label += (label.empty() ? "" : " ") + word_string(u.word(c));
        s += "  v" + std::to_string(v) + " [label=\"" + dot_escape(label) + "\"";
        if (b.frontier[v]) s += ", style=dashed";
        s += "];\n";
    }
    for (const auto& e : b.edges)
        s += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) + " [label=\"" +
             dot_escape(word_string(u.word(e.removed)) + "→" + word_string(u.word(e.added))) + "\"];\n";
    return s + "}\n";
}

inline json loop_json(const Universe& u, const PantsGraphBall& b, const LoopInBall& l) {
    json vs = json::array();
    for (int v : l.vertices) vs.push_back(pants_key(u, b.vertices[v]));
    return {{"vertices", l.vertices}, {"keys", vs}, {"tag", to_string(classify_small_loop(b, u, l).tag)}};
}

inline json inventory_json(const Universe& u, const PantsGraphBall& b, const CellInventory& inv) {
    json j;
    j["schema_version"] = schema_version;
    j["surface"] = surface_json(b.surface);
    j["weight_bound"] = b.weight_bound;
    j["radius"] = b.radius;
    j["loops"] = inv.loops;
    json counts = json::object();
    for (auto [t, c] : inv.counts) counts[to_string(t)] = c;
    j["counts"] = counts;
    auto cells = [&](const std::vector<LoopInBall>& ls) {
        json a = json::array();
        for (const auto& l : ls) {
            json x = loop_json(u, b, l);
            bool cert = true;
            for (int v : l.vertices) cert = cert && b.certified[v];
            x["certified"] = cert;
            a.push_back(x);
        }
        return a;
    };
    j["triangles"] = inv.triangles.size();
    j["squares"] = cells(inv.squares);
    j["pentagons"] = cells(inv.pentagons);
    j["hexagons"] = cells(inv.hexagons);
    j["failures"] = inv.failures;
    return j;
}

// Write through a temporary file so readers never see a partial artifact.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
        if (!out) throw Error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pgraph

#include "cyclecover/certificate.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"

#include "cyclecover/checks.hpp"
#include "cyclecover/classify.hpp"
#include "cyclecover/flows.hpp"
#include "cyclecover/graph6.hpp"
#include "cyclecover/ribbon.hpp"
#include "cyclecover/surface.hpp"

namespace cyclecover {

namespace {

using json = nlohmann::ordered_json;

json cycles_json(const OrientedCycleCover& oc) {
    json cycles = json::array();
    for (const auto& cyc : oc.cycles) {
        json circuits = json::array();
        for (const auto& circ : cyc)
            circuits.push_back({{"vertices", circ.vertex_sequence()}});
        cycles.push_back(std::move(circuits));
    }
    return cycles;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json base_document(const OrientedCycleCover& oc, bool oriented) {
    json doc;
    doc["graph6"] = graph6_encode(*oc.graph);
    doc["k"] = oc.k();
    doc["m"] = oc.m;
    doc["oriented"] = oriented;
    doc["cycles"] = cycles_json(oc);
    return doc;
}

struct Loaded {
    ParsedCertificate parsed;
    json doc;
};

Loaded load(const std::string& text) {
    Loaded l;
    try {
        l.doc = json::parse(text);
    } catch (const json::exception& e) {
        throw GraphError(std::string("certificate is not valid JSON: ") +
                         e.what());
    }
    for (const char* field : {"graph6", "k", "m", "cycles"})
        if (!l.doc.contains(field))
            throw GraphError(std::string("certificate lacks field `") + field +
                             "`");
    l.parsed.graph = std::make_shared<CubicGraph>(
        graph6_decode(l.doc["graph6"].get<std::string>()));
    const CubicGraph& g = *l.parsed.graph;
    l.parsed.oriented = l.doc.value("oriented", true);
    OrientedCycleCover& oc = l.parsed.cover;
    oc.graph = &g;
    oc.m = l.doc["m"].get<int>();
    for (const auto& cyc : l.doc["cycles"]) {
        std::vector<Circuit> circuits;
        for (const auto& cj : cyc) {
            auto vs = cj.at("vertices").get<std::vector<int>>();
            if (vs.size() < 3)
                throw GraphError("certificate circuit shorter than 3");
            Circuit circ;
            for (size_t i = 0; i < vs.size(); ++i) {
                int u = vs[i], v = vs[(i + 1) % vs.size()];
                int e = g.edge_between(u, v);
                if (e < 0)
                    throw GraphError("certificate circuit uses non-edge " +
                                     std::to_string(u) + "-" +
                                     std::to_string(v));
                circ.directed_edges.push_back({e, v});
            }
            circuits.push_back(std::move(circ));
        }
        oc.cycles.push_back(std::move(circuits));
    }
    if (oc.k() != l.doc["k"].get<int>())
        throw GraphError("certificate `k` disagrees with its cycle list");
    VerifyReport rep =
        l.parsed.oriented
            ? verify_oriented_cover(g, oc)
            : verify_cover(g, oc.underlying().cycles, oc.m);
    if (!rep.valid())
        throw GraphError("certificate does not verify: " +
                         rep.failures.front());
    return l;
}

const char* vertex_class_name(VertexClass c) {
    return c == VertexClass::ordered ? "ordered" : "disordered";
}
const char* edge_class_name(EdgeClass c) {
    return c == EdgeClass::rich ? "rich" : "poor";
}
const char* subtype_name(EdgeSubtype t) {
    switch (t) {
        case EdgeSubtype::drd: return "drd";
        case EdgeSubtype::dro: return "dro";
        case EdgeSubtype::dpd: return "dpd";
        case EdgeSubtype::opo: return "opo";
        default: return "unexpected";
    }
}

json stats_json(const SurfaceGraph& sg) {
    auto stats = surface_stats(sg);
    auto bounds = trace_boundaries(sg);
    json out;
    out["V"] = stats.V;
    out["E"] = stats.E;
    out["F"] = stats.F;
    json comps = json::array();
    for (const auto& c : stats.components)
        comps.push_back({{"V", c.V},
                         {"E", c.E},
                         {"F", c.F},
                         {"boundaries", c.boundary_count},
                         {"chi", c.chi},
                         {"genus", c.genus}});
    out["components"] = std::move(comps);
    json bj = json::array();
    for (const auto& b : bounds)
        bj.push_back({{"length", b.length()}, {"sides", b.side_labels}});
    out["boundaries"] = std::move(bj);
    return out;
}

json flow_json(const SubgraphFlow& part) {
    json edges = json::array(), values = json::array();
    for (int e = 0; e < static_cast<int>(part.flow.value.size()); ++e)
        if (part.edges.contains(e)) {
            edges.push_back(e);
            values.push_back(part.flow.value[e]);
        }
    return {{"k", part.k}, {"edges", edges}, {"values", values}};
}

json report_json(const CheckReport& r) {
    const char* verdict = r.verdict == Verdict::pass   ? "pass"
                          : r.verdict == Verdict::fail ? "fail"
                                                       : "budget";
    return {{"name", r.name},
            {"scope", r.scope},
            {"verdict", verdict},
            {"witnesses", r.witnesses},
            {"notes", r.notes}};
}

// shared shape of the pipeline steps: parse, recompute, replace section
template <class Fn>
std::string with_section(const std::string& cert, const char* section,
                         Fn&& fn) {
    Loaded l = load(cert);
    json body;
    try {
        body = fn(l.parsed);
    } catch (const GraphError& e) {
        body = json{{"skipped", e.what()}};
    }
    l.doc[section] = std::move(body);
    return dump(l.doc);
}

void require_oriented(const ParsedCertificate& p, const char* step) {
    if (!p.oriented)
        throw GraphError(std::string(step) +
                         " needs an oriented solution certificate");
}

}  // namespace

std::string certificate_for(const OrientedCycleCover& ocover, bool oriented) {
    return dump(base_document(ocover, oriented));
}

std::string certificate_for(const CycleCover& cover) {
    OrientedCycleCover oc;
    oc.graph = cover.graph;
    oc.m = cover.m;
    for (const auto& cyc : cover.cycles)
        oc.cycles.push_back(circuits(*cover.graph, cyc));
    return certificate_for(oc, false);
}

ParsedCertificate parse_certificate(const std::string& text) {
    return load(text).parsed;
}

std::string certificate_with_classification(const std::string& cert) {
    return with_section(cert, "classification", [](const ParsedCertificate& p) {
        require_oriented(p, "classification");
        auto rep = classify(p.cover);
        json out;
        json vc = json::array(), ec = json::array(), st = json::array();
        for (auto c : rep.vertex_class) vc.push_back(vertex_class_name(c));
        for (auto c : rep.edge_class) ec.push_back(edge_class_name(c));
        for (auto t : rep.edge_subtype) st.push_back(subtype_name(t));
        out["vertex_class"] = std::move(vc);
        out["edge_class"] = std::move(ec);
        out["edge_subtype"] = std::move(st);
        out["counts"] = {{"ordered", rep.ordered_count()},
                         {"disordered", rep.disordered_count()},
                         {"rich", rep.rich_count()},
                         {"poor", rep.poor_count()},
                         {"drd", rep.subtype_count(EdgeSubtype::drd)},
                         {"dro", rep.subtype_count(EdgeSubtype::dro)},
                         {"dpd", rep.subtype_count(EdgeSubtype::dpd)},
                         {"opo", rep.subtype_count(EdgeSubtype::opo)}};
        out["taxonomy_counterexamples"] = rep.taxonomy_counterexamples;
        return out;
    });
}

std::string certificate_with_surface(const std::string& cert) {
    return with_section(cert, "surface", [](const ParsedCertificate& p) {
        require_oriented(p, "surface gluing");
        return stats_json(glue_surface(p.cover, classify(p.cover)));
    });
}

std::string certificate_with_split(const std::string& cert) {
    return with_section(cert, "split", [](const ParsedCertificate& p) {
        require_oriented(p, "cdc splitting");
        auto splits = split_into_two_cdcs(p.cover);
        json out;
        out["count"] = splits.size();
        json list = json::array();
        for (const auto& sp : splits) {
            auto half_json = [](const std::vector<std::pair<int, int>>& half) {
                json h = json::array();
                for (auto [cyc, circ] : half)
                    h.push_back({{"cycle", cyc}, {"circuit", circ}});
                return h;
            };
            auto [s1, s2] = split_surfaces(p.cover, sp);
            list.push_back({{"first", half_json(sp.first)},
                            {"second", half_json(sp.second)},
                            {"first_surface", stats_json(s1)},
                            {"second_surface", stats_json(s2)}});
        }
        out["splits"] = std::move(list);
        return out;
    });
}

std::string certificate_with_ribbon(const std::string& cert) {
    return with_section(cert, "ribbon", [](const ParsedCertificate& p) {
        require_oriented(p, "ribbon derivation");
        auto classes = classify_vertices(p.cover);
        if (std::count(classes.begin(), classes.end(), VertexClass::ordered))
            throw GraphError("ordered vertices present");
        auto derived = derive_o6cdc(p.cover);
        json out;
        out["o6cdc"] = {{"k", derived.k()},
                        {"m", derived.m},
                        {"cycles", cycles_json(derived)}};
        return out;
    });
}

std::string certificate_with_flows(const std::string& cert) {
    return with_section(cert, "flows", [](const ParsedCertificate& p) {
        require_oriented(p, "flow derivation");
        if (p.cover.k() < 3)
            throw GraphError("flow decomposition needs at least 3 cycles");
        auto triple = flows_244(p.cover.underlying(), {0, 1, 2});
        json out;
        out["triple"] = {0, 1, 2};
        out["c2"] = flow_json(triple.c2);
        out["f4a"] = flow_json(triple.f4a);
        out["f4b"] = flow_json(triple.f4b);
        return out;
    });
}

std::string certificate_with_checks(const std::string& cert) {
    return with_section(cert, "checks", [](const ParsedCertificate& p) {
        require_oriented(p, "invariant checks");
        json out = json::array();
        out.push_back(report_json(check_reorientation_parity(p.cover)));
        auto classes = classify_vertices(p.cover);
        if (!std::count(classes.begin(), classes.end(), VertexClass::ordered))
            out.push_back(report_json(check_euler_parity(p.cover)));
        return out;
    });
}

}  // namespace cyclecover

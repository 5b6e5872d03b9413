#include <json.hpp>

#include "gridlab/errors.hpp"
#include "gridlab/formats.hpp"

namespace gridlab {

namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& err) {
        throw ParseError(std::string("malformed JSON: ") + err.what());
    }
}

template <class F>
auto field(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& err) {
        throw ParseError(std::string("bad or missing field '") + what + "': " + err.what());
    }
}

Json pair_json(Edge e) { return Json::array({e.first, e.second}); }

Edge pair_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("expected a two-element array");
    return {j[0].get<int>(), j[1].get<int>()};
}

const char* op_name(MinorOpKind k) {
    switch (k) {
        case MinorOpKind::Contract: return "contract";
        case MinorOpKind::DeleteEdge: return "delete_edge";
        case MinorOpKind::DeleteVertex: return "delete_vertex";
    }
    return "?";
}

}  // namespace

std::string write_model_json(const MinorModel& m, const std::string& host_ref) {
    Json j;
    j["type"] = "minor_model";
    j["version"] = 1;
    Json pattern_edges = Json::array();
    for (Edge e : m.pattern.edges()) pattern_edges.push_back(pair_json(e));
    j["pattern"] = {{"n", m.pattern.num_vertices()}, {"edges", pattern_edges}};
    j["host"] = {{"ref", host_ref}, {"n", m.host.num_vertices()}, {"m", m.host.num_edges()}};
    j["branch_sets"] = Json::array();
    for (const auto& b : m.branch_sets) j["branch_sets"].push_back(b);
    j["edge_witness"] = Json::array();
    for (const auto& [pe, he] : m.edge_witness)
        j["edge_witness"].push_back({{"pattern_edge", pair_json(pe)}, {"host_edge", pair_json(he)}});
    return j.dump(2) + "\n";
}

MinorModel read_model_json(std::string_view text, const SimpleGraph& host) {
    Json j = parse(text);
    if (field("type", [&] { return j.at("type").get<std::string>(); }) != "minor_model")
        throw ParseError("certificate type is not 'minor_model'");
    if (field("version", [&] { return j.at("version").get<int>(); }) != 1)
        throw ParseError("unsupported certificate version");
    MinorModel m;
    int hn = field("host.n", [&] { return j.at("host").at("n").get<int>(); });
    int hm = field("host.m", [&] { return j.at("host").at("m").get<int>(); });
    if (hn != host.num_vertices() || hm != host.num_edges())
        throw std::invalid_argument("certificate host has n=" + std::to_string(hn) + ", m=" + std::to_string(hm) +
                                    " but the supplied graph has n=" + std::to_string(host.num_vertices()) +
                                    ", m=" + std::to_string(host.num_edges()));
    m.host = host;
    int pn = field("pattern.n", [&] { return j.at("pattern").at("n").get<int>(); });
    if (pn < 0) throw ParseError("negative pattern size");
    m.pattern = SimpleGraph(pn);
    field("pattern.edges", [&] {
        for (const auto& e : j.at("pattern").at("edges")) {
            Edge p = pair_from(e);
            if (p.first < 0 || p.second < 0 || p.first >= pn || p.second >= pn || p.first == p.second)
                throw ParseError("pattern edge out of range");
            m.pattern.add_edge(p.first, p.second);
        }
        return 0;
    });
    field("branch_sets", [&] {
        for (const auto& b : j.at("branch_sets")) m.branch_sets.push_back(b.get<VertexSet>());
        return 0;
    });
    field("edge_witness", [&] {
        for (const auto& w : j.at("edge_witness"))
            m.edge_witness.push_back({pair_from(w.at("pattern_edge")), pair_from(w.at("host_edge"))});
        return 0;
    });
    return m;
}

std::string write_sequence_json(const SequenceCertificate& cert) {
    Json j;
    j["type"] = "contraction_sequence";
    j["version"] = 1;
    j["host"] = {{"ref", cert.host_ref}, {"n", cert.host_vertices}, {"m", cert.host_edges}};
    j["ops"] = Json::array();
    for (const MinorOp& op : cert.sequence.ops) {
        Json o;
        o["op"] = op_name(op.kind);
        o["u"] = op.u;
        if (op.kind != MinorOpKind::DeleteVertex) o["v"] = op.v;
        j["ops"].push_back(o);
    }
    return j.dump(2) + "\n";
}

SequenceCertificate read_sequence_json(std::string_view text) {
    Json j = parse(text);
    if (field("type", [&] { return j.at("type").get<std::string>(); }) != "contraction_sequence")
        throw ParseError("certificate type is not 'contraction_sequence'");
    if (field("version", [&] { return j.at("version").get<int>(); }) != 1)
        throw ParseError("unsupported certificate version");
    SequenceCertificate c;
    c.host_ref = field("host.ref", [&] { return j.at("host").at("ref").get<std::string>(); });
    c.host_vertices = field("host.n", [&] { return j.at("host").at("n").get<int>(); });
    c.host_edges = field("host.m", [&] { return j.at("host").at("m").get<int>(); });
    field("ops", [&] {
        for (const auto& o : j.at("ops")) {
            std::string name = o.at("op").get<std::string>();
            MinorOp op;
            op.u = o.at("u").get<int>();
            if (name == "contract") {
                op.kind = MinorOpKind::Contract;
                op.v = o.at("v").get<int>();
            } else if (name == "delete_edge") {
                op.kind = MinorOpKind::DeleteEdge;
                op.v = o.at("v").get<int>();
            } else if (name == "delete_vertex") {
                op.kind = MinorOpKind::DeleteVertex;
            } else {
                throw ParseError("unknown operation '" + name + "'");
            }
            c.sequence.ops.push_back(op);
        }
        return 0;
    });
    return c;
}

std::string certificate_type(std::string_view text) {
    Json j = parse(text);
    return field("type", [&] { return j.at("type").get<std::string>(); });
}

}  // namespace gridlab

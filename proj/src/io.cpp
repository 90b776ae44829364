#include "clutterlab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace clutterlab {

using nlohmann::json;

std::string hash_hex(uint64_t h) {
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

std::vector<int> int_list(const json& j, int lo, int hi, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw std::invalid_argument(std::string(what) + " entries must be integers");
        int v = x.get<int>();
        if (v < lo || v >= hi) throw std::invalid_argument(std::string(what) + " entry out of range");
        out.push_back(v);
    }
    return out;
}

VertexSet set_from_list(const json& j, int n, const char* what) {
    std::vector<int> verts = int_list(j, 0, n, what);
    VertexSet s(n);
    for (int v : verts) {
        if (s.test(v)) throw std::invalid_argument(std::string(what) + " has a repeated vertex");
        s.set(v);
    }
    return s;
}

json set_to_list(const VertexSet& s) {
    json out = json::array();
    for (int v : s.members()) out.push_back(v);
    return out;
}

}  // namespace

std::string graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n;
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("graph JSON needs an integer n");
    int n = j["n"].get<int>();
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    std::set<std::pair<int, int>> seen;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw std::invalid_argument("edges must be an array");
        for (const auto& e : j["edges"]) {
            std::vector<int> pair = int_list(e, 0, n, "edge");
            if (pair.size() != 2 || pair[0] == pair[1])
                throw std::invalid_argument("edges must be 2 distinct vertices");
            if (!seen.emplace(std::min(pair[0], pair[1]), std::max(pair[0], pair[1])).second)
                throw std::invalid_argument("duplicate or reversed edge rejected");
            g.add_edge(pair[0], pair[1]);
        }
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || int(j["labels"].size()) != n)
            throw std::invalid_argument("label list must have length n");
        for (const auto& s : j["labels"]) {
            if (!s.is_string()) throw std::invalid_argument("labels must be strings");
            g.labels.push_back(s.get<std::string>());
        }
    }
    return g;
}

std::string clutter_to_json(const Clutter& c) {
    json j;
    j["n"] = c.n;
    j["d"] = c.d;
    json edges = json::array();
    for (const auto& e : c.edges) edges.push_back(set_to_list(e));
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

Clutter clutter_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("n") || !j.contains("d"))
        throw std::invalid_argument("clutter JSON needs n and d");
    int n = j["n"].get<int>();
    int d = j["d"].get<int>();
    if (n < 0 || d < 1) throw std::invalid_argument("bad clutter dimensions");
    std::vector<VertexSet> edges;
    for (const auto& e : j.value("edges", json::array()))
        edges.push_back(set_from_list(e, n, "clutter edge"));
    return Clutter(n, d, std::move(edges));
}

std::string certificate_to_json(const Clutter& source, const EliminationCertificate& cert) {
    json j;
    j["source_hash"] = hash_hex(source.canonical_hash());
    json steps = json::array();
    for (const auto& s : cert.steps) steps.push_back(set_to_list(s));
    j["steps"] = std::move(steps);
    return j.dump(2) + "\n";
}

EliminationCertificate certificate_from_json(const Clutter& source, const std::string& text) {
    json j = parse(text);
    if (!j.contains("source_hash") || !j["source_hash"].is_string())
        throw std::invalid_argument("certificate JSON needs source_hash");
    if (j["source_hash"].get<std::string>() != hash_hex(source.canonical_hash()))
        throw std::invalid_argument("certificate source hash does not match this clutter");
    EliminationCertificate cert;
    for (const auto& s : j.value("steps", json::array()))
        cert.steps.push_back(set_from_list(s, source.n, "certificate step"));
    return cert;
}

std::string ideal_to_json(const MonomialIdeal& i) {
    json j;
    j["n"] = i.n;
    json gens = json::array();
    for (const auto& m : i.gens) gens.push_back(m.exps);
    j["gens"] = std::move(gens);
    return j.dump(2) + "\n";
}

MonomialIdeal ideal_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("n")) throw std::invalid_argument("ideal JSON needs n");
    int n = j["n"].get<int>();
    if (n < 0) throw std::invalid_argument("negative variable count");
    std::vector<Monomial> gens;
    for (const auto& g : j.value("gens", json::array())) {
        if (!g.is_array() || int(g.size()) != n)
            throw std::invalid_argument("generator exponent vectors must have length n");
        std::vector<int> exps;
        for (const auto& e : g) {
            int v = e.get<int>();
            if (v < 0) throw std::invalid_argument("negative exponent");
            exps.push_back(v);
        }
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(n, std::move(gens));
}

std::string decomposition_to_json(const CactusDecomposition& d) {
    json j;
    j["skeleton"] = json::parse(graph_to_json(d.skeleton));
    json pieces = json::array();
    for (const auto& p : d.pieces) {
        json pj;
        pj["edge"] = json::array({p.skeleton_edge.first, p.skeleton_edge.second});
        pj["kind"] = p.kind == PieceKind::chordal ? "chordal" : "cycle";
        pj["vertices"] = set_to_list(p.vertices);
        pieces.push_back(std::move(pj));
    }
    j["pieces"] = std::move(pieces);
    return j.dump(2) + "\n";
}

CactusDecomposition decomposition_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("skeleton")) throw std::invalid_argument("decomposition JSON needs skeleton");
    CactusDecomposition d;
    d.skeleton = graph_from_json(j["skeleton"].dump());
    int host_n = 0;
    if (j.contains("pieces"))
        for (const auto& p : j["pieces"])
            if (p.contains("vertices"))
                for (const auto& v : p["vertices"]) host_n = std::max(host_n, v.get<int>() + 1);
    for (const auto& p : j.value("pieces", json::array())) {
        CactusPiece piece;
        std::vector<int> e = int_list(p.at("edge"), 0, d.skeleton.n, "piece edge");
        if (e.size() != 2) throw std::invalid_argument("piece edge must have 2 endpoints");
        piece.skeleton_edge = {e[0], e[1]};
        std::string kind = p.at("kind").get<std::string>();
        if (kind == "chordal")
            piece.kind = PieceKind::chordal;
        else if (kind == "cycle")
            piece.kind = PieceKind::cycle;
        else
            throw std::invalid_argument("piece kind must be chordal or cycle");
        if (p.contains("vertices") && !p["vertices"].empty())
            piece.vertices = set_from_list(p["vertices"], host_n, "piece vertices");
        piece.size = p.value("size", piece.vertices.count());
        d.pieces.push_back(std::move(piece));
    }
    return d;
}

}  // namespace clutterlab

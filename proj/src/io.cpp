#include "mopdom/io.hpp"

#include "mopdom/error.hpp"

#include <sstream>

namespace mopdom {

nlohmann::json graph_to_json(const MopGraph& g)
{
    auto chords = nlohmann::json::array();
    for (const auto& c : g.chords())
        chords.push_back({c.a, c.b});
    return {{"n", g.n()}, {"chords", chords}};
}

MopGraph graph_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("chords") || !j["n"].is_number_integer()
        || !j["chords"].is_array())
        throw Error(Errc::ParseError, "graph JSON needs integer \"n\" and array \"chords\"");
    std::vector<Chord> chords;
    for (const auto& c : j["chords"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
            throw Error(Errc::ParseError, "chord must be a pair of integers: " + c.dump());
        chords.emplace_back(c[0].get<Vertex>(), c[1].get<Vertex>());
    }
    return MopGraph::build(j["n"].get<int>(), chords);
}

nlohmann::json set_to_json(const VertexSet& s)
{
    return nlohmann::json(s.members());
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_edge_list(std::istream& in)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        std::int64_t u = 0;
        std::int64_t v = 0;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest))
            throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected \"u v\"");
        edges.emplace_back(u, v);
    }
    return edges;
}

std::string to_edge_list(const MopGraph& g)
{
    std::ostringstream os;
    for (const auto& e : g.edges())
        os << e.a << ' ' << e.b << '\n';
    return os.str();
}

std::string to_dot(const MopGraph& g)
{
    std::ostringstream os;
    os << "graph mop {\n  layout=circo;\n  node [shape=circle];\n";
    for (Vertex v = 0; v < g.n(); ++v)
        os << "  " << v << (g.degree(v) == 2 ? " [style=filled, fillcolor=lightgray]" : "") << ";\n";
    for (Vertex v = 0; v < g.n(); ++v)
        os << "  " << v << " -- " << (v + 1) % g.n() << " [penwidth=2];\n";
    for (const auto& c : g.chords())
        os << "  " << c.a << " -- " << c.b << " [style=dashed];\n";
    os << "}\n";
    return os.str();
}

std::string dual_to_dot(const DualTree& t)
{
    std::ostringstream os;
    os << "graph dual {\n  node [shape=box, style=filled];\n";
    for (int i = 0; i < t.size(); ++i) {
        const auto& tri = t.nodes[i];
        const char* color = tri.kind == TriangleKind::ear ? "palegreen"
            : tri.kind == TriangleKind::internal            ? "salmon"
                                                            : "lightblue";
        os << "  t" << i << " [label=\"{" << tri.vertices[0] << "," << tri.vertices[1] << "," << tri.vertices[2]
           << "}\\n" << to_string(tri.kind) << "\", fillcolor=" << color << "];\n";
    }
    for (const auto& e : t.edges)
        os << "  t" << e.a << " -- t" << e.b << " [label=\"" << e.chord.a << "-" << e.chord.b << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace mopdom

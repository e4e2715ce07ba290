#include "mopdom/graph.hpp"

#include "mopdom/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>

namespace mopdom {

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

void VertexSet::insert(Vertex v)
{
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v)
        members_.insert(it, v);
}

void VertexSet::erase(Vertex v)
{
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v)
        members_.erase(it);
}

bool VertexSet::contains(Vertex v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

namespace {

bool crosses(const Chord& x, const Chord& y)
{
    return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

std::string pair_str(Vertex a, Vertex b)
{
    return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

MopGraph::MopGraph(int n, std::vector<Chord> chords) : n_(n), chords_(std::move(chords)), adj_(n)
{
    for (Vertex i = 0; i < n_; ++i) {
        Vertex j = (i + 1) % n_;
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    for (const auto& c : chords_) {
        adj_[c.a].push_back(c.b);
        adj_[c.b].push_back(c.a);
    }
    for (auto& row : adj_)
        std::sort(row.begin(), row.end());
}

MopGraph MopGraph::build(int n, std::span<const Chord> chords)
{
    if (n < 3)
        throw Error(Errc::BadParameter, "a maximal outerplane graph needs n >= 3, got " + std::to_string(n));
    if (static_cast<int>(chords.size()) != n - 3)
        throw Error(Errc::WrongChordCount, "expected " + std::to_string(n - 3) + " chords, got " + std::to_string(chords.size()));

    std::vector<Chord> sorted;
    sorted.reserve(chords.size());
    for (const auto& c : chords) {
        if (c.a < 0 || c.b >= n)
            throw Error(Errc::VertexOutOfRange, "chord " + pair_str(c.a, c.b) + " outside 0.." + std::to_string(n - 1));
        if (c.a == c.b)
            throw Error(Errc::DuplicateOrDegenerateChord, "self-loop " + pair_str(c.a, c.b));
        if (c.b - c.a == 1 || (c.a == 0 && c.b == n - 1))
            throw Error(Errc::DuplicateOrDegenerateChord, "cycle edge given as chord " + pair_str(c.a, c.b));
        sorted.push_back(c);
    }
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
        throw Error(Errc::DuplicateOrDegenerateChord, "repeated chord " + pair_str(it->a, it->b));

    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (crosses(sorted[i], sorted[j]))
                throw Error(Errc::CrossingChords,
                    pair_str(sorted[i].a, sorted[i].b) + " crosses " + pair_str(sorted[j].a, sorted[j].b));

    return MopGraph(n, std::move(sorted));
}

void MopGraph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

std::span<const Vertex> MopGraph::adjacent_to(Vertex v) const
{
    check_vertex(v);
    return adj_[v];
}

int MopGraph::degree(Vertex v) const
{
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool MopGraph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool MopGraph::is_cycle_edge(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    int d = u > v ? u - v : v - u;
    return d == 1 || d == n_ - 1;
}

std::vector<Chord> MopGraph::edges() const
{
    std::vector<Chord> out;
    out.reserve(edge_count());
    for (Vertex i = 0; i < n_; ++i)
        out.emplace_back(i, (i + 1) % n_);
    out.insert(out.end(), chords_.begin(), chords_.end());
    return out;
}

VertexSet neighbors(const MopGraph& g, Vertex v)
{
    auto adj = g.adjacent_to(v);
    return VertexSet(std::vector<Vertex>(adj.begin(), adj.end()));
}

VertexSet closed_neighbors(const MopGraph& g, Vertex v)
{
    auto s = neighbors(g, v);
    s.insert(v);
    return s;
}

int degree(const MopGraph& g, Vertex v) { return g.degree(v); }

std::vector<int> distances_from(const MopGraph& g, Vertex source)
{
    if (source < 0 || source >= g.n())
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(source));
    std::vector<int> dist(g.n(), -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.adjacent_to(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

int distance(const MopGraph& g, Vertex u, Vertex v)
{
    if (v < 0 || v >= g.n())
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
    return distances_from(g, u)[v];
}

Recognition recognize_mop(std::span<const std::pair<std::int64_t, std::int64_t>> edges)
{
    if (edges.empty())
        throw Error(Errc::EmptyOrDisconnected, "empty edge list");

    std::unordered_map<std::int64_t, int> dense;
    std::vector<std::int64_t> original;
    auto id_of = [&](std::int64_t x) {
        auto [it, fresh] = dense.emplace(x, static_cast<int>(original.size()));
        if (fresh)
            original.push_back(x);
        return it->second;
    };
    std::vector<std::pair<int, int>> es;
    for (auto [x, y] : edges)
        es.emplace_back(id_of(x), id_of(y));

    const int n = static_cast<int>(original.size());
    std::vector<std::set<int>> adj(n);
    for (auto [a, b] : es) {
        if (a == b)
            throw Error(Errc::NotMaximalOuterplanar, "self-loop on " + std::to_string(original[a]));
        if (!adj[a].insert(b).second)
            throw Error(Errc::NotMaximalOuterplanar, "repeated edge " + std::to_string(original[a]) + " " + std::to_string(original[b]));
        adj[b].insert(a);
    }

    {
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != n)
            throw Error(Errc::EmptyOrDisconnected, "graph is disconnected");
    }
    if (n < 3 || static_cast<int>(es.size()) != 2 * n - 3)
        throw Error(Errc::NotMaximalOuterplanar,
            "edge count " + std::to_string(es.size()) + " != 2n-3 for n=" + std::to_string(n));

    struct Ear {
        int v, a, b;
    };
    std::vector<Ear> ears;
    std::vector<bool> alive(n, true);
    std::vector<int> pending;
    for (int v = 0; v < n; ++v)
        if (adj[v].size() == 2)
            pending.push_back(v);
    int remaining = n;
    while (remaining > 3) {
        if (pending.empty())
            throw Error(Errc::NotMaximalOuterplanar, "ear peeling stuck with " + std::to_string(remaining) + " vertices left");
        int v = pending.back();
        pending.pop_back();
        if (!alive[v] || adj[v].size() != 2)
            continue;
        int a = *adj[v].begin();
        int b = *std::next(adj[v].begin());
        if (!adj[a].count(b))
            throw Error(Errc::NotMaximalOuterplanar, "degree-2 vertex " + std::to_string(original[v]) + " has non-adjacent neighbors");
        ears.push_back({v, a, b});
        alive[v] = false;
        adj[a].erase(v);
        adj[b].erase(v);
        --remaining;
        if (adj[a].size() == 2)
            pending.push_back(a);
        if (adj[b].size() == 2)
            pending.push_back(b);
    }

    std::vector<int> next(n, -1), prev(n, -1);
    {
        std::vector<int> tri;
        for (int v = 0; v < n; ++v)
            if (alive[v])
                tri.push_back(v);
        for (int i = 0; i < 3; ++i) {
            next[tri[i]] = tri[(i + 1) % 3];
            prev[tri[(i + 1) % 3]] = tri[i];
        }
    }
    for (auto it = ears.rbegin(); it != ears.rend(); ++it) {
        auto [v, a, b] = *it;
        if (next[b] == a)
            std::swap(a, b);
        if (next[a] != b)
            throw Error(Errc::NotMaximalOuterplanar, "ear at " + std::to_string(original[v]) + " does not sit on the outer cycle");
        next[a] = v;
        prev[v] = a;
        next[v] = b;
        prev[b] = v;
    }

    int start = 0;
    for (int v = 1; v < n; ++v)
        if (original[v] < original[start])
            start = v;
    const bool forward = original[next[start]] < original[prev[start]];
    std::vector<Vertex> label(n, -1);
    for (int v = start, i = 0; i < n; ++i, v = forward ? next[v] : prev[v])
        label[v] = i;

    std::vector<Chord> chords;
    for (auto [a, b] : es) {
        Chord c(label[a], label[b]);
        if (!(c.b - c.a == 1 || (c.a == 0 && c.b == n - 1)))
            chords.push_back(c);
    }

    Recognition out{[&] {
        try {
            return MopGraph::build(n, chords);
        } catch (const Error& e) {
            throw Error(Errc::NotMaximalOuterplanar, e.what());
        }
    }(), {}};
    for (int v = 0; v < n; ++v)
        out.labeling.emplace(original[v], label[v]);
    return out;
}

Reduction reduce_graph(const MopGraph& g, const VertexSet& del, std::span<const Chord> add)
{
    const int n = g.n();
    for (Vertex v : del)
        if (v < 0 || v >= n)
            throw Error(Errc::VertexOutOfRange, "deleted vertex " + std::to_string(v));

    std::vector<Vertex> map(n, -1);
    int kept = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!del.contains(v))
            map[v] = kept++;
    if (kept < 3)
        throw Error(Errc::ResultNotMaximalOuterplanar, "only " + std::to_string(kept) + " vertices survive");

    std::set<Chord> edges;
    for (const auto& e : g.edges())
        if (map[e.a] >= 0 && map[e.b] >= 0)
            edges.emplace(map[e.a], map[e.b]);
    for (const auto& c : add) {
        if (c.a < 0 || c.b >= n || map[c.a] < 0 || map[c.b] < 0 || c.a == c.b)
            throw Error(Errc::ResultNotMaximalOuterplanar, "added chord " + pair_str(c.a, c.b) + " is not between surviving vertices");
        if (!edges.emplace(map[c.a], map[c.b]).second)
            throw Error(Errc::ResultNotMaximalOuterplanar, "added chord " + pair_str(c.a, c.b) + " already present");
    }

    if (static_cast<int>(edges.size()) != 2 * kept - 3)
        throw Error(Errc::ResultNotMaximalOuterplanar,
            std::to_string(edges.size()) + " edges on " + std::to_string(kept) + " vertices");
    std::vector<Chord> chords;
    for (Vertex i = 0; i < kept; ++i)
        if (!edges.count(Chord(i, (i + 1) % kept)))
            throw Error(Errc::ResultNotMaximalOuterplanar, "outer cycle broken between new vertices " + pair_str(i, (i + 1) % kept));
    for (const auto& e : edges)
        if (!(e.b - e.a == 1 || (e.a == 0 && e.b == kept - 1)))
            chords.push_back(e);
    try {
        return {MopGraph::build(kept, chords), std::move(map)};
    } catch (const Error& e) {
        throw Error(Errc::ResultNotMaximalOuterplanar, e.what());
    }
}

MopGraph transform(const MopGraph& g, int shift, bool reflect)
{
    const int n = g.n();
    std::vector<Chord> chords;
    chords.reserve(g.chords().size());
    for (const auto& c : g.chords()) {
        auto f = [&](Vertex v) { return reflect ? ((shift - v) % n + n) % n : (v + shift) % n; };
        chords.emplace_back(f(c.a), f(c.b));
    }
    return MopGraph::build(n, chords);
}

MopGraph canonical_form(const MopGraph& g)
{
    const int n = g.n();
    std::vector<Chord> best;
    bool have = false;
    std::vector<Chord> cur;
    for (int reflect = 0; reflect < 2; ++reflect)
        for (int shift = 0; shift < n; ++shift) {
            cur.clear();
            for (const auto& c : g.chords()) {
                auto f = [&](Vertex v) { return reflect ? ((shift - v) % n + n) % n : (v + shift) % n; };
                cur.emplace_back(f(c.a), f(c.b));
            }
            std::sort(cur.begin(), cur.end());
            if (!have || cur < best) {
                best = cur;
                have = true;
            }
        }
    return MopGraph::build(n, best);
}

}  // namespace mopdom

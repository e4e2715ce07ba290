#include "mopdom/dual_tree.hpp"

#include "mopdom/error.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace mopdom {

const char* to_string(TriangleKind kind) noexcept
{
    switch (kind) {
    case TriangleKind::ear: return "ear";
    case TriangleKind::internal: return "internal";
    case TriangleKind::side: return "side";
    }
    return "?";
}

std::vector<int> DualTree::leaves() const
{
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (degree(i) == 1)
            out.push_back(i);
    return out;
}

int RoleLabels::count() const
{
    int i = 1;
    while (i < static_cast<int>(at.size()) && at[i] >= 0)
        ++i;
    return i - 1;
}

DualTree build_dual_tree(const MopGraph& g)
{
    const int n = g.n();
    DualTree t;
    std::map<std::array<Vertex, 3>, int> index;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b : g.adjacent_to(a)) {
            if (b <= a)
                continue;
            for (Vertex c : g.adjacent_to(b))
                if (c > b && g.adjacent(a, c)) {
                    Triangle tri;
                    tri.vertices = {a, b, c};
                    if (g.degree(a) == 2 || g.degree(b) == 2 || g.degree(c) == 2)
                        tri.kind = TriangleKind::ear;
                    else if (!g.is_cycle_edge(a, b) && !g.is_cycle_edge(b, c) && !g.is_cycle_edge(a, c))
                        tri.kind = TriangleKind::internal;
                    else
                        tri.kind = TriangleKind::side;
                    index.emplace(tri.vertices, static_cast<int>(t.nodes.size()));
                    t.nodes.push_back(tri);
                }
        }

    t.adjacency.assign(t.nodes.size(), {});
    for (const auto& c : g.chords()) {
        std::vector<int> faces;
        for (Vertex x : g.adjacent_to(c.a))
            if (x != c.b && g.adjacent(x, c.b)) {
                std::array<Vertex, 3> key{c.a, c.b, x};
                std::sort(key.begin(), key.end());
                faces.push_back(index.at(key));
            }
        // every chord of a maximal outerplane graph borders exactly two faces
        if (faces.size() != 2)
            throw Error(Errc::NotMaximalOuterplanar, "chord does not border two triangles");
        t.edges.push_back({faces[0], faces[1], c});
        t.adjacency[faces[0]].push_back(faces[1]);
        t.adjacency[faces[1]].push_back(faces[0]);
    }
    for (auto& row : t.adjacency)
        std::sort(row.begin(), row.end());
    return t;
}

std::variant<NearestAnchor, PathTree> nearest_degree3(const DualTree& t, int leaf)
{
    if (leaf < 0 || leaf >= t.size() || t.degree(leaf) != 1)
        throw Error(Errc::NotALeaf, "node " + std::to_string(leaf) + " is not a leaf");
    NearestAnchor out;
    out.path.push_back(leaf);
    int prev = leaf;
    int cur = t.adjacency[leaf][0];
    out.path.push_back(cur);
    while (t.degree(cur) == 2) {
        int nxt = t.adjacency[cur][0] == prev ? t.adjacency[cur][1] : t.adjacency[cur][0];
        prev = cur;
        cur = nxt;
        out.path.push_back(cur);
    }
    if (t.degree(cur) == 1)
        return PathTree{};
    out.anchor = cur;
    out.dist = static_cast<int>(out.path.size()) - 1;
    return out;
}

namespace {

class BranchWalk {
public:
    BranchWalk(const DualTree& t, int leaf) : t_(t), prev_(leaf), cur_(t.adjacency[leaf][0]), path_{leaf, cur_} {}

    [[nodiscard]] int node() const { return cur_; }
    [[nodiscard]] int degree() const { return t_.degree(cur_); }
    [[nodiscard]] bool has(Vertex v) const { return t_.nodes[cur_].contains(v); }
    [[nodiscard]] const std::vector<int>& path() const { return path_; }

    /// Vertex of the current triangle that the previous one lacks.
    [[nodiscard]] Vertex fresh() const
    {
        for (Vertex v : t_.nodes[cur_].vertices)
            if (!t_.nodes[prev_].contains(v))
                return v;
        return -1;
    }

    void advance()
    {
        const auto& adj = t_.adjacency[cur_];
        int nxt = adj[0] == prev_ ? adj[1] : adj[0];
        prev_ = cur_;
        cur_ = nxt;
        path_.push_back(cur_);
    }

private:
    const DualTree& t_;
    int prev_;
    int cur_;
    std::vector<int> path_;
};

}  // namespace

std::variant<BranchShape, Deviation> match_branch_shape(const MopGraph& g, const DualTree& t, int leaf)
{
    if (g.n() < 9)
        throw Error(Errc::PreconditionTooSmall, "branch shapes need n >= 9, got " + std::to_string(g.n()));
    if (leaf < 0 || leaf >= t.size() || t.degree(leaf) != 1)
        throw Error(Errc::NotALeaf, "node " + std::to_string(leaf) + " is not a leaf");

    const int n = g.n();
    RoleLabels u;
    for (Vertex v : t.nodes[leaf].vertices)
        if (g.degree(v) == 2)
            u[1] = v;
    u[2] = (u[1] + n - 1) % n;
    u[3] = (u[1] + 1) % n;

    BranchWalk walk(t, leaf);
    auto shape = [&](int dist) -> std::variant<BranchShape, Deviation> {
        return BranchShape{leaf, walk.node(), dist, u, walk.path()};
    };
    auto deviation = [&](int claim, const char* rule) -> std::variant<BranchShape, Deviation> {
        return Deviation{leaf, claim, rule, u, walk.path()};
    };
    auto guard_not_leaf = [&] {
        if (walk.degree() == 1)
            throw Error(Errc::PreconditionTooSmall, "dual tree ends within the forced sequence");
    };

    // F2 = {u2, u3, u4}
    u[4] = walk.fresh();
    if (walk.degree() == 3)
        return shape(1);
    guard_not_leaf();

    // F3 = {u2, u4, u5}; this fixes which ear neighbor is u2
    walk.advance();
    if (!walk.has(u[2]))
        std::swap(u[2], u[3]);
    u[5] = walk.fresh();
    if (walk.degree() == 3)
        return shape(2);
    guard_not_leaf();

    // F4 = {u4, u5, u6}
    walk.advance();
    u[6] = walk.fresh();
    const bool f4_on_u2 = walk.has(u[2]);
    if (walk.degree() == 3)
        return deviation(2, f4_on_u2 ? "C2-1" : "C2-2");
    if (f4_on_u2)
        return deviation(3, "C3");
    guard_not_leaf();

    // F5 = {u4, u6, u7}
    walk.advance();
    u[7] = walk.fresh();
    if (walk.has(u[5]))
        return deviation(4, "C4");
    if (walk.degree() == 3)
        return shape(4);
    guard_not_leaf();

    // F6 = {u6, u7, u8}
    walk.advance();
    u[8] = walk.fresh();
    if (walk.has(u[4]))
        return deviation(5, "C5b");
    if (walk.degree() == 3)
        return deviation(5, "C5a");
    guard_not_leaf();

    // F7 = {u6, u8, u9}
    walk.advance();
    u[9] = walk.fresh();
    if (walk.has(u[7]))
        return deviation(6, "C6a");
    if (walk.degree() == 3)
        return shape(6);
    if (walk.degree() == 1)
        return deviation(6, "C6b");

    // F8 is {u8, u9, u10} or {u6, u9, u10}
    walk.advance();
    u[10] = walk.fresh();
    return deviation(6, walk.has(u[8]) ? "C6c" : "C6d");
}

std::vector<ReductionSite> all_reduction_sites(const MopGraph& g, const DualTree& t)
{
    std::vector<ReductionSite> sites;
    for (int a = 0; a < t.size(); ++a) {
        if (t.degree(a) != 3)
            continue;
        std::vector<BranchShape> branches;
        for (int nb : t.adjacency[a]) {
            int prev = a;
            int cur = nb;
            while (t.degree(cur) == 2) {
                int nxt = t.adjacency[cur][0] == prev ? t.adjacency[cur][1] : t.adjacency[cur][0];
                prev = cur;
                cur = nxt;
            }
            if (t.degree(cur) != 1)
                continue;
            auto m = match_branch_shape(g, t, cur);
            if (auto* b = std::get_if<BranchShape>(&m); b && b->anchor == a)
                branches.push_back(*b);
        }
        for (std::size_t i = 0; i < branches.size(); ++i)
            for (std::size_t j = i + 1; j < branches.size(); ++j) {
                const auto& x = branches[i];
                const auto& y = branches[j];
                sites.push_back(x.dist <= y.dist ? ReductionSite{a, x, y} : ReductionSite{a, y, x});
            }
    }
    std::stable_sort(sites.begin(), sites.end(), [](const ReductionSite& p, const ReductionSite& q) {
        return std::tie(p.s.dist, p.t.dist) < std::tie(q.s.dist, q.t.dist);
    });
    return sites;
}

ReductionSite find_reduction_site(const MopGraph& g, const DualTree& t)
{
    bool has_branch_node = false;
    for (int i = 0; i < t.size(); ++i)
        has_branch_node = has_branch_node || t.degree(i) == 3;
    if (!has_branch_node)
        throw Error(Errc::NoDegree3Node, "dual tree is a path");
    for (int leaf : t.leaves())
        if (auto m = match_branch_shape(g, t, leaf); std::holds_alternative<Deviation>(m))
            throw Error(Errc::DeviationPresent,
                "leaf " + std::to_string(leaf) + " deviates (" + std::get<Deviation>(m).rule + ")");
    auto sites = all_reduction_sites(g, t);
    // a degree-3 node with two pure leaf branches exists in every such tree
    if (sites.empty())
        throw Error(Errc::NoDegree3Node, "no degree-3 node with two leaf branches");
    return sites.front();
}

}  // namespace mopdom

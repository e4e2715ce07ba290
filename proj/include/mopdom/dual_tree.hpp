#pragma once

#include "mopdom/graph.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace mopdom {

enum class TriangleKind { ear, internal, side };

const char* to_string(TriangleKind kind) noexcept;

struct Triangle {
    std::array<Vertex, 3> vertices{};  // sorted
    TriangleKind kind = TriangleKind::side;

    [[nodiscard]] bool contains(Vertex v) const
    {
        return vertices[0] == v || vertices[1] == v || vertices[2] == v;
    }
};

struct DualEdge {
    int a = 0;
    int b = 0;
    Chord chord;  // the chord both triangles share
};

/// Dual tree of a maximal outerplane graph: one node per inner face, two
/// nodes adjacent when their triangles share a chord.
struct DualTree {
    std::vector<Triangle> nodes;
    std::vector<DualEdge> edges;
    std::vector<std::vector<int>> adjacency;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(nodes.size()); }
    [[nodiscard]] int degree(int node) const { return static_cast<int>(adjacency.at(node).size()); }
    [[nodiscard]] std::vector<int> leaves() const;
};

DualTree build_dual_tree(const MopGraph& g);

struct PathTree {};

struct NearestAnchor {
    int anchor = -1;
    int dist = 0;
    std::vector<int> path;  // leaf first, anchor last
};

/// Nearest degree-3 node from a leaf, or PathTree when the tree has none.
/// Throws NotALeaf.
std::variant<NearestAnchor, PathTree> nearest_degree3(const DualTree& t, int leaf);

/// Role labels u1..u10 along a branch; index 0 is unused, -1 means unset.
struct RoleLabels {
    std::array<Vertex, 11> at;

    RoleLabels() { at.fill(-1); }
    [[nodiscard]] Vertex operator[](int i) const { return at.at(i); }
    Vertex& operator[](int i) { return at.at(i); }
    /// Number of leading roles u1, u2, ... that are set.
    [[nodiscard]] int count() const;
};

/// Leaf-to-anchor branch matching the forced triangle sequence
/// F1={u1,u2,u3}, F2={u2,u3,u4}, F3={u2,u4,u5}, F4={u4,u5,u6},
/// F5={u4,u6,u7}, F6={u6,u7,u8}, F7={u6,u8,u9}.
struct BranchShape {
    int leaf = -1;
    int anchor = -1;
    int dist = 0;  // 1, 2, 4 or 6
    RoleLabels labels;
    std::vector<int> path;  // leaf first, anchor last
};

/// The first point where the walk from a leaf leaves the forced sequence.
/// `rule` names the reduction that handles it: C2-1, C2-2, C3, C4, C5a, C5b,
/// C6a, C6b (the nine-vertex terminal graph), C6c or C6d.
struct Deviation {
    int leaf = -1;
    int claim = 0;
    std::string rule;
    RoleLabels witness_labels;
    std::vector<int> path;  // triangles walked so far, leaf first
};

/// Requires n >= 9 (PreconditionTooSmall) and a leaf (NotALeaf).
std::variant<BranchShape, Deviation> match_branch_shape(const MopGraph& g, const DualTree& t, int leaf);

struct ReductionSite {
    int anchor = -1;
    BranchShape s;  // shorter branch, labels u_i
    BranchShape t;  // labels v_i; s.dist <= t.dist
};

/// Every (degree-3 node, pair of pure-path leaf branches) in deterministic
/// order: by (d_s, d_t), then anchor index, then leaves. Branches whose walk
/// deviates are skipped.
std::vector<ReductionSite> all_reduction_sites(const MopGraph& g, const DualTree& t);

/// First site of all_reduction_sites. Throws NoDegree3Node when the dual tree
/// is a path and DeviationPresent when some leaf does not match a branch shape.
ReductionSite find_reduction_site(const MopGraph& g, const DualTree& t);

}  // namespace mopdom

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace mopdom {

using Vertex = int;

/// Unordered vertex pair, stored with a < b.
struct Chord {
    Vertex a = 0;
    Vertex b = 0;

    Chord() = default;
    Chord(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {}

    auto operator<=>(const Chord&) const = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
    explicit VertexSet(std::vector<Vertex> vs);

    void insert(Vertex v);
    void erase(Vertex v);
    [[nodiscard]] bool contains(Vertex v) const;
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] const std::vector<Vertex>& members() const noexcept { return members_; }
    [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
    [[nodiscard]] auto end() const noexcept { return members_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<Vertex> members_;
};

/// A maximal outerplane graph. Vertices 0..n-1 appear in clockwise order on
/// the outer Hamiltonian cycle; the edge set is the cycle plus n-3 pairwise
/// non-crossing chords. Immutable once built.
class MopGraph {
public:
    /// Validates and builds. Throws WrongChordCount, CrossingChords,
    /// DuplicateOrDegenerateChord or VertexOutOfRange.
    static MopGraph build(int n, std::span<const Chord> chords);
    static MopGraph build(int n, std::initializer_list<Chord> chords)
    {
        return build(n, std::span<const Chord>(chords.begin(), chords.size()));
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Chord>& chords() const noexcept { return chords_; }
    [[nodiscard]] std::span<const Vertex> adjacent_to(Vertex v) const;
    [[nodiscard]] int degree(Vertex v) const;
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
    [[nodiscard]] bool is_cycle_edge(Vertex u, Vertex v) const;
    [[nodiscard]] int edge_count() const noexcept { return 2 * n_ - 3; }
    /// All edges (cycle edges first, then chords), each with a < b.
    [[nodiscard]] std::vector<Chord> edges() const;

    bool operator==(const MopGraph& o) const { return n_ == o.n_ && chords_ == o.chords_; }

private:
    MopGraph(int n, std::vector<Chord> chords);
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Chord> chords_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Open neighborhood N(v).
VertexSet neighbors(const MopGraph& g, Vertex v);
/// Closed neighborhood N[v].
VertexSet closed_neighbors(const MopGraph& g, Vertex v);
int degree(const MopGraph& g, Vertex v);
int distance(const MopGraph& g, Vertex u, Vertex v);
/// BFS distances from `source` to every vertex.
std::vector<int> distances_from(const MopGraph& g, Vertex source);

struct Recognition {
    MopGraph graph;
    /// original id -> canonical id (position on the outer cycle)
    std::map<std::int64_t, Vertex> labeling;
};

/// Recognizes a maximal outerplanar graph given as an edge list by repeated
/// ear removal and returns it relabeled along its outer cycle: vertex 0 is
/// the smallest original id, vertex 1 its smaller cycle neighbor.
Recognition recognize_mop(std::span<const std::pair<std::int64_t, std::int64_t>> edges);

struct Reduction {
    MopGraph graph;
    /// old id -> new id, -1 for deleted vertices
    std::vector<Vertex> map;
};

/// G - del + add. Surviving vertices keep their relative outer-cycle order.
/// Throws ResultNotMaximalOuterplanar when the result is not a MOP.
Reduction reduce_graph(const MopGraph& g, const VertexSet& del, std::span<const Chord> add = {});

/// Lexicographically smallest chord list over the 2n rotations/reflections.
MopGraph canonical_form(const MopGraph& g);

/// Applies a dihedral map: vertex v goes to (reflect ? shift - v : v + shift) mod n.
MopGraph transform(const MopGraph& g, int shift, bool reflect);

}  // namespace mopdom

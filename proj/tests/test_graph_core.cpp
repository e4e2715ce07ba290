#include "mopdom/error.hpp"
#include "mopdom/generators.hpp"
#include "mopdom/graph.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace mopdom;

namespace {

Errc code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::ParseError;
}

std::vector<std::pair<std::int64_t, std::int64_t>> edge_pairs(const MopGraph& g)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& e : g.edges())
        out.emplace_back(e.a, e.b);
    return out;
}

}  // namespace

TEST(BuildMop, Diamond)
{
    auto g = MopGraph::build(4, {{0, 2}});
    EXPECT_EQ(g.edges(), (std::vector<Chord>{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}));
    EXPECT_EQ(g.edge_count(), 5);
}

TEST(BuildMop, SnakeSixIsValid)
{
    auto g = MopGraph::build(6, {{1, 5}, {1, 4}, {2, 4}});
    EXPECT_EQ(g, snake(6));
    EXPECT_EQ(g.chords(), (std::vector<Chord>{{1, 4}, {1, 5}, {2, 4}}));
}

TEST(BuildMop, Rejections)
{
    EXPECT_EQ(code_of([] { (void)MopGraph::build(5, {{0, 2}}); }), Errc::WrongChordCount);
    EXPECT_EQ(code_of([] { (void)MopGraph::build(6, {{0, 3}, {1, 4}, {0, 2}}); }), Errc::CrossingChords);
    EXPECT_EQ(code_of([] { (void)MopGraph::build(5, {{0, 2}, {0, 2}}); }), Errc::DuplicateOrDegenerateChord);
    EXPECT_EQ(code_of([] { (void)MopGraph::build(5, {{0, 1}, {0, 2}}); }), Errc::DuplicateOrDegenerateChord);
    EXPECT_EQ(code_of([] { (void)MopGraph::build(5, {{2, 2}, {0, 2}}); }), Errc::DuplicateOrDegenerateChord);
    EXPECT_EQ(code_of([] { (void)MopGraph::build(4, {{0, 7}}); }), Errc::VertexOutOfRange);
}

TEST(Neighbors, Examples)
{
    EXPECT_EQ(neighbors(snake(6), 0), (VertexSet{1, 5}));
    EXPECT_EQ(neighbors(fan(2), 0), (VertexSet{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(neighbors(fixture("diamond"), 1), (VertexSet{0, 2}));
    EXPECT_EQ(closed_neighbors(fixture("diamond"), 1), (VertexSet{0, 1, 2}));
    EXPECT_EQ(code_of([] { (void)neighbors(snake(6), 6); }), Errc::VertexOutOfRange);
}

TEST(Degree, Examples)
{
    EXPECT_EQ(degree(fixture("diamond"), 0), 3);
    EXPECT_EQ(degree(snake(6), 3), 2);
    EXPECT_EQ(degree(fan(3), 0), 9);
    EXPECT_EQ(code_of([] { (void)degree(snake(6), -1); }), Errc::VertexOutOfRange);
}

TEST(Distance, Examples)
{
    EXPECT_EQ(distance(snake(6), 0, 3), 3);
    EXPECT_EQ(distance(snake(6), 4, 4), 0);
    EXPECT_EQ(distance(fan(2), 1, 6), 2);
    EXPECT_EQ(code_of([] { (void)distance(snake(6), 0, 9); }), Errc::VertexOutOfRange);
}

TEST(Distance, MatchesFloydWarshallAndIsAMetric)
{
    for (int n = 3; n <= 9; ++n)
        for_each_triangulation(n, [&](const MopGraph& g) {
            const auto ref = oracle::floyd_warshall(g);
            for (int u = 0; u < n; ++u) {
                const auto d = distances_from(g, u);
                for (int v = 0; v < n; ++v) {
                    ASSERT_EQ(d[v], ref[u][v]);
                    ASSERT_EQ(d[v] == 0, u == v);
                    ASSERT_EQ(d[v], distances_from(g, v)[u]);
                    for (int w = 0; w < n; ++w)
                        ASSERT_LE(ref[u][w], ref[u][v] + ref[v][w]);
                }
            }
        });
}

TEST(Structure, EdgeCountAndDegreeTwoCharacterization)
{
    for (int n = 4; n <= 10; ++n)
        for_each_triangulation(n, [&](const MopGraph& g) {
            ASSERT_EQ(g.edges().size(), static_cast<std::size_t>(2 * n - 3));
            for (Vertex v = 0; v < n; ++v) {
                bool on_chord = std::any_of(g.chords().begin(), g.chords().end(),
                    [&](const Chord& c) { return c.a == v || c.b == v; });
                bool ear = !on_chord && g.adjacent((v + n - 1) % n, (v + 1) % n);
                ASSERT_EQ(g.degree(v) == 2, ear);
                ASSERT_GE(g.degree(v), 2);
            }
        });
}

TEST(Recognize, ShuffledFanOne)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> edges{{40, 17}, {17, 99}, {99, 5}, {5, 40}, {40, 99}};
    auto r = recognize_mop(edges);
    EXPECT_EQ(r.graph.n(), 4);
    EXPECT_EQ(canonical_form(r.graph), canonical_form(fan(1)));
    EXPECT_EQ(r.labeling.size(), 4U);
}

TEST(Recognize, FourCycleIsRejected)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    EXPECT_EQ(code_of([&] { (void)recognize_mop(edges); }), Errc::NotMaximalOuterplanar);
    EXPECT_EQ(code_of([] { (void)recognize_mop({}); }), Errc::EmptyOrDisconnected);
}

TEST(Recognize, RandomRelabelingRoundTrips)
{
    std::mt19937_64 rng(12345);
    for (int n = 4; n <= 9; ++n)
        for_each_triangulation(n, [&](const MopGraph& g) {
            std::vector<std::int64_t> perm(n);
            std::iota(perm.begin(), perm.end(), 1000);
            std::shuffle(perm.begin(), perm.end(), rng);
            auto edges = edge_pairs(g);
            for (auto& [a, b] : edges) {
                a = perm[a];
                b = perm[b];
            }
            std::shuffle(edges.begin(), edges.end(), rng);
            auto r = recognize_mop(edges);
            ASSERT_EQ(canonical_form(r.graph), canonical_form(g));
            for (const auto& [a, b] : edges)
                ASSERT_TRUE(r.graph.adjacent(r.labeling.at(a), r.labeling.at(b)));
        });
}

TEST(Recognize, RandomLargeGraphs)
{
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto g = random_mop(60 + static_cast<int>(s), 99, s);
        EXPECT_EQ(canonical_form(recognize_mop(edge_pairs(g)).graph), canonical_form(g));
    }
}

TEST(Canonical, InvariantUnderDihedralMaps)
{
    for_each_triangulation(8, [&](const MopGraph& g) {
        const auto c = canonical_form(g);
        for (int shift = 0; shift < 8; ++shift)
            for (bool reflect : {false, true})
                ASSERT_EQ(canonical_form(transform(g, shift, reflect)), c);
    });
}

TEST(ReduceGraph, Examples)
{
    auto r = reduce_graph(snake(6), {0});
    EXPECT_EQ(r.graph.n(), 5);
    EXPECT_EQ(r.map, (std::vector<Vertex>{-1, 0, 1, 2, 3, 4}));

    auto tri = reduce_graph(fixture("diamond"), {1});
    EXPECT_EQ(tri.graph.n(), 3);

    EXPECT_EQ(code_of([] { (void)reduce_graph(fixture("diamond"), {0, 2}); }), Errc::ResultNotMaximalOuterplanar);
}

TEST(ReduceGraph, AddedChordClosesTheGap)
{
    auto g = MopGraph::build(6, {{0, 2}, {0, 3}, {0, 4}});
    std::vector<Chord> add{{1, 4}};
    auto r = reduce_graph(g, {2, 3}, add);
    EXPECT_EQ(r.graph, MopGraph::build(4, {{0, 2}}));
    EXPECT_EQ(r.map, (std::vector<Vertex>{0, 1, -1, -1, 2, 3}));
}

TEST(ReduceGraph, LiftRoundTrip)
{
    for_each_triangulation(9, [&](const MopGraph& g) {
        for (Vertex v = 0; v < g.n(); ++v) {
            if (g.degree(v) != 2)
                continue;
            auto r = reduce_graph(g, {v});
            std::vector<Vertex> back(r.graph.n(), -1);
            for (Vertex x = 0; x < g.n(); ++x)
                if (r.map[x] >= 0)
                    back[r.map[x]] = x;
            for (const auto& e : r.graph.edges())
                ASSERT_TRUE(g.adjacent(back[e.a], back[e.b]));
            ASSERT_EQ(std::count(back.begin(), back.end(), -1), 0);
        }
    });
}

#pragma once

#include "mopdom/graph.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mopdom {

/// Counter-based generator: output i of a stream is a SplitMix64 mix of
/// (key, i), so streams derived from (seed, stream id) never share state and
/// results do not depend on scheduling.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next();
    /// Uniform in [0, bound), bound > 0, without modulo bias.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Hub 0 joined to every vertex of the path 1..3k; n = 3k+1.
MopGraph fan(int k);

/// Zigzag triangulation with a path dual: chords {1,n-1}, {1,n-2}, {2,n-2},
/// {2,n-3}, ... alternately advancing the far and near front.
MopGraph snake(int n);

/// Named fixtures: "diamond", "triangle", "spider6", "triforce9",
/// "branch124", "aziz_gap". Throws UnknownFixture.
MopGraph fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// The configuration earlier ear-removal arguments missed: a degree-2 vertex
/// v between u1 and u with deg u1 = 4, u of degree 2 in G1 = G - {degree-2
/// vertices}, and u0u2 an edge, where u0, u1, u, u2 are consecutive on the
/// outer cycle of G1. Both orientations are tried.
bool has_missing_configuration(const MopGraph& g);

inline constexpr int kEnumerationLimit = 16;

/// Calls `visit` once for every triangulation of the labeled n-gon, in a
/// fixed order, by splitting on the triangle over edge {0, n-1}.
void for_each_triangulation(int n, const std::function<void(const MopGraph&)>& visit, int limit = kEnumerationLimit);

/// Collected form of for_each_triangulation; with `dedup`, one representative
/// (the canonical form) per dihedral class.
std::vector<MopGraph> enumerate_all(int n, bool dedup = false, int limit = kEnumerationLimit);

std::uint64_t catalan(int m);

/// Uniform over the Catalan(n-2) labeled triangulations: a uniform Dyck word
/// from the cycle lemma, mapped to the binary tree of triangles.
MopGraph random_mop(int n, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace mopdom

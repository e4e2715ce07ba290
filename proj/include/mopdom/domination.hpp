#pragma once

#include "mopdom/graph.hpp"

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace mopdom {

/// literal: only vertices outside S need |N[v] ∩ S| >= 2.
/// standard: every vertex needs |N[v] ∩ S| >= 2.
enum class DominationMode { literal, standard };

const char* to_string(DominationMode mode) noexcept;

/// Entry v is |N[v] ∩ S|.
std::vector<int> coverage_counts(const MopGraph& g, const VertexSet& s);

bool is_double_dominating(const MopGraph& g, const VertexSet& s, DominationMode mode = DominationMode::literal);

/// Every v outside S has at least two neighbors in S.
bool is_two_dominating(const MopGraph& g, const VertexSet& s);

/// Degree-2 vertices v_1..v_t in clockwise order, with the graph distance to
/// the clockwise-next one; v_i is bad when that distance is at least 3.
struct BadVertexReport {
    std::vector<Vertex> deg2;
    std::vector<int> succ_dist;
    std::vector<bool> bad;
    int t = 0;
    int k = 0;
};

/// Throws TooSmall for n = 3.
BadVertexReport bad_vertices(const MopGraph& g);

struct ExactResult {
    int size = 0;
    VertexSet witness;  // lexicographically smallest optimal set
};

inline constexpr int kDefaultExactLimit = 22;
inline constexpr int kMaxExactLimit = 63;

/// Size cap for the exact solvers: MOPDOM_EXACT_LIMIT if set, else 22.
int exact_limit();

/// Minimum double dominating set by branch and bound. With forbid_deg2 no
/// degree-2 vertex may be chosen. Throws TooLarge (n over `limit`) or
/// Infeasible.
ExactResult exact_min_double_dom(const MopGraph& g, DominationMode mode, bool forbid_deg2, int limit = exact_limit());

/// Minimum 2-dominating set. Throws TooLarge.
ExactResult exact_min_two_dom(const MopGraph& g, int limit = exact_limit());

/// Known-bound comparisons for one graph. Exact fields are filled only when
/// requested and n is within the exact limit.
struct BoundReport {
    int n = 0;
    int t = 0;
    int k = 0;
    double bound_zhuang_23 = 0;  // 2n/3
    double bound_zhuang_nt = 0;  // (n+t)/2
    double bound_main = 0;       // (n+k)/2
    int lower_bound = 0;         // ceil((n+2)/3)
    std::optional<int> exact_literal;
    std::optional<int> exact_standard;
    std::optional<int> exact_2dom;

    // set when exact values are present
    std::optional<bool> within_main;
    std::optional<bool> within_zhuang_nt;
    std::optional<bool> within_zhuang_23;
    std::optional<bool> above_lower;
    std::optional<bool> standard_within_main;  // informational
};

/// Throws TooSmall for n < 4.
BoundReport bound_report(const MopGraph& g, bool with_exact, int limit = exact_limit());

/// Column order of to_csv_row.
std::string bound_report_csv_header();
std::string to_csv_row(const BoundReport& r);
nlohmann::json to_json(const BoundReport& r);

/// Shortest decimal rendering that always shows a fractional part ("5.0").
std::string format_real(double x);

}  // namespace mopdom

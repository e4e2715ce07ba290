// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include "mopdom/constructive.hpp"
#include "mopdom/domination.hpp"
#include "mopdom/dual_tree.hpp"
#include "mopdom/error.hpp"
#include "mopdom/generators.hpp"
#include "mopdom/io.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace mopdom;

namespace {

// pinned limits and tolerances
constexpr double kFanSeconds = 60.0;
constexpr double kExhaustiveSeconds = 15 * 60.0;
constexpr double kEngineSeconds = 30 * 60.0;
constexpr int kRandomEngineInstances = 500;
constexpr int kRandomEngineMinN = 14;
constexpr int kRandomEngineMaxN = 150;
constexpr std::uint64_t kEngineSeed = 20240611;
constexpr int kChiSquareDraws = 14000;
constexpr double kChiSquareCritical = 34.528;  // df = 13, alpha = 0.001
constexpr std::uint64_t kChiSquareSeed = 77;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why)
    {
        if (pass || detail.tellp() < 4000)
            detail << "    " << why << '\n';
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string dump(const MopGraph& g)
{
    return graph_to_json(g).dump();
}

std::vector<std::pair<std::int64_t, std::int64_t>> shuffled_edges(const MopGraph& g, std::mt19937_64& rng)
{
    std::vector<std::int64_t> ids(g.n());
    for (int i = 0; i < g.n(); ++i)
        ids[i] = 7 * i + 3;
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (const auto& e : g.edges())
        edges.emplace_back(ids[e.a], ids[e.b]);
    std::shuffle(edges.begin(), edges.end(), rng);
    return edges;
}

Outcome fan_family()
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    for (int k = 1; k <= 6; ++k) {
        auto g = fan(k);
        for (auto mode : {DominationMode::literal, DominationMode::standard}) {
            int size = exact_min_double_dom(g, mode, false, kMaxExactLimit).size;
            if (size != k + 1)
                o.fail("fan(" + std::to_string(k) + ") " + to_string(mode) + " = " + std::to_string(size));
        }
    }
    double s = seconds_since(t0);
    o.detail << "    k=1..6, both modes, " << s << " s\n";
    if (s >= kFanSeconds)
        o.fail("took " + std::to_string(s) + " s");
    return o;
}

Outcome exhaustive_bounds()
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    long total = 0;
    long standard_over = 0;
    for (int n = 4; n <= 12; ++n) {
        long main = 0;
        long nt = 0;
        long two_thirds = 0;
        long lower = 0;
        long count = 0;
        for_each_triangulation(n, [&](const MopGraph& g) {
            ++count;
            auto r = bound_report(g, true, kMaxExactLimit);
            const int lit = *r.exact_literal;
            if (2 * lit > n + r.k) {
                if (main++ == 0)
                    o.fail("n=" + std::to_string(n) + ": exact " + std::to_string(lit) + " > (n+k)/2 with k="
                        + std::to_string(r.k) + " on " + dump(g));
            }
            if (2 * lit > n + r.t)
                ++nt;
            if (3 * lit > 2 * n)
                ++two_thirds;
            if (lit < r.lower_bound)
                ++lower;
            if (2 * *r.exact_standard > n + r.k)
                ++standard_over;
        });
        total += count;
        o.detail << "    n=" << n << ": " << count << " MOPs, violations (n+k)/2=" << main << " (n+t)/2=" << nt
                 << " 2n/3=" << two_thirds << " lower=" << lower << '\n';
        if (nt + two_thirds + lower > 0)
            o.fail("n=" + std::to_string(n) + ": Zhuang or lower-bound violation");
    }
    double s = seconds_since(t0);
    o.detail << "    " << total << " instances in " << s << " s; standard mode exceeds (n+k)/2 on " << standard_over
             << " (reported only)\n";
    if (s >= kExhaustiveSeconds)
        o.fail("took " + std::to_string(s) + " s");
    return o;
}

Outcome small_cases_without_ears()
{
    Outcome o;
    for (int n = 4; n <= 8; ++n) {
        long bad = 0;
        long count = 0;
        for_each_triangulation(n, [&](const MopGraph& g) {
            ++count;
            const int k = bad_vertices(g).k;
            auto r = exact_min_double_dom(g, DominationMode::literal, true);
            if (2 * r.size > n + k && bad++ == 0)
                o.fail("n=" + std::to_string(n) + ": " + std::to_string(r.size) + " > (n+k)/2 with k=" + std::to_string(k)
                    + " on " + dump(g));
        });
        o.detail << "    n=" << n << ": " << count << " MOPs, " << bad << " violations\n";
    }
    return o;
}

Outcome engine_totality()
{
    Outcome o;
    std::map<std::string, long> failures;
    auto check = [&](const MopGraph& g) {
        try {
            auto r = solve_bound(g);
            if (!certify(g, r)) {
                ++failures["certify rejected"];
                o.fail("certificate rejected on " + dump(g));
            }
        } catch (const Error& e) {
            std::string key(to_string(e.code()));
            if (failures[key]++ < 3)
                o.fail(key + " on " + dump(g));
            else
                o.pass = false;
        }
    };
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 9; n <= 13; ++n) {
        long before = 0;
        for (const auto& [k, v] : failures)
            before += v;
        long count = 0;
        for_each_triangulation(n, [&](const MopGraph& g) {
            ++count;
            check(g);
        });
        long after = 0;
        for (const auto& [k, v] : failures)
            after += v;
        o.detail << "    n=" << n << ": " << count << " MOPs, " << after - before << " failures\n";
    }
    double exhaustive = seconds_since(t0);
    if (exhaustive >= kEngineSeconds)
        o.fail("exhaustive part took " + std::to_string(exhaustive) + " s");

    long before = 0;
    for (const auto& [k, v] : failures)
        before += v;
    CounterRng sizes(kEngineSeed, 0);
    for (int i = 0; i < kRandomEngineInstances; ++i) {
        int n = kRandomEngineMinN + static_cast<int>(sizes.below(kRandomEngineMaxN - kRandomEngineMinN + 1));
        check(random_mop(n, kEngineSeed, static_cast<std::uint64_t>(i) + 1));
    }
    long after = 0;
    for (const auto& [k, v] : failures)
        after += v;
    o.detail << "    random: " << kRandomEngineInstances << " MOPs with n in [" << kRandomEngineMinN << ", "
             << kRandomEngineMaxN << "], seed " << kEngineSeed << ", " << after - before << " failures\n";
    for (const auto& [k, v] : failures)
        o.detail << "    " << k << ": " << v << '\n';
    o.detail << "    exhaustive part " << exhaustive << " s\n";
    return o;
}

Outcome tightness()
{
    Outcome o;
    struct Case {
        const char* name;
        MopGraph g;
        int expect;
    };
    for (const auto& c : {Case{"snake(6)", snake(6), 4}, Case{"triforce9", fixture("triforce9"), 6}}) {
        const int brute = oracle::min_set(c.g, oracle::Kind::double_literal)->size;
        const int k = bad_vertices(c.g).k;
        const int standard = oracle::min_set(c.g, oracle::Kind::double_standard)->size;
        const int no_deg2 = oracle::min_set(c.g, oracle::Kind::double_literal, true)->size;
        o.detail << "    " << c.name << ": brute force literal " << brute << ", standard " << standard
                 << ", literal without degree-2 vertices " << no_deg2 << ", (n+k)/2 = " << (c.g.n() + k) / 2.0 << '\n';
        if (brute != c.expect || 2 * brute != c.g.n() + k)
            o.fail(std::string(c.name) + " is not tight");
        if (exact_min_double_dom(c.g, DominationMode::literal, false).size != brute)
            o.fail(std::string(c.name) + ": branch and bound disagrees");
    }
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    long compared = 0;
    for (int n = 3; n <= 9; ++n)
        for_each_triangulation(n, [&](const MopGraph& g) {
            for (bool forbid : {false, true})
                for (auto [mode, kind] : {std::pair{DominationMode::literal, oracle::Kind::double_literal},
                         std::pair{DominationMode::standard, oracle::Kind::double_standard}}) {
                    auto slow = oracle::min_set(g, kind, forbid);
                    ++compared;
                    if (!slow) {
                        try {
                            (void)exact_min_double_dom(g, mode, forbid);
                            o.fail("feasible only for branch and bound on " + dump(g));
                        } catch (const Error& e) {
                            if (e.code() != Errc::Infeasible)
                                o.fail(std::string(e.what()) + " on " + dump(g));
                        }
                        continue;
                    }
                    auto fast = exact_min_double_dom(g, mode, forbid);
                    if (fast.size != slow->size || fast.witness.members() != slow->witness)
                        o.fail(std::string(to_string(mode)) + (forbid ? " forbid" : "") + " mismatch on " + dump(g));
                }
            auto fast = exact_min_two_dom(g);
            auto slow = oracle::min_set(g, oracle::Kind::two);
            ++compared;
            if (fast.size != slow->size || fast.witness.members() != slow->witness)
                o.fail("2-domination mismatch on " + dump(g));
        });
    o.detail << "    " << compared << " comparisons on all MOPs with n <= 9\n";
    return o;
}

Outcome generator_correctness()
{
    Outcome o;
    std::mt19937_64 rng(5);
    long round_trips = 0;
    auto round_trip = [&](const MopGraph& g) {
        ++round_trips;
        auto r = recognize_mop(shuffled_edges(g, rng));
        if (canonical_form(r.graph) != canonical_form(g))
            o.fail("recognition round trip failed on " + dump(g));
    };
    for (int n = 3; n <= 12; ++n) {
        std::uint64_t count = 0;
        for_each_triangulation(n, [&](const MopGraph& g) {
            ++count;
            round_trip(g);
        });
        if (count != oracle::catalan(n - 2))
            o.fail("n=" + std::to_string(n) + ": " + std::to_string(count) + " triangulations, expected "
                + std::to_string(oracle::catalan(n - 2)));
    }

    auto six = enumerate_all(6);
    std::map<std::vector<Chord>, int> index;
    for (std::size_t i = 0; i < six.size(); ++i)
        index[six[i].chords()] = static_cast<int>(i);
    std::vector<long> hits(six.size(), 0);
    for (int i = 0; i < kChiSquareDraws; ++i) {
        auto g = random_mop(6, kChiSquareSeed, static_cast<std::uint64_t>(i));
        ++hits[index.at(g.chords())];
        round_trip(g);
    }
    const double expected = static_cast<double>(kChiSquareDraws) / static_cast<double>(six.size());
    double chi2 = 0;
    for (long h : hits)
        chi2 += (h - expected) * (h - expected) / expected;
    o.detail << "    chi-square over 14 triangulations: " << chi2 << " (critical " << kChiSquareCritical << ", "
             << kChiSquareDraws << " draws)\n";
    if (chi2 >= kChiSquareCritical)
        o.fail("random_mop(6) fails uniformity");

    for (int k = 1; k <= 6; ++k)
        round_trip(fan(k));
    for (int n = 4; n <= 40; ++n)
        round_trip(snake(n));
    for (const auto& name : fixture_names())
        round_trip(fixture(name));
    for (std::uint64_t i = 0; i < 200; ++i)
        round_trip(random_mop(14 + static_cast<int>(i % 137), 9, i));
    o.detail << "    " << round_trips << " recognition round trips\n";
    return o;
}

Outcome structural_invariants()
{
    Outcome o;
    long leaves_checked = 0;
    auto check_matching = [&](const MopGraph& g, const DualTree& t) {
        for (int leaf : t.leaves()) {
            ++leaves_checked;
            try {
                auto m = match_branch_shape(g, t, leaf);
                if (auto* b = std::get_if<BranchShape>(&m)) {
                    if (b->dist != 1 && b->dist != 2 && b->dist != 4 && b->dist != 6)
                        o.fail("distance " + std::to_string(b->dist) + " on " + dump(g));
                } else {
                    auto& d = std::get<Deviation>(m);
                    if (d.claim < 2 || d.claim > 6 || d.rule.empty())
                        o.fail("malformed deviation on " + dump(g));
                }
            } catch (const Error& e) {
                o.fail(std::string(e.what()) + " on " + dump(g));
            }
        }
    };
    for (int n = 3; n <= 12; ++n)
        for_each_triangulation(n, [&](const MopGraph& g) {
            auto t = build_dual_tree(g);
            int deg2 = 0;
            for (Vertex v = 0; v < n; ++v)
                deg2 += g.degree(v) == 2 ? 1 : 0;
            int deg3 = 0;
            int internal = 0;
            for (int i = 0; i < t.size(); ++i) {
                deg3 += t.degree(i) == 3 ? 1 : 0;
                const auto& f = t.nodes[i].vertices;
                bool none_on_cycle = !g.is_cycle_edge(f[0], f[1]) && !g.is_cycle_edge(f[1], f[2]) && !g.is_cycle_edge(f[0], f[2]);
                internal += none_on_cycle ? 1 : 0;
            }
            if (n >= 4 && static_cast<int>(t.leaves().size()) != deg2)
                o.fail("leaf count on " + dump(g));
            if (deg3 != internal)
                o.fail("internal triangle count on " + dump(g));
            if (n >= 9)
                check_matching(g, t);
        });
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto g = random_mop(14 + static_cast<int>(i % 137), 31, i);
        check_matching(g, build_dual_tree(g));
    }
    o.detail << "    " << leaves_checked << " leaves matched (n = 9..12 exhaustive, 200 random up to n = 150)\n";
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "fan family exactness", fan_family},
        {2, "exhaustive bound check, 4 <= n <= 12", exhaustive_bounds},
        {3, "small cases without degree-2 vertices, 4 <= n <= 8", small_cases_without_ears},
        {4, "strict engine totality and soundness", engine_totality},
        {5, "tightness witnesses", tightness},
        {6, "branch and bound equals subset scan", oracle_equivalence},
        {7, "generator correctness", generator_correctness},
        {8, "structural invariants", structural_invariants},
    };
    int failed = 0;
    std::vector<std::string> summary;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("unexpected exception: ") + e.what());
        }
        double s = seconds_since(t0);
        std::cout << "criterion " << c.id << ": " << c.title << '\n' << o.detail.str();
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.title << " (" << std::round(s * 100) / 100
             << " s)";
        std::cout << line.str() << "\n" << std::endl;
        summary.push_back(line.str());
        failed += o.pass ? 0 : 1;
    }
    std::cout << "summary\n";
    for (const auto& s : summary)
        std::cout << "  " << s << '\n';
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

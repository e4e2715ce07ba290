#include "mopdom/domination.hpp"

#include "mopdom/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace mopdom {

const char* to_string(DominationMode mode) noexcept
{
    return mode == DominationMode::literal ? "literal" : "standard";
}

std::vector<int> coverage_counts(const MopGraph& g, const VertexSet& s)
{
    std::vector<bool> in(g.n(), false);
    for (Vertex v : s) {
        if (v < 0 || v >= g.n())
            throw Error(Errc::VertexOutOfRange, "set member " + std::to_string(v));
        in[v] = true;
    }
    std::vector<int> counts(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        counts[v] = in[v] ? 1 : 0;
        for (Vertex w : g.adjacent_to(v))
            counts[v] += in[w] ? 1 : 0;
    }
    return counts;
}

bool is_double_dominating(const MopGraph& g, const VertexSet& s, DominationMode mode)
{
    auto counts = coverage_counts(g, s);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (mode == DominationMode::literal && s.contains(v))
            continue;
        if (counts[v] < 2)
            return false;
    }
    return true;
}

bool is_two_dominating(const MopGraph& g, const VertexSet& s)
{
    for (Vertex v = 0; v < g.n(); ++v) {
        if (s.contains(v))
            continue;
        int c = 0;
        for (Vertex w : g.adjacent_to(v))
            c += s.contains(w) ? 1 : 0;
        if (c < 2)
            return false;
    }
    return true;
}

BadVertexReport bad_vertices(const MopGraph& g)
{
    if (g.n() < 4)
        throw Error(Errc::TooSmall, "bad vertices need n >= 4");
    BadVertexReport r;
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) == 2)
            r.deg2.push_back(v);
    r.t = static_cast<int>(r.deg2.size());
    for (int i = 0; i < r.t; ++i) {
        int d = distance(g, r.deg2[i], r.deg2[(i + 1) % r.t]);
        r.succ_dist.push_back(d);
        r.bad.push_back(d >= 3);
        r.k += d >= 3 ? 1 : 0;
    }
    return r;
}

int exact_limit()
{
    if (const char* env = std::getenv("MOPDOM_EXACT_LIMIT")) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
        if (ec == std::errc() && v > 0)
            return std::min(v, kMaxExactLimit);
    }
    return kDefaultExactLimit;
}

namespace {

enum class Objective { literal, standard, two };

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

/// Branch and bound over bitmask states. Each node picks an unsatisfied
/// vertex and branches on which of its remaining candidates enters the set
/// (earlier candidates excluded in later branches).
class ExactSearch {
public:
    ExactSearch(const MopGraph& g, Objective obj) : n_(g.n()), obj_(obj), closed_(g.n()), open_(g.n())
    {
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex w : g.adjacent_to(v))
                open_[v] |= bit(w);
            closed_[v] = open_[v] | bit(v);
        }
    }

    /// Smallest set containing `in`, avoiding `out`, of size at most `cap`.
    std::optional<Mask> solve(Mask in, Mask out, int cap)
    {
        best_size_ = cap + 1;
        best_.reset();
        dfs(in, out);
        return best_;
    }

private:
    [[nodiscard]] int deficit(int v, Mask in) const
    {
        switch (obj_) {
        case Objective::literal:
            return (in & bit(v)) ? 0 : std::max(0, 2 - std::popcount(closed_[v] & in));
        case Objective::standard:
            return std::max(0, 2 - std::popcount(closed_[v] & in));
        case Objective::two:
            return (in & bit(v)) ? 0 : std::max(0, 2 - std::popcount(open_[v] & in));
        }
        return 0;
    }

    /// Vertices whose selection lowers v's deficit.
    [[nodiscard]] Mask helpers(int v, Mask free) const { return closed_[v] & free; }

    bool propagate(Mask& in, Mask& out) const
    {
        for (bool changed = true; changed;) {
            changed = false;
            const Mask free = ~(in | out) & full();
            for (int v = 0; v < n_; ++v) {
                int d = deficit(v, in);
                if (d == 0)
                    continue;
                if (obj_ != Objective::standard && (free & bit(v)))
                    continue;  // selecting v itself settles it
                Mask contrib = obj_ == Objective::two ? open_[v] & free : closed_[v] & free;
                int c = std::popcount(contrib);
                if (c < d)
                    return false;
                if (c == d) {
                    in |= contrib;
                    changed = true;
                    break;
                }
            }
        }
        return true;
    }

    /// Fewest additional vertices that could cover the remaining demand.
    [[nodiscard]] int lower_bound(Mask in, Mask out) const
    {
        int demand_total = 0;
        int def[64];
        for (int v = 0; v < n_; ++v) {
            def[v] = deficit(v, in);
            demand_total += def[v];
        }
        if (demand_total == 0)
            return 0;
        int gains[64];
        int m = 0;
        const Mask free = ~(in | out) & full();
        for (int w = 0; w < n_; ++w) {
            if (!(free & bit(w)))
                continue;
            int gain = 0;
            for (Mask rest = closed_[w]; rest; rest &= rest - 1) {
                int u = std::countr_zero(rest);
                if (def[u] == 0)
                    continue;
                gain += (u == w && obj_ != Objective::standard) ? def[u] : 1;
            }
            gains[m++] = gain;
        }
        std::sort(gains, gains + m, std::greater<>());
        int covered = 0;
        for (int i = 0; i < m; ++i) {
            covered += gains[i];
            if (covered >= demand_total)
                return i + 1;
        }
        return n_ + 1;
    }

    void dfs(Mask in, Mask out)
    {
        if (!propagate(in, out))
            return;
        const int size = std::popcount(in);
        if (size >= best_size_)
            return;
        if (size + lower_bound(in, out) >= best_size_)
            return;

        const Mask free = ~(in | out) & full();
        int pick = -1;
        int pick_slack = 0;
        int pick_def = 0;
        for (int v = 0; v < n_; ++v) {
            int d = deficit(v, in);
            if (d == 0)
                continue;
            int slack = std::popcount(helpers(v, free)) - d;
            if (pick < 0 || slack < pick_slack || (slack == pick_slack && d > pick_def)) {
                pick = v;
                pick_slack = slack;
                pick_def = d;
            }
        }
        if (pick < 0) {
            best_size_ = size;
            best_ = in;
            return;
        }
        Mask excluded = out;
        for (Mask rest = helpers(pick, free); rest; rest &= rest - 1) {
            int w = std::countr_zero(rest);
            dfs(in | bit(w), excluded);
            excluded |= bit(w);
        }
    }

    [[nodiscard]] Mask full() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

    int n_;
    Objective obj_;
    std::vector<Mask> closed_;
    std::vector<Mask> open_;
    int best_size_ = 0;
    std::optional<Mask> best_;
};

ExactResult solve_exact(const MopGraph& g, Objective obj, bool forbid_deg2, int limit)
{
    if (g.n() > std::min(limit, kMaxExactLimit))
        throw Error(Errc::TooLarge, "n=" + std::to_string(g.n()) + " exceeds exact limit " + std::to_string(limit));

    Mask forbidden = 0;
    if (forbid_deg2)
        for (Vertex v = 0; v < g.n(); ++v)
            if (g.degree(v) == 2)
                forbidden |= bit(v);

    ExactSearch search(g, obj);
    auto best = search.solve(0, forbidden, g.n());
    if (!best)
        throw Error(Errc::Infeasible, "no feasible set");
    const int optimum = std::popcount(*best);

    // Walk vertices in label order, keeping each one whenever an optimal set
    // containing the current choices and it still exists.
    Mask witness = *best;
    Mask fixed_in = 0;
    Mask fixed_out = forbidden;
    for (int v = 0; v < g.n() && std::popcount(fixed_in) < optimum; ++v) {
        if (fixed_out & bit(v))
            continue;
        if (witness & bit(v)) {
            fixed_in |= bit(v);
            continue;
        }
        if (auto alt = search.solve(fixed_in | bit(v), fixed_out, optimum)) {
            witness = *alt;
            fixed_in |= bit(v);
        } else {
            fixed_out |= bit(v);
        }
    }

    ExactResult r;
    r.size = optimum;
    std::vector<Vertex> members;
    for (int v = 0; v < g.n(); ++v)
        if (witness & bit(v))
            members.push_back(v);
    r.witness = VertexSet(std::move(members));
    return r;
}

std::string flag(const std::optional<bool>& b)
{
    return b ? (*b ? "true" : "false") : "";
}

std::string opt_int(const std::optional<int>& x)
{
    return x ? std::to_string(*x) : "";
}

template <typename T>
nlohmann::json opt_json(const std::optional<T>& x)
{
    return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

}  // namespace

ExactResult exact_min_double_dom(const MopGraph& g, DominationMode mode, bool forbid_deg2, int limit)
{
    return solve_exact(g, mode == DominationMode::literal ? Objective::literal : Objective::standard, forbid_deg2, limit);
}

ExactResult exact_min_two_dom(const MopGraph& g, int limit)
{
    return solve_exact(g, Objective::two, false, limit);
}

BoundReport bound_report(const MopGraph& g, bool with_exact, int limit)
{
    if (g.n() < 4)
        throw Error(Errc::TooSmall, "bound report needs n >= 4");
    auto bad = bad_vertices(g);
    BoundReport r;
    r.n = g.n();
    r.t = bad.t;
    r.k = bad.k;
    r.bound_zhuang_23 = 2.0 * r.n / 3.0;
    r.bound_zhuang_nt = (r.n + r.t) / 2.0;
    r.bound_main = (r.n + r.k) / 2.0;
    r.lower_bound = (r.n + 2 + 2) / 3;
    if (with_exact && g.n() <= limit) {
        r.exact_literal = exact_min_double_dom(g, DominationMode::literal, false, limit).size;
        r.exact_standard = exact_min_double_dom(g, DominationMode::standard, false, limit).size;
        r.exact_2dom = exact_min_two_dom(g, limit).size;
        // sizes are integers, so "x <= n/2" style comparisons are exact in doubles
        r.within_main = *r.exact_literal <= r.bound_main;
        r.within_zhuang_nt = *r.exact_literal <= r.bound_zhuang_nt;
        r.within_zhuang_23 = *r.exact_literal <= r.bound_zhuang_23;
        r.above_lower = *r.exact_2dom >= r.lower_bound && *r.exact_literal >= r.lower_bound;
        r.standard_within_main = *r.exact_standard <= r.bound_main;
    }
    return r;
}

std::string format_real(double x)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    std::string s(buf, ptr);
    if (s.find_first_of(".eEn") == std::string::npos)
        s += ".0";
    return s;
}

std::string bound_report_csv_header()
{
    return "n,t,k,bound_zhuang_23,bound_zhuang_nt,bound_main,lower_bound,"
           "exact_literal,exact_standard,exact_2dom,"
           "within_main,within_zhuang_nt,within_zhuang_23,above_lower,standard_within_main";
}

std::string to_csv_row(const BoundReport& r)
{
    std::ostringstream os;
    os << r.n << ',' << r.t << ',' << r.k << ',' << format_real(r.bound_zhuang_23) << ','
       << format_real(r.bound_zhuang_nt) << ',' << format_real(r.bound_main) << ',' << r.lower_bound << ','
       << opt_int(r.exact_literal) << ',' << opt_int(r.exact_standard) << ',' << opt_int(r.exact_2dom) << ','
       << flag(r.within_main) << ',' << flag(r.within_zhuang_nt) << ',' << flag(r.within_zhuang_23) << ','
       << flag(r.above_lower) << ',' << flag(r.standard_within_main);
    return os.str();
}

nlohmann::json to_json(const BoundReport& r)
{
    return {
        {"n", r.n},
        {"t", r.t},
        {"k", r.k},
        {"bound_zhuang_23", r.bound_zhuang_23},
        {"bound_zhuang_nt", r.bound_zhuang_nt},
        {"bound_main", r.bound_main},
        {"lower_bound", r.lower_bound},
        {"exact_literal", opt_json(r.exact_literal)},
        {"exact_standard", opt_json(r.exact_standard)},
        {"exact_2dom", opt_json(r.exact_2dom)},
        {"flags",
            {
                {"within_main", opt_json(r.within_main)},
                {"within_zhuang_nt", opt_json(r.within_zhuang_nt)},
                {"within_zhuang_23", opt_json(r.within_zhuang_23)},
                {"above_lower", opt_json(r.above_lower)},
                {"standard_within_main", opt_json(r.standard_within_main)},
            }},
    };
}

}  // namespace mopdom

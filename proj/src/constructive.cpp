#include "mopdom/constructive.hpp"

#include "mopdom/domination.hpp"
#include "mopdom/error.hpp"
#include "mopdom/io.hpp"
#include "rules_manifest.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace mopdom {

namespace {

bool valid_role(std::string_view role)
{
    if (role.size() < 2 || (role[0] != 'u' && role[0] != 'v'))
        return false;
    int idx = 0;
    auto [ptr, ec] = std::from_chars(role.data() + 1, role.data() + role.size(), idx);
    return ec == std::errc() && ptr == role.data() + role.size() && idx >= 1 && idx <= 10;
}

std::vector<RoleName> role_list(const nlohmann::json& rule, const char* key)
{
    std::vector<RoleName> out;
    if (!rule.contains(key))
        return out;
    for (const auto& r : rule.at(key)) {
        auto name = r.get<std::string>();
        if (!valid_role(name))
            throw Error(Errc::ParseError, "unknown role \"" + name + "\" in rule " + rule.value("id", "?"));
        out.push_back(std::move(name));
    }
    return out;
}

}  // namespace

RuleTable RuleTable::from_json(const nlohmann::json& manifest)
{
    RuleTable table;
    try {
        for (const auto& r : manifest.at("rules")) {
            ReductionRule rule;
            rule.id = r.at("id").get<std::string>();
            rule.trigger = r.at("trigger").get<std::string>();
            rule.del = role_list(r, "delete");
            rule.addback = role_list(r, "addback");
            rule.required = role_list(r, "required");
            rule.direct = role_list(r, "direct");
            if (r.contains("add_chords"))
                for (const auto& c : r.at("add_chords")) {
                    auto a = c.at(0).get<std::string>();
                    auto b = c.at(1).get<std::string>();
                    if (!valid_role(a) || !valid_role(b))
                        throw Error(Errc::ParseError, "bad chord roles in rule " + rule.id);
                    rule.add_chords.emplace_back(a, b);
                }
            if (!rule.is_direct() && rule.del.empty())
                throw Error(Errc::ParseError, "rule " + rule.id + " deletes nothing");
            table.rules_.push_back(std::move(rule));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("rule manifest: ") + e.what());
    }
    return table;
}

const RuleTable& RuleTable::builtin()
{
    static const RuleTable table = from_json(nlohmann::json::parse(kBuiltinRulesManifest));
    return table;
}

std::vector<const ReductionRule*> RuleTable::for_trigger(std::string_view trigger) const
{
    std::vector<const ReductionRule*> out;
    for (const auto& r : rules_)
        if (r.trigger == trigger)
            out.push_back(&r);
    return out;
}

const ReductionRule* RuleTable::find(std::string_view id) const
{
    for (const auto& r : rules_)
        if (r.id == id)
            return &r;
    return nullptr;
}

Vertex SiteLabels::resolve(std::string_view role) const
{
    if (!valid_role(role))
        return -1;
    int idx = 0;
    std::from_chars(role.data() + 1, role.data() + role.size(), idx);
    return role[0] == 'u' ? u[idx] : v[idx];
}

namespace {

VertexSet resolve_all(const std::vector<RoleName>& roles, const SiteLabels& site, const std::string& rule)
{
    VertexSet out;
    for (const auto& r : roles) {
        Vertex x = site.resolve(r);
        if (x < 0)
            throw Error(Errc::RuleMismatch, rule + ": role " + r + " is not labeled at this site");
        out.insert(x);
    }
    return out;
}

/// Largest size the recursion may return: floor((n+k)/2), except that every
/// five-vertex MOP needs 3 vertices.
int size_cap(int n, int k)
{
    return (n + k) / 2 + (n == 5 ? 1 : 0);
}

int closed_hits(const MopGraph& g, Vertex v, const VertexSet& s)
{
    int c = s.contains(v) ? 1 : 0;
    for (Vertex w : g.adjacent_to(v))
        c += s.contains(w) ? 1 : 0;
    return c;
}

}  // namespace

AppliedRule apply_rule(const MopGraph& g, const ReductionRule& rule, const SiteLabels& site)
{
    if (rule.is_direct())
        throw Error(Errc::RuleMismatch, rule.id + " answers the instance directly");

    VertexSet deleted = resolve_all(rule.del, site, rule.id);
    VertexSet addback = resolve_all(rule.addback, site, rule.id);
    VertexSet required = resolve_all(rule.required, site, rule.id);
    std::vector<Chord> added;
    for (const auto& [a, b] : rule.add_chords) {
        Vertex x = site.resolve(a);
        Vertex y = site.resolve(b);
        if (x < 0 || y < 0)
            throw Error(Errc::RuleMismatch, rule.id + ": chord role is not labeled at this site");
        added.emplace_back(x, y);
    }

    for (Vertex x : addback)
        if (g.degree(x) == 2)
            throw Error(Errc::RuleMismatch, rule.id + ": addback vertex " + std::to_string(x) + " has degree 2");

    auto reduced = [&] {
        try {
            return reduce_graph(g, deleted, added);
        } catch (const Error& e) {
            if (e.code() != Errc::ResultNotMaximalOuterplanar)
                throw;
            throw Error(Errc::RuleMismatch, rule.id + ": " + e.what());
        }
    }();
    AppliedRule out{rule.id, std::move(reduced), std::move(deleted), std::move(added), std::move(addback),
        std::move(required), {}};
    const MopGraph& h = out.reduced.graph;
    if (h.n() < 4)
        throw Error(Errc::RuleMismatch, rule.id + ": reduced graph has only " + std::to_string(h.n()) + " vertices");
    out.n_before = g.n();
    out.k_before = bad_vertices(g).k;
    out.n_after = h.n();
    out.k_after = bad_vertices(h).k;
    if (size_cap(out.n_after, out.k_after) + static_cast<int>(out.addback.size()) > size_cap(out.n_before, out.k_before))
        throw Error(Errc::RuleMismatch, rule.id + ": size budget exceeded (n+k " + std::to_string(out.n_before + out.k_before)
                + " -> " + std::to_string(out.n_after + out.k_after) + ", addback " + std::to_string(out.addback.size()) + ")");

    std::vector<Vertex> back(h.n(), -1);
    for (Vertex x = 0; x < g.n(); ++x)
        if (out.reduced.map[x] >= 0)
            back[out.reduced.map[x]] = x;
    for (Vertex y = 0; y < h.n(); ++y)
        if (h.degree(y) == 2)
            for (Vertex z : h.adjacent_to(y))
                out.forced.insert(back[z]);

    for (Vertex x : out.required)
        if (!out.forced.contains(x))
            throw Error(Errc::RuleMismatch, rule.id + ": required vertex " + std::to_string(x) + " is not forced in G'");

    VertexSet guaranteed = out.forced;
    for (Vertex x : out.addback)
        guaranteed.insert(x);
    for (Vertex x : out.deleted)
        if (!guaranteed.contains(x) && closed_hits(g, x, guaranteed) < 2)
            throw Error(Errc::RuleMismatch, rule.id + ": deleted vertex " + std::to_string(x) + " would not be double dominated");
    for (const auto& c : out.added)
        for (Vertex x : {c.a, c.b}) {
            if (!guaranteed.contains(x) && closed_hits(g, x, guaranteed) < 2)
                throw Error(Errc::RuleMismatch, rule.id + ": chord endpoint " + std::to_string(x) + " relies on the added chord");
            if (g.degree(x) == 2 && h.degree(out.reduced.map[x]) != 2)
                throw Error(Errc::RuleMismatch, rule.id + ": degree-2 vertex " + std::to_string(x) + " gains degree in G'");
        }
    return out;
}

VertexSet base_case_solve(const MopGraph& g)
{
    if (g.n() < 4 || g.n() > 8)
        throw Error(Errc::OutOfRange, "base case covers 4 <= n <= 8, got " + std::to_string(g.n()));
    auto best = exact_min_double_dom(g, DominationMode::literal, true, 8);
    const int k = bad_vertices(g).k;
    if (2 * best.size > g.n() + k)
        throw Error(Errc::BoundViolated, "base case exceeds (n+k)/2 on " + graph_to_json(g).dump());
    return best.witness;
}

CertificateChecks check_certificate(const MopGraph& g, const VertexSet& set)
{
    CertificateChecks c;
    for (Vertex v : set)
        if (v < 0 || v >= g.n())
            return c;
    c.literal_double_dominating = is_double_dominating(g, set, DominationMode::literal);
    c.standard_double_dominating = is_double_dominating(g, set, DominationMode::standard);
    c.no_degree2_vertex = std::none_of(set.begin(), set.end(), [&](Vertex v) { return g.degree(v) == 2; });
    c.within_bound = g.n() >= 4 && 2 * static_cast<int>(set.size()) <= g.n() + bad_vertices(g).k;
    return c;
}

bool certify(const MopGraph& g, const CertifiedResult& result)
{
    if (g.n() < 4 || result.n != g.n() || result.size != static_cast<int>(result.set.size()))
        return false;
    if (result.k != bad_vertices(g).k)
        return false;
    return check_certificate(g, result.set).mandatory();
}

namespace {

struct Choice {
    std::optional<AppliedRule> applied;
    std::optional<std::pair<std::string, VertexSet>> direct;
};

std::string site_trigger(int ds, int dt)
{
    return std::to_string(ds) + "-" + std::to_string(dt);
}

/// Tries the rules for one trigger at one labeling; first that applies wins.
bool try_rules(const MopGraph& g, const RuleTable& table, const std::string& trigger, const SiteLabels& site, Choice& out)
{
    for (const ReductionRule* rule : table.for_trigger(trigger)) {
        if (rule->is_direct()) {
            VertexSet s;
            try {
                s = resolve_all(rule->direct, site, rule->id);
            } catch (const Error&) {
                continue;
            }
            if (check_certificate(g, s).mandatory()) {
                out.direct.emplace(rule->id, std::move(s));
                return true;
            }
            continue;
        }
        try {
            out.applied = apply_rule(g, *rule, site);
            return true;
        } catch (const Error& e) {
            if (e.code() != Errc::RuleMismatch && e.code() != Errc::ResultNotMaximalOuterplanar)
                throw;
        }
    }
    return false;
}

/// Deviations (in leaf order) take precedence over reduction sites. Within a
/// site, d=1 branches have no preferred orientation of u2/u3, so both are
/// tried; equal-length branches are tried in both roles.
std::optional<Choice> choose_reduction(const MopGraph& g, const RuleTable& table)
{
    const DualTree t = build_dual_tree(g);
    Choice choice;

    bool deviated = false;
    for (int leaf : t.leaves()) {
        auto m = match_branch_shape(g, t, leaf);
        if (auto* dev = std::get_if<Deviation>(&m)) {
            deviated = true;
            SiteLabels site;
            site.u = dev->witness_labels;
            if (try_rules(g, table, dev->rule, site, choice))
                return choice;
        }
    }
    if (deviated)
        return std::nullopt;

    for (const auto& site : all_reduction_sites(g, t)) {
        std::vector<std::pair<BranchShape, BranchShape>> roles{{site.s, site.t}};
        if (site.s.dist == site.t.dist)
            roles.emplace_back(site.t, site.s);
        for (const auto& [s, tt] : roles)
            for (int su = 0; su < (s.dist == 1 ? 2 : 1); ++su)
                for (int sv = 0; sv < (tt.dist == 1 ? 2 : 1); ++sv) {
                    SiteLabels labels{s.labels, tt.labels};
                    if (su)
                        std::swap(labels.u[2], labels.u[3]);
                    if (sv)
                        std::swap(labels.v[2], labels.v[3]);
                    if (try_rules(g, table, site_trigger(s.dist, tt.dist), labels, choice))
                        return choice;
                }
    }
    return std::nullopt;
}

}  // namespace

CertifiedResult solve_bound(const MopGraph& g, const SolveOptions& options)
{
    if (g.n() < 4)
        throw Error(Errc::TooSmall, "the bound needs n >= 4");
    const RuleTable& table = options.rules ? *options.rules : RuleTable::builtin();

    std::vector<MopGraph> levels{g};
    CertifiedResult result;
    ReductionTrace& trace = result.trace;

    for (;;) {
        const MopGraph& cur = levels.back();
        if (cur.n() <= 8) {
            trace.base_set = cur.n() == 5 && levels.size() > 1
                ? exact_min_double_dom(cur, DominationMode::literal, true).witness
                : base_case_solve(cur);
            trace.base_kind = "exact";
            break;
        }
        auto choice = choose_reduction(cur, table);
        if (!choice) {
            if (!options.permissive)
                throw Error(Errc::NoRuleApplies, graph_to_json(cur).dump() + " (reduced from " + graph_to_json(g).dump() + ")");
            trace.base_set = exact_min_double_dom(cur, DominationMode::literal, true, kMaxExactLimit).witness;
            trace.base_kind = "fallback";
            break;
        }
        if (choice->direct) {
            trace.base_kind = choice->direct->first;
            trace.base_set = choice->direct->second;
            break;
        }
        AppliedRule& a = *choice->applied;
        trace.steps.push_back({a.rule, a.deleted, a.added, a.addback, a.required, a.n_before, a.k_before, a.n_after,
            a.k_after, a.reduced.map});
        levels.push_back(std::move(a.reduced.graph));
    }
    trace.base_graph = levels.back();

    auto fail = [&](const std::string& what, std::size_t level) {
        throw Error(Errc::CertificationFailed,
            what + " at level " + std::to_string(level) + " of " + graph_to_json(g).dump());
    };

    VertexSet s = trace.base_set;
    const auto base_checks = check_certificate(levels.back(), s);
    if (!base_checks.literal_double_dominating || !base_checks.no_degree2_vertex
        || (!base_checks.within_bound && levels.back().n() != 5))
        fail("base set " + set_to_json(s).dump() + " (" + trace.base_kind + ")", levels.size() - 1);

    for (std::size_t i = trace.steps.size(); i-- > 0;) {
        const TraceStep& step = trace.steps[i];
        const MopGraph& here = levels[i];
        std::vector<Vertex> back(levels[i + 1].n(), -1);
        for (Vertex x = 0; x < here.n(); ++x)
            if (step.map[x] >= 0)
                back[step.map[x]] = x;

        VertexSet lifted;
        for (Vertex y : s)
            lifted.insert(back[y]);
        for (Vertex x : step.required)
            if (!lifted.contains(x))
                fail(step.rule + ": required vertex " + std::to_string(x) + " missing from S'", i);

        VertexSet next = lifted;
        for (Vertex x : step.addback)
            next.insert(x);
        if (size_cap(step.n_after, step.k_after) + static_cast<int>(step.addback.size()) > size_cap(step.n_before, step.k_before)
            || next.size() - lifted.size() > step.addback.size())
            fail(step.rule + ": size telescoping violated", i);
        if (!check_certificate(here, next).mandatory())
            fail(step.rule + ": assembled set " + set_to_json(next).dump() + " fails a mandatory check", i);
        s = std::move(next);
    }

    result.set = s;
    result.size = static_cast<int>(s.size());
    result.n = g.n();
    result.k = bad_vertices(g).k;
    result.bound = (result.n + result.k) / 2.0;
    result.checks = check_certificate(g, s);
    return result;
}

nlohmann::json to_json(const ReductionTrace& trace)
{
    auto steps = nlohmann::json::array();
    for (const auto& st : trace.steps) {
        auto added = nlohmann::json::array();
        for (const auto& c : st.added)
            added.push_back({c.a, c.b});
        steps.push_back({
            {"rule", st.rule},
            {"deleted", set_to_json(st.deleted)},
            {"added_chords", added},
            {"addback", set_to_json(st.addback)},
            {"required", set_to_json(st.required)},
            {"n_before", st.n_before},
            {"k_before", st.k_before},
            {"n_after", st.n_after},
            {"k_after", st.k_after},
            {"map", st.map},
        });
    }
    nlohmann::json base = {{"kind", trace.base_kind}, {"set", set_to_json(trace.base_set)}};
    base["graph"] = trace.base_graph ? graph_to_json(*trace.base_graph) : nlohmann::json(nullptr);
    return {{"steps", steps}, {"base", base}};
}

nlohmann::json to_json(const CertifiedResult& result, bool with_trace)
{
    nlohmann::json j = {
        {"n", result.n},
        {"k", result.k},
        {"bound", result.bound},
        {"size", result.size},
        {"set", set_to_json(result.set)},
        {"checks",
            {
                {"literal_double_dominating", result.checks.literal_double_dominating},
                {"no_degree2_vertex", result.checks.no_degree2_vertex},
                {"within_bound", result.checks.within_bound},
                {"standard_double_dominating", result.checks.standard_double_dominating},
            }},
        {"certified", result.checks.mandatory()},
    };
    if (with_trace)
        j["trace"] = to_json(result.trace);
    return j;
}

}  // namespace mopdom

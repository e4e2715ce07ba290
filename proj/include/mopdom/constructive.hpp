#pragma once

#include "mopdom/dual_tree.hpp"
#include "mopdom/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace mopdom {

/// Role name such as "u3" or "v7".
using RoleName = std::string;

/// One reduction step of the inductive argument, expressed over role names.
/// `trigger` is a deviation rule id (C2-1 ... C6d) or "<d_s>-<d_t>" for a
/// reduction site. A rule with `direct` set answers the whole instance.
struct ReductionRule {
    std::string id;
    std::string trigger;
    std::vector<RoleName> del;
    std::vector<std::pair<RoleName, RoleName>> add_chords;
    std::vector<RoleName> addback;
    std::vector<RoleName> required;
    std::vector<RoleName> direct;

    [[nodiscard]] bool is_direct() const noexcept { return !direct.empty(); }
};

class RuleTable {
public:
    /// The manifest compiled in from data/rules.json.
    static const RuleTable& builtin();
    /// Throws ParseError for malformed manifests or unknown role names.
    static RuleTable from_json(const nlohmann::json& manifest);

    [[nodiscard]] std::vector<const ReductionRule*> for_trigger(std::string_view trigger) const;
    [[nodiscard]] const ReductionRule* find(std::string_view id) const;
    [[nodiscard]] const std::vector<ReductionRule>& rules() const noexcept { return rules_; }

private:
    std::vector<ReductionRule> rules_;
};

/// u-roles from the shorter (or deviating) branch, v-roles from the other.
struct SiteLabels {
    RoleLabels u;
    RoleLabels v;

    /// -1 when the role is unset or malformed.
    [[nodiscard]] Vertex resolve(std::string_view role) const;
};

struct AppliedRule {
    std::string rule;
    Reduction reduced;
    VertexSet deleted;
    std::vector<Chord> added;
    VertexSet addback;
    VertexSet required;
    /// Vertices of G adjacent in G' to a degree-2 vertex of G'; every
    /// double dominating set of G' without degree-2 vertices contains them.
    VertexSet forced;
    int n_before = 0;
    int k_before = 0;
    int n_after = 0;
    int k_after = 0;
};

/// Checks the rule's local configuration and performs the surgery. Throws
/// RuleMismatch when a role is unresolved, the reduced graph is too small,
/// a required vertex is not forced, a deleted vertex would lose double
/// domination, or the size budget 2|addback| <= (n+k) - (n'+k') fails;
/// ResultNotMaximalOuterplanar when the surgery breaks maximal
/// outerplanarity.
AppliedRule apply_rule(const MopGraph& g, const ReductionRule& rule, const SiteLabels& site);

/// Minimum literal double dominating set among sets avoiding degree-2
/// vertices, for 4 <= n <= 8 (OutOfRange). Throws BoundViolated if its size
/// exceeds (n+k)/2.
VertexSet base_case_solve(const MopGraph& g);

struct TraceStep {
    std::string rule;
    VertexSet deleted;
    std::vector<Chord> added;
    VertexSet addback;
    VertexSet required;
    int n_before = 0;
    int k_before = 0;
    int n_after = 0;
    int k_after = 0;
    std::vector<Vertex> map;  // old id -> new id, -1 when deleted
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
    std::optional<MopGraph> base_graph;
    VertexSet base_set;
    /// "exact" (base case), a direct rule id, or "fallback" (permissive mode)
    std::string base_kind;
};

struct CertificateChecks {
    bool literal_double_dominating = false;
    bool no_degree2_vertex = false;
    bool within_bound = false;
    bool standard_double_dominating = false;  // informational

    [[nodiscard]] bool mandatory() const noexcept
    {
        return literal_double_dominating && no_degree2_vertex && within_bound;
    }
};

struct CertifiedResult {
    VertexSet set;
    int size = 0;
    int n = 0;
    int k = 0;
    double bound = 0;
    ReductionTrace trace;
    CertificateChecks checks;
};

struct SolveOptions {
    /// Fall back to the exact solver instead of throwing NoRuleApplies.
    bool permissive = false;
    const RuleTable* rules = nullptr;  // builtin() when null
};

/// Runs the reduction engine. Throws TooSmall (n < 4), NoRuleApplies (strict
/// mode, no rule matched; message carries the instance) or
/// CertificationFailed.
CertifiedResult solve_bound(const MopGraph& g, const SolveOptions& options = {});

/// Recomputes the checks of `set` on g from scratch.
CertificateChecks check_certificate(const MopGraph& g, const VertexSet& set);

/// True iff the result's set passes every mandatory check on g and its
/// recorded fields agree with a fresh computation.
bool certify(const MopGraph& g, const CertifiedResult& result);

nlohmann::json to_json(const ReductionTrace& trace);
nlohmann::json to_json(const CertifiedResult& result, bool with_trace);

}  // namespace mopdom

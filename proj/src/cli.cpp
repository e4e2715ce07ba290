#include "mopdom/cli.hpp"

#include "mopdom/constructive.hpp"
#include "mopdom/domination.hpp"
#include "mopdom/dual_tree.hpp"
#include "mopdom/error.hpp"
#include "mopdom/generators.hpp"
#include "mopdom/io.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

namespace mopdom {

namespace {

struct InputSpec {
    std::string path = "-";
    std::string format = "json";
};

void add_input(CLI::App* cmd, InputSpec& spec)
{
    cmd->add_option("input", spec.path, "Graph file, '-' for stdin")->capture_default_str();
    cmd->add_option("--input-format", spec.format, "json (one graph per line) or edges")
        ->check(CLI::IsMember({"json", "edges"}))
        ->capture_default_str();
}

std::string slurp(const InputSpec& spec, std::istream& in)
{
    std::ostringstream buf;
    if (spec.path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(spec.path);
        if (!file)
            throw Error(Errc::ParseError, "cannot open " + spec.path);
        buf << file.rdbuf();
    }
    return buf.str();
}

std::vector<MopGraph> read_graphs(const InputSpec& spec, std::istream& in)
{
    const std::string text = slurp(spec, in);
    std::vector<MopGraph> graphs;
    if (spec.format == "edges") {
        std::istringstream is(text);
        auto edges = parse_edge_list(is);
        graphs.push_back(recognize_mop(edges).graph);
        return graphs;
    }
    auto whole = nlohmann::json::parse(text, nullptr, false);
    if (!whole.is_discarded()) {
        graphs.push_back(graph_from_json(whole));
        return graphs;
    }
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto doc = nlohmann::json::parse(line, nullptr, false);
        if (doc.is_discarded())
            throw Error(Errc::ParseError, "invalid JSON: " + line.substr(0, 80));
        graphs.push_back(graph_from_json(doc));
    }
    if (graphs.empty())
        throw Error(Errc::ParseError, "no graph in input");
    return graphs;
}

MopGraph read_one(const InputSpec& spec, std::istream& in)
{
    auto graphs = read_graphs(spec, in);
    if (graphs.size() != 1)
        throw Error(Errc::ParseError, "expected exactly one graph, got " + std::to_string(graphs.size()));
    return std::move(graphs.front());
}

int exit_code_for(Errc code)
{
    switch (code) {
    case Errc::NoRuleApplies:
    case Errc::CertificationFailed:
    case Errc::BoundViolated:
    case Errc::RuleMismatch:
        return 1;
    default:
        return 2;
    }
}

VertexSet parse_set(const std::string& text)
{
    VertexSet s;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw Error(Errc::ParseError, "bad vertex \"" + item + "\" in --set");
        s.insert(v);
    }
    return s;
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
    std::string family;
    int k = 1;
    int n = 6;
    std::string name;
    bool dedup = false;
    int count = 1;
    std::optional<std::uint64_t> seed;
};

int cmd_gen(const GenArgs& a, std::ostream& out)
{
    auto emit = [&](const MopGraph& g) { out << graph_to_json(g).dump() << '\n'; };
    if (a.family == "fan") {
        emit(fan(a.k));
    } else if (a.family == "snake") {
        emit(snake(a.n));
    } else if (a.family == "fixture") {
        emit(fixture(a.name));
    } else if (a.family == "enumerate") {
        if (a.dedup)
            for (const auto& g : enumerate_all(a.n, true))
                emit(g);
        else
            for_each_triangulation(a.n, emit);
    } else {
        if (!a.seed)
            throw Error(Errc::BadParameter, "--family random requires --seed");
        if (a.count < 0)
            throw Error(Errc::BadParameter, "--count must be non-negative");
        for (int i = 0; i < a.count; ++i)
            emit(random_mop(a.n, *a.seed, static_cast<std::uint64_t>(i)));
    }
    return 0;
}

// ---- exact / verify ------------------------------------------------------

int cmd_exact(const MopGraph& g, const std::string& mode, bool forbid_deg2, std::ostream& out)
{
    ExactResult r;
    if (mode == "two") {
        if (forbid_deg2)
            throw Error(Errc::BadParameter, "--forbid-deg2 applies to double domination only");
        r = exact_min_two_dom(g);
    } else {
        r = exact_min_double_dom(g, mode == "standard" ? DominationMode::standard : DominationMode::literal, forbid_deg2);
    }
    nlohmann::json j = {
        {"n", g.n()}, {"mode", mode}, {"forbid_deg2", forbid_deg2}, {"size", r.size}, {"witness", set_to_json(r.witness)}};
    out << j.dump() << '\n';
    return 0;
}

int cmd_verify(const MopGraph& g, const VertexSet& s, std::ostream& out)
{
    for (Vertex v : s)
        if (v < 0 || v >= g.n())
            throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " in --set");
    const auto counts = coverage_counts(g, s);
    auto short_literal = nlohmann::json::array();
    auto short_standard = nlohmann::json::array();
    for (Vertex v = 0; v < g.n(); ++v)
        if (counts[v] < 2) {
            short_standard.push_back(v);
            if (!s.contains(v))
                short_literal.push_back(v);
        }
    const auto checks = check_certificate(g, s);
    nlohmann::json j = {
        {"set", set_to_json(s)},
        {"coverage", counts},
        {"literal", checks.literal_double_dominating},
        {"standard", checks.standard_double_dominating},
        {"two_dominating", is_two_dominating(g, s)},
        {"no_degree2_vertex", checks.no_degree2_vertex},
        {"within_bound", checks.within_bound},
        {"undominated_literal", short_literal},
        {"undominated_standard", short_standard},
    };
    out << j.dump() << '\n';
    return checks.literal_double_dominating ? 0 : 1;
}

// ---- stress --------------------------------------------------------------

struct StressArgs {
    int n_min = 4;
    int n_max = 12;
    int random_count = 0;
    int random_n_min = 14;
    int random_n_max = 150;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
    std::string out_dir = "stress_failures";
    bool permissive = false;
};

struct Outcome {
    std::string failure;  // empty when the engine certified a set
    std::optional<int> exact;
    int n = 0;
    int k = 0;
    int engine_size = 0;
};

Outcome evaluate(const MopGraph& g, bool permissive, int exact_cap)
{
    Outcome o;
    o.n = g.n();
    o.k = bad_vertices(g).k;
    if (g.n() <= exact_cap)
        o.exact = exact_min_double_dom(g, DominationMode::literal, false, exact_cap).size;
    if (g.n() < 9) {
        if (2 * o.exact.value_or(0) > o.n + o.k)
            o.failure = "exact size exceeds (n+k)/2";
        return o;
    }
    try {
        SolveOptions opts;
        opts.permissive = permissive;
        auto r = solve_bound(g, opts);
        o.engine_size = r.size;
        if (!certify(g, r))
            o.failure = "certificate rejected";
    } catch (const Error& e) {
        o.failure = std::string(to_string(e.code()));
    }
    if (o.failure.empty() && o.exact && 2 * *o.exact > o.n + o.k)
        o.failure = "exact size exceeds (n+k)/2";
    return o;
}

std::vector<Outcome> evaluate_all(const std::vector<MopGraph>& graphs, const StressArgs& a, int exact_cap)
{
    std::vector<Outcome> outcomes(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();)
            outcomes[i] = evaluate(graphs[i], a.permissive, exact_cap);
    };
    const int jobs = std::max(1, a.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return outcomes;
}

struct Tally {
    long instances = 0;
    long engine_failures = 0;
    long bound_violations = 0;
    std::optional<double> max_gap;

    void add(const Outcome& o)
    {
        ++instances;
        if (o.failure == "exact size exceeds (n+k)/2")
            ++bound_violations;
        else if (!o.failure.empty())
            ++engine_failures;
        if (o.exact) {
            double gap = (o.n + o.k) / 2.0 - *o.exact;
            max_gap = std::max(max_gap.value_or(gap), gap);
        }
    }
    [[nodiscard]] long violations() const { return engine_failures + bound_violations; }
    void write(nlohmann::json& j) const
    {
        j["instances"] = instances;
        j["violations"] = violations();
        j["engine_failures"] = engine_failures;
        j["bound_violations"] = bound_violations;
        j["max_gap"] = max_gap ? nlohmann::json(*max_gap) : nlohmann::json(nullptr);
    }
};

void record_failures(const std::vector<MopGraph>& graphs, const std::vector<Outcome>& outcomes, const std::string& tag,
    long offset, const std::string& dir)
{
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (outcomes[i].failure.empty())
            continue;
        std::filesystem::create_directories(dir);
        std::ofstream f(std::filesystem::path(dir) / (tag + "_" + std::to_string(offset + static_cast<long>(i)) + ".json"));
        f << nlohmann::json{{"graph", graph_to_json(graphs[i])}, {"reason", outcomes[i].failure}}.dump() << '\n';
    }
}

int cmd_stress(const StressArgs& a, std::ostream& out)
{
    if (a.n_min < 4 || a.n_max > kEnumerationLimit || a.n_min > a.n_max + 1)
        throw Error(Errc::BadParameter, "exhaustive range must satisfy 4 <= n-min and n-max <= "
                + std::to_string(kEnumerationLimit));
    if (a.random_count > 0 && !a.seed)
        throw Error(Errc::BadParameter, "random instances require --seed");
    if (a.random_count > 0 && (a.random_n_min < 4 || a.random_n_min > a.random_n_max))
        throw Error(Errc::BadParameter, "random size range must satisfy 4 <= min <= max");
    const int exact_cap = exact_limit();
    long violations = 0;
    constexpr std::size_t kBatch = 4096;

    for (int n = a.n_min; n <= a.n_max; ++n) {
        Tally tally;
        std::vector<MopGraph> batch;
        long offset = 0;
        auto flush = [&] {
            auto outcomes = evaluate_all(batch, a, exact_cap);
            for (const auto& o : outcomes)
                tally.add(o);
            record_failures(batch, outcomes, "n" + std::to_string(n), offset, a.out_dir);
            offset += static_cast<long>(batch.size());
            batch.clear();
        };
        for_each_triangulation(n, [&](const MopGraph& g) {
            batch.push_back(g);
            if (batch.size() == kBatch)
                flush();
        });
        flush();
        nlohmann::json line = {{"n", n}};
        tally.write(line);
        out << line.dump() << '\n';
        violations += tally.violations();
    }

    if (a.random_count > 0) {
        CounterRng sizes(*a.seed, 0);
        const auto span = static_cast<std::uint64_t>(a.random_n_max - a.random_n_min + 1);
        std::vector<MopGraph> graphs;
        for (int i = 0; i < a.random_count; ++i) {
            int n = a.random_n_min + static_cast<int>(sizes.below(span));
            graphs.push_back(random_mop(n, *a.seed, static_cast<std::uint64_t>(i) + 1));
        }
        auto outcomes = evaluate_all(graphs, a, exact_cap);
        Tally tally;
        for (const auto& o : outcomes)
            tally.add(o);
        record_failures(graphs, outcomes, "random", 0, a.out_dir);
        nlohmann::json line = {{"random", a.random_count}, {"n_min", a.random_n_min}, {"n_max", a.random_n_max},
            {"seed", *a.seed}};
        tally.write(line);
        out << line.dump() << '\n';
        violations += tally.violations();
    }
    return violations == 0 ? 0 : 1;
}

// ---- convert -------------------------------------------------------------

int cmd_convert(const MopGraph& g, const std::string& to, std::ostream& out)
{
    if (to == "json")
        out << graph_to_json(g).dump() << '\n';
    else if (to == "edges")
        out << to_edge_list(g);
    else if (to == "dot")
        out << to_dot(g);
    else
        out << dual_to_dot(build_dual_tree(g));
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Double domination in maximal outerplanar graphs"};
    app.name("mopdom");
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write graphs as newline-delimited JSON");
    gen_cmd->add_option("--family", gen.family)
        ->required()
        ->check(CLI::IsMember({"fan", "snake", "fixture", "enumerate", "random"}));
    gen_cmd->add_option("--k", gen.k, "Fan parameter (n = 3k+1)");
    gen_cmd->add_option("--n", gen.n, "Vertex count");
    gen_cmd->add_option("--name", gen.name, "Fixture name");
    gen_cmd->add_flag("--dedup", gen.dedup, "One graph per rotation/reflection class");
    gen_cmd->add_option("--count", gen.count, "Number of random graphs");
    gen_cmd->add_option("--seed", gen.seed, "Seed (required for random)");

    InputSpec solve_in;
    bool with_trace = false;
    bool permissive = false;
    auto* solve_cmd = app.add_subcommand("solve", "Run the constructive (n+k)/2 engine");
    add_input(solve_cmd, solve_in);
    solve_cmd->add_flag("--trace", with_trace, "Include the reduction trace");
    solve_cmd->add_flag("--permissive", permissive, "Fall back to the exact solver when no rule applies");

    InputSpec exact_in;
    std::string exact_mode = "literal";
    bool forbid_deg2 = false;
    auto* exact_cmd = app.add_subcommand("exact", "Exact minimum by branch and bound");
    add_input(exact_cmd, exact_in);
    exact_cmd->add_option("--mode", exact_mode)->check(CLI::IsMember({"literal", "standard", "two"}))->capture_default_str();
    exact_cmd->add_flag("--forbid-deg2", forbid_deg2, "Exclude degree-2 vertices from the set");

    InputSpec verify_in;
    std::string set_text;
    auto* verify_cmd = app.add_subcommand("verify", "Check a candidate set");
    add_input(verify_cmd, verify_in);
    verify_cmd->add_option("--set", set_text, "Comma-separated vertices")->required();

    InputSpec report_in;
    std::string report_format = "csv";
    bool no_exact = false;
    auto* report_cmd = app.add_subcommand("report", "Compare known bounds per graph");
    add_input(report_cmd, report_in);
    report_cmd->add_option("--format", report_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    report_cmd->add_flag("--no-exact", no_exact, "Skip exact solving");

    StressArgs stress;
    auto* stress_cmd = app.add_subcommand("stress", "Exhaustive and random engine campaign");
    stress_cmd->add_option("--n-min", stress.n_min)->capture_default_str();
    stress_cmd->add_option("--n-max", stress.n_max)->capture_default_str();
    stress_cmd->add_option("--random-count", stress.random_count)->capture_default_str();
    stress_cmd->add_option("--random-n-min", stress.random_n_min)->capture_default_str();
    stress_cmd->add_option("--random-n-max", stress.random_n_max)->capture_default_str();
    stress_cmd->add_option("--seed", stress.seed);
    stress_cmd->add_option("--jobs", stress.jobs)->check(CLI::PositiveNumber)->capture_default_str();
    stress_cmd->add_option("--out-dir", stress.out_dir, "Where offending instances are written")->capture_default_str();
    stress_cmd->add_flag("--permissive", stress.permissive);

    InputSpec convert_in;
    std::string convert_to = "json";
    auto* convert_cmd = app.add_subcommand("convert", "Translate between edge list, JSON and DOT");
    add_input(convert_cmd, convert_in);
    convert_cmd->add_option("--to", convert_to)
        ->check(CLI::IsMember({"json", "edges", "dot", "dual-dot"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen_cmd)
            return cmd_gen(gen, out);
        if (*solve_cmd) {
            SolveOptions opts;
            opts.permissive = permissive;
            for (const auto& g : read_graphs(solve_in, in))
                out << to_json(solve_bound(g, opts), with_trace).dump() << '\n';
            return 0;
        }
        if (*exact_cmd)
            return cmd_exact(read_one(exact_in, in), exact_mode, forbid_deg2, out);
        if (*verify_cmd)
            return cmd_verify(read_one(verify_in, in), parse_set(set_text), out);
        if (*report_cmd) {
            if (report_format == "csv")
                out << bound_report_csv_header() << '\n';
            for (const auto& g : read_graphs(report_in, in)) {
                auto r = bound_report(g, !no_exact);
                if (report_format == "csv")
                    out << to_csv_row(r) << '\n';
                else
                    out << to_json(r).dump() << '\n';
            }
            return 0;
        }
        if (*stress_cmd)
            return cmd_stress(stress, out);
        return cmd_convert(read_one(convert_in, in), convert_to, out);
    } catch (const Error& e) {
        err << "mopdom: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const nlohmann::json::exception& e) {
        err << "mopdom: ParseError: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "mopdom: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace mopdom

#include "cli.hpp"

#include "battery.hpp"

#include "stabreg/errors.hpp"
#include "stabreg/generators.hpp"
#include "stabreg/io.hpp"
#include "stabreg/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace stabreg::cli {

namespace {

// Everything a run depends on. Two runs with equal configs print the same
// bytes.
struct RunConfig {
    std::uint64_t seed = 0;
    std::string graph_path;
    std::string family;
    std::string output;
    std::string epsilon;
    std::string delta;
    std::string largeness;
    std::string excellent;
    std::string sigma = "1/4";
    std::string mode = "exact";
    std::string rule;
    std::string partition_path;
    std::string x_list;
    std::string y_list;
    std::string set_list;
    std::string group_path;
    std::string format = "json";
    std::size_t k = 0;
    std::size_t cap = 0;
    std::size_t vertex = 0;
    std::size_t max_index = 0;
    std::size_t ladder_cap = 4;
    std::size_t cyclic = 0;
    std::size_t dihedral = 0;
    std::size_t symmetric = 0;
    int only = 0;
    bool distinct_witnesses = false;
};

class Usage : public InputError {
public:
    explicit Usage(const std::string& message) : InputError(message, "usage") {}
};

Graph load_graph(const RunConfig& c) {
    if (c.graph_path.empty() == c.family.empty()) throw Usage("give exactly one of --graph FILE or --family SPEC");
    if (!c.graph_path.empty()) return read_edge_list_file(c.graph_path);
    return generate(FamilySpec::parse(c.family));
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path, "io");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Rational required_rational(const std::string& text, const char* flag) {
    if (text.empty()) throw Usage(std::string(flag) + " is required");
    return parse_rational(text);
}

// "all", "" (empty set) or a comma-separated list of indices.
VertexSet parse_list(const std::string& text, std::size_t universe, const char* flag) {
    if (text == "all") return VertexSet::full(universe);
    std::vector<Vertex> members;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) throw InputError(std::string(flag) + ": bad element '" + token + "'", "parse");
        members.push_back(static_cast<Vertex>(v));
    }
    return VertexSet::of(universe, members);
}

int stability(const RunConfig& c, Json& out) {
    const Graph g = load_graph(c);
    const LadderOptions options{c.distinct_witnesses};
    const std::size_t cap = c.cap != 0 ? c.cap : std::max(c.k, g.order());
    const LadderIndex report = ladder_index_report(g.relation(), cap, options);
    out["ladder_index"] = report.index;
    out["witness"] = report.witness ? to_json(*report.witness) : Json(nullptr);
    // Ladder index at the cap only bounds the true index from below.
    out["k_stable_for"] = report.capped ? Json(nullptr) : Json(report.index + 1);
    out["capped"] = report.capped;
    out["distinct_witnesses"] = c.distinct_witnesses;
    if (c.k != 0) {
        const auto ladder = find_ladder(g, c.k, options);
        out["k"] = c.k;
        out["ladder"] = ladder ? to_json(*ladder) : Json(nullptr);
        out["k_stable"] = !ladder.has_value();
    }
    return ok;
}

int pairs(const RunConfig& c, Json& out) {
    const Graph g = load_graph(c);
    const std::size_t n = g.order();
    const VertexSet x = parse_list(c.x_list, n, "--x");
    const VertexSet y = parse_list(c.y_list, n, "--y");
    const Rational eps = required_rational(c.epsilon, "--eps");
    const Rational delta = c.delta.empty() ? eps : parse_rational(c.delta);
    const Rational largeness = c.largeness.empty() ? eps : parse_rational(c.largeness);
    out["x"] = to_json(x);
    out["y"] = to_json(y);
    out["epsilon"] = to_json(eps);
    out["homogeneity"] = to_json(homogeneity(g, x, y, eps));
    const auto special = special_witness(g, x, y, eps);
    out["special"] = special ? Json{{"side", special->side == Side::low ? "low" : "high"},
                                    {"x_prime", to_json(special->x_prime)},
                                    {"y_prime", to_json(special->y_prime)}}
                             : Json(nullptr);
    out["good_pair"] = is_good_pair(g, x, y, eps);
    out["almost_good"] = is_almost_good(g, x, y, eps, largeness);
    out["largeness"] = to_json(largeness);
    out["x_good"] = is_good_set(g, x, eps);
    out["y_good"] = is_good_set(g, y, eps);
    const ThresholdSets sets = threshold_sets(g, x, y, delta, eps);
    out["delta"] = to_json(delta);
    out["threshold_sets"] = Json{{"x0", to_json(sets.x0)}, {"y1", to_json(sets.y1)}};
    if (!c.excellent.empty()) {
        const Rational excellent_eps = parse_rational(c.excellent);
        out["x_excellent"] = Json{{"epsilon", to_json(excellent_eps)},
                                  {"delta", to_json(delta)},
                                  {"mode", "exhaustive"},
                                  {"value", is_excellent(g, x, excellent_eps, delta, Limits::from_environment())}};
    }
    return ok;
}

int types(const RunConfig& c, Json& out) {
    const Graph g = load_graph(c);
    out = to_json(type_spectrum(g, c.rule.empty() ? TypeRule::twin : parse_type_rule(c.rule)));
    return ok;
}

int define(const RunConfig& c, Json& out) {
    const Graph g = load_graph(c);
    if (c.vertex >= g.order()) throw InputError("--vertex " + std::to_string(c.vertex) + " out of range");
    const std::size_t k = c.k != 0 ? c.k : ladder_index(g, g.order()) + 1;
    TypeClass p;
    p.signature = g.adjacency(c.vertex);
    p.members = VertexSet::of(g.order(), {c.vertex});
    const DefinabilityWitnesses w = definability_witnesses(g, k, p, c.seed);
    out["k"] = k;
    out["vertex"] = c.vertex;
    out["signature"] = to_json(p.signature);
    out["signature_hex"] = signature_hex(p.signature);
    out["witnesses"] = w.witnesses;
    out["formula"] = w.formula();
    Json table = Json::array();
    bool all = true;
    for (Vertex b = 0; b < g.order(); ++b) {
        const std::size_t votes = w.votes(g.relation(), b);
        const bool expected = p.signature.contains(b);
        all = all && (votes >= k) == expected;
        table.push_back(Json{{"b", b}, {"votes", votes}, {"vote", votes >= k}, {"in_type", expected}});
    }
    out["votes"] = std::move(table);
    out["defines"] = all;
    return all ? ok : certified_fail;
}

int partition(const RunConfig& c, Json& out) {
    const Graph g = load_graph(c);
    const Rational eps = required_rational(c.epsilon, "--eps");
    Partition p;
    if (c.mode == "type_mass") {
        p = type_mass_partition(g, eps, c.rule.empty() ? TypeRule::exact : parse_type_rule(c.rule));
    } else {
        p = good_partition_search(g, eps, ErrorFunction::parse(c.sigma), parse_search_mode(c.mode),
                                  Limits::from_environment());
    }
    out = to_json(p);
    return p.certified ? ok : certified_fail;
}

Partition load_partition(const RunConfig& c, const Graph& g) {
    if (c.partition_path.empty()) throw Usage("--partition FILE is required");
    Partition p = partition_from_json(parse_json(read_text(c.partition_path)), g.order());
    validate_partition(g, p);
    return p;
}

int refine(const RunConfig& c, Json& out) {
    const Graph g = load_graph(c);
    const Partition base = load_partition(c, g);
    out = to_json(equipartition_refine(g, base, required_rational(c.epsilon, "--eps"), ErrorFunction::parse(c.sigma)));
    return ok;
}

int verify(const RunConfig& c, Json& out) {
    const Graph g = load_graph(c);
    const Partition p = load_partition(c, g);
    const RegularityReport report =
        verify_regularity(g, p, required_rational(c.epsilon, "--eps"), ErrorFunction::parse(c.sigma));
    out = to_json(report);
    return report.pass ? ok : certified_fail;
}

FiniteGroup load_group(const RunConfig& c) {
    const int given = (c.group_path.empty() ? 0 : 1) + (c.cyclic ? 1 : 0) + (c.dihedral ? 1 : 0) + (c.symmetric ? 1 : 0);
    if (given != 1) throw Usage("give exactly one of --group FILE, --cyclic N, --dihedral N, --symmetric N");
    if (!c.group_path.empty()) return group_from_json(parse_json(read_text(c.group_path)));
    if (c.cyclic) return FiniteGroup::cyclic(c.cyclic);
    if (c.dihedral) return FiniteGroup::dihedral(c.dihedral);
    return FiniteGroup::symmetric(c.symmetric);
}

int group(const RunConfig& c, Json& out) {
    const Limits limits = Limits::from_environment();
    const FiniteGroup grp = load_group(c);
    if (grp.order() > limits.group_max) {
        throw CapacityError("group order " + std::to_string(grp.order()) + " exceeds the bound " +
                            std::to_string(limits.group_max));
    }
    const VertexSet a = parse_list(c.set_list, grp.order(), "--set");
    const std::size_t max_index = c.max_index != 0 ? c.max_index : grp.order();
    const CosetReport report = coset_regularity(grp, a, ErrorFunction::parse(c.sigma), max_index, limits);
    out["group"] = grp.name().empty() ? Json(grp.order()) : Json(grp.name());
    out["set"] = to_json(a);
    out["sigma"] = ErrorFunction::parse(c.sigma).to_string();
    out["max_index"] = max_index;
    const LadderIndex stab = ladder_index_report(translate_relation(grp, a), c.ladder_cap);
    out["relation_ladder_index"] = stab.index;
    out["relation_ladder_capped"] = stab.capped;
    out["report"] = to_json(report);
    return report.certified ? ok : certified_fail;
}

int gen(const RunConfig& c, std::ostream& stream) {
    if (c.family.empty()) throw Usage("--family SPEC is required");
    const Graph g = generate(FamilySpec::parse(c.family));
    if (c.output.empty()) {
        write_edge_list(stream, g);
        return ok;
    }
    std::ofstream file(c.output);
    if (!file) throw InputError("cannot write " + c.output, "io");
    write_edge_list(file, g);
    return ok;
}

int suite(const RunConfig& c, Json& out, std::string& table) {
    acceptance::BatteryConfig config;
    if (c.seed != 0) config.seed = c.seed;
    Json rows = Json::array();
    bool all = true;
    std::ostringstream text;
    text << std::left << std::setw(4) << "id" << std::setw(30) << "criterion" << std::setw(8) << "result"
         << std::setw(10) << "cases" << "failures\n";
    for (const auto& criterion : acceptance::criteria()) {
        if (c.only != 0 && criterion.id != c.only) continue;
        const acceptance::CriterionResult r = criterion.run(config);
        all = all && r.pass;
        rows.push_back(acceptance::to_json(r));
        text << std::setw(4) << r.id << std::setw(30) << criterion.title << std::setw(8) << (r.pass ? "PASS" : "FAIL")
             << std::setw(10) << r.cases << r.failures << "\n";
    }
    if (rows.empty()) throw Usage("--only " + std::to_string(c.only) + " names no criterion");
    out["seed"] = config.seed;
    out["criteria"] = std::move(rows);
    out["pass"] = all;
    table = text.str();
    return all ? ok : certified_fail;
}

Json error_json(const std::string& kind, const std::string& reason, const std::string& message) {
    return Json{{"error", Json{{"kind", kind}, {"reason", reason}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Stable graph regularity toolkit", "stabreg"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto graph_input = [&](CLI::App* sub) {
        sub->add_option("--graph", c.graph_path, "edge-list file");
        sub->add_option("--family", c.family, "family spec, e.g. half_graph(4) or perturb(clique_union(4,4),3,7)");
    };
    auto error_options = [&](CLI::App* sub) {
        sub->add_option("--eps", c.epsilon, "epsilon as p/q");
        sub->add_option("--sigma", c.sigma, "error function: 1/4, const:1/4, inverse:1/2, inverse_square:1/2, "
                                            "table:1/2,1/3;tail=1/4")
            ->capture_default_str();
    };

    auto* stab = app.add_subcommand("stability", "ladder index and witness");
    graph_input(stab);
    stab->add_option("--k", c.k, "also test for a ladder of this length");
    stab->add_option("--cap", c.cap, "largest ladder length searched (default: n)");
    stab->add_flag("--distinct-witnesses", c.distinct_witnesses, "require 2k distinct vertices");

    auto* pair_cmd = app.add_subcommand("pairs", "homogeneous / special / good pair calculus");
    graph_input(pair_cmd);
    pair_cmd->add_option("--x", c.x_list, "X as a comma list or 'all'")->required();
    pair_cmd->add_option("--y", c.y_list, "Y as a comma list or 'all'")->required();
    pair_cmd->add_option("--eps", c.epsilon, "epsilon as p/q")->required();
    pair_cmd->add_option("--delta", c.delta, "delta for the threshold sets (default: eps)");
    pair_cmd->add_option("--largeness", c.largeness, "size slack for almost-good (default: eps)");
    pair_cmd->add_option("--excellent", c.excellent, "also test (this, delta)-excellence of X exhaustively");

    auto* types_cmd = app.add_subcommand("types", "type spectrum");
    graph_input(types_cmd);
    types_cmd->add_option("--rule", c.rule, "twin (default) or exact");

    auto* define_cmd = app.add_subcommand("define", "majority-vote definition of a vertex's type");
    graph_input(define_cmd);
    define_cmd->add_option("--vertex", c.vertex, "vertex whose type is defined")->required();
    define_cmd->add_option("--k", c.k, "stability parameter (default: ladder index + 1)");
    define_cmd->add_option("--seed", c.seed, "seed for witness selection");

    auto* partition_cmd = app.add_subcommand("partition", "good partition search");
    graph_input(partition_cmd);
    error_options(partition_cmd);
    partition_cmd->add_option("--mode", c.mode, "exact, greedy or type_mass")->capture_default_str();
    partition_cmd->add_option("--rule", c.rule, "type rule for type_mass (default exact)");

    auto* refine_cmd = app.add_subcommand("refine", "equipartition refinement of a base partition");
    graph_input(refine_cmd);
    error_options(refine_cmd);
    refine_cmd->add_option("--partition", c.partition_path, "base partition JSON");

    auto* verify_cmd = app.add_subcommand("verify", "check the regular equipartition conclusion");
    graph_input(verify_cmd);
    error_options(verify_cmd);
    verify_cmd->add_option("--partition", c.partition_path, "partition JSON");

    auto* group_cmd = app.add_subcommand("group", "coset regularity of a subset of a finite group");
    group_cmd->add_option("--group", c.group_path, "group JSON {order, table, name?}");
    group_cmd->add_option("--cyclic", c.cyclic, "use Z_n");
    group_cmd->add_option("--dihedral", c.dihedral, "use the dihedral group of order 2n");
    group_cmd->add_option("--symmetric", c.symmetric, "use S_n (n <= 5)");
    group_cmd->add_option("--set", c.set_list, "A as a comma list")->required();
    group_cmd->add_option("--sigma", c.sigma, "error function")->capture_default_str();
    group_cmd->add_option("--max-index", c.max_index, "largest subgroup index scanned (default: |G|)");
    group_cmd->add_option("--ladder-cap", c.ladder_cap, "cap for the ladder index of x*y in A")->capture_default_str();

    auto* gen_cmd = app.add_subcommand("gen", "write a family member as an edge list");
    gen_cmd->add_option("--family", c.family, "family spec")->required();
    gen_cmd->add_option("--out", c.output, "output file (default: stdout)");

    auto* suite_cmd = app.add_subcommand("suite", "run the acceptance battery");
    suite_cmd->add_option("--seed", c.seed, "battery seed (0: built-in default)");
    suite_cmd->add_option("--only", c.only, "run a single criterion");
    suite_cmd->add_option("--format", c.format, "json or table")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        out << error_json("input", "usage", e.what()).dump(2) << "\n";
        return input_error;
    }

    Json result = Json::object();
    int code = ok;
    try {
        if (stab->parsed()) code = stability(c, result);
        else if (pair_cmd->parsed()) code = pairs(c, result);
        else if (types_cmd->parsed()) code = types(c, result);
        else if (define_cmd->parsed()) code = define(c, result);
        else if (partition_cmd->parsed()) code = partition(c, result);
        else if (refine_cmd->parsed()) code = refine(c, result);
        else if (verify_cmd->parsed()) code = verify(c, result);
        else if (group_cmd->parsed()) code = group(c, result);
        else if (gen_cmd->parsed()) return gen(c, out);
        else if (suite_cmd->parsed()) {
            std::string table;
            code = suite(c, result, table);
            if (c.format == "table") {
                out << table;
                return code;
            }
        }
    } catch (const DefinabilityDefect& e) {
        Json j = error_json("definability_defect", e.reason(), e.what());
        j["error"]["parameter"] = e.parameter;
        j["error"]["votes"] = e.vote_count;
        j["error"]["k"] = e.k;
        j["error"]["expected"] = e.expected;
        if (e.ladder_vs && e.ladder_ws) j["error"]["ladder"] = Json{{"vs", *e.ladder_vs}, {"ws", *e.ladder_ws}};
        out << j.dump(2) << "\n";
        return certified_fail;
    } catch (const CapacityError& e) {
        out << error_json("capacity", e.reason(), e.what()).dump(2) << "\n";
        return capacity_error;
    } catch (const PreconditionError& e) {
        out << error_json("precondition", e.reason(), e.what()).dump(2) << "\n";
        return certified_fail;
    } catch (const InputError& e) {
        out << error_json("input", e.reason(), e.what()).dump(2) << "\n";
        return input_error;
    } catch (const Error& e) {
        out << error_json("error", e.reason(), e.what()).dump(2) << "\n";
        return certified_fail;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        out << error_json("internal", "internal", e.what()).dump(2) << "\n";
        return certified_fail;
    }
    out << result.dump(2) << "\n";
    return code;
}

}  // namespace stabreg::cli

// Command-line surface for the minor-reconfiguration library: model
// validation, reconfiguration-graph statistics, host membership checks,
// planning, sequence replay, and the verification campaigns.
//
// Exit codes are a stable contract:
//   0 ok   1 domain-negative   2 parse error   3 budget exceeded
//   4 not-a-minor              5 unreachable    6 precondition failed

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "recon/campaign.hpp"
#include "recon/families.hpp"
#include "recon/planner.hpp"
#include "recon/recon_graph.hpp"

using json = nlohmann::json;
using namespace recon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitNotAMinor = 4;
constexpr int kExitUnreachable = 5;
constexpr int kExitPrecondition = 6;

Graph graph_from_json(const json& j);

// A graph argument is either a file (edge list, or graph6 when the file
// has a .g6 suffix) or a family spec such as "wheel:5".
Graph load_graph(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot open " + arg);
        if (arg.size() > 3 && arg.substr(arg.size() - 3) == ".g6") {
            std::string line;
            std::getline(in, line);
            return from_graph6(line);
        }
        return read_edge_list(in);
    }
    return build_family(parse_family_spec(arg));
}

// Target specs: "kN" shorthand or a graph argument.
Graph load_target(const std::string& arg) {
    if (arg.size() >= 2 && arg[0] == 'k' && std::isdigit(static_cast<unsigned char>(arg[1])) &&
        !std::filesystem::exists(arg)) {
        int n = std::stoi(arg.substr(1));
        if (n < 1) throw ParseError("bad target spec: " + arg);
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
        return Graph::from_edges(n, es);
    }
    return load_graph(arg);
}

Graph graph_from_json(const json& j) {
    if (j.is_string()) return load_graph(j.get<std::string>());
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("inline graph needs fields n and edges");
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j.at("edges")) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::from_edges(j.at("n").get<int>(), es);
}

// Model files: {"labels": [...]} with optional "host" and "target" fields
// (file reference, family spec, or inline {n, edges}).
struct ModelFile {
    std::vector<int> labels;
    std::optional<Graph> host;
    std::optional<Graph> target;
};

ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("model file: ") + e.what());
    }
    ModelFile mf;
    if (!j.contains("labels")) throw ParseError("model file needs a labels array");
    for (const auto& x : j.at("labels")) mf.labels.push_back(x.get<int>());
    if (j.contains("host")) mf.host = graph_from_json(j.at("host"));
    if (j.contains("target")) {
        const auto& t = j.at("target");
        mf.target = t.is_string() ? load_target(t.get<std::string>()) : graph_from_json(t);
    }
    return mf;
}

HModel assemble_model(const std::string& graph_arg, const std::string& target_arg,
                      const std::string& model_path) {
    ModelFile mf = load_model_file(model_path);
    Graph host = graph_arg.empty()
                     ? (mf.host ? *mf.host : throw ParseError("no host graph given"))
                     : load_graph(graph_arg);
    Graph target = target_arg.empty()
                       ? (mf.target ? *mf.target : throw ParseError("no target given"))
                       : load_target(target_arg);
    return HModel{std::move(host), std::move(target), std::move(mf.labels)};
}

void emit_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    out << j.dump(2) << '\n';
}

int cmd_validate(const std::string& g, const std::string& h, const std::string& m) {
    HModel model = assemble_model(g, h, m);
    auto result = validate_model(model);
    if (result.ok) {
        std::cout << "valid model\n";
        return kExitOk;
    }
    std::cout << "invalid model: " << result.violation << '\n';
    return kExitNegative;
}

int cmd_reconstats(const std::string& g, const std::string& h, std::uint64_t budget,
                   const std::string& dot_path, const std::string& json_path) {
    EnumerationOptions opts;
    opts.budget = budget;
    ReconGraph rg = build_recon_graph(load_graph(g), load_target(h), opts);
    ReconSummary s = summarize(rg);
    std::cout << "nodes " << s.nodes << "\nedges " << s.edges << "\ncomponents "
              << s.components << "\ndiameter "
              << (s.diameter ? std::to_string(*s.diameter) : "infinite") << "\nfrozen "
              << s.frozen << '\n';
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        write_dot(rg, out);
    }
    if (!json_path.empty())
        emit_json(json_path,
                  json{{"nodes", s.nodes},
                       {"edges", s.edges},
                       {"components", s.components},
                       {"diameter", s.diameter ? json(*s.diameter) : json(nullptr)},
                       {"frozen", s.frozen}});
    return kExitOk;
}

int cmd_hostcheck(const std::string& g, const std::string& h, std::uint64_t budget) {
    EnumerationOptions opts;
    opts.budget = budget;
    ReconGraph rg = build_recon_graph(load_graph(g), load_target(h), opts);
    if (rg.models.empty()) throw NotAMinor("target is not a minor of the host");
    if (rg.component_count == 1) {
        std::cout << "member: reconfiguration graph is connected (" << rg.node_count()
                  << " models)\n";
        return kExitOk;
    }
    std::vector<std::size_t> sizes(rg.component_count, 0);
    for (int id : rg.component_id) ++sizes[id];
    std::cout << "non-member: " << rg.component_count << " components, sizes";
    for (std::size_t i = 0; i < sizes.size() && i < 8; ++i) std::cout << ' ' << sizes[i];
    if (sizes.size() > 8) std::cout << " ...";
    std::cout << '\n';
    return kExitNegative;
}

int cmd_plan(const std::string& g, const std::string& h, const std::string& from_path,
             const std::string& to_path, const std::string& strategy,
             const std::string& out_path, std::uint64_t budget) {
    HModel from = assemble_model(g, h, from_path);
    HModel to = assemble_model(g, h, to_path);
    auto vf = validate_model(from);
    if (!vf.ok) throw ParseError("from-model invalid: " + vf.violation);
    auto vt = validate_model(to);
    if (!vt.ok) throw ParseError("to-model invalid: " + vt.violation);

    bool host_complete = from.host.edge_count() == from.host.n * (from.host.n - 1) / 2;
    bool target_complete =
        from.target.edge_count() == from.target.n * (from.target.n - 1) / 2;

    std::optional<ReconSequence> seq;
    auto try_bfs = [&] {
        EnumerationOptions opts;
        opts.budget = budget;
        ReconGraph rg = build_recon_graph(from.host, from.target, opts);
        auto path = find_path(rg, from, to);
        if (!path) {
            std::cout << "unreachable: endpoints lie in different components\n";
            std::exit(kExitUnreachable);
        }
        seq = *path;
    };

    if (strategy == "bfs") {
        try_bfs();
    } else if (strategy == "k2") {
        seq = plan_k2(from, to);
    } else if (strategy == "clique") {
        seq = plan_clique(from, to);
    } else if (strategy == "genwheel") {
        auto lay = parse_family_spec(g).layout();
        if (!lay) throw PreconditionFailed("genwheel-layout", "graph spec is not a wheel family");
        seq = plan_genwheel(from, to, *lay);
    } else if (strategy == "auto") {
        try {
            if (from.target.n == 2 && target_complete && is_k_connected(from.host, 2)) {
                seq = plan_k2(from, to);
            } else if (host_complete && target_complete && from.host.n > from.target.n) {
                seq = plan_clique(from, to);
            } else {
                FamilySpec spec;
                bool has_spec = false;
                try {
                    spec = parse_family_spec(g);
                    has_spec = true;
                } catch (const ParseError&) {
                }
                if (has_spec && spec.layout() &&
                    from.target.n == spec.layout()->ell + 2 && target_complete)
                    seq = plan_genwheel(from, to, *spec.layout());
            }
        } catch (const Error&) {
            seq.reset();
        }
        if (!seq) try_bfs();
    } else {
        throw ParseError("unknown strategy: " + strategy);
    }

    if (out_path.empty() || out_path == "-") {
        write_sequence(*seq, std::cout);
    } else {
        std::ofstream out(out_path);
        write_sequence(*seq, out);
        std::cout << "plan: " << seq->steps.size() << " steps -> " << out_path << '\n';
    }
    return kExitOk;
}

int cmd_replay(const std::string& g, const std::string& h, const std::string& model_path,
               const std::string& seq_path) {
    HModel start = assemble_model(g, h, model_path);
    std::ifstream in(seq_path);
    if (!in) throw ParseError("cannot open " + seq_path);
    ReconSequence seq{start, read_sequence(in)};
    try {
        HModel end = replay(seq);
        std::cout << "replay ok, end labels:";
        for (int lbl : end.labels) std::cout << ' ' << lbl;
        std::cout << '\n';
        return kExitOk;
    } catch (const ReplayError& e) {
        std::cout << "replay failed at step " << e.step_index << ": " << e.what() << '\n';
        return kExitNegative;
    }
}

int cmd_campaign(const std::string& name, const CampaignParams& params,
                 const std::string& json_path) {
    CampaignReport report = run_campaign(name, params);
    write_report(report, std::cout);
    std::cerr << "wall time: " << report.wall_ms << " ms\n";
    if (!json_path.empty()) {
        json items = json::array();
        for (const auto& r : report.instances)
            items.push_back({{"instance", r.descriptor},
                             {"verdict", r.verdict == Verdict::pass     ? "pass"
                                         : r.verdict == Verdict::fail   ? "fail"
                                                                        : "skipped"},
                             {"detail", r.detail}});
        emit_json(json_path, json{{"campaign", report.name},
                                  {"params", report.params_header},
                                  {"instances", items},
                                  {"passed", report.passed()},
                                  {"failed", report.failed()},
                                  {"skipped", report.skipped()}});
    }
    return report.ok() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minor reconfiguration toolkit"};
    app.require_subcommand(1);

    std::string graph_arg, target_arg, model_arg, from_arg, to_arg, seq_arg;
    std::string dot_path, json_path, out_path, strategy = "auto";
    std::uint64_t budget = kDefaultEnumerationBudget;
    CampaignParams params;
    std::string campaign_name;

    auto* validate = app.add_subcommand("validate", "check a model file");
    validate->add_option("-g,--graph", graph_arg, "host graph file or family spec");
    validate->add_option("-H,--target", target_arg, "target spec (k2/k3/k4 or file)");
    validate->add_option("-m,--model", model_arg, "model file")->required();

    auto* stats = app.add_subcommand("reconstats", "reconfiguration graph statistics");
    stats->add_option("-g,--graph", graph_arg)->required();
    stats->add_option("-H,--target", target_arg)->required();
    stats->add_option("--budget", budget, "enumeration budget");
    stats->add_option("--dot", dot_path, "write DOT export");
    stats->add_option("--json", json_path, "write summary JSON");

    auto* host = app.add_subcommand("hostcheck", "is the reconfiguration graph connected?");
    host->add_option("-g,--graph", graph_arg)->required();
    host->add_option("-H,--target", target_arg)->required();
    host->add_option("--budget", budget);

    auto* plan = app.add_subcommand("plan", "plan a reconfiguration sequence");
    plan->add_option("-g,--graph", graph_arg)->required();
    plan->add_option("-H,--target", target_arg)->required();
    plan->add_option("--from", from_arg, "start model file")->required();
    plan->add_option("--to", to_arg, "end model file")->required();
    plan->add_option("--strategy", strategy, "auto|bfs|k2|clique|genwheel");
    plan->add_option("-o,--out", out_path, "sequence output file (default stdout)");
    plan->add_option("--budget", budget);

    auto* rep = app.add_subcommand("replay", "replay and validate a sequence file");
    rep->add_option("-g,--graph", graph_arg);
    rep->add_option("-H,--target", target_arg);
    rep->add_option("-m,--model", model_arg, "start model file")->required();
    rep->add_option("-s,--sequence", seq_arg, "sequence file")->required();

    auto* camp = app.add_subcommand("campaign", "run a verification campaign");
    camp->add_option("name", campaign_name, "campaign name")->required();
    camp->add_option("--nmax", params.n_max, "instance size cap");
    camp->add_option("--seed", params.seed, "random seed");
    camp->add_option("--count", params.count, "seeded host count");
    camp->add_option("--fuzz", params.fuzz, "invocations per planner");
    camp->add_option("--workers", params.workers, "worker threads (0 = auto)");
    camp->add_option("--budget", params.budget);
    camp->add_option("--json", json_path, "write report JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(graph_arg, target_arg, model_arg);
        if (*stats) return cmd_reconstats(graph_arg, target_arg, budget, dot_path, json_path);
        if (*host) return cmd_hostcheck(graph_arg, target_arg, budget);
        if (*plan)
            return cmd_plan(graph_arg, target_arg, from_arg, to_arg, strategy, out_path, budget);
        if (*rep) return cmd_replay(graph_arg, target_arg, model_arg, seq_arg);
        if (*camp) return cmd_campaign(campaign_name, params, json_path);
    } catch (const StateSpaceExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const NotAMinor& e) {
        std::cerr << "not a minor: " << e.what() << '\n';
        return kExitNotAMinor;
    } catch (const PreconditionFailed& e) {
        std::cerr << "precondition failed (" << e.condition << "): " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const NotTwoConnected& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const NotComplete& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const NotAGeneralizedWheel& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const SizeMismatch& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}

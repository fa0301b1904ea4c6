#include "treetau/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "treetau/errors.hpp"
#include "treetau/graph_file.hpp"

namespace treetau {

namespace {

struct Source {
    WeightedGraph graph;
    std::optional<Polynomial> closed_form;
    std::string closed_form_note; // reason when absent
};

Source resolve_source(const JobSpec& spec) {
    if (spec.complete) {
        const std::size_t n = *spec.complete;
        Source src{complete_graph(n), std::nullopt, ""};
        if (n >= 2) {
            src.closed_form = cayley_prufer_formula(n);
        } else {
            src.closed_form_note = "complete-graph formula needs n >= 2";
        }
        return src;
    }
    if (spec.multipartite) {
        return {complete_multipartite(*spec.multipartite),
                multipartite_formula(*spec.multipartite), ""};
    }
    if (spec.ferrers) {
        return {ferrers_graph(*spec.ferrers), ferrers_formula(*spec.ferrers), ""};
    }
    if (spec.threshold) {
        Source src{threshold_graph(*spec.threshold), std::nullopt, ""};
        const std::size_t n = src.graph.vertex_count();
        if (n == 1 || src.graph.has_edge(0, n - 1)) {
            src.closed_form = threshold_formula(src.graph);
        } else {
            src.closed_form_note = "disconnected threshold graph";
        }
        return src;
    }
    return {parse_graph_file(*spec.file), std::nullopt, "no closed form for file input"};
}

constexpr std::size_t kBruteForceCap = 24;

Polynomial compute_route(const Source& src, Route route) {
    switch (route) {
    case Route::Cofactor: return tau_via_cofactor(src.graph);
    case Route::RankOne: return tau_via_rank_one(src.graph);
    case Route::BruteForce: return tau_brute_force(src.graph, kBruteForceCap);
    case Route::ClosedForm:
        if (!src.closed_form) {
            throw InvalidSpecError("closed-form route unavailable: " + src.closed_form_note);
        }
        return *src.closed_form;
    }
    throw InvalidSpecError("unknown route");
}

// The routes verify/bench runs, with notes for the inapplicable ones.
std::vector<Route> applicable_routes(const Source& src, std::ostream& out) {
    std::vector<Route> routes = {Route::Cofactor, Route::RankOne};
    if (src.graph.edge_count() <= kBruteForceCap) {
        routes.push_back(Route::BruteForce);
    } else {
        out << "brute-force: skipped (" << src.graph.edge_count()
            << " edges exceed the " << kBruteForceCap << "-edge cap)\n";
    }
    if (src.closed_form) {
        routes.push_back(Route::ClosedForm);
    } else {
        out << "closed-form: skipped (" << src.closed_form_note << ")\n";
    }
    return routes;
}

int run_verify(const Source& src, std::ostream& out) {
    std::vector<std::pair<std::string, Polynomial>> results;
    for (Route r : applicable_routes(src, out)) {
        results.emplace_back(route_name(r), compute_route(src, r));
    }
    return report_agreement(results, out);
}

int run_bench(const Source& src, std::ostream& out) {
    for (Route r : applicable_routes(src, out)) {
        const auto start = std::chrono::steady_clock::now();
        const Polynomial tau = compute_route(src, r);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        out << route_name(r) << ": " << std::fixed << std::setprecision(1) << ms << " ms ("
            << tau.term_count() << " terms)\n";
    }
    return 0;
}

} // namespace

int report_agreement(const std::vector<std::pair<std::string, Polynomial>>& routes,
                     std::ostream& out) {
    int status = 0;
    for (std::size_t i = 0; i < routes.size(); ++i) {
        for (std::size_t j = i + 1; j < routes.size(); ++j) {
            out << routes[i].first << " vs " << routes[j].first << ": ";
            if (routes[i].second == routes[j].second) {
                out << "PASS\n";
            } else {
                status = 1;
                const Polynomial diff = routes[i].second - routes[j].second;
                out << "FAIL\n  first differing term: "
                    << Polynomial::from_terms({diff.leading_term()}) << "\n";
            }
        }
    }
    return status;
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    const int sources = int(spec.complete.has_value()) + int(spec.multipartite.has_value()) +
                        int(spec.ferrers.has_value()) + int(spec.threshold.has_value()) +
                        int(spec.file.has_value());
    if (sources != 1) {
        err << "error: exactly one graph source required (--complete, --multipartite, "
               "--ferrers, --threshold, or --file)\n";
        return 2;
    }
    if (spec.route && spec.command != JobSpec::Command::Enumerate) {
        err << "error: --route applies only to enumerate\n";
        return 2;
    }
    try {
        const Source src = resolve_source(spec);
        switch (spec.command) {
        case JobSpec::Command::Enumerate:
            out << compute_route(src, spec.route.value_or(Route::Cofactor)) << "\n";
            return 0;
        case JobSpec::Command::Count:
            out << count_spanning_trees(src.graph).str() << "\n";
            return 0;
        case JobSpec::Command::Verify:
            return run_verify(src, out);
        case JobSpec::Command::Bench:
            return run_bench(src, out);
        }
        err << "error: unknown command\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact weighted spanning-tree enumeration"};
    app.require_subcommand(1);

    std::size_t complete_n = 0;
    std::vector<std::size_t> multipartite_parts;
    std::vector<std::uint32_t> ferrers_parts;
    std::string threshold_steps;
    std::string file_path;
    std::string route;

    const std::map<std::string, JobSpec::Command> commands = {
        {"enumerate", JobSpec::Command::Enumerate},
        {"count", JobSpec::Command::Count},
        {"verify", JobSpec::Command::Verify},
        {"bench", JobSpec::Command::Bench},
    };
    const std::map<std::string, std::string> descriptions = {
        {"enumerate", "print the spanning-tree polynomial"},
        {"count", "print the number of spanning trees"},
        {"verify", "cross-check every applicable route"},
        {"bench", "time every applicable route"},
    };

    for (const auto& [name, command] : commands) {
        (void)command;
        CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
        sub->add_option("--complete", complete_n, "complete graph on n vertices");
        sub->add_option("--multipartite", multipartite_parts,
                        "complete multipartite graph with part sizes n1,n2,...")
            ->delimiter(',');
        sub->add_option("--ferrers", ferrers_parts, "Ferrers graph of the partition l1,l2,...")
            ->delimiter(',');
        sub->add_option("--threshold", threshold_steps,
                        "threshold graph from a creation sequence over d/i, e.g. ddid");
        sub->add_option("--file", file_path, "weighted edge-list file");
        if (name == "enumerate") {
            sub->add_option("--route", route, "computation route")
                ->check(CLI::IsMember(
                    {"cofactor", "rank-one", "brute-force", "closed-form"}));
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    JobSpec spec;
    spec.command = commands.at(sub->get_name());
    try {
        if (sub->count("--complete")) {
            spec.complete = complete_n;
        }
        if (sub->count("--multipartite")) {
            spec.multipartite = MultipartiteSpec(multipartite_parts);
        }
        if (sub->count("--ferrers")) {
            spec.ferrers = Partition(ferrers_parts);
        }
        if (sub->count("--threshold")) {
            ThresholdSpec t;
            for (std::size_t k = 0; k < threshold_steps.size(); ++k) {
                const char c = threshold_steps[k];
                if (c != 'd' && c != 'i') {
                    err << "error: creation step " << k + 1 << " must be 'd' or 'i'\n";
                    return 2;
                }
                t.steps.push_back(c == 'd' ? CreationStep::Dominating : CreationStep::Isolated);
            }
            if (t.steps.empty()) {
                err << "error: creation sequence must be nonempty\n";
                return 2;
            }
            spec.threshold = std::move(t);
        }
        if (sub->count("--file")) {
            spec.file = file_path;
        }
        if (sub->get_option_no_throw("--route") != nullptr && sub->count("--route") > 0) {
            const std::map<std::string, Route> names = {
                {"cofactor", Route::Cofactor},
                {"rank-one", Route::RankOne},
                {"brute-force", Route::BruteForce},
                {"closed-form", Route::ClosedForm},
            };
            spec.route = names.at(route);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return run(spec, out, err);
}

} // namespace treetau

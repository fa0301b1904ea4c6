#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treetau/enumerate.hpp"
#include "treetau/graphs.hpp"

namespace treetau {

/// One resolved invocation: a command, exactly one graph source, and for
/// enumerate an optional route (default cofactor); verify and bench always
/// run every applicable route.
struct JobSpec {
    enum class Command { Enumerate, Count, Verify, Bench };

    Command command = Command::Enumerate;
    std::optional<std::size_t> complete;
    std::optional<MultipartiteSpec> multipartite;
    std::optional<Partition> ferrers;
    std::optional<ThresholdSpec> threshold;
    std::optional<std::string> file;
    std::optional<Route> route;
};

/// Prints one PASS/FAIL line per route pair (with the first differing term on
/// FAIL) and returns 0 if every pair agrees, 1 otherwise.
int report_agreement(const std::vector<std::pair<std::string, Polynomial>>& routes,
                     std::ostream& out);

/// Executes a resolved job. Returns 0 on success/PASS, 1 on verify FAIL,
/// 2 on invalid input (bad family parameters, unreadable or malformed files).
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Full command line ("enumerate --complete 3", without the program name).
/// Usage errors print to err and return 2; --help prints to out, returns 0.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace treetau

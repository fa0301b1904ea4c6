#include "treetau/graph_file.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

#include "treetau/errors.hpp"
#include "treetau/weight_expr.hpp"

namespace treetau {

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

std::uint64_t parse_number(std::string_view digits, std::size_t line, std::size_t column,
                           const std::string& what) {
    std::uint64_t value = 0;
    for (char c : digits) {
        const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
            throw SyntaxError(what + " too large", line, column);
        }
        value = value * 10 + digit;
    }
    return value;
}

std::string at_line(std::size_t line) { return " (line " + std::to_string(line) + ")"; }

// Every variable in the expression must name one of the n vertices.
void check_variable_indices(const WeightExpr& e, std::size_t n, std::size_t line) {
    switch (e.kind()) {
    case WeightExpr::Kind::Integer:
        return;
    case WeightExpr::Kind::Variable: {
        const Variable v = e.var();
        if (v.index < 1 || v.index > n) {
            throw IndexOutOfRangeError("variable " + to_string(v) +
                                       " does not name a vertex" + at_line(line));
        }
        return;
    }
    case WeightExpr::Kind::Negate:
    case WeightExpr::Kind::Pow:
        check_variable_indices(e.child(), n, line);
        return;
    case WeightExpr::Kind::Add:
    case WeightExpr::Kind::Sub:
    case WeightExpr::Kind::Mul:
        check_variable_indices(e.child(0), n, line);
        check_variable_indices(e.child(1), n, line);
        return;
    }
}

} // namespace

WeightedGraph parse_graph_text(const std::string& text) {
    std::size_t n = 0;
    bool have_header = false;
    std::vector<EdgeSpec> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        ++line_no;
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line(text.data() + pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }

        std::vector<Token> tokens;
        for (std::size_t i = 0; i < line.size();) {
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
                ++i;
            }
            tokens.push_back({line.substr(start, i - start), start + 1});
        }
        if (tokens.empty()) {
            continue;
        }

        if (!have_header) {
            if (tokens[0].text != "graph") {
                throw SyntaxError("expected 'graph <n>' header", line_no, tokens[0].column);
            }
            if (tokens.size() < 2 || !all_digits(tokens[1].text)) {
                throw SyntaxError("expected vertex count", line_no,
                                  tokens.size() < 2 ? tokens[0].column + tokens[0].text.size()
                                                    : tokens[1].column);
            }
            if (tokens.size() > 2) {
                throw SyntaxError("unexpected token after vertex count", line_no,
                                  tokens[2].column);
            }
            n = parse_number(tokens[1].text, line_no, tokens[1].column, "vertex count");
            if (n == 0) {
                throw TooSmallError("vertex count must be positive" + at_line(line_no));
            }
            have_header = true;
            continue;
        }

        // Edge line: <i> <j> <weight-expr to end of line>.
        for (std::size_t k = 0; k < 2; ++k) {
            if (tokens.size() <= k) {
                throw SyntaxError("expected '<i> <j> <weight>'", line_no,
                                  tokens.back().column + tokens.back().text.size());
            }
            if (!all_digits(tokens[k].text)) {
                throw SyntaxError("expected vertex number", line_no, tokens[k].column);
            }
        }
        const std::uint64_t i = parse_number(tokens[0].text, line_no, tokens[0].column,
                                             "vertex number");
        const std::uint64_t j = parse_number(tokens[1].text, line_no, tokens[1].column,
                                             "vertex number");
        if (i < 1 || i > n || j < 1 || j > n) {
            throw IndexOutOfRangeError("edge endpoint out of range 1.." + std::to_string(n) +
                                       at_line(line_no));
        }
        if (i == j) {
            throw LoopEdgeError("loop edge at vertex " + std::to_string(i) + at_line(line_no));
        }
        if (tokens.size() < 3) {
            throw SyntaxError("expected weight expression", line_no,
                              tokens[1].column + tokens[1].text.size());
        }
        const std::size_t expr_start = tokens[2].column - 1;
        const WeightExpr expr =
            parse_weight_expr(line.substr(expr_start), line_no, tokens[2].column);
        check_variable_indices(expr, n, line_no);
        Polynomial weight = expr.lower();
        if (weight.is_zero()) {
            throw ZeroWeightError("edge weight is the zero polynomial" + at_line(line_no));
        }
        const std::pair<std::uint64_t, std::uint64_t> key = std::minmax(i, j);
        if (!seen.insert(key).second) {
            throw DuplicateEdgeError("duplicate edge " + std::to_string(key.first) + " " +
                                     std::to_string(key.second) + at_line(line_no));
        }
        edges.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                         std::move(weight)});
    }

    if (!have_header) {
        throw SyntaxError("expected 'graph <n>' header", 1, 1);
    }
    return from_edge_list(n, edges);
}

WeightedGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read " + path);
    }
    return parse_graph_text(buffer.str());
}

} // namespace treetau

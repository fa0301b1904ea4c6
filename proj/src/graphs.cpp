#include "treetau/graphs.hpp"

#include <algorithm>
#include <numeric>

namespace treetau {

namespace {

std::vector<std::string> default_labels(std::size_t n, const char* stem) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(stem + std::to_string(i + 1));
    return labels;
}

} // namespace

WeightedGraph::WeightedGraph(std::size_t n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n == 0)
        throw TooSmallError("graph needs at least one vertex");
    if (labels_.empty())
        labels_ = default_labels(n, "v");
    if (labels_.size() != n)
        throw InvalidSpecError("expected " + std::to_string(n) + " labels, got " +
                               std::to_string(labels_.size()));
    weights_.assign(n * n, Polynomial{});
}

void WeightedGraph::check_index(std::size_t i) const {
    if (i >= n_)
        throw IndexOutOfRangeError("vertex index " + std::to_string(i + 1) +
                                   " out of range for " + std::to_string(n_) + " vertices");
}

void WeightedGraph::add_edge(std::size_t i, std::size_t j, Polynomial weight) {
    check_index(i);
    check_index(j);
    if (i == j)
        throw LoopEdgeError("loop at vertex " + std::to_string(i + 1));
    if (weight.is_zero())
        throw ZeroWeightError("zero weight on edge {" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + "}");
    if (!weights_[i * n_ + j].is_zero())
        throw DuplicateEdgeError("duplicate edge {" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "}");
    weights_[i * n_ + j] = weight;
    weights_[j * n_ + i] = std::move(weight);
    ++edge_count_;
}

bool WeightedGraph::has_edge(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    return !weights_[i * n_ + j].is_zero();
}

const Polynomial& WeightedGraph::weight(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    return weights_[i * n_ + j];
}

std::vector<std::pair<std::size_t, std::size_t>> WeightedGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!weights_[i * n_ + j].is_zero())
                out.emplace_back(i, j);
    return out;
}

Polynomial WeightedGraph::weighted_degree(std::size_t i) const {
    check_index(i);
    Polynomial sum;
    for (std::size_t j = 0; j < n_; ++j)
        sum += weights_[i * n_ + j];
    return sum;
}

std::size_t WeightedGraph::degree(std::size_t i) const {
    check_index(i);
    std::size_t d = 0;
    for (std::size_t j = 0; j < n_; ++j)
        if (!weights_[i * n_ + j].is_zero())
            ++d;
    return d;
}

WeightedGraph from_edge_list(std::size_t n, const std::vector<EdgeSpec>& edges) {
    WeightedGraph g(n);
    for (const auto& e : edges)
        g.add_edge(e.i, e.j, e.weight);
    return g;
}

bool is_valid_weighting(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.weight(i, i).is_zero())
            return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(g.weight(i, j) == g.weight(j, i)))
                return false;
            if (g.has_edge(i, j) != !g.weight(i, j).is_zero())
                return false;
        }
    }
    return true;
}

Partition::Partition(std::vector<std::uint32_t> p) : parts(std::move(p)) {
    if (parts.empty())
        throw InvalidSpecError("partition needs at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0)
            throw InvalidSpecError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw InvalidSpecError("partition parts must be weakly decreasing");
    }
}

std::uint64_t Partition::box_count() const {
    return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

Partition conjugate_partition(const Partition& lambda) {
    std::vector<std::uint32_t> conj(lambda.largest(), 0);
    for (std::uint32_t part : lambda.parts)
        for (std::uint32_t j = 0; j < part; ++j)
            ++conj[j];
    return Partition(std::move(conj));
}

MultipartiteSpec::MultipartiteSpec(std::vector<std::size_t> sizes) : part_sizes(std::move(sizes)) {
    if (part_sizes.size() < 2)
        throw InvalidSpecError("multipartite spec needs at least two parts");
    for (std::size_t s : part_sizes)
        if (s == 0)
            throw InvalidSpecError("multipartite part sizes must be positive");
}

std::size_t MultipartiteSpec::vertex_count() const {
    return std::accumulate(part_sizes.begin(), part_sizes.end(), std::size_t{0});
}

WeightedGraph complete_graph(std::size_t n) {
    WeightedGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.add_edge(i, j, x(static_cast<std::uint32_t>(i + 1)) *
                                 x(static_cast<std::uint32_t>(j + 1)));
    return g;
}

WeightedGraph complete_multipartite(const MultipartiteSpec& spec) {
    const std::size_t n = spec.vertex_count();
    std::vector<std::size_t> part_of(n);
    std::size_t v = 0;
    for (std::size_t p = 0; p < spec.part_sizes.size(); ++p)
        for (std::size_t k = 0; k < spec.part_sizes[p]; ++k)
            part_of[v++] = p;
    WeightedGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j])
                g.add_edge(i, j, x(static_cast<std::uint32_t>(i + 1)) *
                                     x(static_cast<std::uint32_t>(j + 1)));
    return g;
}

WeightedGraph ferrers_graph(const Partition& lambda) {
    const std::size_t m = lambda.part_count();
    const std::size_t n = lambda.largest();
    std::vector<std::string> labels = default_labels(m, "r");
    for (const std::string& c : default_labels(n, "c"))
        labels.push_back(c);
    WeightedGraph g(m + n, std::move(labels));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < lambda.parts[i]; ++j)
            g.add_edge(i, m + j, x(static_cast<std::uint32_t>(i + 1)) *
                                     y(static_cast<std::uint32_t>(j + 1)));
    return g;
}

WeightedGraph threshold_graph(const ThresholdSpec& spec) {
    const std::size_t n = spec.vertex_count();
    // Creation order: u_0 is the initial vertex, u_k arrives at step k.
    // Present vertices u_a, u_b (a < b) are adjacent iff u_b arrived Dominating.
    // Canonical vertex order (weakly decreasing degree): dominating vertices
    // newest-first, the initial vertex, then isolated vertices oldest-first.
    std::vector<std::size_t> order; // order[position] = creation index
    order.reserve(n);
    for (std::size_t k = n; k-- > 1;)
        if (spec.steps[k - 1] == CreationStep::Dominating)
            order.push_back(k);
    order.push_back(0);
    for (std::size_t k = 1; k < n; ++k)
        if (spec.steps[k - 1] == CreationStep::Isolated)
            order.push_back(k);

    std::vector<std::size_t> position(n); // position[creation index] = vertex number
    for (std::size_t p = 0; p < n; ++p)
        position[order[p]] = p;

    WeightedGraph g(n);
    for (std::size_t b = 1; b < n; ++b) {
        if (spec.steps[b - 1] != CreationStep::Dominating)
            continue;
        for (std::size_t a = 0; a < b; ++a) {
            const auto lo = static_cast<std::uint32_t>(std::min(position[a], position[b]) + 1);
            const auto hi = static_cast<std::uint32_t>(std::max(position[a], position[b]) + 1);
            g.add_edge(position[a], position[b], x(lo) * y(hi));
        }
    }
    return g;
}

bool is_threshold_ordered(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = j + 1; l < n; ++l) {
            if (!g.has_edge(j, l))
                continue;
            for (std::size_t i = 0; i < j; ++i)
                if (!g.has_edge(i, l))
                    return false;
            for (std::size_t k = 0; k < l; ++k)
                if (k != j && !g.has_edge(j, k))
                    return false;
        }
    }
    return true;
}

std::size_t special_vertex(const WeightedGraph& g) {
    if (!is_threshold_ordered(g))
        throw NotThresholdOrderedError("vertex order violates the threshold shift condition");
    const std::size_t n = g.vertex_count();
    std::size_t t = 1;
    // Grow the clique prefix: v_1..v_t stays a clique iff v_t sees all of v_1..v_{t-1}.
    while (t < n) {
        bool clique = true;
        for (std::size_t i = 0; i < t && clique; ++i)
            clique = g.has_edge(i, t);
        if (!clique)
            break;
        ++t;
    }
    return t;
}

std::vector<std::size_t> degree_sequence(const WeightedGraph& g) {
    std::vector<std::size_t> degrees(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        degrees[i] = g.degree(i);
    return degrees;
}

} // namespace treetau

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "treetau/errors.hpp"
#include "treetau/mpoly.hpp"

namespace treetau {

/// Simple graph with a symmetric polynomial edge weighting. A zero weight
/// means "no edge"; loops and parallel edges are impossible by construction.
/// Vertices are 0-based in code; vertex k carries the 1-based label index k+1,
/// so e.g. vertex 0 of a complete graph owns the indeterminate x1.
class WeightedGraph {
public:
    explicit WeightedGraph(std::size_t n, std::vector<std::string> labels = {});

    std::size_t vertex_count() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Throws LoopEdgeError, IndexOutOfRangeError, DuplicateEdgeError, ZeroWeightError.
    void add_edge(std::size_t i, std::size_t j, Polynomial weight);

    bool has_edge(std::size_t i, std::size_t j) const;
    /// Zero polynomial for non-edges and the diagonal.
    const Polynomial& weight(std::size_t i, std::size_t j) const;

    std::size_t edge_count() const { return edge_count_; }
    /// All edges as (i, j) with i < j, in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    Polynomial weighted_degree(std::size_t i) const;
    std::size_t degree(std::size_t i) const;

private:
    void check_index(std::size_t i) const;

    std::size_t n_;
    std::size_t edge_count_ = 0;
    std::vector<std::string> labels_;
    std::vector<Polynomial> weights_; // dense n x n, symmetric, zero diagonal
};

struct EdgeSpec {
    std::size_t i;
    std::size_t j;
    Polynomial weight;
};

/// Builds a graph from explicit edges (0-based endpoints).
WeightedGraph from_edge_list(std::size_t n, const std::vector<EdgeSpec>& edges);

/// Re-checks the weighting invariants (symmetry, zero diagonal, nonzero on edges).
bool is_valid_weighting(const WeightedGraph& g);

/// Weakly decreasing list of positive integers.
struct Partition {
    std::vector<std::uint32_t> parts;

    explicit Partition(std::vector<std::uint32_t> p);

    std::size_t part_count() const { return parts.size(); }
    std::uint32_t largest() const { return parts.front(); }
    std::uint64_t box_count() const;

    bool operator==(const Partition&) const = default;
};

/// Conjugate partition: part j counts the parts of lambda that are >= j.
Partition conjugate_partition(const Partition& lambda);

enum class CreationStep { Dominating, Isolated };

/// Build recipe for a threshold graph: one implicit initial vertex plus a
/// creation step per additional vertex. The result is connected iff the last
/// step is Dominating (or there are no steps at all).
struct ThresholdSpec {
    std::vector<CreationStep> steps;

    std::size_t vertex_count() const { return steps.size() + 1; }
};

struct MultipartiteSpec {
    std::vector<std::size_t> part_sizes;

    explicit MultipartiteSpec(std::vector<std::size_t> sizes);

    std::size_t vertex_count() const;
};

/// K_n with weights x_i * x_j on every pair.
WeightedGraph complete_graph(std::size_t n);

/// Complete multipartite graph; parts occupy consecutive vertex blocks, and
/// an edge x_i * x_j joins every pair of vertices from different parts.
WeightedGraph complete_multipartite(const MultipartiteSpec& spec);

/// Bipartite graph of a partition's diagram: row vertices r_1..r_m then
/// column vertices c_1..c_n with n = lambda_1; edge {r_i, c_j} iff j <= lambda_i,
/// weighted x_i * y_j.
WeightedGraph ferrers_graph(const Partition& lambda);

/// Threshold graph in its canonical vertex order (dominating vertices first in
/// reverse creation order, then the initial vertex, then isolated vertices in
/// creation order), with edge {v_i, v_j} weighted x_min(i,j) * y_max(i,j)
/// using 1-based positions.
WeightedGraph threshold_graph(const ThresholdSpec& spec);

/// True iff the vertex order satisfies the threshold shift condition: for
/// every edge {v_j, v_l} with j < l, v_l is adjacent to all earlier vertices
/// than v_j and v_j is adjacent to all vertices earlier than v_l.
bool is_threshold_ordered(const WeightedGraph& g);

/// Size t of the largest prefix v_1..v_t forming a clique, for a
/// threshold-ordered graph. Throws NotThresholdOrderedError otherwise.
std::size_t special_vertex(const WeightedGraph& g);

/// Unweighted degrees in vertex order.
std::vector<std::size_t> degree_sequence(const WeightedGraph& g);

} // namespace treetau

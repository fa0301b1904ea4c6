#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "treetau/graphs.hpp"
#include "treetau/linalg.hpp"
#include "treetau/mpoly.hpp"

namespace treetau {

enum class Route { Cofactor, RankOne, BruteForce, ClosedForm };

const char* route_name(Route r);

struct EnumerationResult {
    Polynomial tau;
    Route route;
    std::string metadata; // graph family and parameters, for reporting
};

/// Edge set of a spanning tree, endpoints 0-based with i < j.
struct SpanningTree {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Calls fn for every spanning tree of g, found by running over all
/// (n-1)-edge subsets with a union-find acyclicity test. The edge-count cap
/// keeps the subset space to at most C(24,12).
void for_each_spanning_tree(const WeightedGraph& g,
                            const std::function<void(const SpanningTree&)>& fn,
                            std::size_t max_edges = 24);

/// tau(G;w) summed tree by tree. Throws TooLargeError over the edge cap.
Polynomial tau_brute_force(const WeightedGraph& g, std::size_t max_edges = 24);

/// tau(G;w) as the signed (i,j) cofactor of the weighted Laplacian (0-based
/// indices; any choice gives the same polynomial).
Polynomial tau_via_cofactor(const WeightedGraph& g, std::size_t i = 0, std::size_t j = 0);

/// tau(G;w) as det(L + ab^T) / ((sum a)(sum b)) for integer vectors.
/// Throws ZeroVectorSumError when either sum vanishes.
Polynomial tau_via_rank_one(const WeightedGraph& g, const std::vector<BigInt>& a,
                            const std::vector<BigInt>& b);

/// The all-ones default: det(L + J) / n^2.
Polynomial tau_via_rank_one(const WeightedGraph& g);

/// Same, with polynomial vectors (e.g. a = b = x, or the y/x indicator pair).
Polynomial tau_via_rank_one_symbolic(const WeightedGraph& g, const std::vector<Polynomial>& a,
                                     const std::vector<Polynomial>& b);

/// x_1...x_n (x_1+...+x_n)^(n-2), expanded. Throws TooSmallError for n < 2.
Polynomial cayley_prufer_formula(std::size_t n);

/// (prod x_i) * prod_l (sum_{j not in V_l} x_j)^(n_l - 1) * (sum x_i)^(k-2),
/// expanded.
Polynomial multipartite_formula(const MultipartiteSpec& spec);

/// (prod x_i)(prod y_j) * prod_{i>=2} (y_1+...+y_{lambda_i})
/// * prod_{j>=2} (x_1+...+x_{lambda'_j}), expanded.
Polynomial ferrers_formula(const Partition& lambda);

/// x_1 (prod_{i=t}^n y_i)(prod_{j=2}^{t-1} f_j)(prod_{j=t+1}^n g_j) for a
/// connected threshold-ordered graph, expanded; t is the special vertex,
/// f_j = y_j(x_1+...+x_j) + x_j(y_{j+1}+...+y_{1+deg_j}), g_j = x_1+...+x_{deg_j}.
/// Throws DisconnectedError / NotThresholdOrderedError.
Polynomial threshold_formula(const WeightedGraph& g);

/// Number of spanning trees: the (1,1) cofactor with every weight
/// specialized to 1 before the determinant.
BigInt count_spanning_trees(const WeightedGraph& g);

/// prod_{i=2}^{t-1} (deg(v_i)+1) * prod_{i=t+1}^n deg(v_i) for a connected
/// threshold graph.
BigInt merris_count(const WeightedGraph& g);

/// n^(k-2) * prod_l (n - n_l)^(n_l - 1).
BigInt lewis_count(const MultipartiteSpec& spec);

} // namespace treetau

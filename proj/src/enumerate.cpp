#include "treetau/enumerate.hpp"

#include <numeric>
#include <string>

#include "treetau/errors.hpp"

namespace treetau {

namespace {

// Union-find with path halving; no ranks needed at these sizes.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

Polynomial x_prefix_sum(std::size_t upto) {
    Polynomial s;
    for (std::size_t i = 1; i <= upto; ++i)
        s += x(static_cast<std::uint32_t>(i));
    return s;
}

} // namespace

const char* route_name(Route r) {
    switch (r) {
    case Route::Cofactor: return "cofactor";
    case Route::RankOne: return "rank-one";
    case Route::BruteForce: return "brute-force";
    case Route::ClosedForm: return "closed-form";
    }
    return "unknown";
}

void for_each_spanning_tree(const WeightedGraph& g,
                            const std::function<void(const SpanningTree&)>& fn,
                            std::size_t max_edges) {
    const std::size_t n = g.vertex_count();
    const auto edges = g.edges();
    if (edges.size() > max_edges)
        throw TooLargeError("graph has " + std::to_string(edges.size()) +
                            " edges; brute force is capped at " + std::to_string(max_edges));
    const std::size_t k = n - 1;
    if (k == 0) {
        fn(SpanningTree{});
        return;
    }
    if (edges.size() < k)
        return;

    // March through k-subsets of the edge list in lexicographic order. A
    // subset of n-1 edges is a spanning tree iff it is acyclic.
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    SpanningTree tree;
    tree.edges.resize(k);
    for (;;) {
        DisjointSets sets(n);
        bool acyclic = true;
        for (std::size_t c = 0; c < k && acyclic; ++c)
            acyclic = sets.unite(edges[pick[c]].first, edges[pick[c]].second);
        if (acyclic) {
            for (std::size_t c = 0; c < k; ++c)
                tree.edges[c] = edges[pick[c]];
            fn(tree);
        }
        std::size_t p = k;
        while (p > 0 && pick[p - 1] == edges.size() - k + p - 1)
            --p;
        if (p == 0)
            break;
        ++pick[p - 1];
        for (std::size_t c = p; c < k; ++c)
            pick[c] = pick[c - 1] + 1;
    }
}

Polynomial tau_brute_force(const WeightedGraph& g, std::size_t max_edges) {
    Polynomial total;
    for_each_spanning_tree(
        g,
        [&](const SpanningTree& tree) {
            Polynomial product(1);
            for (const auto& [i, j] : tree.edges)
                product *= g.weight(i, j);
            total += product;
        },
        max_edges);
    return total;
}

Polynomial tau_via_cofactor(const WeightedGraph& g, std::size_t i, std::size_t j) {
    if (i >= g.vertex_count() || j >= g.vertex_count())
        throw IndexOutOfRangeError("cofactor position out of range");
    return cofactor(weighted_laplacian(g), i, j);
}

Polynomial tau_via_rank_one(const WeightedGraph& g, const std::vector<BigInt>& a,
                            const std::vector<BigInt>& b) {
    std::vector<Polynomial> ap, bp;
    ap.reserve(a.size());
    bp.reserve(b.size());
    for (const BigInt& v : a)
        ap.emplace_back(v);
    for (const BigInt& v : b)
        bp.emplace_back(v);
    return tau_via_rank_one_symbolic(g, ap, bp);
}

Polynomial tau_via_rank_one(const WeightedGraph& g) {
    std::vector<BigInt> ones(g.vertex_count(), BigInt(1));
    return tau_via_rank_one(g, ones, ones);
}

Polynomial tau_via_rank_one_symbolic(const WeightedGraph& g, const std::vector<Polynomial>& a,
                                     const std::vector<Polynomial>& b) {
    Polynomial sum_a, sum_b;
    for (const Polynomial& p : a)
        sum_a += p;
    for (const Polynomial& p : b)
        sum_b += p;
    if (sum_a.is_zero() || sum_b.is_zero())
        throw ZeroVectorSumError("rank-one vectors must have nonzero sum");
    const Polynomial det = determinant(rank_one_update(weighted_laplacian(g), a, b));
    return exact_div(det, sum_a * sum_b);
}

Polynomial cayley_prufer_formula(std::size_t n) {
    if (n < 2)
        throw TooSmallError("complete-graph formula needs n >= 2");
    Polynomial product(1);
    for (std::size_t i = 1; i <= n; ++i)
        product *= x(static_cast<std::uint32_t>(i));
    return product * x_prefix_sum(n).pow(n - 2);
}

Polynomial multipartite_formula(const MultipartiteSpec& spec) {
    const std::size_t n = spec.vertex_count();
    const std::size_t k = spec.part_sizes.size();
    Polynomial result(1);
    for (std::size_t i = 1; i <= n; ++i)
        result *= x(static_cast<std::uint32_t>(i));
    std::size_t first = 0;
    for (std::size_t part : spec.part_sizes) {
        Polynomial outside; // sum of x_j over vertices outside this part
        for (std::size_t j = 1; j <= n; ++j)
            if (j <= first || j > first + part)
                outside += x(static_cast<std::uint32_t>(j));
        result *= outside.pow(part - 1);
        first += part;
    }
    return result * x_prefix_sum(n).pow(k - 2);
}

Polynomial ferrers_formula(const Partition& lambda) {
    const Partition conj = conjugate_partition(lambda);
    const std::size_t m = lambda.part_count();
    const std::size_t n = lambda.largest();
    Polynomial result(1);
    for (std::size_t i = 1; i <= m; ++i)
        result *= x(static_cast<std::uint32_t>(i));
    for (std::size_t j = 1; j <= n; ++j)
        result *= y(static_cast<std::uint32_t>(j));
    for (std::size_t i = 2; i <= m; ++i) {
        Polynomial s;
        for (std::size_t j = 1; j <= lambda.parts[i - 1]; ++j)
            s += y(static_cast<std::uint32_t>(j));
        result *= s;
    }
    for (std::size_t j = 2; j <= n; ++j)
        result *= x_prefix_sum(conj.parts[j - 1]);
    return result;
}

Polynomial threshold_formula(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 1)
        return Polynomial(1);
    const std::size_t t = special_vertex(g);
    // A threshold-ordered graph is connected iff its least-degree vertex v_n
    // still sees the dominating vertex v_1.
    if (!g.has_edge(0, n - 1))
        throw DisconnectedError("threshold graph has no spanning tree");
    const std::vector<std::size_t> deg = degree_sequence(g);

    Polynomial result = x(1);
    for (std::size_t i = t; i <= n; ++i)
        result *= y(static_cast<std::uint32_t>(i));
    for (std::size_t j = 2; j + 1 <= t; ++j) {
        Polynomial tail; // y_{j+1} + ... + y_{1+deg_j}
        for (std::size_t kk = j + 1; kk <= 1 + deg[j - 1]; ++kk)
            tail += y(static_cast<std::uint32_t>(kk));
        result *= y(static_cast<std::uint32_t>(j)) * x_prefix_sum(j) +
                  x(static_cast<std::uint32_t>(j)) * tail;
    }
    for (std::size_t j = t + 1; j <= n; ++j)
        result *= x_prefix_sum(deg[j - 1]);
    return result;
}

BigInt count_spanning_trees(const WeightedGraph& g) {
    // Specializing every weight to 1 before the determinant is exact
    // (evaluation is a ring homomorphism) and avoids the symbolic blowup.
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<BigInt>> w(n, std::vector<BigInt>(n));
    for (const auto& [i, j] : g.edges()) {
        const Polynomial& p = g.weight(i, j);
        w[i][j] = w[j][i] = evaluate(p, all_equal_assignment(p, BigInt(1)));
    }
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        BigInt degree = 0;
        for (std::size_t j = 0; j < n; ++j)
            degree += w[i][j];
        for (std::size_t j = 1; j < n; ++j)
            minor.at(i - 1, j - 1) = Polynomial(i == j ? degree : -w[i][j]);
    }
    const Polynomial det = determinant(minor);
    return evaluate(det, Assignment{});
}

BigInt merris_count(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 1)
        return 1;
    const std::size_t t = special_vertex(g);
    if (!g.has_edge(0, n - 1))
        throw DisconnectedError("threshold graph has no spanning tree");
    const std::vector<std::size_t> deg = degree_sequence(g);
    BigInt count(1);
    for (std::size_t i = 2; i + 1 <= t; ++i)
        count *= BigInt(deg[i - 1] + 1);
    for (std::size_t i = t + 1; i <= n; ++i)
        count *= BigInt(deg[i - 1]);
    return count;
}

BigInt lewis_count(const MultipartiteSpec& spec) {
    const std::size_t n = spec.vertex_count();
    BigInt count = boost::multiprecision::pow(BigInt(n),
                                              static_cast<unsigned>(spec.part_sizes.size() - 2));
    for (std::size_t part : spec.part_sizes)
        count *= boost::multiprecision::pow(BigInt(n - part), static_cast<unsigned>(part - 1));
    return count;
}

} // namespace treetau

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "treetau/linalg.hpp"
#include "test_support.hpp"

using namespace treetau;
namespace tt = treetau::testing;

namespace {

// Independent oracle: Laplace expansion along the first row.
Polynomial naive_determinant(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0)
        return Polynomial(1);
    if (n == 1)
        return m.at(0, 0);
    Polynomial det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero())
            continue;
        PolyMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, mc = 0; c < n; ++c)
                if (c != j)
                    minor.at(r - 1, mc++) = m.at(r, c);
        Polynomial piece = m.at(0, j) * naive_determinant(minor);
        det = j % 2 == 0 ? det + piece : det - piece;
    }
    return det;
}

PolyMatrix random_int_matrix(std::mt19937& rng, std::size_t n, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> entry(lo, hi);
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Polynomial(entry(rng));
    return m;
}

PolyMatrix random_poly_matrix(std::mt19937& rng, std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = tt::random_polynomial(rng, 2, 3, 2, 4);
    return m;
}

std::vector<Polynomial> x_vector(std::size_t n) {
    std::vector<Polynomial> v;
    for (std::size_t i = 1; i <= n; ++i)
        v.push_back(x(static_cast<std::uint32_t>(i)));
    return v;
}

// The rank-one update matching the Ferrers block decomposition: rows carry
// x_i in the column vector slot, columns carry y_j in the row vector slot.
PolyMatrix ferrers_update(const WeightedGraph& g, std::size_t m) {
    const std::size_t total = g.vertex_count();
    std::vector<Polynomial> a(total), b(total);
    for (std::size_t i = 0; i < m; ++i)
        b[i] = x(static_cast<std::uint32_t>(i + 1));
    for (std::size_t j = m; j < total; ++j)
        a[j] = y(static_cast<std::uint32_t>(j - m + 1));
    return rank_one_update(weighted_laplacian(g), a, b);
}

// The rank-one update from the threshold decomposition: full y vector against
// x truncated at the special vertex.
PolyMatrix threshold_update(const WeightedGraph& g, std::size_t t) {
    const std::size_t n = g.vertex_count();
    std::vector<Polynomial> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i)
        a[i] = y(static_cast<std::uint32_t>(i + 1));
    for (std::size_t i = 0; i < t; ++i)
        b[i] = x(static_cast<std::uint32_t>(i + 1));
    return rank_one_update(weighted_laplacian(g), a, b);
}

ThresholdSpec spec_from_mask(std::size_t len, std::size_t mask) {
    ThresholdSpec spec;
    for (std::size_t k = 0; k < len; ++k)
        spec.steps.push_back((mask >> k) & 1 ? CreationStep::Dominating : CreationStep::Isolated);
    return spec;
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("matrix construction and arithmetic") {
    PolyMatrix id = PolyMatrix::identity(3);
    CHECK(id.at(0, 0).is_one());
    CHECK(id.at(0, 1).is_zero());

    PolyMatrix m = PolyMatrix::from_rows({{x(1), x(2)}, {y(1), y(2)}});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.transpose().at(0, 1) == y(1));
    CHECK(m.transpose().transpose() == m);

    PolyMatrix sum = m + m;
    CHECK(sum.at(1, 1) == y(2) + y(2));

    CHECK(m * PolyMatrix::identity(2) == m);
    CHECK(PolyMatrix::identity(2) * m == m);
    PolyMatrix prod = m * m;
    CHECK(prod.at(0, 0) == x(1) * x(1) + x(2) * y(1));

    CHECK_THROWS_AS(PolyMatrix::from_rows({{x(1)}, {x(1), x(2)}}), DimensionMismatchError);
    CHECK_THROWS_AS(m + PolyMatrix(3, 3), DimensionMismatchError);
    CHECK_THROWS_AS(m * PolyMatrix(3, 3), DimensionMismatchError);
    CHECK_THROWS_AS(m.at(2, 0), IndexOutOfRangeError);
}

TEST_CASE("weighted laplacian") {
    PolyMatrix l2 = weighted_laplacian(complete_graph(2));
    Polynomial w = x(1) * x(2);
    CHECK(l2 == PolyMatrix::from_rows({{w, -w}, {-w, w}}));

    PolyMatrix l3 = weighted_laplacian(complete_graph(3));
    CHECK(l3.at(0, 0) == x(1) * x(2) + x(1) * x(3));
    CHECK(l3.at(0, 1) == -(x(1) * x(2)));

    WeightedGraph empty(4);
    CHECK(weighted_laplacian(empty) == PolyMatrix(4, 4));

    std::mt19937 rng(40910);
    for (int iter = 0; iter < 20; ++iter) {
        WeightedGraph g = tt::random_graph(rng, 6);
        PolyMatrix l = weighted_laplacian(g);
        for (std::size_t i = 0; i < 6; ++i) {
            Polynomial row_sum;
            for (std::size_t j = 0; j < 6; ++j)
                row_sum += l.at(i, j);
            CHECK(row_sum.is_zero());
        }
        CHECK(determinant(l).is_zero()); // Laplacians are singular
    }
}

TEST_CASE("determinant basics") {
    PolyMatrix m = PolyMatrix::from_rows({{x(1), x(2)}, {y(1), y(2)}});
    CHECK(determinant(m) == x(1) * y(2) - x(2) * y(1));
    CHECK(determinant(PolyMatrix::identity(5)).is_one());
    CHECK(determinant(PolyMatrix(0, 0)).is_one());
    CHECK(determinant(PolyMatrix(3, 3)).is_zero());

    // Equal rows, and a column of zeros, both kill the determinant.
    PolyMatrix dup = PolyMatrix::from_rows({{x(1), x(2)}, {x(1), x(2)}});
    CHECK(determinant(dup).is_zero());
    PolyMatrix zcol = PolyMatrix::from_rows({{Polynomial(0), x(2)}, {Polynomial(0), y(2)}});
    CHECK(determinant(zcol).is_zero());

    // A leading zero pivot forces the row swap path.
    PolyMatrix swap = PolyMatrix::from_rows({{Polynomial(0), x(2)}, {y(1), y(2)}});
    CHECK(determinant(swap) == -(x(2) * y(1)));

    CHECK_THROWS_AS(determinant(PolyMatrix(2, 3)), NotSquareError);
}

TEST_CASE("determinant matches naive expansion") {
    std::mt19937 rng(51227);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int iter = 0; iter < 40; ++iter) {
            PolyMatrix m = random_int_matrix(rng, n);
            CHECK(determinant(m) == naive_determinant(m));
        }
        for (int iter = 0; iter < 12; ++iter) {
            PolyMatrix m = random_poly_matrix(rng, n);
            CHECK(determinant(m) == naive_determinant(m));
        }
    }
}

TEST_CASE("determinant is alternating and transpose invariant") {
    std::mt19937 rng(61142);
    for (int iter = 0; iter < 30; ++iter) {
        PolyMatrix m = random_poly_matrix(rng, 4);
        Polynomial det = determinant(m);
        CHECK(determinant(m.transpose()) == det);

        PolyMatrix swapped = m;
        for (std::size_t j = 0; j < 4; ++j)
            std::swap(swapped.at(1, j), swapped.at(3, j));
        CHECK(determinant(swapped) == -det);
    }
}

TEST_CASE("cofactors") {
    CHECK(cofactor(weighted_laplacian(complete_graph(2)), 0, 0) == x(1) * x(2));

    Polynomial tau3 = x(1) * x(2) * x(3) * (x(1) + x(2) + x(3));
    CHECK(cofactor(weighted_laplacian(complete_graph(3)), 0, 1) == tau3);

    PolyMatrix one(1, 1);
    one.at(0, 0) = x(1);
    CHECK(cofactor(one, 0, 0).is_one());

    PolyMatrix m = PolyMatrix::from_rows({{x(1), x(2)}, {y(1), y(2)}});
    CHECK(cofactor(m, 0, 0) == y(2));
    CHECK(cofactor(m, 0, 1) == -y(1));
    CHECK_THROWS_AS(cofactor(m, 2, 0), IndexOutOfRangeError);
    CHECK_THROWS_AS(cofactor(PolyMatrix(2, 3), 0, 0), NotSquareError);
}

TEST_CASE("rank one update") {
    // L(K_3) + xx^T collapses to a diagonal matrix with entries x_i * (sum).
    PolyMatrix updated = rank_one_update(weighted_laplacian(complete_graph(3)), x_vector(3),
                                         x_vector(3));
    Polynomial total = x(1) + x(2) + x(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j)
                CHECK(updated.at(i, j) == x(static_cast<std::uint32_t>(i + 1)) * total);
            else
                CHECK(updated.at(i, j).is_zero());
        }

    std::vector<Polynomial> ones(3, Polynomial(1));
    PolyMatrix all_ones = rank_one_update(PolyMatrix(3, 3), ones, ones);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(all_ones.at(i, j).is_one());

    std::vector<Polynomial> zero(3);
    std::mt19937 rng(3);
    PolyMatrix m = random_poly_matrix(rng, 3);
    CHECK(rank_one_update(m, zero, ones) == m);

    CHECK_THROWS_AS(rank_one_update(m, ones, x_vector(2)), DimensionMismatchError);
    CHECK_THROWS_AS(rank_one_update(m, x_vector(4), ones), DimensionMismatchError);
}

TEST_CASE("cayley prufer determinant") {
    PolyMatrix updated = rank_one_update(weighted_laplacian(complete_graph(3)), x_vector(3),
                                         x_vector(3));
    Polynomial total = x(1) + x(2) + x(3);
    Polynomial expected = x(1) * x(2) * x(3) * total.pow(3);
    CHECK(determinant(updated) == expected);
}

TEST_CASE("adjugate") {
    CHECK(adjugate(PolyMatrix::identity(4)) == PolyMatrix::identity(4));

    PolyMatrix m = PolyMatrix::from_rows({{x(1), x(2)}, {y(1), y(2)}});
    CHECK(adjugate(m) == PolyMatrix::from_rows({{y(2), -x(2)}, {-(y(1)), x(1)}}));

    // Every cofactor of a Laplacian is the tree enumerator, so the adjugate
    // is tau times the all-ones matrix.
    PolyMatrix adj = adjugate(weighted_laplacian(complete_graph(3)));
    Polynomial tau3 = x(1) * x(2) * x(3) * (x(1) + x(2) + x(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(adj.at(i, j) == tau3);

    std::mt19937 rng(71817);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int iter = 0; iter < 8; ++iter) {
            PolyMatrix r = random_poly_matrix(rng, n);
            PolyMatrix prod = r * adjugate(r);
            Polynomial det = determinant(r);
            PolyMatrix expected(n, n);
            for (std::size_t i = 0; i < n; ++i)
                expected.at(i, i) = det;
            CHECK(prod == expected);
        }
    }
}

TEST_CASE("schur complement basics") {
    PolyMatrix m = PolyMatrix::from_rows({{x(1), x(2)}, {y(1), y(2)}});
    RatMatrix s = schur_complement(m, {1});
    CHECK(s.rows() == 1);
    CHECK(s.at(0, 0) == RationalFunction(x(1) * y(2) - x(2) * y(1), y(2)));

    PolyMatrix blockdiag(3, 3);
    blockdiag.at(0, 0) = x(1);
    blockdiag.at(0, 1) = x(2);
    blockdiag.at(1, 0) = y(1);
    blockdiag.at(1, 1) = y(2);
    blockdiag.at(2, 2) = Polynomial(7);
    RatMatrix a = schur_complement(blockdiag, {2});
    CHECK(a.at(0, 0) == RationalFunction(x(1)));
    CHECK(a.at(0, 1) == RationalFunction(x(2)));
    CHECK(a.at(1, 0) == RationalFunction(y(1)));
    CHECK(a.at(1, 1) == RationalFunction(y(2)));

    PolyMatrix singular(2, 2);
    singular.at(0, 0) = x(1);
    CHECK_THROWS_AS(schur_complement(singular, {1}), SingularBlockError);
    CHECK_THROWS_AS(schur_complement(m, {0}), InvalidSpecError);
    CHECK_THROWS_AS(schur_complement(m, {2}), InvalidSpecError);
    CHECK_THROWS_AS(schur_complement(PolyMatrix(2, 3), {1}), NotSquareError);
}

TEST_CASE("rational determinant") {
    RatMatrix m(2, 2);
    m.at(0, 0) = RationalFunction(Polynomial(1), x(1));
    m.at(0, 1) = RationalFunction(Polynomial(1));
    m.at(1, 0) = RationalFunction(Polynomial(1));
    m.at(1, 1) = RationalFunction(x(1));
    CHECK(determinant(m).is_zero());

    m.at(1, 1) = RationalFunction(x(2), y(1));
    // det = x2/(x1 y1) - 1
    RationalFunction expected = RationalFunction(x(2), x(1) * y(1)) -
                                RationalFunction(Polynomial(1));
    CHECK(determinant(m) == expected);

    CHECK(determinant(RatMatrix::from(PolyMatrix::identity(3))) ==
          RationalFunction(Polynomial(1)));
}

TEST_CASE("schur determinant identity") {
    std::mt19937 rng(81525);
    int checked = 0;
    while (checked < 40) {
        std::uniform_int_distribution<std::size_t> size(2, 4);
        std::size_t n = size(rng);
        std::uniform_int_distribution<std::size_t> split(1, n - 1);
        PolyMatrix m = random_int_matrix(rng, n);
        BlockPartition p{split(rng)};
        try {
            CHECK(schur_determinant_identity_check(m, p));
            ++checked;
        } catch (const SingularBlockError&) {
            // fine: the random lower-right block was singular
        }
    }

    // Symbolic instance: the generic 3x3 matrix in six indeterminates.
    PolyMatrix sym = PolyMatrix::from_rows({{x(1), x(2), x(3)},
                                            {y(1), y(2), y(3)},
                                            {x(1) * y(1), Polynomial(1), Polynomial(2)}});
    CHECK(schur_determinant_identity_check(sym, {1}));
    CHECK(schur_determinant_identity_check(sym, {2}));
}

TEST_CASE("matrix determinant lemma") {
    std::mt19937 rng(91119);
    for (int iter = 0; iter < 30; ++iter) {
        std::uniform_int_distribution<std::size_t> size(1, 4);
        std::uniform_int_distribution<int> entry(-9, 9);
        std::size_t n = size(rng);
        PolyMatrix m = random_int_matrix(rng, n);
        std::vector<Polynomial> a, b;
        for (std::size_t i = 0; i < n; ++i) {
            a.push_back(Polynomial(entry(rng)));
            b.push_back(Polynomial(entry(rng)));
        }
        CHECK(matrix_determinant_lemma_check(m, a, b));
    }

    // a = 0 reduces both sides to det(M).
    PolyMatrix m = random_int_matrix(rng, 3);
    std::vector<Polynomial> zero(3), ones(3, Polynomial(1));
    CHECK(matrix_determinant_lemma_check(m, zero, ones));

    // Symbolic vectors work too.
    PolyMatrix l = weighted_laplacian(complete_graph(3));
    CHECK(matrix_determinant_lemma_check(l, x_vector(3), x_vector(3)));

    CHECK_THROWS_AS(matrix_determinant_lemma_check(m, zero, x_vector(2)),
                    DimensionMismatchError);
}

TEST_CASE("matrix determinant lemma over the fraction field") {
    // For invertible M the lemma reads det(M)(1 + b^T M^{-1} a).
    std::mt19937 rng(10161);
    std::uniform_int_distribution<int> entry(-5, 5);
    int checked = 0;
    while (checked < 20) {
        PolyMatrix m = random_int_matrix(rng, 2, -5, 5);
        Polynomial det = determinant(m);
        if (det.is_zero())
            continue;
        std::vector<Polynomial> a{Polynomial(entry(rng)), Polynomial(entry(rng))};
        std::vector<Polynomial> b{Polynomial(entry(rng)), Polynomial(entry(rng))};

        PolyMatrix adj = adjugate(m);
        RationalFunction quad; // b^T M^{-1} a
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                quad = quad + RationalFunction(b[i] * adj.at(i, j) * a[j], det);
        RationalFunction rhs = RationalFunction(det) *
                               (RationalFunction(Polynomial(1)) + quad);
        CHECK(RationalFunction(determinant(rank_one_update(m, a, b))) == rhs);
        ++checked;
    }
}

TEST_CASE("ferrers schur complement oracle") {
    // lambda = (2,1): S = D_R - B D_C^{-1} B^op worked out by hand.
    WeightedGraph g = ferrers_graph(Partition({2, 1}));
    PolyMatrix m = ferrers_update(g, 2);
    RatMatrix s = schur_complement(m, {2});

    CHECK(s.at(0, 0) == RationalFunction(x(1) * (y(1) + y(2))));
    CHECK(s.at(0, 1) == RationalFunction(x(2) * y(2)));
    CHECK(s.at(1, 0).is_zero());
    CHECK(s.at(1, 1) == RationalFunction(x(2) * y(1)));
    CHECK(is_upper_triangular(s));

    CHECK(schur_determinant_identity_check(m, {2}));
}

TEST_CASE("ferrers schur identity at figure scale") {
    Partition lambda({4, 4, 3, 2, 1});
    WeightedGraph g = ferrers_graph(lambda);
    PolyMatrix m = ferrers_update(g, lambda.part_count());
    CHECK(schur_determinant_identity_check(m, {lambda.part_count()}));
}

TEST_CASE("schur triangularity across ferrers graphs") {
    // Every partition in the 5x5 box: S is upper triangular and its diagonal
    // matches the diagonal of D_R.
    std::vector<std::vector<std::uint32_t>> box;
    std::vector<std::uint32_t> current;
    auto grow = [&](auto&& self, std::uint32_t max_part) -> void {
        if (!current.empty())
            box.push_back(current);
        if (current.size() == 5)
            return;
        for (std::uint32_t p = 1; p <= max_part; ++p) {
            current.push_back(p);
            self(self, p);
            current.pop_back();
        }
    };
    grow(grow, 5);
    REQUIRE(box.size() == 251);

    for (const auto& parts : box) {
        Partition lambda(parts);
        const std::size_t rows = lambda.part_count();
        WeightedGraph g = ferrers_graph(lambda);
        PolyMatrix m = ferrers_update(g, rows);
        RatMatrix s = schur_complement(m, {rows});
        CHECK(is_upper_triangular(s));
        for (std::size_t i = 0; i < rows; ++i)
            CHECK(s.at(i, i) == RationalFunction(m.at(i, i)));
    }
}

TEST_CASE("schur triangularity across threshold graphs") {
    // Connected threshold graphs up to 7 vertices: A' - B D^{-1} B^op is
    // upper triangular and keeps A's updated diagonal.
    for (std::size_t len = 1; len <= 6; ++len) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
            if (!((mask >> (len - 1)) & 1))
                continue; // last step must dominate, else disconnected
            WeightedGraph g = threshold_graph(spec_from_mask(len, mask));
            const std::size_t n = g.vertex_count();
            const std::size_t t = special_vertex(g);
            PolyMatrix m = threshold_update(g, t);
            if (t == n) {
                RatMatrix whole = RatMatrix::from(m);
                CHECK(is_upper_triangular(whole));
                continue;
            }
            RatMatrix s = schur_complement(m, {t});
            CHECK(is_upper_triangular(s));
            for (std::size_t j = 0; j < t; ++j)
                CHECK(s.at(j, j) == RationalFunction(m.at(j, j)));
        }
    }
}

} // TEST_SUITE

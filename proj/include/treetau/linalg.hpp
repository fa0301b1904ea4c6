#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "treetau/errors.hpp"
#include "treetau/graphs.hpp"
#include "treetau/mpoly.hpp"

namespace treetau {

/// Dense rectangular matrix of polynomials, row-major.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols); // zero-filled
    static PolyMatrix identity(std::size_t n);
    static PolyMatrix from_rows(std::vector<std::vector<Polynomial>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Polynomial& at(std::size_t i, std::size_t j) const;
    Polynomial& at(std::size_t i, std::size_t j);

    PolyMatrix transpose() const;
    friend PolyMatrix operator+(const PolyMatrix&, const PolyMatrix&);
    friend PolyMatrix operator*(const PolyMatrix&, const PolyMatrix&);

    bool operator==(const PolyMatrix&) const = default;

    std::string str() const; // multi-line debug rendering

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial> entries_;
};

/// Dense rectangular matrix over the fraction field.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols); // zero-filled
    static RatMatrix from(const PolyMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const RationalFunction& at(std::size_t i, std::size_t j) const;
    RationalFunction& at(std::size_t i, std::size_t j);

    std::string str() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<RationalFunction> entries_;
};

/// Split of a square matrix into blocks [[A, B], [C, D]] where A takes the
/// first `split` rows and columns.
struct BlockPartition {
    std::size_t split;
};

/// L(G;ω): weighted degrees on the diagonal, -ω_{i,j} off it. Rows sum to zero.
PolyMatrix weighted_laplacian(const WeightedGraph& g);

/// M + a·b^T.
PolyMatrix rank_one_update(const PolyMatrix& m, const std::vector<Polynomial>& a,
                           const std::vector<Polynomial>& b);

/// Exact determinant by fraction-free Bareiss elimination; every intermediate
/// division is exact in the polynomial ring. det of the 0x0 matrix is 1.
Polynomial determinant(const PolyMatrix& m);

/// (-1)^{i+j} times the determinant of M with row i and column j removed
/// (0-based indices; the sign only depends on i+j, so the convention matches
/// the 1-based formulation).
Polynomial cofactor(const PolyMatrix& m, std::size_t i, std::size_t j);

/// Transposed cofactor matrix: adj(M)(i,j) = cofactor(M, j, i), so that
/// M·adj(M) = det(M)·I.
PolyMatrix adjugate(const PolyMatrix& m);

/// A − B·D^{-1}·C for the block split [[A,B],[C,D]]; D must be invertible
/// over the fraction field. Entries share the denominator det(D).
RatMatrix schur_complement(const PolyMatrix& m, BlockPartition p);

/// Exact determinant over the fraction field (row denominators are cleared,
/// then the polynomial determinant is divided back out).
RationalFunction determinant(const RatMatrix& m);

/// det(M) = det(D)·det(M/D), verified by cross-multiplied exact comparison.
bool schur_determinant_identity_check(const PolyMatrix& m, BlockPartition p);

/// det(M + ab^T) = det(M) + b^T·adj(M)·a, verified exactly.
bool matrix_determinant_lemma_check(const PolyMatrix& m, const std::vector<Polynomial>& a,
                                    const std::vector<Polynomial>& b);

bool is_upper_triangular(const RatMatrix& m);

} // namespace treetau

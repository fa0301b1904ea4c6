#include "treetau/linalg.hpp"

#include <utility>

namespace treetau {

namespace {

void check_square(const PolyMatrix& m, const char* what) {
    if (!m.is_square())
        throw NotSquareError(std::string(what) + " needs a square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void check_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("matrix shapes differ: " + std::to_string(a.rows()) + "x" +
                                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                     "x" + std::to_string(b.cols()));
}

} // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Polynomial(1);
    return m;
}

PolyMatrix PolyMatrix::from_rows(std::vector<std::vector<Polynomial>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    PolyMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw DimensionMismatchError("ragged rows: row " + std::to_string(i + 1) + " has " +
                                         std::to_string(rows[i].size()) + " entries, expected " +
                                         std::to_string(c));
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw IndexOutOfRangeError("matrix index (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") out of range");
    return entries_[i * cols_ + j];
}

Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_)
        throw IndexOutOfRangeError("matrix index (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") out of range");
    return entries_[i * cols_ + j];
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    check_same_shape(a, b);
    PolyMatrix s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s.at(i, j) = a.at(i, j) + b.at(i, j);
    return s;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatchError("cannot multiply " + std::to_string(a.rows()) + "x" +
                                     std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                     "x" + std::to_string(b.cols()));
    PolyMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                p.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return p;
}

std::string PolyMatrix::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out += "[ ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out += " | ";
            out += at(i, j).str();
        }
        out += " ]\n";
    }
    return out;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix RatMatrix::from(const PolyMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = RationalFunction(m.at(i, j));
    return r;
}

const RationalFunction& RatMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw IndexOutOfRangeError("matrix index (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") out of range");
    return entries_[i * cols_ + j];
}

RationalFunction& RatMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_)
        throw IndexOutOfRangeError("matrix index (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") out of range");
    return entries_[i * cols_ + j];
}

std::string RatMatrix::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out += "[ ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out += " | ";
            out += at(i, j).str();
        }
        out += " ]\n";
    }
    return out;
}

PolyMatrix weighted_laplacian(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    PolyMatrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        l.at(i, i) = g.weighted_degree(i);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && g.has_edge(i, j))
                l.at(i, j) = -g.weight(i, j);
    }
    return l;
}

PolyMatrix rank_one_update(const PolyMatrix& m, const std::vector<Polynomial>& a,
                           const std::vector<Polynomial>& b) {
    if (a.size() != m.rows() || b.size() != m.cols())
        throw DimensionMismatchError("rank-one update vectors must have lengths " +
                                     std::to_string(m.rows()) + " and " +
                                     std::to_string(m.cols()));
    PolyMatrix u(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            u.at(i, j) = m.at(i, j) + a[i] * b[j];
    return u;
}

Polynomial determinant(const PolyMatrix& m) {
    check_square(m, "determinant");
    const std::size_t n = m.rows();
    if (n == 0)
        return Polynomial(1);

    PolyMatrix w = m;
    bool negate = false;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // First nonzero entry in the column, top-down, becomes the pivot.
        std::size_t pivot = k;
        while (pivot < n && w.at(pivot, k).is_zero())
            ++pivot;
        if (pivot == n)
            return Polynomial(0);
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(w.at(k, j), w.at(pivot, j));
            negate = !negate;
        }
        const bool divide = !prev.is_one();
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = divide ? exact_div(num, prev) : std::move(num);
            }
            w.at(i, k) = Polynomial(0);
        }
        prev = w.at(k, k);
    }
    Polynomial det = w.at(n - 1, n - 1);
    return negate ? -det : det;
}

Polynomial cofactor(const PolyMatrix& m, std::size_t i, std::size_t j) {
    check_square(m, "cofactor");
    if (i >= m.rows() || j >= m.cols())
        throw IndexOutOfRangeError("cofactor index (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") out of range");
    PolyMatrix minor(m.rows() - 1, m.cols() - 1);
    for (std::size_t r = 0, mr = 0; r < m.rows(); ++r) {
        if (r == i)
            continue;
        for (std::size_t c = 0, mc = 0; c < m.cols(); ++c) {
            if (c == j)
                continue;
            minor.at(mr, mc++) = m.at(r, c);
        }
        ++mr;
    }
    Polynomial det = determinant(minor);
    return (i + j) % 2 == 0 ? det : -det;
}

PolyMatrix adjugate(const PolyMatrix& m) {
    check_square(m, "adjugate");
    const std::size_t n = m.rows();
    PolyMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            adj.at(i, j) = cofactor(m, j, i);
    return adj;
}

namespace {

PolyMatrix block(const PolyMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0,
                 std::size_t c1) {
    PolyMatrix b(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j)
            b.at(i - r0, j - c0) = m.at(i, j);
    return b;
}

} // namespace

RatMatrix schur_complement(const PolyMatrix& m, BlockPartition p) {
    check_square(m, "schur_complement");
    const std::size_t n = m.rows();
    if (p.split < 1 || p.split >= n)
        throw InvalidSpecError("block split must lie strictly inside the matrix");
    const std::size_t s = p.split;

    PolyMatrix a = block(m, 0, s, 0, s);
    PolyMatrix b = block(m, 0, s, s, n);
    PolyMatrix c = block(m, s, n, 0, s);
    PolyMatrix d = block(m, s, n, s, n);

    Polynomial det_d = determinant(d);
    if (det_d.is_zero())
        throw SingularBlockError("lower-right block is singular");

    // B·D^{-1}·C = B·adj(D)·C / det(D); the numerator stays polynomial.
    PolyMatrix num = b * adjugate(d) * c;
    RatMatrix schur(s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            schur.at(i, j) = RationalFunction(a.at(i, j) * det_d - num.at(i, j), det_d);
    return schur;
}

RationalFunction determinant(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquareError("determinant needs a square matrix, got " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()));
    const std::size_t n = m.rows();
    // Gaussian elimination over the fraction field. Triangular inputs (the
    // Schur complements this sees most) fall straight through to the
    // diagonal product.
    RatMatrix w = m;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && w.at(pivot, k).is_zero())
            ++pivot;
        if (pivot == n)
            return RationalFunction();
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(w.at(k, j), w.at(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w.at(i, k).is_zero())
                continue;
            RationalFunction factor = w.at(i, k) * w.at(k, k).inverse();
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = w.at(i, j) - factor * w.at(k, j);
            w.at(i, k) = RationalFunction();
        }
    }
    RationalFunction det(Polynomial(1));
    for (std::size_t k = 0; k < n; ++k)
        det = det * w.at(k, k);
    return negate ? -det : det;
}

bool schur_determinant_identity_check(const PolyMatrix& m, BlockPartition p) {
    RatMatrix schur = schur_complement(m, p);
    PolyMatrix d = block(m, p.split, m.rows(), p.split, m.cols());
    RationalFunction rhs = RationalFunction(determinant(d)) * determinant(schur);
    return RationalFunction(determinant(m)) == rhs;
}

bool matrix_determinant_lemma_check(const PolyMatrix& m, const std::vector<Polynomial>& a,
                                    const std::vector<Polynomial>& b) {
    check_square(m, "matrix_determinant_lemma_check");
    Polynomial lhs = determinant(rank_one_update(m, a, b));

    PolyMatrix adj = adjugate(m);
    Polynomial quad; // b^T · adj(M) · a
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            quad += b[i] * adj.at(i, j) * a[j];
    return lhs == determinant(m) + quad;
}

bool is_upper_triangular(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < std::min(i, m.cols()); ++j)
            if (!m.at(i, j).is_zero())
                return false;
    return true;
}

} // namespace treetau

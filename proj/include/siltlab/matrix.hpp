#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "siltlab/errors.hpp"
#include "siltlab/rational.hpp"

namespace siltlab {

using QVec = std::vector<Rat>;

// Deterministic pseudo-random coefficients for genericity searches.
struct DetRng {
    unsigned long state;
    explicit DetRng(unsigned long seed) : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
    long next(long lo, long hi) {  // inclusive
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + (long)((state >> 33) % (unsigned long)(hi - lo + 1));
    }
};

// Dense matrix over the rationals. All arithmetic is exact; elimination uses a
// fixed pivoting rule (leftmost column, topmost nonzero row) so every derived
// basis is deterministic.
class QMat {
  public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

    static QMat identity(std::size_t n) {
        QMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static QMat from_rows(const std::vector<QVec>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows[0].size() : 0;
        QMat m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static QMat from_columns(const std::vector<QVec>& cols) {
        std::size_t c = cols.size();
        std::size_t r = c ? cols[0].size() : 0;
        QMat m(r, c);
        for (std::size_t j = 0; j < c; ++j) {
            if (cols[j].size() != r) throw DimensionMismatch("ragged columns");
            for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (x != 0) return false;
        return true;
    }

    QMat operator*(const QMat& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
        QMat out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

    QMat operator+(const QMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
        QMat out = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
        return out;
    }

    QMat operator-(const QMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff shape");
        QMat out = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
        return out;
    }

    QMat operator*(const Rat& c) const {
        QMat out = *this;
        for (auto& x : out.e_) x *= c;
        return out;
    }

    QMat transpose() const {
        QMat out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    QVec apply(const QVec& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
        QVec out(rows_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    QVec column(std::size_t j) const {
        QVec out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    // [this | o] side by side
    QMat hstack(const QMat& o) const {
        if (rows_ != o.rows_) throw DimensionMismatch("hstack shape");
        QMat out(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) out(i, cols_ + j) = o(i, j);
        }
        return out;
    }

    QMat vstack(const QMat& o) const {
        if (cols_ != o.cols_) throw DimensionMismatch("vstack shape");
        QMat out(rows_ + o.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(rows_ + i, j) = o(i, j);
        return out;
    }

    // Reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && (*this)(p, c) == 0) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            Rat inv = Rat(1) / (*this)(r, c);
            for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                const Rat f = (*this)(i, c);
                if (f == 0) continue;
                for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        QMat m = *this;
        return m.rref().size();
    }

    // Basis of the right null space {x : Mx = 0}.
    std::vector<QVec> kernel_basis() const {
        QMat m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<QVec> basis;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            QVec v(cols_, Rat(0));
            v[c] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, c);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // One solution of Mx = b, if consistent.
    std::optional<QVec> solve(const QVec& b) const {
        if (b.size() != rows_) throw DimensionMismatch("solve: rhs length");
        QMat aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        QVec x(cols_, Rat(0));
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
        return x;
    }

    // Columns of this that form a basis of the column span, as a new matrix.
    QMat column_space_basis() const {
        QMat m = *this;
        auto pivots = m.rref();
        QMat out(rows_, pivots.size());
        for (std::size_t j = 0; j < pivots.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, pivots[j]);
        return out;
    }

    std::optional<QMat> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        QMat aug = hstack(identity(rows_));
        auto pivots = aug.rref();
        if (pivots.size() != rows_ || (rows_ && pivots.back() != rows_ - 1)) return std::nullopt;
        QMat out(rows_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j) out(i, j) = aug(i, rows_ + j);
        return out;
    }

    // Flattened entries, row-major.
    const std::vector<Rat>& entries() const { return e_; }
    std::vector<Rat>& entries() { return e_; }

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

// Rank of the span of a set of vectors.
inline std::size_t span_rank(const std::vector<QVec>& vecs) {
    if (vecs.empty()) return 0;
    return QMat::from_rows(vecs).rank();
}

// Is v in the span of the rows of basis?
inline bool in_span(const std::vector<QVec>& basis, const QVec& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    return QMat::from_rows(basis).transpose().solve(v).has_value();
}

}  // namespace siltlab

#pragma once

// Exact linear algebra over Z and Q for small dense matrices.
//
// Ranks and kernels are computed by fraction-free (Bareiss) elimination.
// Entries and all intermediate values are exact: the machine-word fast path
// detects overflow and the computation is redone over GMP integers.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cauchon {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Largest row or column count accepted by the elimination routines.
inline constexpr std::size_t kMaxMatrixSize = 4096;

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Builds a matrix from nested rows; all rows must have equal length.
    Matrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("Matrix: ragged initializer");
            for (long v : row)
                data_.push_back(T(v));
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix id(n, n);
        for (std::size_t i = 0; i < n; ++i)
            id(i, i) = T(1);
        return id;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> entries() const noexcept { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
/// Machine-word matrix for hot loops whose entries are known to be small.
using SmallIntMatrix = Matrix<std::int64_t>;

/// Square integer matrix with a(i,j) == -a(j,i).
class SkewIntMatrix {
public:
    SkewIntMatrix() = default;
    explicit SkewIntMatrix(std::size_t size) : m_(size, size) {}
    /// Throws std::invalid_argument unless `m` is square and antisymmetric.
    explicit SkewIntMatrix(IntMatrix m);

    std::size_t size() const noexcept { return m_.rows(); }
    const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    /// Sets (i,j) to v and (j,i) to -v.
    void set(std::size_t i, std::size_t j, const Integer& v);

    const IntMatrix& matrix() const noexcept { return m_; }

    /// Principal submatrix on the given (sorted, distinct) indices.
    SkewIntMatrix principal(std::span<const std::size_t> keep) const;

    friend bool operator==(const SkewIntMatrix&, const SkewIntMatrix&) = default;

private:
    IntMatrix m_;
};

bool is_antisymmetric(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const SmallIntMatrix& m);

/// Dimension over Q of the right kernel {x : M x = 0}.
std::size_t kernel_dim(const IntMatrix& m);
std::size_t kernel_dim(const SmallIntMatrix& m);
inline std::size_t kernel_dim(const SkewIntMatrix& m) { return kernel_dim(m.matrix()); }

/// Basis of the right kernel. Each vector is scaled by the least common
/// denominator of its rational entries, so entries are integers.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Removes the listed rows and the same-numbered columns (0-based).
/// Throws std::out_of_range if an index exceeds either dimension.
IntMatrix delete_rows_cols(const IntMatrix& m, std::span<const std::size_t> idx);
/// Keeps the listed rows and columns, in the given order (0-based).
IntMatrix submatrix(const IntMatrix& m, std::span<const std::size_t> keep_rows,
                    std::span<const std::size_t> keep_cols);

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix transpose(const IntMatrix& m);
IntMatrix to_int_matrix(const SmallIntMatrix& m);

/// Reads "rows cols" followed by rows of whitespace-separated integers.
IntMatrix read_matrix(std::istream& in);
/// Writes the format accepted by read_matrix, one matrix row per line.
void write_matrix(std::ostream& out, const IntMatrix& m);

} // namespace cauchon

#include "cauchon/exactla.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "cauchon/error.hpp"

namespace cauchon {

namespace {

void check_size(std::size_t rows, std::size_t cols) {
    if (rows > kMaxMatrixSize || cols > kMaxMatrixSize)
        throw std::length_error("matrix exceeds " + std::to_string(kMaxMatrixSize) +
                                " rows or columns");
}

// Fraction-free row echelon form, in place. After the k-th pivot every entry
// below and right of it equals a (k+1)-minor of the input, so the division
// by the previous pivot is exact. Columns without a pivot candidate are
// skipped. Returns the pivot columns.
std::vector<std::size_t> bareiss_echelon(std::vector<Integer>& a, std::size_t rows,
                                         std::size_t cols) {
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    Integer t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p * cols + c]) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j)
                swap(a[p * cols + j], a[r * cols + j]);
        const Integer& pivot = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer lead = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer& x = a[i * cols + j];
                x *= pivot;
                t = lead * a[r * cols + j];
                x -= t;
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * cols + c] = 0;
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Same elimination on machine words. Returns nullopt as soon as an
// intermediate value leaves the int64 range; the caller then falls back to
// the GMP routine.
std::optional<std::size_t> bareiss_rank_i64(std::vector<std::int64_t>& a, std::size_t rows,
                                            std::size_t cols) {
    __extension__ typedef __int128 i128;
    constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr i128 hi = std::numeric_limits<std::int64_t>::max();

    std::int64_t prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(a[p * cols + j], a[r * cols + j]);
        const std::int64_t pivot = a[r * cols + c];
        const std::int64_t* prow = &a[r * cols];
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::int64_t* row = &a[i * cols];
            const std::int64_t lead = row[c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                std::int64_t u, v, w;
                if (!__builtin_mul_overflow(row[j], pivot, &u) &&
                    !__builtin_mul_overflow(lead, prow[j], &v) &&
                    !__builtin_sub_overflow(u, v, &w) &&
                    !(prev == -1 && w == std::numeric_limits<std::int64_t>::min())) {
                    row[j] = prev == 1 ? w : w / prev;
                } else {
                    const i128 q = (i128(row[j]) * pivot - i128(lead) * prow[j]) / prev;
                    if (q < lo || q > hi)
                        return std::nullopt;
                    row[j] = static_cast<std::int64_t>(q);
                }
            }
            row[c] = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

std::vector<Integer> copy_entries(const IntMatrix& m) {
    return {m.entries().begin(), m.entries().end()};
}

} // namespace

SkewIntMatrix::SkewIntMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!is_antisymmetric(m_))
        throw std::invalid_argument("matrix is not antisymmetric");
}

void SkewIntMatrix::set(std::size_t i, std::size_t j, const Integer& v) {
    if (i == j && sgn(v) != 0)
        throw std::invalid_argument("antisymmetric matrix needs a zero diagonal");
    m_(i, j) = v;
    m_(j, i) = -v;
}

SkewIntMatrix SkewIntMatrix::principal(std::span<const std::size_t> keep) const {
    SkewIntMatrix out;
    out.m_ = submatrix(m_, keep, keep);
    return out;
}

bool is_antisymmetric(const IntMatrix& m) {
    if (!m.square())
        return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i))
                return false;
    return true;
}

std::size_t rank(const IntMatrix& m) {
    check_size(m.rows(), m.cols());
    std::vector<std::int64_t> small;
    small.reserve(m.rows() * m.cols());
    for (const auto& x : m.entries()) {
        if (!x.fits_slong_p())
            break;
        small.push_back(x.get_si());
    }
    if (small.size() == m.rows() * m.cols())
        if (auto r = bareiss_rank_i64(small, m.rows(), m.cols()))
            return *r;
    auto work = copy_entries(m);
    return bareiss_echelon(work, m.rows(), m.cols()).size();
}

std::size_t rank(const SmallIntMatrix& m) {
    check_size(m.rows(), m.cols());
    std::vector<std::int64_t> work(m.entries().begin(), m.entries().end());
    if (auto r = bareiss_rank_i64(work, m.rows(), m.cols()))
        return *r;
    return rank(to_int_matrix(m));
}

std::size_t kernel_dim(const IntMatrix& m) { return m.cols() - rank(m); }

std::size_t kernel_dim(const SmallIntMatrix& m) { return m.cols() - rank(m); }

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
    check_size(m.rows(), m.cols());
    const std::size_t cols = m.cols();
    auto work = copy_entries(m);
    const auto pivots = bareiss_echelon(work, m.rows(), cols);

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<IntVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> x(cols);
        x[free] = 1;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t pc = pivots[k];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (sgn(work[k * cols + j]) != 0)
                    acc += Rational(work[k * cols + j]) * x[j];
            x[pc] = -acc / Rational(work[k * cols + pc]);
        }
        Integer lcd = 1;
        for (const auto& q : x)
            mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), q.get_den_mpz_t());
        IntVector v(cols);
        for (std::size_t j = 0; j < cols; ++j)
            v[j] = x[j].get_num() * (lcd / x[j].get_den());
        basis.push_back(std::move(v));
    }
    return basis;
}

IntMatrix submatrix(const IntMatrix& m, std::span<const std::size_t> keep_rows,
                    std::span<const std::size_t> keep_cols) {
    IntMatrix out(keep_rows.size(), keep_cols.size());
    for (std::size_t i = 0; i < keep_rows.size(); ++i) {
        if (keep_rows[i] >= m.rows())
            throw std::out_of_range("row index out of range");
        for (std::size_t j = 0; j < keep_cols.size(); ++j) {
            if (keep_cols[j] >= m.cols())
                throw std::out_of_range("column index out of range");
            out(i, j) = m(keep_rows[i], keep_cols[j]);
        }
    }
    return out;
}

IntMatrix delete_rows_cols(const IntMatrix& m, std::span<const std::size_t> idx) {
    std::vector<bool> drop_row(m.rows(), false), drop_col(m.cols(), false);
    for (auto k : idx) {
        if (k >= m.rows() || k >= m.cols())
            throw std::out_of_range("index " + std::to_string(k) + " out of range");
        drop_row[k] = true;
        drop_col[k] = true;
    }
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!drop_row[i])
            rows.push_back(i);
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!drop_col[j])
            cols.push_back(j);
    return submatrix(m, rows, cols);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shape mismatch");
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) + b(i, j);
    return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols() != v.size())
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    IntVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] += a(i, j) * v[j];
    return out;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(j, i) = m(i, j);
    return out;
}

IntMatrix to_int_matrix(const SmallIntMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = static_cast<long>(m(i, j));
    return out;
}

IntMatrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return true;
        }
        return false;
    };

    if (!next_line())
        throw ParseError(lineno + 1, "expected header \"rows cols\"");
    std::istringstream header(line);
    long long rows = -1, cols = -1;
    std::string extra;
    if (!(header >> rows >> cols) || rows < 0 || cols < 0 || (header >> extra))
        throw ParseError(lineno, "expected header \"rows cols\"");
    check_size(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));

    IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!next_line())
            throw ParseError(lineno + 1, "expected " + std::to_string(rows) + " matrix rows");
        std::istringstream ss(line);
        std::string tok;
        std::size_t j = 0;
        while (ss >> tok) {
            if (j == m.cols())
                throw ParseError(lineno, "too many entries in row");
            try {
                m(i, j++) = Integer(tok, 10);
            } catch (const std::invalid_argument&) {
                throw ParseError(lineno, "not an integer: \"" + tok + "\"");
            }
        }
        if (j != m.cols())
            throw ParseError(lineno, "expected " + std::to_string(cols) + " entries");
    }
    return m;
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

} // namespace cauchon

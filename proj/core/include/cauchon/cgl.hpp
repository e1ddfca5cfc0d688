#pragma once

// Uniparameter CGL extensions reduced to their antisymmetric exponent matrix
// (a_ij), with commutation scalars q^{a_ij}. The stratum of the H-prime
// attached to a subset w of [1..N] has dimension dim ker of the principal
// submatrix of (a_ij) on the complement of w.

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "cauchon/diagram.hpp"
#include "cauchon/exactla.hpp"

namespace cauchon {

struct CGLSystem {
    SkewIntMatrix a;

    std::size_t size() const noexcept { return a.size(); }
};

/// A subset w of [1..N] together with its increasing complement.
class ComplementSet {
public:
    /// `w` holds 1-based indices, in any order. Throws std::out_of_range for
    /// indices outside [1..N] and std::invalid_argument for repeats.
    ComplementSet(std::size_t universe, std::vector<std::size_t> w);

    std::size_t universe() const noexcept { return universe_; }
    const std::vector<std::size_t>& members() const noexcept { return members_; }
    /// l_1 < ... < l_d, 1-based.
    const std::vector<std::size_t>& complement() const noexcept { return complement_; }

private:
    std::size_t universe_;
    std::vector<std::size_t> members_;
    std::vector<std::size_t> complement_;
};

/// d x d matrix with (i,j) entry a(l_i, l_j). Throws std::invalid_argument if
/// the set was built for a different N.
SkewIntMatrix stratum_matrix(const CGLSystem& sys, const ComplementSet& w);
std::size_t cgl_stratum_dim(const CGLSystem& sys, const ComplementSet& w);

/// O_q(M_{m,n}) as a CGL extension. Generators are indexed column by
/// column: box (i, alpha) has index (alpha - 1) * m + i, so each diagonal
/// m x m block of the matrix collects one column of the grid.
class QuantumMatrixSystem {
public:
    QuantumMatrixSystem(int m, int n);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    const CGLSystem& system() const noexcept { return system_; }

    /// 1-based index of a box.
    std::size_t index_of(Box b) const;
    Box box_of(std::size_t index) const;

    /// Indices of the black boxes of `c`.
    ComplementSet black_set(const CauchonDiagram& c) const;
    /// perm[k] = position in the complement of black_set(c) of the white box
    /// with canonical label k + 1; M(C)(i,j) equals the stratum matrix entry
    /// at (perm[i], perm[j]).
    std::vector<std::size_t> white_label_positions(const CauchonDiagram& c) const;

private:
    int m_;
    int n_;
    CGLSystem system_;
};

inline QuantumMatrixSystem quantum_matrix_system(int m, int n) { return {m, n}; }

/// Reads "N" on the first line followed by the N x N antisymmetric matrix.
CGLSystem read_cgl_system(std::istream& in);
void write_cgl_system(std::ostream& out, const CGLSystem& sys);
/// Parses whitespace-separated 1-based indices.
ComplementSet parse_subset(std::string_view text, std::size_t universe);

} // namespace cauchon

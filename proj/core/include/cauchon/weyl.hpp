#pragma once

// Finite root systems, Weyl group words, and the antisymmetric matrix of
// pairings ((beta_i, beta_j)) attached to a reduced word.
//
// Conventions: a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), short roots
// have squared length 2, and s_i(alpha_j) = alpha_j - a_ij alpha_i. Vectors
// and matrices are written in the simple-root basis; reflection_matrix(i)
// has column j equal to s_i(alpha_j). Nodes follow Bourbaki numbering.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cauchon/exactla.hpp"

namespace cauchon {

struct RootSystemData {
    char type = 'A';
    int rank = 0;
    IntMatrix cartan;
    /// d_i = (alpha_i, alpha_i) / 2.
    std::vector<int> symmetrizers;

    /// Supported: A1-A8, B2-B8, C2-C8, D4-D8, E6-E8, F4, G2. Throws
    /// std::invalid_argument otherwise.
    static RootSystemData make(char type, int rank);
    /// Parses names such as "A3" or "g2".
    static RootSystemData parse(std::string_view name);

    std::string name() const { return std::string(1, type) + std::to_string(rank); }
    /// (alpha_i, alpha_j) = d_i a_ij.
    IntMatrix gram() const;
};

/// Simple reflections s_{i_1} ... s_{i_t}, letters 1-based.
using WeylWord = std::vector<int>;

/// Parses "1,2,1" (commas or spaces). An empty string is the empty word.
WeylWord parse_word(std::string_view text);
std::string format_word(const WeylWord& w);

IntMatrix reflection_matrix(const RootSystemData& rs, int i);
/// Product of the reflection matrices along the word (identity if empty).
IntMatrix weyl_element(const RootSystemData& rs, const WeylWord& w);

/// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}).
std::vector<IntVector> beta_roots(const RootSystemData& rs, const WeylWord& w);
/// True iff all beta_k are positive and pairwise distinct.
bool is_reduced(const RootSystemData& rs, const WeylWord& w);

/// (alpha, beta) for vectors in the simple-root basis.
Integer pairing(const RootSystemData& rs, const IntVector& a, const IntVector& b);

/// t x t matrix with entry (beta_i, beta_j) above the diagonal. Throws
/// std::invalid_argument for a non-reduced word.
SkewIntMatrix schubert_cgl_matrix(const RootSystemData& rs, const WeylWord& w);
/// dim ker(id + w). Throws std::invalid_argument for a non-reduced word.
std::size_t zero_stratum_dim(const RootSystemData& rs, const WeylWord& w);

/// Order of s_i s_j determined by a_ij a_ji: 2, 3, 4 or 6 (1 when i == j).
int expected_braid_order(const RootSystemData& rs, int i, int j);
/// Order of s_i s_j computed from the matrices; 0 if it exceeds 12.
int braid_order(const RootSystemData& rs, int i, int j);

/// Every reduced word of every element of W, grouped by element. Throws
/// CapExceeded once more than `cap` words have been produced.
std::vector<std::vector<WeylWord>> reduced_words_by_element(const RootSystemData& rs,
                                                            std::size_t cap = 1'000'000);

} // namespace cauchon

#pragma once

// Stratum dimensions of quantum-matrix H-primes from their Cauchon diagrams,
// and the dimension-decreasing chains built from single-box blackenings.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cauchon/diagram.hpp"
#include "cauchon/exactla.hpp"

namespace cauchon {

/// Skew-adjacency matrix M(C) on the white boxes in canonical (row-major)
/// label order: +1 when box i is strictly left of box j in the same row or
/// strictly above it in the same column, -1 in the mirrored cases, else 0.
SkewIntMatrix skew_adjacency(const CauchonDiagram& c);

/// Dimension over Q of ker M(C).
std::size_t stratum_dim(const CauchonDiagram& c);

struct StratumReport {
    CauchonDiagram diagram;
    std::size_t white_count = 0;
    std::size_t stratum_dim = 0;
};

StratumReport stratum_report(const CauchonDiagram& c);

/// Outcome of auditing the triangular reduction of M(C).
///
/// With a_k the smallest label in column k, S is unit lower triangular with
/// S(i, a_k) = -1 whenever white box i (i != a_k) lies in column k. Deleting
/// rows and columns a_1..a_n from S * M(C) must leave a matrix D that is
/// block lower triangular along the rows of the diagram, whose diagonal
/// blocks are -I plus a skew-symmetric matrix, and which is invertible.
struct Lemma1Audit {
    bool passed = false;
    std::string failure;                               // empty when passed
    std::optional<std::pair<int, int>> offending;      // 1-based labels in S*M(C)
    std::vector<int> column_heads;                     // a_1..a_n, 1-based
    IntMatrix s;
    IntMatrix product;                                 // S * M(C)
    IntMatrix reduced;                                 // D
};

/// All-black columns are removed before the audit; they do not change M(C).
/// column_heads index the remaining columns. A diagram with no white box
/// passes trivially.
Lemma1Audit verify_lemma1(const CauchonDiagram& c);

/// A diagram with exactly one more black box and stratum dimension one
/// lower. Among the candidates achieving this, the smallest label wins.
/// Throws std::domain_error when stratum_dim(c) == 0, and std::logic_error
/// if no candidate lowers the dimension.
CauchonDiagram descend_one(const CauchonDiagram& c);

struct ChainStep {
    CauchonDiagram diagram;
    std::size_t dim = 0;
};

/// C = C_0, C_1, ..., C_e with dims e, e-1, ..., 0, each step blackening
/// one box.
struct DiagramChain {
    std::vector<ChainStep> steps;

    /// Number of blackening steps, e.
    std::size_t length() const noexcept { return steps.empty() ? 0 : steps.size() - 1; }
};

DiagramChain build_chain(const CauchonDiagram& c);

/// Text form: for each step a line "dim: <e_i>" followed by the diagram in
/// grid text format.
void write_chain(std::ostream& out, const DiagramChain& chain);

} // namespace cauchon

#pragma once

// m x n grids of black and white boxes and the Cauchon diagrams among them.
//
// Rows and columns are 1-based throughout, matching the usual (i, alpha)
// box notation. A row is stored as one 64-bit word: bit (alpha - 1) is set
// when box (i, alpha) is black.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cauchon {

using RowWord = std::uint64_t;

inline constexpr int kMaxColumns = 64;

struct Box {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Box&, const Box&) = default;
};

/// A black/white colouring of an m x n grid. No validity rule is imposed.
class Grid {
public:
    /// All-white grid. Throws std::invalid_argument unless m >= 1 and
    /// 1 <= n <= 64.
    Grid(int m, int n);
    Grid(int m, int n, std::vector<RowWord> rows);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }

    bool black(int i, int col) const;
    bool black(Box b) const { return black(b.row, b.col); }
    void set_black(int i, int col, bool value = true);

    RowWord row_word(int i) const { return words_.at(static_cast<std::size_t>(i - 1)); }
    std::span<const RowWord> row_words() const noexcept { return words_; }
    RowWord full_row() const noexcept;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    int m_;
    int n_;
    std::vector<RowWord> words_;
};

/// True iff every black box has all boxes strictly to its left black or all
/// boxes strictly above it black.
bool is_valid(const Grid& g);

/// First black box (row-major) breaking the rule checked by is_valid.
std::optional<Box> first_violation(const Grid& g);

/// A grid that satisfies is_valid. Immutable.
class CauchonDiagram {
public:
    /// Throws std::invalid_argument naming the first offending box when the
    /// grid is not a Cauchon diagram.
    static CauchonDiagram from_grid(Grid g);
    static CauchonDiagram all_white(int m, int n);
    static CauchonDiagram all_black(int m, int n);
    /// Box (i, j) is white iff i <= d and j <= d.
    static CauchonDiagram white_corner(int m, int n, int d);

    int m() const noexcept { return grid_.m(); }
    int n() const noexcept { return grid_.n(); }
    const Grid& grid() const noexcept { return grid_; }
    bool black(int i, int col) const { return grid_.black(i, col); }
    bool black(Box b) const { return grid_.black(b); }

    std::size_t white_count() const noexcept;
    std::size_t black_count() const noexcept;
    /// White boxes in row-major order; position k holds canonical label k + 1.
    std::vector<Box> white_boxes() const;
    bool column_all_black(int col) const;

    /// True iff colouring `b` black keeps the diagram valid. `b` must be white.
    bool can_blacken(Box b) const;
    /// The diagram with `b` coloured black. Throws std::invalid_argument if
    /// `b` is already black or the result is not a Cauchon diagram.
    CauchonDiagram with_black(Box b) const;

    friend bool operator==(const CauchonDiagram&, const CauchonDiagram&) = default;

private:
    explicit CauchonDiagram(Grid g) : grid_(std::move(g)) {}
    friend class DiagramEnumerator;

    Grid grid_;
};

/// Labels attached to the white boxes, strictly increasing in row-major
/// order. The default labelling is 1..d.
class WhiteLabelling {
public:
    explicit WhiteLabelling(const CauchonDiagram& c);
    /// Throws std::invalid_argument unless `labels` has one positive entry
    /// per white box and is strictly increasing.
    WhiteLabelling(const CauchonDiagram& c, std::vector<int> labels);

    const CauchonDiagram& diagram() const noexcept { return diagram_; }
    std::span<const Box> boxes() const noexcept { return boxes_; }
    std::span<const int> labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return boxes_.size(); }

    /// Label of a white box; throws std::invalid_argument for black boxes.
    int label_of(Box b) const;
    Box box_of(int label) const;

private:
    CauchonDiagram diagram_;
    std::vector<Box> boxes_;
    std::vector<int> labels_;
};

/// True iff every black box of `c2` is black in `c`. Throws
/// std::invalid_argument when the shapes differ.
bool contains(const CauchonDiagram& c, const CauchonDiagram& c2);

/// Canonical labels (1-based, row-major) of white boxes whose individual
/// blackening yields a Cauchon diagram.
std::vector<int> candidate_boxes(const CauchonDiagram& c);
/// Same set, reported in the given labelling.
std::vector<int> candidate_boxes(const WhiteLabelling& labelled);

/// Removes every all-black column. Returns nullopt when nothing remains.
std::optional<CauchonDiagram> strip_black_columns(const CauchonDiagram& c);
/// Inserts an all-black column so that it becomes column `position`
/// (1 <= position <= n + 1). Throws std::invalid_argument past 64 columns.
CauchonDiagram insert_black_column(const CauchonDiagram& c, int position);

/// Streams every m x n Cauchon diagram exactly once.
///
/// Order: row 1 outermost; rows compare lexicographically by their text
/// form with '.' < '#', read left to right. Each row is generated directly
/// from the set F of columns black in every earlier row: admissible rows
/// are a black prefix of length k, then a white box, then any subset of F.
class DiagramEnumerator {
public:
    DiagramEnumerator(int m, int n);
    /// Only the diagrams whose first row is `first_row`.
    DiagramEnumerator(int m, int n, RowWord first_row);

    std::optional<CauchonDiagram> next();

private:
    struct Level {
        int prefix = 0;      // length of the leading black run
        RowWord tail = 0;    // free part, in reversed-bit encoding
        RowWord region = 0;  // columns the free part may use
        RowWord open = 0;    // F on entry to this row
    };

    void reset_level(std::size_t level, RowWord open);
    bool advance_level(std::size_t level);
    RowWord pattern(std::size_t level) const;
    CauchonDiagram emit() const;

    int m_;
    int n_;
    RowWord full_;
    bool fixed_first_;
    bool started_ = false;
    bool done_ = false;
    std::vector<Level> levels_;
};

/// Number of first-row partitions of the enumeration: 2^n. The partitions
/// are disjoint and jointly exhaustive. Requires n <= 32.
std::uint64_t partition_count(int n);
/// First row of partition `index`, in enumeration order.
RowWord partition_first_row(int n, std::uint64_t index);

/// Reads "m n" followed by m lines of n characters ('.' white, '#' black).
/// Throws ParseError with the offending line number.
Grid read_grid(std::istream& in);
void write_grid(std::ostream& out, const Grid& g);
std::string to_text(const Grid& g);
/// One string of '.'/'#' per row.
std::vector<std::string> row_strings(const Grid& g);

} // namespace cauchon

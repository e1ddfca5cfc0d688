#include "cauchon/diagram.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bits.hpp"
#include "cauchon/error.hpp"

namespace cauchon {

using detail::low_bits;

namespace {

void check_shape(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("grid dimensions must be positive");
    if (n > kMaxColumns)
        throw std::invalid_argument("at most " + std::to_string(kMaxColumns) +
                                    " columns are supported");
}

std::string box_text(Box b) {
    return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

// Columns black in every row above row i (all columns for row 1).
RowWord black_above(const Grid& g, int i) {
    RowWord f = g.full_row();
    for (int r = 1; r < i; ++r)
        f &= g.row_word(r);
    return f;
}

} // namespace

Grid::Grid(int m, int n) : m_(m), n_(n) {
    check_shape(m, n);
    words_.assign(static_cast<std::size_t>(m), 0);
}

Grid::Grid(int m, int n, std::vector<RowWord> rows) : m_(m), n_(n), words_(std::move(rows)) {
    check_shape(m, n);
    if (words_.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("expected one row word per row");
    for (auto w : words_)
        if (w & ~full_row())
            throw std::invalid_argument("row word has bits beyond column n");
}

RowWord Grid::full_row() const noexcept { return low_bits(n_); }

bool Grid::black(int i, int col) const {
    if (i < 1 || i > m_ || col < 1 || col > n_)
        throw std::out_of_range("box " + box_text({i, col}) + " outside the grid");
    return (words_[static_cast<std::size_t>(i - 1)] >> (col - 1)) & 1U;
}

void Grid::set_black(int i, int col, bool value) {
    if (i < 1 || i > m_ || col < 1 || col > n_)
        throw std::out_of_range("box " + box_text({i, col}) + " outside the grid");
    auto& w = words_[static_cast<std::size_t>(i - 1)];
    const RowWord bit = RowWord{1} << (col - 1);
    w = value ? (w | bit) : (w & ~bit);
}

std::optional<Box> first_violation(const Grid& g) {
    RowWord above = g.full_row();
    for (int i = 1; i <= g.m(); ++i) {
        const RowWord w = g.row_word(i);
        const int prefix = std::countr_one(w);
        const RowWord bad = w & ~low_bits(prefix) & ~above;
        if (bad)
            return Box{i, std::countr_zero(bad) + 1};
        above &= w;
    }
    return std::nullopt;
}

bool is_valid(const Grid& g) { return !first_violation(g).has_value(); }

CauchonDiagram CauchonDiagram::from_grid(Grid g) {
    if (auto bad = first_violation(g))
        throw std::invalid_argument("not a Cauchon diagram: invalid at " + box_text(*bad));
    return CauchonDiagram(std::move(g));
}

CauchonDiagram CauchonDiagram::all_white(int m, int n) { return CauchonDiagram(Grid(m, n)); }

CauchonDiagram CauchonDiagram::all_black(int m, int n) {
    Grid g(m, n);
    return CauchonDiagram(
        Grid(m, n, std::vector<RowWord>(static_cast<std::size_t>(m), g.full_row())));
}

CauchonDiagram CauchonDiagram::white_corner(int m, int n, int d) {
    if (d < 0 || d > std::min(m, n))
        throw std::invalid_argument("white corner size must lie in [0, min(m,n)]");
    Grid g(m, n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            g.set_black(i, j, i > d || j > d);
    return from_grid(std::move(g));
}

std::size_t CauchonDiagram::black_count() const noexcept {
    std::size_t c = 0;
    for (auto w : grid_.row_words())
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t CauchonDiagram::white_count() const noexcept {
    return static_cast<std::size_t>(m()) * static_cast<std::size_t>(n()) - black_count();
}

std::vector<Box> CauchonDiagram::white_boxes() const {
    std::vector<Box> out;
    out.reserve(white_count());
    for (int i = 1; i <= m(); ++i) {
        RowWord white = ~grid_.row_word(i) & grid_.full_row();
        while (white) {
            out.push_back({i, std::countr_zero(white) + 1});
            white &= white - 1;
        }
    }
    return out;
}

bool CauchonDiagram::column_all_black(int col) const {
    for (int i = 1; i <= m(); ++i)
        if (!black(i, col))
            return false;
    return true;
}

bool CauchonDiagram::can_blacken(Box b) const {
    if (black(b))
        return false;
    const RowWord left = low_bits(b.col - 1);
    if ((grid_.row_word(b.row) & left) == left)
        return true;
    return (black_above(grid_, b.row) >> (b.col - 1)) & 1U;
}

CauchonDiagram CauchonDiagram::with_black(Box b) const {
    if (black(b))
        throw std::invalid_argument("box " + box_text(b) + " is already black");
    Grid g = grid_;
    g.set_black(b.row, b.col);
    return from_grid(std::move(g));
}

WhiteLabelling::WhiteLabelling(const CauchonDiagram& c) : diagram_(c), boxes_(c.white_boxes()) {
    labels_.resize(boxes_.size());
    for (std::size_t k = 0; k < labels_.size(); ++k)
        labels_[k] = static_cast<int>(k + 1);
}

WhiteLabelling::WhiteLabelling(const CauchonDiagram& c, std::vector<int> labels)
    : diagram_(c), boxes_(c.white_boxes()), labels_(std::move(labels)) {
    if (labels_.size() != boxes_.size())
        throw std::invalid_argument("expected " + std::to_string(boxes_.size()) + " labels");
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        if (labels_[k] < 1)
            throw std::invalid_argument("labels must be positive");
        if (k > 0 && labels_[k] <= labels_[k - 1])
            throw std::invalid_argument("labels must increase in row-major order");
    }
}

int WhiteLabelling::label_of(Box b) const {
    auto it = std::lower_bound(boxes_.begin(), boxes_.end(), b);
    if (it == boxes_.end() || *it != b)
        throw std::invalid_argument("box " + box_text(b) + " is not white");
    return labels_[static_cast<std::size_t>(it - boxes_.begin())];
}

Box WhiteLabelling::box_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw std::invalid_argument("no white box carries label " + std::to_string(label));
    return boxes_[static_cast<std::size_t>(it - labels_.begin())];
}

bool contains(const CauchonDiagram& c, const CauchonDiagram& c2) {
    if (c.m() != c2.m() || c.n() != c2.n())
        throw std::invalid_argument("contains: diagrams have different shapes");
    for (int i = 1; i <= c.m(); ++i)
        if (c2.grid().row_word(i) & ~c.grid().row_word(i))
            return false;
    return true;
}

std::vector<int> candidate_boxes(const CauchonDiagram& c) {
    std::vector<int> out;
    const auto whites = c.white_boxes();
    for (std::size_t k = 0; k < whites.size(); ++k)
        if (c.can_blacken(whites[k]))
            out.push_back(static_cast<int>(k + 1));
    return out;
}

std::vector<int> candidate_boxes(const WhiteLabelling& labelled) {
    std::vector<int> out;
    for (int k : candidate_boxes(labelled.diagram()))
        out.push_back(labelled.labels()[static_cast<std::size_t>(k - 1)]);
    return out;
}

std::optional<CauchonDiagram> strip_black_columns(const CauchonDiagram& c) {
    std::vector<int> keep;
    for (int j = 1; j <= c.n(); ++j)
        if (!c.column_all_black(j))
            keep.push_back(j);
    if (keep.empty())
        return std::nullopt;
    Grid g(c.m(), static_cast<int>(keep.size()));
    for (int i = 1; i <= c.m(); ++i)
        for (std::size_t k = 0; k < keep.size(); ++k)
            g.set_black(i, static_cast<int>(k + 1), c.black(i, keep[k]));
    return CauchonDiagram::from_grid(std::move(g));
}

CauchonDiagram insert_black_column(const CauchonDiagram& c, int position) {
    if (position < 1 || position > c.n() + 1)
        throw std::invalid_argument("column position out of range");
    Grid g(c.m(), c.n() + 1);
    for (int i = 1; i <= c.m(); ++i)
        for (int j = 1; j <= c.n() + 1; ++j) {
            const bool b = j == position ? true : c.black(i, j < position ? j : j - 1);
            g.set_black(i, j, b);
        }
    return CauchonDiagram::from_grid(std::move(g));
}

Grid read_grid(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        if (!std::getline(in, line))
            return false;
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        return true;
    };

    if (!next_line())
        throw ParseError(1, "expected header \"m n\"");
    std::istringstream header(line);
    int m = 0, n = 0;
    std::string extra;
    if (!(header >> m >> n) || (header >> extra))
        throw ParseError(lineno, "expected header \"m n\"");
    if (m < 1 || n < 1 || n > kMaxColumns)
        throw ParseError(lineno, "grid dimensions must satisfy m >= 1 and 1 <= n <= 64");

    Grid g(m, n);
    for (int i = 1; i <= m; ++i) {
        if (!next_line())
            throw ParseError(lineno + 1, "expected " + std::to_string(m) + " grid rows");
        if (line.size() != static_cast<std::size_t>(n))
            throw ParseError(lineno, "expected " + std::to_string(n) + " characters, got " +
                                         std::to_string(line.size()));
        for (int j = 1; j <= n; ++j) {
            const char ch = line[static_cast<std::size_t>(j - 1)];
            if (ch != '.' && ch != '#')
                throw ParseError(lineno, std::string("unexpected character '") + ch + "'");
            g.set_black(i, j, ch == '#');
        }
    }
    while (next_line())
        if (!line.empty())
            throw ParseError(lineno, "trailing content after grid");
    return g;
}

std::vector<std::string> row_strings(const Grid& g) {
    std::vector<std::string> out;
    for (int i = 1; i <= g.m(); ++i) {
        std::string s(static_cast<std::size_t>(g.n()), '.');
        for (int j = 1; j <= g.n(); ++j)
            if (g.black(i, j))
                s[static_cast<std::size_t>(j - 1)] = '#';
        out.push_back(std::move(s));
    }
    return out;
}

void write_grid(std::ostream& out, const Grid& g) {
    out << g.m() << ' ' << g.n() << '\n';
    for (const auto& s : row_strings(g))
        out << s << '\n';
}

std::string to_text(const Grid& g) {
    std::ostringstream ss;
    write_grid(ss, g);
    return ss.str();
}

} // namespace cauchon

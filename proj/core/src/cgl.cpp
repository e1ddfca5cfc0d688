#include "cauchon/cgl.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cauchon/error.hpp"

namespace cauchon {

ComplementSet::ComplementSet(std::size_t universe, std::vector<std::size_t> w)
    : universe_(universe), members_(std::move(w)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (members_[k] < 1 || members_[k] > universe_)
            throw std::out_of_range("index " + std::to_string(members_[k]) + " outside [1.." +
                                    std::to_string(universe_) + "]");
        if (k > 0 && members_[k] == members_[k - 1])
            throw std::invalid_argument("index " + std::to_string(members_[k]) + " repeated");
    }
    std::size_t k = 0;
    for (std::size_t i = 1; i <= universe_; ++i) {
        if (k < members_.size() && members_[k] == i)
            ++k;
        else
            complement_.push_back(i);
    }
}

SkewIntMatrix stratum_matrix(const CGLSystem& sys, const ComplementSet& w) {
    if (w.universe() != sys.size())
        throw std::invalid_argument("subset universe does not match the system size");
    std::vector<std::size_t> keep;
    keep.reserve(w.complement().size());
    for (auto l : w.complement())
        keep.push_back(l - 1);
    return sys.a.principal(keep);
}

std::size_t cgl_stratum_dim(const CGLSystem& sys, const ComplementSet& w) {
    return kernel_dim(stratum_matrix(sys, w));
}

QuantumMatrixSystem::QuantumMatrixSystem(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("quantum matrix dimensions must be positive");
    const std::size_t size = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
    SkewIntMatrix b(size);
    for (std::size_t k = 1; k <= size; ++k)
        for (std::size_t l = k + 1; l <= size; ++l) {
            const Box x = box_of(k), y = box_of(l);
            // Within a column block: A (+1 above the diagonal). Between
            // column blocks: I_m, pairing boxes of the same row.
            if (x.col == y.col || x.row == y.row)
                b.set(k - 1, l - 1, 1);
        }
    system_ = CGLSystem{std::move(b)};
}

std::size_t QuantumMatrixSystem::index_of(Box b) const {
    if (b.row < 1 || b.row > m_ || b.col < 1 || b.col > n_)
        throw std::out_of_range("box outside the grid");
    return static_cast<std::size_t>(b.col - 1) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(b.row);
}

Box QuantumMatrixSystem::box_of(std::size_t index) const {
    const std::size_t mm = static_cast<std::size_t>(m_);
    if (index < 1 || index > mm * static_cast<std::size_t>(n_))
        throw std::out_of_range("index outside [1..mn]");
    return {static_cast<int>((index - 1) % mm) + 1, static_cast<int>((index - 1) / mm) + 1};
}

ComplementSet QuantumMatrixSystem::black_set(const CauchonDiagram& c) const {
    if (c.m() != m_ || c.n() != n_)
        throw std::invalid_argument("diagram shape does not match the quantum matrix system");
    std::vector<std::size_t> w;
    for (int i = 1; i <= m_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (c.black(i, j))
                w.push_back(index_of({i, j}));
    return ComplementSet(static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_),
                         std::move(w));
}

std::vector<std::size_t> QuantumMatrixSystem::white_label_positions(const CauchonDiagram& c) const {
    const ComplementSet blacks = black_set(c);
    const auto& comp = blacks.complement();
    std::vector<std::size_t> perm;
    for (const Box& b : c.white_boxes()) {
        auto it = std::lower_bound(comp.begin(), comp.end(), index_of(b));
        perm.push_back(static_cast<std::size_t>(it - comp.begin()));
    }
    return perm;
}

CGLSystem read_cgl_system(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            break;
        line.clear();
    }
    std::istringstream header(line);
    long long n = -1;
    std::string extra;
    if (!(header >> n) || n < 1 || (header >> extra))
        throw ParseError(std::max<std::size_t>(lineno, 1), "expected a positive size N");

    std::ostringstream body;
    body << n << ' ' << n << '\n' << in.rdbuf();
    std::istringstream rest(body.str());
    IntMatrix a;
    try {
        a = read_matrix(rest);
    } catch (const ParseError& e) {
        // read_matrix counts its synthetic header as line 1; it stands in for
        // line `lineno` of the input.
        const std::string msg = e.what();
        throw ParseError(e.line() + lineno - 1, msg.substr(msg.find(": ") + 2));
    }
    if (!is_antisymmetric(a))
        throw ParseError(lineno, "matrix is not antisymmetric");
    return CGLSystem{SkewIntMatrix(std::move(a))};
}

void write_cgl_system(std::ostream& out, const CGLSystem& sys) {
    out << sys.size() << '\n';
    const auto& a = sys.a.matrix();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j)
                out << ' ';
            out << a(i, j);
        }
        out << '\n';
    }
}

ComplementSet parse_subset(std::string_view text, std::size_t universe) {
    std::vector<std::size_t> w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ','))
            ++pos;
        if (pos == text.size())
            break;
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} ||
            (end != text.data() + text.size() && *end != ' ' && *end != '\t' && *end != ','))
            throw std::invalid_argument("bad subset index near \"" +
                                        std::string(text.substr(pos, 8)) + "\"");
        w.push_back(value);
        pos = static_cast<std::size_t>(end - text.data());
    }
    return ComplementSet(universe, std::move(w));
}

} // namespace cauchon

#include "cauchon/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cauchon/error.hpp"

namespace cauchon {

namespace {

void link(IntMatrix& a, int i, int j, long aij, long aji) {
    a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = aij;
    a(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = aji;
}

void check_letter(const RootSystemData& rs, int i) {
    if (i < 1 || i > rs.rank)
        throw std::out_of_range("reflection index " + std::to_string(i) + " outside [1.." +
                                std::to_string(rs.rank) + "]");
}

IntVector simple_root(const RootSystemData& rs, int i) {
    IntVector v(static_cast<std::size_t>(rs.rank));
    v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
}

bool is_positive(const IntVector& v) {
    bool nonzero = false;
    for (const auto& x : v) {
        if (sgn(x) < 0)
            return false;
        nonzero = nonzero || sgn(x) != 0;
    }
    return nonzero;
}

} // namespace

RootSystemData RootSystemData::make(char type, int rank) {
    type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
    const bool ok = (type == 'A' && rank >= 1 && rank <= 8) ||
                    ((type == 'B' || type == 'C') && rank >= 2 && rank <= 8) ||
                    (type == 'D' && rank >= 4 && rank <= 8) ||
                    (type == 'E' && rank >= 6 && rank <= 8) || (type == 'F' && rank == 4) ||
                    (type == 'G' && rank == 2);
    if (!ok)
        throw std::invalid_argument("unsupported root system " + std::string(1, type) +
                                    std::to_string(rank));

    RootSystemData rs;
    rs.type = type;
    rs.rank = rank;
    rs.cartan = IntMatrix(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
    for (std::size_t i = 0; i < rs.cartan.rows(); ++i)
        rs.cartan(i, i) = 2;
    rs.symmetrizers.assign(static_cast<std::size_t>(rank), 1);

    switch (type) {
    case 'A':
        for (int i = 1; i < rank; ++i)
            link(rs.cartan, i, i + 1, -1, -1);
        break;
    case 'B': // alpha_n short
        for (int i = 1; i < rank - 1; ++i)
            link(rs.cartan, i, i + 1, -1, -1);
        link(rs.cartan, rank - 1, rank, -1, -2);
        for (int i = 0; i < rank - 1; ++i)
            rs.symmetrizers[static_cast<std::size_t>(i)] = 2;
        break;
    case 'C': // alpha_n long
        for (int i = 1; i < rank - 1; ++i)
            link(rs.cartan, i, i + 1, -1, -1);
        link(rs.cartan, rank - 1, rank, -2, -1);
        rs.symmetrizers[static_cast<std::size_t>(rank - 1)] = 2;
        break;
    case 'D':
        for (int i = 1; i < rank - 1; ++i)
            link(rs.cartan, i, i + 1, -1, -1);
        link(rs.cartan, rank - 2, rank, -1, -1);
        break;
    case 'E':
        link(rs.cartan, 1, 3, -1, -1);
        link(rs.cartan, 2, 4, -1, -1);
        for (int i = 3; i < rank; ++i)
            link(rs.cartan, i, i + 1, -1, -1);
        break;
    case 'F': // alpha_1, alpha_2 long
        link(rs.cartan, 1, 2, -1, -1);
        link(rs.cartan, 2, 3, -1, -2);
        link(rs.cartan, 3, 4, -1, -1);
        rs.symmetrizers = {2, 2, 1, 1};
        break;
    case 'G': // alpha_1 short
        link(rs.cartan, 1, 2, -3, -1);
        rs.symmetrizers = {1, 3};
        break;
    }
    return rs;
}

RootSystemData RootSystemData::parse(std::string_view name) {
    if (name.size() < 2)
        throw std::invalid_argument("root system name must look like \"A3\"");
    int rank = 0;
    auto [end, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), rank);
    if (ec != std::errc{} || end != name.data() + name.size())
        throw std::invalid_argument("root system name must look like \"A3\"");
    return make(name[0], rank);
}

IntMatrix RootSystemData::gram() const {
    IntMatrix g(cartan.rows(), cartan.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            g(i, j) = symmetrizers[i] * cartan(i, j);
    return g;
}

WeylWord parse_word(std::string_view text) {
    WeylWord w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ',' || text[pos] == ' '))
            ++pos;
        if (pos == text.size())
            break;
        int letter = 0;
        auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), letter);
        if (ec != std::errc{} ||
            (end != text.data() + text.size() && *end != ',' && *end != ' '))
            throw std::invalid_argument("bad Weyl word \"" + std::string(text) + "\"");
        w.push_back(letter);
        pos = static_cast<std::size_t>(end - text.data());
    }
    return w;
}

std::string format_word(const WeylWord& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(w[k]);
    }
    return s;
}

IntMatrix reflection_matrix(const RootSystemData& rs, int i) {
    check_letter(rs, i);
    const std::size_t r = static_cast<std::size_t>(i - 1);
    IntMatrix s = IntMatrix::identity(static_cast<std::size_t>(rs.rank));
    for (std::size_t j = 0; j < s.cols(); ++j)
        s(r, j) -= rs.cartan(r, j);
    return s;
}

IntMatrix weyl_element(const RootSystemData& rs, const WeylWord& w) {
    IntMatrix acc = IntMatrix::identity(static_cast<std::size_t>(rs.rank));
    for (int i : w)
        acc = acc * reflection_matrix(rs, i);
    return acc;
}

std::vector<IntVector> beta_roots(const RootSystemData& rs, const WeylWord& w) {
    std::vector<IntVector> out;
    IntMatrix prefix = IntMatrix::identity(static_cast<std::size_t>(rs.rank));
    for (int i : w) {
        check_letter(rs, i);
        out.push_back(prefix * simple_root(rs, i));
        prefix = prefix * reflection_matrix(rs, i);
    }
    return out;
}

bool is_reduced(const RootSystemData& rs, const WeylWord& w) {
    auto betas = beta_roots(rs, w);
    for (const auto& b : betas)
        if (!is_positive(b))
            return false;
    std::sort(betas.begin(), betas.end());
    return std::adjacent_find(betas.begin(), betas.end()) == betas.end();
}

Integer pairing(const RootSystemData& rs, const IntVector& a, const IntVector& b) {
    const IntMatrix g = rs.gram();
    return std::inner_product(a.begin(), a.end(), (g * b).begin(), Integer(0));
}

SkewIntMatrix schubert_cgl_matrix(const RootSystemData& rs, const WeylWord& w) {
    if (!is_reduced(rs, w))
        throw std::invalid_argument("word " + format_word(w) + " is not reduced in " + rs.name());
    const auto betas = beta_roots(rs, w);
    const IntMatrix g = rs.gram();
    SkewIntMatrix out(betas.size());
    for (std::size_t i = 0; i < betas.size(); ++i) {
        const IntVector gb = g * betas[i];
        for (std::size_t j = i + 1; j < betas.size(); ++j)
            out.set(i, j, std::inner_product(gb.begin(), gb.end(), betas[j].begin(), Integer(0)));
    }
    return out;
}

std::size_t zero_stratum_dim(const RootSystemData& rs, const WeylWord& w) {
    if (!is_reduced(rs, w))
        throw std::invalid_argument("word " + format_word(w) + " is not reduced in " + rs.name());
    const auto id = IntMatrix::identity(static_cast<std::size_t>(rs.rank));
    return kernel_dim(id + weyl_element(rs, w));
}

int expected_braid_order(const RootSystemData& rs, int i, int j) {
    check_letter(rs, i);
    check_letter(rs, j);
    if (i == j)
        return 1;
    const Integer p = rs.cartan(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) *
                      rs.cartan(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1));
    static constexpr int orders[] = {2, 3, 4, 6};
    if (p < 0 || p > 3)
        throw std::logic_error("Cartan product outside {0,1,2,3}");
    return orders[p.get_si()];
}

int braid_order(const RootSystemData& rs, int i, int j) {
    const IntMatrix st = reflection_matrix(rs, i) * reflection_matrix(rs, j);
    const IntMatrix id = IntMatrix::identity(static_cast<std::size_t>(rs.rank));
    IntMatrix acc = st;
    for (int k = 1; k <= 12; ++k) {
        if (acc == id)
            return k;
        acc = acc * st;
    }
    return 0;
}

std::vector<std::vector<WeylWord>> reduced_words_by_element(const RootSystemData& rs,
                                                            std::size_t cap) {
    // Extending a reduced word u by s_i stays reduced iff u(alpha_i) > 0.
    std::map<std::vector<Integer>, std::vector<WeylWord>> by_element;
    std::size_t produced = 0;

    struct Frame {
        WeylWord word;
        IntMatrix element;
    };
    std::vector<Frame> stack{{{}, IntMatrix::identity(static_cast<std::size_t>(rs.rank))}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (++produced > cap)
            throw CapExceeded("more than " + std::to_string(cap) + " reduced words");
        const auto key = std::vector<Integer>(f.element.entries().begin(), f.element.entries().end());
        by_element[key].push_back(f.word);
        for (int i = rs.rank; i >= 1; --i) {
            if (!is_positive(f.element * simple_root(rs, i)))
                continue;
            WeylWord w = f.word;
            w.push_back(i);
            stack.push_back({std::move(w), f.element * reflection_matrix(rs, i)});
        }
    }

    std::vector<std::vector<WeylWord>> out;
    for (auto& [key, words] : by_element) {
        std::sort(words.begin(), words.end());
        out.push_back(std::move(words));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.front().size() != b.front().size() ? a.front().size() < b.front().size()
                                                     : a.front() < b.front();
    });
    return out;
}

} // namespace cauchon

#include "cauchon/strata.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cauchon {

namespace {

template <class M>
void fill_skew_adjacency(const std::vector<Box>& whites, M& out) {
    const std::size_t d = whites.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            // Row-major order: box i is above or left of box j.
            const Box a = whites[i], b = whites[j];
            if (a.row == b.row || a.col == b.col) {
                out(i, j) = 1;
                out(j, i) = -1;
            }
        }
}

SmallIntMatrix skew_adjacency_small(const CauchonDiagram& c) {
    const auto whites = c.white_boxes();
    SmallIntMatrix m(whites.size(), whites.size());
    fill_skew_adjacency(whites, m);
    return m;
}

} // namespace

SkewIntMatrix skew_adjacency(const CauchonDiagram& c) {
    const auto whites = c.white_boxes();
    IntMatrix m(whites.size(), whites.size());
    fill_skew_adjacency(whites, m);
    return SkewIntMatrix(std::move(m));
}

std::size_t stratum_dim(const CauchonDiagram& c) { return kernel_dim(skew_adjacency_small(c)); }

StratumReport stratum_report(const CauchonDiagram& c) {
    return {c, c.white_count(), stratum_dim(c)};
}

Lemma1Audit verify_lemma1(const CauchonDiagram& original) {
    Lemma1Audit audit;
    const auto stripped = strip_black_columns(original);
    if (!stripped) {
        audit.passed = true;
        return audit;
    }
    const CauchonDiagram& c = *stripped;
    const auto whites = c.white_boxes();
    const std::size_t d = whites.size();

    // whites is row-major, so the first hit per column is its top white box.
    std::vector<std::size_t> head(static_cast<std::size_t>(c.n()) + 1, d);
    for (std::size_t k = 0; k < d; ++k) {
        auto& h = head[static_cast<std::size_t>(whites[k].col)];
        if (h == d)
            h = k;
    }
    std::vector<bool> is_head(d, false);
    for (int j = 1; j <= c.n(); ++j) {
        const std::size_t h = head[static_cast<std::size_t>(j)];
        audit.column_heads.push_back(static_cast<int>(h + 1));
        is_head[h] = true;
    }

    audit.s = IntMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t h = head[static_cast<std::size_t>(whites[i].col)];
        if (h < i)
            audit.s(i, h) = -1;
    }
    audit.product = audit.s * skew_adjacency(c).matrix();

    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < d; ++k)
        if (!is_head[k])
            keep.push_back(k);
    audit.reduced = submatrix(audit.product, keep, keep);

    auto fail = [&](std::string why, std::size_t i, std::size_t j) {
        audit.failure = std::move(why);
        audit.offending = std::pair{static_cast<int>(i + 1), static_cast<int>(j + 1)};
        return audit;
    };

    for (std::size_t x = 0; x < keep.size(); ++x)
        for (std::size_t y = 0; y < keep.size(); ++y) {
            const Box bx = whites[keep[x]], by = whites[keep[y]];
            const Integer& v = audit.reduced(x, y);
            if (bx.row < by.row && sgn(v) != 0)
                return fail("nonzero entry above the diagonal blocks", keep[x], keep[y]);
            if (bx.row != by.row)
                continue;
            if (x == y && v != -1)
                return fail("diagonal entry of a diagonal block is not -1", keep[x], keep[y]);
            if (x != y && v != -audit.reduced(y, x))
                return fail("diagonal block is not -I plus a skew-symmetric matrix", keep[x],
                            keep[y]);
        }

    if (kernel_dim(audit.reduced) != 0) {
        audit.failure = "reduced matrix is singular";
        return audit;
    }
    audit.passed = true;
    return audit;
}

CauchonDiagram descend_one(const CauchonDiagram& c) {
    const std::size_t e = stratum_dim(c);
    if (e == 0)
        throw std::domain_error("stratum dimension is already 0");
    const auto whites = c.white_boxes();
    for (int label : candidate_boxes(c)) {
        auto next = c.with_black(whites[static_cast<std::size_t>(label - 1)]);
        if (stratum_dim(next) == e - 1)
            return next;
    }
    throw std::logic_error("no single blackening lowers the stratum dimension");
}

DiagramChain build_chain(const CauchonDiagram& c) {
    DiagramChain chain;
    std::size_t dim = stratum_dim(c);
    chain.steps.push_back({c, dim});
    while (dim > 0) {
        auto next = descend_one(chain.steps.back().diagram);
        --dim;
        chain.steps.push_back({std::move(next), dim});
    }
    return chain;
}

void write_chain(std::ostream& out, const DiagramChain& chain) {
    for (const auto& step : chain.steps) {
        out << "dim: " << step.dim << '\n';
        write_grid(out, step.diagram.grid());
    }
}

} // namespace cauchon

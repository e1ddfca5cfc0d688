#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "cauchon/diagram.hpp"
#include "cauchon/error.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cauchon;
using testutil::diagram_of;
using testutil::golden_diagram;
using testutil::grid_of;

namespace {

std::vector<CauchonDiagram> all_diagrams(int m, int n) {
    std::vector<CauchonDiagram> out;
    DiagramEnumerator it(m, n);
    while (auto c = it.next())
        out.push_back(std::move(*c));
    return out;
}

oracle::BoolGrid to_bool_grid(const Grid& g) {
    oracle::BoolGrid b(static_cast<std::size_t>(g.m()), std::vector<bool>(static_cast<std::size_t>(g.n())));
    for (int i = 1; i <= g.m(); ++i)
        for (int j = 1; j <= g.n(); ++j)
            b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = g.black(i, j);
    return b;
}

} // namespace

TEST(IsValid, MixedDiagram) {
    EXPECT_TRUE(is_valid(testutil::golden_diagram("mixed_4x4.txt").grid()));
}

TEST(IsValid, AllWhiteIsValid) {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            EXPECT_TRUE(is_valid(Grid(m, n)));
}

TEST(IsValid, LoneBottomRightBlackIsInvalid) {
    const Grid g = grid_of("2 2\n..\n.#\n");
    EXPECT_FALSE(is_valid(g));
    ASSERT_TRUE(first_violation(g).has_value());
    EXPECT_EQ(*first_violation(g), (Box{2, 2}));
    EXPECT_THROW(CauchonDiagram::from_grid(g), std::invalid_argument);
}

TEST(IsValid, AgreesWithLiteralRuleOnAllSmallGrids) {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask) {
                Grid g(m, n);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < n; ++j)
                        g.set_black(i + 1, j + 1, (mask >> (i * n + j)) & 1U);
                ASSERT_EQ(is_valid(g), oracle::is_cauchon(oracle::grid_from_mask(m, n, mask)))
                    << to_text(g);
            }
}

TEST(Contains, CornerAndRowAreIncomparable) {
    const auto left = diagram_of("2 2\n#.\n..\n");
    const auto right = diagram_of("2 2\n..\n##\n");
    EXPECT_FALSE(contains(left, right));
    EXPECT_FALSE(contains(right, left));
}

TEST(Contains, ReflexiveAndEmptySet) {
    const auto fig = golden_diagram("mixed_4x4.txt");
    EXPECT_TRUE(contains(fig, fig));
    EXPECT_TRUE(contains(CauchonDiagram::all_black(2, 2), CauchonDiagram::all_white(2, 2)));
    EXPECT_FALSE(contains(CauchonDiagram::all_white(2, 2), CauchonDiagram::all_black(2, 2)));
}

TEST(Contains, ShapeMismatchThrows) {
    EXPECT_THROW(contains(CauchonDiagram::all_white(2, 2), CauchonDiagram::all_white(2, 3)),
                 std::invalid_argument);
}

TEST(Contains, IsAPartialOrderOnThreeByTwo) {
    const auto all = all_diagrams(3, 2);
    for (const auto& a : all)
        for (const auto& b : all) {
            if (contains(a, b) && contains(b, a))
                EXPECT_EQ(a, b);
            for (const auto& c : all)
                if (contains(a, b) && contains(b, c))
                    EXPECT_TRUE(contains(a, c));
        }
}

TEST(Enumerate, SmallCounts) {
    EXPECT_EQ(all_diagrams(2, 2).size(), 14U);
    EXPECT_EQ(all_diagrams(3, 3).size(), 230U);
    for (int n = 1; n <= 10; ++n)
        EXPECT_EQ(all_diagrams(1, n).size(), std::size_t{1} << n);
}

TEST(Enumerate, MatchesBruteForceAndIsDuplicateFree) {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; m * n <= 16; ++n) {
            const auto all = all_diagrams(m, n);
            std::set<std::vector<RowWord>> seen;
            for (const auto& c : all) {
                ASSERT_TRUE(oracle::is_cauchon(to_bool_grid(c.grid())));
                seen.insert({c.grid().row_words().begin(), c.grid().row_words().end()});
            }
            EXPECT_EQ(seen.size(), all.size());
            EXPECT_EQ(all.size(), oracle::brute_force_count(m, n)) << m << "x" << n;
        }
}

TEST(Enumerate, CountIsSymmetricUnderTransposition) {
    for (int m = 1; m <= 4; ++m)
        for (int n = m + 1; n <= 5; ++n)
            EXPECT_EQ(all_diagrams(m, n).size(), all_diagrams(n, m).size());
}

TEST(Enumerate, OrderIsLexicographicOnRowText) {
    const auto all = all_diagrams(3, 3);
    for (std::size_t k = 1; k < all.size(); ++k) {
        auto a = row_strings(all[k - 1].grid());
        auto b = row_strings(all[k].grid());
        // '.' sorts before '#' in the enumeration; map to a byte order that agrees.
        for (auto* rows : {&a, &b})
            for (auto& s : *rows)
                std::replace(s.begin(), s.end(), '#', 'z');
        EXPECT_LT(a, b);
    }
    EXPECT_EQ(all.front(), CauchonDiagram::all_white(3, 3));
    EXPECT_EQ(all.back(), CauchonDiagram::all_black(3, 3));
}

TEST(Enumerate, PartitionsAreDisjointAndExhaustive) {
    const int m = 3, n = 4;
    std::vector<CauchonDiagram> joined;
    for (std::uint64_t k = 0; k < partition_count(n); ++k) {
        const RowWord first = partition_first_row(n, k);
        DiagramEnumerator it(m, n, first);
        while (auto c = it.next()) {
            EXPECT_EQ(c->grid().row_word(1), first);
            joined.push_back(std::move(*c));
        }
    }
    EXPECT_EQ(joined, all_diagrams(m, n));
}

TEST(Enumerate, EarlyTermination) {
    DiagramEnumerator it(5, 5);
    int taken = 0;
    while (taken < 10 && it.next())
        ++taken;
    EXPECT_EQ(taken, 10);
}

TEST(Enumerate, SupportsSixtyFourColumns) {
    DiagramEnumerator it(2, 64);
    auto first = it.next();
    ASSERT_TRUE(first);
    EXPECT_EQ(*first, CauchonDiagram::all_white(2, 64));
    EXPECT_THROW(Grid(1, 65), std::invalid_argument);
}

TEST(CandidateBoxes, GappedLabelling) {
    const WhiteLabelling labelled(golden_diagram("mixed_4x4.txt"), {1, 3, 4, 8, 10, 15, 16});
    EXPECT_EQ(candidate_boxes(labelled), (std::vector<int>{1, 3, 4, 8, 15}));
    EXPECT_EQ(candidate_boxes(labelled.diagram()), (std::vector<int>{1, 2, 3, 4, 6}));
}

TEST(CandidateBoxes, TrivialCases) {
    EXPECT_EQ(candidate_boxes(CauchonDiagram::all_white(1, 4)), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_TRUE(candidate_boxes(CauchonDiagram::all_black(3, 3)).empty());
}

TEST(CandidateBoxes, ExactlyTheValidBlackenings) {
    for (const auto& c : all_diagrams(3, 3)) {
        const auto whites = c.white_boxes();
        const auto cand = candidate_boxes(c);
        for (std::size_t k = 0; k < whites.size(); ++k) {
            Grid g = c.grid();
            g.set_black(whites[k].row, whites[k].col);
            const bool listed = std::binary_search(cand.begin(), cand.end(), static_cast<int>(k + 1));
            EXPECT_EQ(listed, is_valid(g));
        }
    }
}

TEST(WhiteLabelling, RejectsNonIncreasingLabels) {
    const auto c = CauchonDiagram::all_white(1, 3);
    EXPECT_THROW(WhiteLabelling(c, {1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(WhiteLabelling(c, {1, 2}), std::invalid_argument);
    const WhiteLabelling ok(c, {2, 5, 9});
    EXPECT_EQ(ok.label_of({1, 2}), 5);
    EXPECT_EQ(ok.box_of(9), (Box{1, 3}));
}

TEST(BlackColumns, StripAndInsertRoundTrip) {
    const auto c = golden_diagram("sparse_4x4.txt");
    for (int pos = 1; pos <= c.n() + 1; ++pos) {
        const auto wider = insert_black_column(c, pos);
        EXPECT_TRUE(wider.column_all_black(pos));
        EXPECT_EQ(strip_black_columns(wider), strip_black_columns(c));
    }
    EXPECT_FALSE(strip_black_columns(CauchonDiagram::all_black(2, 2)).has_value());
}

TEST(TextFormat, RoundTripsExactly) {
    const std::string text = "4 4\n..#.\n#.#.\n##..\n####\n";
    EXPECT_EQ(to_text(grid_of(text)), text);
}

TEST(TextFormat, ParseErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            grid_of(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("2 2\n..\n.x\n"), 3U);
    EXPECT_EQ(line_of("2 2\n...\n..\n"), 2U);
    EXPECT_EQ(line_of("two two\n"), 1U);
    EXPECT_EQ(line_of("2 2\n..\n"), 3U);
    EXPECT_EQ(line_of("1 1\n.\n#\n"), 3U);
    EXPECT_EQ(line_of("2 2\r\n..\r\n..\r\n"), 0U);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "groth/insertion.hpp"
#include "groth/tableau.hpp"

using namespace groth;

namespace {

// First mapping of the worked diagonal-bijection example: shape (4,3,3)/(2,1).
SetValuedTableau example_svt_one() {
    Shape sh(Partition({4, 3, 3}), Partition({2, 1}));
    SetValuedTableau::Cells cells = {
        {{1}, {2, 3}},
        {{1, 2}, {2, 4}},
        {{2}, {3, 6}, {7}},
    };
    return SetValuedTableau(sh, cells);
}

SetValuedTableau example_svt_two() {
    Shape sh(Partition({4, 3, 3}), Partition({2, 1}));
    SetValuedTableau::Cells cells = {
        {{1}, {1}},
        {{1, 2}, {2}},
        {{1, 2}, {3}, {3}},
    };
    return SetValuedTableau(sh, cells);
}

SetValuedTableau random_setvalued(std::mt19937& rng, int max_rows, int max_cols, int max_entry) {
    while (true) {
        std::vector<int> outer, inner;
        int rows = std::uniform_int_distribution<int>(1, max_rows)(rng);
        int prev = std::uniform_int_distribution<int>(1, max_cols)(rng);
        for (int r = 0; r < rows; ++r) {
            int len = std::uniform_int_distribution<int>(1, prev)(rng);
            outer.push_back(len);
            prev = len;
        }
        int previn = outer[0];
        for (int r = 0; r < rows; ++r) {
            int len = std::uniform_int_distribution<int>(0, std::min(previn, outer[r] - 1))(rng);
            inner.push_back(len);
            previn = len;
        }
        Shape sh{Partition(outer), Partition(inner)};
        if (sh.boxes() == 0 || sh.boxes() > 8) continue;
        // Fill box by box; restart when a box has no admissible set.
        SetValuedTableau::Cells cells(rows);
        bool ok = true;
        std::vector<std::vector<int>> maxima(rows, std::vector<int>(max_cols + 1, 0));
        for (int r = 1; r <= rows && ok; ++r) {
            cells[r - 1].resize(sh.outer.part(r) - sh.inner.part(r));
            for (int c = sh.inner.part(r) + 1; c <= sh.outer.part(r) && ok; ++c) {
                int lo = 1;
                if (c - 1 > sh.inner.part(r) && c - 1 >= 1) lo = std::max(lo, maxima[r - 1][c - 1]);
                if (r >= 2 && c > sh.inner.part(r - 1) && c <= sh.outer.part(r - 1))
                    lo = std::max(lo, maxima[r - 2][c] + 1);
                if (lo > max_entry) {
                    ok = false;
                    break;
                }
                std::vector<int> box;
                int v = lo;
                while (true) {
                    box.push_back(v);
                    if (v >= max_entry || std::uniform_int_distribution<int>(0, 2)(rng)) break;
                    v = std::uniform_int_distribution<int>(v + 1, max_entry)(rng);
                }
                maxima[r - 1][c] = box.back();
                cells[r - 1][c - sh.inner.part(r) - 1] = box;
            }
        }
        if (!ok) continue;
        return SetValuedTableau(sh, cells);
    }
}

}  // namespace

TEST_CASE("column words") {
    CHECK(column_word(IncreasingTableau()) == Word{});
    CHECK(column_word(IncreasingTableau({{1, 4}, {3}})) == Word{3, 1, 4});
    CHECK(column_word(example_svt_two()) == Word{1, 2, 3, 1, 2, 3, 2, 1, 1});
    CHECK(column_word(example_svt_one()) == Word{2, 3, 6, 1, 2, 7, 2, 4, 1, 2, 3});
}

TEST_CASE("column word of the final compatible-pair tableau") {
    // Its word is a Hecke word for w(41443)^{-1}.
    Permutation w = reduce_word({4, 1, 4, 4, 3});
    CHECK(reduce_word(column_word(IncreasingTableau({{1, 4}, {3}}))) == inverse(w));
}

TEST_CASE("tableau_permutation") {
    CHECK(tableau_permutation(IncreasingTableau()) == Permutation());
    CHECK(tableau_permutation(IncreasingTableau({{1, 2}, {3, 4}})) == Permutation({2, 4, 1, 5, 3}));
    CHECK(tableau_permutation(IncreasingTableau({{1, 2, 4}, {3, 4}})) ==
          Permutation({2, 4, 1, 5, 3}));
}

TEST_CASE("decreasing_permutation") {
    CHECK(decreasing_permutation(DecreasingTableau()) == Permutation());
    CHECK(decreasing_permutation(DecreasingTableau({{2}, {1}})) == reduce_word({1, 2}));
    CHECK(reduce_word({1, 2}) == Permutation({2, 3, 1}));
    CHECK(decreasing_permutation(DecreasingTableau({{4, 3}, {1}})) == reduce_word({1, 4, 3}));
}

TEST_CASE("is_reverse_lattice") {
    CHECK(is_reverse_lattice({}));
    CHECK(is_reverse_lattice({1, 2, 3, 1, 2, 3, 2, 1, 1}));
    CHECK_FALSE(is_reverse_lattice({2}));
    CHECK(is_reverse_lattice({2, 1}));
    CHECK_FALSE(is_reverse_lattice({2, 3, 6, 1, 2, 7, 2, 4, 1, 2, 3}));
}

TEST_CASE("content") {
    CHECK(content({}).empty());
    CHECK(content({1, 2, 3, 1, 2, 3, 2, 1, 1}) == std::vector<int>{4, 3, 2});
    CHECK(content({2, 3, 6, 1, 2, 7, 2, 4, 1, 2, 3}) == std::vector<int>{2, 4, 2, 1, 0, 1, 1});
}

TEST_CASE("setvalued_to_diagram worked mappings") {
    SetValuedTableau one_box(Shape(Partition({1}), Partition()), {{{1}}});
    CHECK(setvalued_to_diagram(one_box, 5, 1) == ColumnDiagram{{4}});

    ColumnDiagram d1 = setvalued_to_diagram(example_svt_one(), 7, 3);
    CHECK(d1 == ColumnDiagram{{2, 4}, {1, 3, 4, 6}, {1, 5}, {3}, {}, {5}, {4}});
    CHECK_FALSE(diagram_is_increasing(d1));

    ColumnDiagram d2 = setvalued_to_diagram(example_svt_two(), 7, 3);
    CHECK(d2 == ColumnDiagram{{1, 2, 4, 6}, {3, 4, 6}, {4, 5}});
    CHECK(diagram_is_increasing(d2));
    CHECK(diagram_to_tableau(d2) ==
          IncreasingTableau({{1, 3, 4}, {2, 4, 5}, {4, 6}, {6}}));
}

TEST_CASE("diagram_is_increasing") {
    CHECK(diagram_is_increasing({}));
    CHECK(diagram_is_increasing({{}, {}}));
    CHECK(diagram_is_increasing({{1, 2}, {2, 3}}));
    CHECK_FALSE(diagram_is_increasing({{}, {1}}));          // interior empty column
    CHECK_FALSE(diagram_is_increasing({{1}, {1, 2}}));      // growing column lengths
    CHECK_FALSE(diagram_is_increasing({{2, 2}}));           // column not strict
    CHECK_FALSE(diagram_is_increasing({{1, 3}, {1, 4}}));   // row not strict
}

TEST_CASE("diagram rejects nonpositive diagonal numbers") {
    SetValuedTableau one_box(Shape(Partition({1, 1}), Partition()), {{{1}}, {{2}}});
    CHECK_THROWS_AS(setvalued_to_diagram(one_box, 1, 1), std::invalid_argument);
}

TEST_CASE("diagram round-trips back to the tableau") {
    std::mt19937 rng(23);
    for (int it = 0; it < 300; ++it) {
        SetValuedTableau s = random_setvalued(rng, 3, 4, 5);
        int k = s.shape().outer.part(1);
        int n = k + s.shape().outer.num_parts() + 2;
        ColumnDiagram d = setvalued_to_diagram(s, n, k);
        SetValuedTableau back = diagram_to_setvalued(d, s.shape(), n, k);
        CHECK(back == s);
    }
}

TEST_CASE("reverse lattice words match increasing diagrams") {
    std::mt19937 rng(29);
    for (int it = 0; it < 300; ++it) {
        SetValuedTableau s = random_setvalued(rng, 3, 4, 5);
        int k = s.shape().outer.part(1);
        int n = k + s.shape().outer.num_parts() + 2;
        ColumnDiagram d = setvalued_to_diagram(s, n, k);
        CHECK(is_reverse_lattice(column_word(s)) == diagram_is_increasing(d));
        // Content equals the list of column lengths.
        std::vector<int> lens;
        for (const auto& col : d) lens.push_back(static_cast<int>(col.size()));
        while (!lens.empty() && lens.back() == 0) lens.pop_back();
        CHECK(content(column_word(s)) == lens);
    }
}

TEST_CASE("validity predicates reject single violations") {
    CHECK(IncreasingTableau::valid({{1, 2}, {2, 3}}));
    CHECK_FALSE(IncreasingTableau::valid({{2, 2}}));           // row weakly increasing
    CHECK_FALSE(IncreasingTableau::valid({{1, 2}, {1, 3}}));   // column repeat
    CHECK_FALSE(IncreasingTableau::valid({{1}, {2, 3}}));      // row lengths grow
    CHECK_FALSE(IncreasingTableau::valid({{1, 0}}));           // nonpositive entry
    CHECK_FALSE(IncreasingTableau::valid({{1, 2}, {}}));       // empty row

    CHECK(DecreasingTableau::valid({{3, 2}, {2, 1}}));
    CHECK_FALSE(DecreasingTableau::valid({{2, 2}}));
    CHECK_FALSE(DecreasingTableau::valid({{2, 1}, {2}}));

    Shape sh(Partition({2, 1}), Partition());
    CHECK(SetValuedTableau::valid(sh, {{{1}, {1, 2}}, {{2}}}));
    CHECK_FALSE(SetValuedTableau::valid(sh, {{{1}, {}}, {{2}}}));        // empty box
    CHECK_FALSE(SetValuedTableau::valid(sh, {{{2}, {1}}, {{3}}}));       // row drop
    CHECK_FALSE(SetValuedTableau::valid(sh, {{{1}, {1}}, {{1}}}));       // column tie
    CHECK_FALSE(SetValuedTableau::valid(sh, {{{2, 1}, {3}}, {{3}}}));    // unsorted set
    CHECK_FALSE(SetValuedTableau::valid(sh, {{{1, 1}, {2}}, {{2}}}));    // duplicate in set
    CHECK_FALSE(SetValuedTableau::valid(sh, {{{1}}, {{2}}}));            // wrong row length
}

TEST_CASE("flip between increasing and decreasing") {
    DecreasingTableau d({{5, 3}, {4}});
    IncreasingTableau i = flip_to_increasing(d, 7);
    CHECK(i == IncreasingTableau({{2, 4}, {3}}));
    CHECK(flip_to_decreasing(i, 7) == d);
}

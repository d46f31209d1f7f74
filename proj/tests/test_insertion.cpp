#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "groth/insertion.hpp"

using namespace groth;

namespace {

IncreasingTableau T(Grid g) { return IncreasingTableau(std::move(g)); }

IncreasingTableau random_tableau(std::mt19937& rng, int max_boxes, int max_letter) {
    std::uniform_int_distribution<int> nd(0, max_boxes);
    std::uniform_int_distribution<int> ld(1, max_letter);
    IncreasingTableau t;
    int k = nd(rng);
    for (int i = 0; i < k; ++i) t = hecke_insert(ld(rng), t).tableau;
    return t;
}

}  // namespace

TEST_CASE("hecke insertion worked examples") {
    CHECK(hecke_insert(1, IncreasingTableau()) ==
          InsertionResult{T({{1}}), {1, 1}, 1});

    IncreasingTableau y1 = T({{1, 2, 3, 4}, {2, 5, 6}, {3}, {5}});
    CHECK(hecke_insert(3, y1) == InsertionResult{y1, {2, 3}, 0});

    CHECK(hecke_insert(2, T({{1, 2}, {2, 5}, {4}})) ==
          InsertionResult{T({{1, 2, 5}, {2, 4}, {4}}), {1, 3}, 1});

    IncreasingTableau y2 = T({{1, 2, 3, 5}, {2, 3, 4}, {4}});
    CHECK(hecke_insert(2, y2) == InsertionResult{y2, {2, 3}, 0});

    CHECK(hecke_insert(1, T({{1, 2, 3}, {3, 4, 5}})) ==
          InsertionResult{T({{1, 2, 3, 5}, {3, 4, 5}}), {1, 4}, 1});

    CHECK_THROWS_AS(hecke_insert(0, IncreasingTableau()), std::invalid_argument);
}

TEST_CASE("reverse insertion worked examples") {
    auto [y0, x0] = reverse_hecke_insert({T({{1}}), {1, 1}, 1});
    CHECK(y0 == IncreasingTableau());
    CHECK(x0 == 1);

    auto [y1, x1] = reverse_hecke_insert({T({{1, 2, 3, 5}, {3, 4, 5}}), {1, 4}, 1});
    CHECK(y1 == T({{1, 2, 3}, {3, 4, 5}}));
    CHECK(x1 == 1);

    auto [y2, x2] = reverse_hecke_insert({T({{1, 2, 5}, {2, 4}, {4}}), {1, 3}, 1});
    CHECK(y2 == T({{1, 2}, {2, 5}, {4}}));
    CHECK(x2 == 2);

    CHECK_THROWS_AS(reverse_hecke_insert({T({{1, 2}}), {1, 1}, 0}), std::invalid_argument);
}

TEST_CASE("insertion and reverse insertion are mutually inverse") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> ld(1, 8);
    for (int it = 0; it < 3000; ++it) {
        IncreasingTableau y = random_tableau(rng, 12, 8);
        int x = ld(rng);
        InsertionResult r = hecke_insert(x, y);
        auto [y2, x2] = reverse_hecke_insert(r);
        REQUIRE(y2 == y);
        REQUIRE(x2 == x);
    }
    for (int it = 0; it < 3000; ++it) {
        IncreasingTableau z = random_tableau(rng, 12, 8);
        if (z.empty()) continue;
        std::vector<Corner> corners;
        for (int r = 1; r <= z.num_rows(); ++r)
            if (z.is_corner(r, z.row_length(r))) corners.push_back({r, z.row_length(r)});
        Corner c = corners[std::uniform_int_distribution<size_t>(0, corners.size() - 1)(rng)];
        int alpha = std::uniform_int_distribution<int>(0, 1)(rng);
        InsertionResult triple{z, c, alpha};
        auto [y, x] = reverse_hecke_insert(triple);
        REQUIRE(hecke_insert(x, y) == triple);
    }
}

TEST_CASE("insertion preserves Hecke words") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> ld(1, 8);
    for (int it = 0; it < 2000; ++it) {
        IncreasingTableau y = random_tableau(rng, 12, 8);
        int x = ld(rng);
        IncreasingTableau z = hecke_insert(x, y).tableau;
        Word w = column_word(y);
        w.insert(w.begin(), x);
        CHECK(reduce_word(column_word(z)) == reduce_word(w));
    }
}

TEST_CASE("Pieri property") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> ld(1, 8);
    for (int it = 0; it < 10000; ++it) {
        IncreasingTableau y = random_tableau(rng, 10, 8);
        int x1 = ld(rng), x2 = ld(rng);
        InsertionResult r1 = hecke_insert(x1, y);
        InsertionResult r2 = hecke_insert(x2, r1.tableau);
        CHECK((r2.corner.col > r1.corner.col) == (x1 > x2));
    }
}

TEST_CASE("distinct letters degenerate to Robinson-Schensted") {
    std::mt19937 rng(53);
    for (int it = 0; it < 500; ++it) {
        std::vector<int> letters(12);
        std::iota(letters.begin(), letters.end(), 1);
        std::shuffle(letters.begin(), letters.end(), rng);
        int len = std::uniform_int_distribution<int>(0, 12)(rng);
        IncreasingTableau t;
        for (int j = 0; j < len; ++j) {
            InsertionResult r = hecke_insert(letters[j], t);
            CHECK(r.alpha == 1);
            CHECK(r.tableau.boxes() == t.boxes() + 1);
            t = r.tableau;
        }
    }
}

TEST_CASE("compatible pair insertion reproduces the worked trace") {
    CompatiblePair p{{4, 1, 4, 4, 3}, {1, 1, 2, 4, 4}};
    std::vector<InsertionStep> trace;
    RecordingPair rp = insert_compatible_pair(p, &trace);

    CHECK(rp.t == T({{1, 4}, {3}}));
    Shape sh(Partition({2, 1}), Partition());
    CHECK(rp.u == SetValuedTableau(sh, {{{1}, {1, 4}}, {{2, 4}}}));

    REQUIRE(trace.size() == 5);
    CHECK(trace[0].t == T({{4}}));
    CHECK(trace[0].u.cells() == SetValuedTableau::Cells{{{1}}});
    CHECK(trace[1].t == T({{1, 4}}));
    CHECK(trace[1].u.cells() == SetValuedTableau::Cells{{{1}, {1}}});
    CHECK(trace[2].t == T({{1, 4}, {4}}));
    CHECK(trace[2].u.cells() == SetValuedTableau::Cells{{{1}, {1}}, {{2}}});
    CHECK(trace[3].t == T({{1, 4}, {4}}));
    CHECK(trace[3].u.cells() == SetValuedTableau::Cells{{{1}, {1}}, {{2, 4}}});
    CHECK(trace[4].t == T({{1, 4}, {3}}));
    CHECK(trace[4].u.cells() == SetValuedTableau::Cells{{{1}, {1, 4}}, {{2, 4}}});

    CHECK(recover_compatible_pair(rp) == p);
}

TEST_CASE("empty compatible pair") {
    RecordingPair rp = insert_compatible_pair({{}, {}});
    CHECK(rp.t.empty());
    CHECK(rp.u.empty());
    CHECK(recover_compatible_pair(rp) == CompatiblePair{{}, {}});
}

TEST_CASE("recording tableau stays valid and tracks the permutation") {
    CompatiblePair p{{2, 1, 4, 3}, {1, 2, 3, 4}};
    std::vector<InsertionStep> trace;
    RecordingPair rp = insert_compatible_pair(p, &trace);
    CHECK(rp.t.boxes() == 4);
    CHECK(tableau_permutation(rp.t) == inverse(reduce_word(p.a)));
    for (const auto& step : trace)
        CHECK(SetValuedTableau::valid(step.u.shape(), step.u.cells()));
}

TEST_CASE("compatible pair round-trips on random input") {
    std::mt19937 rng(59);
    for (int it = 0; it < 3000; ++it) {
        // Build a random compatible pair from scratch.
        Word a, i;
        int len = std::uniform_int_distribution<int>(0, 10)(rng);
        int last_a = 0, last_i = 1;
        for (int j = 0; j < len; ++j) {
            int ij = std::uniform_int_distribution<int>(last_i, 5)(rng);
            int hi = (j > 0 && ij == last_i) ? last_a - 1 : 5;
            if (hi < 1) {
                if (last_i == 5) break;
                ij = std::uniform_int_distribution<int>(last_i + 1, 5)(rng);
                hi = 5;
            }
            int aj = std::uniform_int_distribution<int>(1, hi)(rng);
            a.push_back(aj);
            i.push_back(ij);
            last_a = aj;
            last_i = ij;
        }
        REQUIRE(is_compatible_pair(a, i));
        CompatiblePair p{a, i};
        RecordingPair rp = insert_compatible_pair(p);
        CHECK(recover_compatible_pair(rp) == p);
        // x^U = x^i: the recording tableau holds the index multiset.
        std::vector<int> entries;
        for (const auto& row : rp.u.cells())
            for (const auto& box : row) entries.insert(entries.end(), box.begin(), box.end());
        std::sort(entries.begin(), entries.end());
        Word sorted_i = i;
        std::sort(sorted_i.begin(), sorted_i.end());
        CHECK(entries == sorted_i);
    }
}

TEST_CASE("product of increasing tableaux") {
    IncreasingTableau t1 = T({{1}});
    IncreasingTableau t2 = T({{1, 5}, {4}});
    IncreasingTableau t3 = T({{2}});
    CHECK(product_increasing(IncreasingTableau(), t2) == t2);
    CHECK(product_increasing(t2, IncreasingTableau()) == t2);
    CHECK(product_increasing(product_increasing(t1, t2), t3) == T({{1, 2, 5}, {4}}));
    CHECK(product_increasing(t1, product_increasing(t2, t3)) == T({{1, 2, 5}, {4, 5}}));
}

TEST_CASE("product respects Hecke products of permutations") {
    std::mt19937 rng(61);
    for (int it = 0; it < 500; ++it) {
        IncreasingTableau a = random_tableau(rng, 8, 6);
        IncreasingTableau b = random_tableau(rng, 8, 6);
        CHECK(tableau_permutation(product_increasing(a, b)) ==
              hecke_product(tableau_permutation(a), tableau_permutation(b)));
    }
}

TEST_CASE("product of decreasing tableaux") {
    DecreasingTableau a({{5, 3}, {4}});
    DecreasingTableau b({{6, 3, 1}, {4, 2}, {3}, {2}});
    CHECK(product_decreasing(DecreasingTableau(), a) == a);
    CHECK(product_decreasing(a, b) == DecreasingTableau({{6, 4, 3, 1}, {5, 3, 2}, {4}, {2}}));
    for (int x : {1, 3, 7}) {
        DecreasingTableau box({{x}});
        CHECK(product_decreasing(box, box) == box);
    }
    CHECK(decreasing_permutation(product_decreasing(a, b)) ==
          hecke_product(decreasing_permutation(a), decreasing_permutation(b)));
}

TEST_CASE("vertical and horizontal cuts factor the tableau") {
    std::mt19937 rng(67);
    for (int it = 0; it < 400; ++it) {
        IncreasingTableau t = random_tableau(rng, 12, 8);
        if (t.empty()) continue;
        int ncols = t.row_length(1);
        int cut = std::uniform_int_distribution<int>(0, ncols)(rng);
        Grid left, right;
        for (const auto& row : t.rows()) {
            int k = std::min<int>(cut, static_cast<int>(row.size()));
            if (k > 0) left.push_back({row.begin(), row.begin() + k});
            if (k < static_cast<int>(row.size())) right.push_back({row.begin() + k, row.end()});
        }
        CHECK(product_increasing(IncreasingTableau(left), IncreasingTableau(right)) == t);

        int nrows = t.num_rows();
        int hcut = std::uniform_int_distribution<int>(0, nrows)(rng);
        Grid top(t.rows().begin(), t.rows().begin() + hcut);
        Grid bottom(t.rows().begin() + hcut, t.rows().end());
        CHECK(product_increasing(IncreasingTableau(bottom), IncreasingTableau(top)) == t);
    }
}

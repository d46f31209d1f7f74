#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "groth/permutation.hpp"

using namespace groth;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

Word random_word(std::mt19937& rng, int max_len, int max_letter) {
    std::uniform_int_distribution<int> nd(0, max_len);
    std::uniform_int_distribution<int> ld(1, max_letter);
    Word w(nd(rng));
    for (int& x : w) x = ld(rng);
    return w;
}

}  // namespace

TEST_CASE("reduce_word examples") {
    CHECK(reduce_word({}) == Permutation());
    CHECK(reduce_word({2, 1, 4, 3}) == P({3, 1, 5, 2, 4}));
    CHECK(reduce_word({1, 1}) == P({2, 1}));
    CHECK(reduce_word({3, 1, 4, 2}) == P({2, 4, 1, 5, 3}));
    CHECK(reduce_word({3, 1, 4, 2}) == inverse(P({3, 1, 5, 2, 4})));
}

TEST_CASE("hecke_product examples") {
    Permutation pi = P({3, 1, 5, 2, 4});
    CHECK(hecke_product(Permutation(), pi) == pi);
    CHECK(hecke_product(pi, Permutation()) == pi);
    CHECK(hecke_product(P({2, 1}), P({2, 1})) == P({2, 1}));
}

TEST_CASE("hecke_product matches letterwise reduction on S3 x S3") {
    for (const auto& p : symmetric_group(3))
        for (const auto& q : symmetric_group(3)) {
            Word w = reduced_word(p);
            Word wq = reduced_word(q);
            w.insert(w.end(), wq.begin(), wq.end());
            CHECK(hecke_product(p, q) == reduce_word(w));
        }
}

TEST_CASE("length") {
    CHECK(length(Permutation()) == 0);
    CHECK(length(P({3, 1, 5, 2, 4})) == 4);
    CHECK(length(P({3, 2, 1})) == 3);
}

TEST_CASE("inverse") {
    CHECK(inverse(Permutation()) == Permutation());
    CHECK(inverse(P({3, 1, 5, 2, 4})) == P({2, 4, 1, 5, 3}));
    CHECK(inverse(P({2, 1})) == P({2, 1}));
}

TEST_CASE("descents") {
    CHECK(descents(Permutation()).empty());
    CHECK(descents(P({3, 1, 5, 2, 4})) == std::vector<int>{1, 3});
}

TEST_CASE("grassmannian permutations") {
    CHECK(grassmannian_permutation(Partition(), 3) == Permutation());
    CHECK(grassmannian_permutation(Partition({2, 2}), 2) == P({3, 4, 1, 2}));
    CHECK(grassmannian_permutation(Partition({1}), 1) == P({2, 1}));
    CHECK_THROWS_AS(grassmannian_permutation(Partition({1, 1}), 1), std::invalid_argument);
}

TEST_CASE("skew permutations") {
    CHECK(skew_permutation(Partition({2, 1}), Partition(), 2) ==
          grassmannian_permutation(Partition({2, 1}), 2));
    CHECK(skew_permutation(Partition({1}), Partition(), 1) == P({2, 1}));
    CHECK(is_321_avoiding(skew_permutation(Partition({4, 3, 3}), Partition({2, 1}), 3)));
    CHECK_THROWS_AS(skew_permutation(Partition({1}), Partition({2}), 2), std::invalid_argument);
}

TEST_CASE("conjugate_by_longest") {
    CHECK(conjugate_by_longest(Permutation(), 4) == Permutation());
    CHECK(conjugate_by_longest(P({2, 1}), 2) == P({2, 1}));
    CHECK(conjugate_by_longest(P({3, 1, 5, 2, 4}), 5) == P({2, 4, 1, 5, 3}));
    CHECK_THROWS_AS(conjugate_by_longest(P({3, 1, 5, 2, 4}), 4), std::invalid_argument);
}

TEST_CASE("word concatenation is a monoid homomorphism") {
    std::mt19937 rng(7);
    for (int it = 0; it < 500; ++it) {
        Word a = random_word(rng, 8, 5);
        Word b = random_word(rng, 8, 5);
        Word ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        CHECK(reduce_word(ab) == hecke_product(reduce_word(a), reduce_word(b)));
    }
}

TEST_CASE("hecke product is associative on S4") {
    auto s4 = symmetric_group(4);
    for (const auto& p : s4)
        for (const auto& q : s4)
            for (const auto& r : s4)
                CHECK(hecke_product(hecke_product(p, q), r) ==
                      hecke_product(p, hecke_product(q, r)));
}

TEST_CASE("length is subadditive and equality means group product, S4") {
    auto s4 = symmetric_group(4);
    for (const auto& p : s4)
        for (const auto& q : s4) {
            Permutation h = hecke_product(p, q);
            CHECK(length(h) <= length(p) + length(q));
            if (length(h) == length(p) + length(q)) CHECK(h == group_product(p, q));
        }
}

TEST_CASE("word reversal inverts the permutation") {
    std::mt19937 rng(11);
    for (int it = 0; it < 500; ++it) {
        Word a = random_word(rng, 10, 6);
        CHECK(reduce_word(reversed(a)) == inverse(reduce_word(a)));
    }
}

TEST_CASE("defining relations leave reduce_word unchanged") {
    std::mt19937 rng(13);
    for (int it = 0; it < 2000; ++it) {
        Word a = random_word(rng, 12, 6);
        if (a.empty()) continue;
        std::uniform_int_distribution<size_t> pd(0, a.size() - 1);
        size_t pos = pd(rng);
        Permutation base = reduce_word(a);
        switch (it % 3) {
            case 0: {  // p ~ p p
                Word b = a;
                b.insert(b.begin() + pos, a[pos]);
                CHECK(reduce_word(b) == base);
                break;
            }
            case 1: {  // p q p ~ q p q
                if (pos + 2 >= a.size()) break;
                if (a[pos] != a[pos + 2]) break;
                Word b = a;
                std::swap(b[pos], b[pos + 1]);
                b[pos + 2] = b[pos + 1];
                CHECK(reduce_word(b) == base);
                break;
            }
            case 2: {  // p q ~ q p for distant letters
                if (pos + 1 >= a.size()) break;
                if (std::abs(a[pos] - a[pos + 1]) < 2) break;
                Word b = a;
                std::swap(b[pos], b[pos + 1]);
                CHECK(reduce_word(b) == base);
                break;
            }
        }
    }
}

TEST_CASE("canonical form trims trailing fixed points") {
    CHECK(P({2, 1, 3, 4}) == P({2, 1}));
    CHECK(P({1, 2, 3}) == Permutation());
    CHECK(P({2, 1}).size() == 2);
    CHECK(P({2, 1})(5) == 5);
}

TEST_CASE("invalid one-line input is rejected") {
    CHECK_THROWS_AS(P({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(P({3, 1}), std::invalid_argument);
}

TEST_CASE("shift prepends fixed points") {
    CHECK(shift(P({2, 1}), 2) == P({1, 2, 4, 3}));
    CHECK(shift(Permutation(), 3) == Permutation());
    CHECK(length(shift(P({3, 1, 5, 2, 4}), 4)) == 4);
}

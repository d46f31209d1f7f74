#pragma once

#include <compare>
#include <vector>

#include "groth/partition.hpp"

namespace groth {

// A word in the alphabet {1,2,...} of simple transposition indices.
using Word = std::vector<int>;

// Finite-support permutation of the positive integers, stored in one-line
// notation with trailing fixed points trimmed.  Values beyond the stored
// window are fixed.  The word a_1...a_p denotes s_{a_1} o ... o s_{a_p}
// with the rightmost letter applied first.
class Permutation {
public:
    Permutation() = default;  // identity
    explicit Permutation(std::vector<int> oneline);

    static Permutation identity() { return Permutation(); }
    static Permutation transposition(int i);            // s_i
    static Permutation longest(int n);                  // [n, n-1, ..., 1]

    int operator()(int i) const;                        // 1-based
    int size() const { return static_cast<int>(oneline_.size()); }
    const std::vector<int>& oneline() const { return oneline_; }
    bool is_identity() const { return oneline_.empty(); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.oneline_ <=> b.oneline_;
    }

private:
    std::vector<int> oneline_;
};

Permutation reduce_word(const Word& a);
Permutation hecke_product(const Permutation& p, const Permutation& q);
Permutation group_product(const Permutation& p, const Permutation& q);  // (pq)(i) = p(q(i))
Permutation inverse(const Permutation& p);
int length(const Permutation& p);  // Coxeter length = inversion count

std::vector<int> descents(const Permutation& p);       // { i : p(i) > p(i+1) }
std::vector<int> left_descents(const Permutation& p);  // descents of p^{-1}
bool is_descent(const Permutation& p, int i);
bool is_left_descent(const Permutation& p, int c);

Word reduced_word(const Permutation& p);
Word reversed(const Word& a);

// Right and left 0-Hecke actions by a single letter.
Permutation hecke_mult_right(const Permutation& p, int c);
Permutation hecke_mult_left(int c, const Permutation& p);
Permutation left_transposition_mult(int c, const Permutation& p);   // s_c p, group product
Permutation right_transposition_mult(const Permutation& p, int c);  // p s_c, group product

Permutation grassmannian_permutation(const Partition& lambda, int k);
Permutation skew_permutation(const Partition& outer, const Partition& inner, int k);
Permutation conjugate_by_longest(const Permutation& p, int n);  // pi_0 p pi_0 in S_n
Permutation shift(const Permutation& p, int r);                 // 1^r x p

bool is_321_avoiding(const Permutation& p);
bool bruhat_leq(const Permutation& u, const Permutation& v);

std::vector<Permutation> symmetric_group(int n);  // all of S_n

}  // namespace groth

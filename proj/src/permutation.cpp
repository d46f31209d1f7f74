#include "groth/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "groth/check.hpp"

namespace groth {

namespace {

void trim(std::vector<int>& v) {
    while (!v.empty() && v.back() == static_cast<int>(v.size())) v.pop_back();
}

std::vector<int> identity_vec(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

}  // namespace

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
    std::vector<char> seen(oneline_.size() + 1, 0);
    for (int v : oneline_) {
        if (v < 1 || v > static_cast<int>(oneline_.size()) || seen[v])
            domain_error("one-line notation must be a permutation of 1..m");
        seen[v] = 1;
    }
    trim(oneline_);
}

Permutation Permutation::transposition(int i) {
    if (i < 1) domain_error("transposition index must be positive");
    std::vector<int> v = identity_vec(i + 1);
    std::swap(v[i - 1], v[i]);
    return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
    if (n < 1) domain_error("longest permutation needs n >= 1");
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
}

int Permutation::operator()(int i) const {
    GROTH_CHECK(i >= 1);
    return i <= size() ? oneline_[i - 1] : i;
}

Permutation hecke_mult_right(const Permutation& p, int c) {
    if (c < 1) domain_error("letters must be >= 1");
    if (p(c) >= p(c + 1)) return p;  // length would drop
    std::vector<int> v = p.oneline();
    if (static_cast<int>(v.size()) < c + 1) {
        int old = static_cast<int>(v.size());
        v.resize(c + 1);
        std::iota(v.begin() + old, v.end(), old + 1);
    }
    std::swap(v[c - 1], v[c]);
    return Permutation(std::move(v));
}

Permutation left_transposition_mult(int c, const Permutation& p) {
    if (c < 1) domain_error("letters must be >= 1");
    int n = std::max(p.size(), c + 1);
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) {
        int x = p(i);
        if (x == c)
            x = c + 1;
        else if (x == c + 1)
            x = c;
        v[i - 1] = x;
    }
    return Permutation(std::move(v));
}

Permutation right_transposition_mult(const Permutation& p, int c) {
    if (c < 1) domain_error("letters must be >= 1");
    std::vector<int> v = p.oneline();
    if (static_cast<int>(v.size()) < c + 1) {
        int old = static_cast<int>(v.size());
        v.resize(c + 1);
        std::iota(v.begin() + old, v.end(), old + 1);
    }
    std::swap(v[c - 1], v[c]);
    return Permutation(std::move(v));
}

Permutation hecke_mult_left(int c, const Permutation& p) {
    if (is_left_descent(p, c)) return p;
    return left_transposition_mult(c, p);
}

Permutation reduce_word(const Word& a) {
    Permutation x;
    for (int c : a) x = hecke_mult_right(x, c);
    return x;
}

Word reduced_word(const Permutation& p) {
    Word w;
    Permutation q = p;
    while (!q.is_identity()) {
        int d = 0;
        for (int i = 1; i < q.size(); ++i)
            if (q(i) > q(i + 1)) {
                d = i;
                break;
            }
        GROTH_CHECK(d > 0);
        std::vector<int> v = q.oneline();
        std::swap(v[d - 1], v[d]);
        q = Permutation(std::move(v));
        w.push_back(d);
    }
    std::reverse(w.begin(), w.end());
    return w;
}

Word reversed(const Word& a) { return Word(a.rbegin(), a.rend()); }

Permutation hecke_product(const Permutation& p, const Permutation& q) {
    Permutation x = p;
    for (int c : reduced_word(q)) x = hecke_mult_right(x, c);
    return x;
}

Permutation group_product(const Permutation& p, const Permutation& q) {
    int n = std::max(p.size(), q.size());
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = p(q(i));
    return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> v(p.size());
    for (int i = 1; i <= p.size(); ++i) v[p(i) - 1] = i;
    return Permutation(std::move(v));
}

int length(const Permutation& p) {
    int n = p.size(), inv = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j)) ++inv;
    return inv;
}

std::vector<int> descents(const Permutation& p) {
    std::vector<int> d;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) d.push_back(i);
    return d;
}

std::vector<int> left_descents(const Permutation& p) { return descents(inverse(p)); }

bool is_descent(const Permutation& p, int i) { return p(i) > p(i + 1); }

bool is_left_descent(const Permutation& p, int c) {
    if (c >= p.size()) return false;  // both values beyond the window are fixed
    int pc = 0, pc1 = 0;
    for (int i = 1; i <= p.size() && (pc == 0 || pc1 == 0); ++i) {
        if (p(i) == c) pc = i;
        if (p(i) == c + 1) pc1 = i;
    }
    if (pc == 0) pc = c;
    if (pc1 == 0) pc1 = c + 1;
    return pc > pc1;
}

Permutation grassmannian_permutation(const Partition& lambda, int k) {
    if (k < 1) domain_error("grassmannian_permutation needs k >= 1");
    if (lambda.num_parts() > k) domain_error("partition has more than k parts");
    int n = k + lambda.part(1);
    std::vector<int> v;
    v.reserve(n);
    std::vector<char> used(n + 1, 0);
    for (int i = 1; i <= k; ++i) {
        int val = i + lambda.part(k + 1 - i);
        v.push_back(val);
        used[val] = 1;
    }
    for (int val = 1; val <= n; ++val)
        if (!used[val]) v.push_back(val);
    return Permutation(std::move(v));
}

Permutation skew_permutation(const Partition& outer, const Partition& inner, int k) {
    if (!outer.contains(inner)) domain_error("inner shape not contained in outer");
    Permutation po = grassmannian_permutation(outer, k);
    Permutation pi = grassmannian_permutation(inner, k);
    Permutation res = group_product(po, inverse(pi));
    GROTH_CHECK(is_321_avoiding(res));
    return res;
}

Permutation conjugate_by_longest(const Permutation& p, int n) {
    if (p.size() > n) domain_error("permutation not supported in {1..n}");
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = n + 1 - p(n + 1 - i);
    return Permutation(std::move(v));
}

Permutation shift(const Permutation& p, int r) {
    GROTH_CHECK(r >= 0);
    if (p.is_identity()) return p;
    std::vector<int> v(r + p.size());
    for (int i = 0; i < r; ++i) v[i] = i + 1;
    for (int i = 1; i <= p.size(); ++i) v[r + i - 1] = p(i) + r;
    return Permutation(std::move(v));
}

bool is_321_avoiding(const Permutation& p) {
    int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (p(i) > p(j) && p(j) > p(k)) return false;
    return true;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    // Standard dot-criterion on rank matrices.
    int n = std::max(u.size(), v.size());
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int cu = 0, cv = 0;
            for (int k = 1; k <= i; ++k) {
                if (u(k) >= j) ++cu;
                if (v(k) >= j) ++cv;
            }
            if (cu > cv) return false;
        }
    }
    return true;
}

std::vector<Permutation> symmetric_group(int n) {
    GROTH_CHECK(n >= 1);
    std::vector<int> v = identity_vec(n);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace groth

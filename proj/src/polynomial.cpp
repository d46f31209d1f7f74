#include "groth/polynomial.hpp"

#include <numeric>

#include "groth/check.hpp"

namespace groth {

int total_degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLex::operator()(const Exps& a, const Exps& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

SparsePolynomial::SparsePolynomial(int num_vars, int max_degree)
    : num_vars_(num_vars), max_degree_(max_degree) {
    GROTH_CHECK(num_vars >= 0);
}

SparsePolynomial SparsePolynomial::constant(int num_vars, Coeff c, int max_degree) {
    SparsePolynomial p(num_vars, max_degree);
    p.add_term(Exps(num_vars, 0), c);
    return p;
}

void SparsePolynomial::add_term(const Exps& e, const Coeff& c) {
    GROTH_CHECK(static_cast<int>(e.size()) == num_vars_);
    if (c == 0) return;
    if (max_degree_ >= 0 && total_degree(e) > max_degree_) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    GROTH_CHECK(num_vars_ == o.num_vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    GROTH_CHECK(num_vars_ == o.num_vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    r += o;
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    r -= o;
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const Coeff& c) const {
    SparsePolynomial r(num_vars_, max_degree_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

SparsePolynomial SparsePolynomial::times_var(int k) const {
    GROTH_CHECK(k >= 1 && k <= num_vars_);
    SparsePolynomial r(num_vars_, max_degree_);
    for (const auto& [e, c] : terms_) {
        Exps e2 = e;
        ++e2[k - 1];
        r.add_term(e2, c);
    }
    return r;
}

SparsePolynomial SparsePolynomial::swap_vars(int i, int j) const {
    GROTH_CHECK(i >= 1 && i <= num_vars_ && j >= 1 && j <= num_vars_);
    SparsePolynomial r(num_vars_, max_degree_);
    for (const auto& [e, c] : terms_) {
        Exps e2 = e;
        std::swap(e2[i - 1], e2[j - 1]);
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

SparsePolynomial SparsePolynomial::restrict_vars(int k) const {
    GROTH_CHECK(k >= 0 && k <= num_vars_);
    SparsePolynomial r(k, max_degree_);
    for (const auto& [e, c] : terms_) {
        bool uses_high = false;
        for (int v = k; v < num_vars_; ++v)
            if (e[v] > 0) uses_high = true;
        if (!uses_high) r.add_term(Exps(e.begin(), e.begin() + k), c);
    }
    return r;
}

SparsePolynomial SparsePolynomial::truncate_degree(int d) const {
    SparsePolynomial r(num_vars_, d);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
}

SparsePolynomial divide_by_var_difference(const SparsePolynomial& p, int i) {
    GROTH_CHECK(i >= 1 && i + 1 <= p.num_vars());
    // Synthetic division in x_i with x_{i+1} folded into the running quotient:
    // if p = sum_k A_k x_i^k then q_{k-1} = A_k + t q_k with t = x_{i+1},
    // and the remainder A_0 + t q_0 must vanish.
    std::map<int, SparsePolynomial> slices;  // exponent of x_i -> coefficient poly
    int maxk = 0;
    for (const auto& [e, c] : p.terms()) {
        Exps e2 = e;
        int k = e2[i - 1];
        e2[i - 1] = 0;
        maxk = std::max(maxk, k);
        auto [it, inserted] = slices.try_emplace(k, p.num_vars(), -1);
        it->second.add_term(e2, c);
    }
    auto slice = [&](int k) -> SparsePolynomial {
        auto it = slices.find(k);
        return it == slices.end() ? SparsePolynomial(p.num_vars(), -1) : it->second;
    };
    SparsePolynomial q(p.num_vars(), -1);
    SparsePolynomial carry(p.num_vars(), -1);  // q_k while scanning downwards
    for (int k = maxk; k >= 1; --k) {
        SparsePolynomial qk = slice(k) + carry.times_var(i + 1);
        for (const auto& [e, c] : qk.terms()) {
            Exps e2 = e;
            e2[i - 1] += k - 1;
            q.add_term(e2, c);
        }
        carry = std::move(qk);
    }
    SparsePolynomial rem = slice(0) + carry.times_var(i + 1);
    GROTH_CHECK(rem.is_zero());
    return p.max_degree() >= 0 ? q.truncate_degree(p.max_degree()) : q;
}

}  // namespace groth

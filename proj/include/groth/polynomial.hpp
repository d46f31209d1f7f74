#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace groth {

using Coeff = boost::multiprecision::cpp_int;
using Exps = std::vector<int>;  // dense exponent vector, fixed width per polynomial

// Graded lexicographic: total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const Exps& a, const Exps& b) const;
};

// Integer polynomial with explicit variable count.  A truncation bound of -1
// means the polynomial is exact; otherwise stored terms have total degree at
// most the bound.
class SparsePolynomial {
public:
    using Terms = std::map<Exps, Coeff, GradedLex>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(int num_vars, int max_degree = -1);

    static SparsePolynomial constant(int num_vars, Coeff c, int max_degree = -1);

    int num_vars() const { return num_vars_; }
    int max_degree() const { return max_degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exps& e, const Coeff& c);  // honors the truncation bound

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const Coeff& c) const;

    SparsePolynomial times_var(int k) const;          // * x_k, 1-based
    SparsePolynomial swap_vars(int i, int j) const;   // exchange x_i and x_j
    SparsePolynomial restrict_vars(int k) const;      // drop terms using x_{>k}
    SparsePolynomial truncate_degree(int d) const;

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b);

private:
    int num_vars_ = 0;
    int max_degree_ = -1;
    Terms terms_;
};

int total_degree(const Exps& e);

// Exact quotient of p by (x_i - x_{i+1}); throws if the division leaves a
// remainder.  1-based i.
SparsePolynomial divide_by_var_difference(const SparsePolynomial& p, int i);

}  // namespace groth

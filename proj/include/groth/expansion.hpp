#pragma once

#include <map>
#include <vector>

#include "groth/insertion.hpp"
#include "groth/partition.hpp"
#include "groth/permutation.hpp"
#include "groth/polynomial.hpp"
#include "groth/tableau.hpp"

namespace groth {

// Finitely supported map from partitions to integers, canonically ordered by
// degree then lexicographically.
class Expansion {
public:
    using Terms = std::map<Partition, long long, PartitionOrder>;

    const Terms& terms() const { return terms_; }
    long long coeff(const Partition& p) const;
    void add(const Partition& p, long long c);
    bool empty() const { return terms_.empty(); }

    friend bool operator==(const Expansion&, const Expansion&) = default;

private:
    Terms terms_;
};

struct EnumOptions {
    int max_boxes = 1 << 30;
    const std::vector<int>* left_column = nullptr;  // attach to the right of this column
    int max_rows = -1;                              // cap on the first column height
    int max_cols = -1;
    // Exact column-height profiles (conjugate shapes) the result must match.
    const std::vector<std::vector<int>>* height_profiles = nullptr;
    bool prune_max_tableau = true;
    int workers = 0;  // 0 = use worker_count(), 1 = serial
};

// All increasing tableaux T with tableau_permutation(T) == p, subject to the
// options.  Deterministic order independent of the worker count.
std::vector<IncreasingTableau> increasing_tableaux_for(const Permutation& p,
                                                       const EnumOptions& opt);
std::vector<IncreasingTableau> increasing_tableaux_for(const Permutation& p, int max_boxes);

// All decreasing tableaux T with decreasing_permutation(T) == p.
std::vector<DecreasingTableau> decreasing_tableaux_for(const Permutation& p,
                                                       const EnumOptions& opt);

// The unique increasing tableau of dominance-maximal shape representing p.
IncreasingTableau max_tableau(const Permutation& p);

struct StableExpansion {
    Expansion expansion;
    bool complete = false;   // no tableaux found in the top two degree layers
    bool truncated = false;  // the caller's cap cut the enumeration
};

StableExpansion stable_coefficients(const Permutation& p, int max_degree, int workers = 0);
StableExpansion stable_coefficients_decreasing(const Permutation& p, int max_degree,
                                               int workers = 0);

// Decreasing-tableau counts for p restricted to the given shapes.
Expansion stable_coefficients_decreasing_at(const Permutation& p,
                                            const std::vector<Partition>& shapes,
                                            int workers = 0);

// Truncated monomial expansion of G_p over compatible pairs.
SparsePolynomial monomials_compatible(const Permutation& p, int num_vars, int max_degree);

// Truncated monomial expansion of G_lambda (or a skew G_{lambda/mu}) over
// set-valued tableaux.
SparsePolynomial monomials_setvalued(const Shape& shape, int num_vars, int max_degree);
SparsePolynomial monomials_setvalued(const Partition& lambda, int num_vars, int max_degree);

// Exact Grothendieck polynomial for p in S_n via divided differences, with
// the second variable set vanishing.
SparsePolynomial grothendieck_recursion(const Permutation& p, int n);

// Expansion of G_{outer/inner} by reverse lattice set-valued tableaux.
Expansion skew_lr_coefficients(const Partition& outer, const Partition& inner, int max_degree);

// Coefficients of the expansion over sequences of 2n-1 partitions.
struct UniversalExpansion {
    using Key = std::vector<Partition>;
    std::map<Key, long long> terms;
    int n = 0;
};

UniversalExpansion universal_coefficients(const Permutation& p, int n, int max_degree);

// All increasing tableaux with entries <= bound and at most max_boxes boxes.
std::vector<IncreasingTableau> tableaux_with_entries_at_most(int bound, int max_boxes);

}  // namespace groth
